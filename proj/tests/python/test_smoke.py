import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

import locinv

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.mark.parametrize("app", locinv.app_names())
def test_inverse_pair(app):
    for n in range(6):
        a = locinv.matrix(app, n, "A")
        b = locinv.matrix(app, n, "B")
        assert (a @ b).is_identity()
        assert locinv.verify_inversion(app, n)
        assert locinv.verify_local(app, n if n else 1)["violations"] == []


def test_kostka_entries():
    a = locinv.matrix("kostka", 4, "A")
    assert a[(2, 1, 1), (1, 1, 1, 1)] == 3
    assert a[(4,), (1, 3)] == 1
    b = locinv.matrix("rimhook", 3, "B")
    assert all(isinstance(v, Fraction) for row in b.entries for v in row)


def test_square_form():
    a = locinv.matrix("brick", 4, "Asq")
    b = locinv.matrix("brick", 4, "Bsq")
    assert (a @ b).is_identity()
    with pytest.raises(ValueError):
        locinv.matrix("refine", 3, "Asq")


def test_scalars():
    assert locinv.big_z([3, 2, 2]) == 105
    assert locinv.little_z([3, 2, 2]) == 24
    assert locinv.big_w([3, 1, 1]) == 5
    assert locinv.big_w([1] * 30) == 1
    assert locinv.little_z([1] * 25) == 15511210043330985984000000


def test_local_terms_cancel():
    terms = locinv.local_terms("rimhook", [9, 8, 6, 6, 5, 4, 4, 2], [9, 9, 9, 7, 5, 3, 1, 1])
    assert sorted((g, L) for g, L, _, _ in terms) == [((9, 8, 6, 4, 3, 3, 1, 1), 9), ((9, 8, 6, 6, 5, 3, 1, 1), 5)]
    assert sum(wa * wb for _, _, wa, wb in terms) == 0


def test_involutions():
    x = json.loads((DATA / "kostka_er_map1.json").read_text())
    r = locinv.kostka_involution(x)
    assert not r["fixed_point"]
    assert r["image"]["S"]["rows"] == [[1, 1, 2], [2, 2, 3], [3, 3]]
    assert locinv.kostka_involution(r["image"])["image"] == x

    y = json.loads((DATA / "rimhook_worked.json").read_text())
    r = locinv.rht_involution(y)
    assert r["image"]["T"]["rows"] == [[1, 2, 3, 3], [2, 2, 3], [4, 4, 4]]
    assert locinv.rht_involution(r["image"])["image"]["S"] == y["S"]

    with pytest.raises(ValueError):
        locinv.kostka_involution({"lambda": [1]})


def test_pairing():
    rep = locinv.pairing("kostka", [3, 2, 1], [2, 2, 1, 1])
    assert rep["passed"] and rep["failures"] == []
    assert rep["objects"] == rep["paired"] == 10
    rep = locinv.pairing("rimhook", [2, 1], [2, 1])
    assert rep["fixed_points"] == rep["signed_fixed"] == 6


def test_cli_in_process():
    code, out, _ = locinv.run_cli(["matrix", "--app", "kostka", "--n", "0", "--format", "ascii"])
    assert code == 0 and out.strip() == "1"
    code, _, _ = locinv.run_cli(["matrix", "--app", "nope", "--n", "2"])
    assert code == 2


@pytest.mark.skipif("LOCINV_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary():
    out = subprocess.run(
        [os.environ["LOCINV_CLI"], "verify", "--app", "brick", "--n", "4"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)
