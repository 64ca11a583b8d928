"""Exact inverse-pair matrices built by local recursions."""

import json
from fractions import Fraction

from . import _core
from ._core import MalformedInput, app_names, run_cli, verify_inversion

__all__ = [
    "MalformedInput",
    "Matrix",
    "app_names",
    "big_w",
    "big_z",
    "kostka_involution",
    "little_z",
    "local_terms",
    "matrix",
    "matrix_ascii",
    "pairing",
    "rht_involution",
    "run_cli",
    "verify_inversion",
    "verify_local",
]


def _fraction(q):
    num, den = q
    return Fraction(int(num), int(den))


def _key(k):
    return tuple(k)


class Matrix:
    """Rows and columns keyed by tuples of parts; entries are Fractions."""

    def __init__(self, rows, cols, entries):
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._row = {r: i for i, r in enumerate(rows)}
        self._col = {c: j for j, c in enumerate(cols)}

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[self._row[tuple(r)]][self._col[tuple(c)]]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("index sets do not match")
        out = [
            [sum((a * other.entries[k][j] for k, a in enumerate(row)), Fraction(0)) for j in range(len(other.cols))]
            for row in self.entries
        ]
        return Matrix(self.rows, other.cols, out)

    def is_identity(self):
        return self.rows == self.cols and all(
            v == (1 if i == j else 0) for i, row in enumerate(self.entries) for j, v in enumerate(row)
        )


def matrix(app, n, side="A"):
    j = json.loads(_core.matrix_json(app, n, side))
    return Matrix(
        [_key(r) for r in j["rows"]],
        [_key(c) for c in j["cols"]],
        [[_fraction(q) for q in row] for row in j["entries"]],
    )


def matrix_ascii(app, n, side="A"):
    return _core.matrix_ascii(app, n, side)


def verify_local(app, n):
    return json.loads(_core.verify_local_json(app, n))


def local_terms(app, lam, mu):
    terms = json.loads(_core.local_terms_json(app, list(lam), list(mu)))
    return [
        (tuple(t["gamma"]), t["L"], _fraction(t["weight_a"]), _fraction(t["weight_b"])) for t in terms
    ]


def pairing(app, lam, mu):
    return json.loads(_core.pairing_json(app, list(lam), list(mu)))


def kostka_involution(obj):
    return json.loads(_core.kostka_involution_json(json.dumps(obj)))


def rht_involution(obj):
    return json.loads(_core.rht_involution_json(json.dumps(obj)))


def big_z(beta):
    return int(_core.big_z(list(beta)))


def little_z(lam):
    return int(_core.little_z(list(lam)))


def big_w(mu):
    return int(_core.big_w(list(mu)))
