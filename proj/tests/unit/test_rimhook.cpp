#include <doctest.h>

#include <set>

#include "locinv/rimhook.hpp"
#include "locinv/scalars.hpp"
#include "oracles.hpp"
#include "paper_tables.hpp"

using namespace locinv;

TEST_CASE("abacus encoding") {
  const auto a = Abacus::from_partition({4, 3, 3, 2, 2, 1}, 9);
  CHECK(a.word() == "1110101101101");
  CHECK(Abacus::from_partition({}, 3).word() == "111");
  CHECK_THROWS_AS(Abacus::from_partition({2, 1}, 1), std::invalid_argument);
  CHECK(Abacus::from_partition({9, 8, 6, 6, 5, 4, 4, 2}, 8).word() == "00100110101100101");
  CHECK(Abacus::from_word("00100110101100101").decode() == Partition{9, 8, 6, 6, 5, 4, 4, 2});
  for (int n = 0; n <= 10; ++n) {
    for (const auto& lam : partitions(n)) {
      for (int extra : {0, 3}) {
        const auto ab = Abacus::from_partition(lam, lam.length() + extra);
        CHECK(ab.decode() == lam);
        CHECK(ab.word().substr(0, static_cast<std::size_t>(extra)) == std::string(static_cast<std::size_t>(extra), '1'));
      }
    }
  }
}

TEST_CASE("bead moves") {
  const auto a = Abacus::from_partition({4, 3, 3, 2, 2, 1}, 9);
  auto [b, sign] = a.move_bead(10, 5);
  CHECK(sign == -1);
  CHECK(b == Abacus::from_partition({4, 2, 1, 1, 1, 1}, 9));
  CHECK(b.decode() == Partition{4, 2, 1, 1, 1, 1});
  auto [c, s2] = a.move_bead(4, 3);
  CHECK(s2 == 1);
  CHECK_THROWS_AS(a.move_bead(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(a.move_bead(10, 9), std::invalid_argument);

  const auto lam = Abacus::from_partition({9, 8, 6, 6, 5, 4, 4, 2}, 8);
  auto [g, s_first] = lam.move_bead(6, 1);
  auto [m, s_second] = g.move_bead(10, 15);
  CHECK(g.decode() == Partition{9, 8, 6, 6, 5, 3, 1, 1});
  CHECK(m.decode() == Partition{9, 9, 9, 7, 5, 3, 1, 1});
  CHECK(s_first * s_second == 1);
}

TEST_CASE("rim-hook removals agree with the diagram oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lam : partitions(n)) {
      std::set<std::pair<Partition, int>> all;
      for (int L = 1; L <= n; ++L) {
        std::set<std::pair<Partition, int>> got, expect;
        for (const auto& h : rimhook_removals(lam, L)) {
          got.insert({h.remainder, h.sign});
          CHECK(h.size() == L);
          CHECK(is_rimhook_removal(lam, h.remainder));
        }
        for (const auto& e : oracle::rim_hook_removals(lam, L)) expect.insert(e);
        CHECK(got == expect);
        all.insert(got.begin(), got.end());
      }
      CHECK(static_cast<int>(all.size()) == n);
      std::set<std::pair<Partition, int>> via_cells;
      for (int c = 1; c <= n; ++c) {
        const auto h = border_rimhook_of_cell(lam, c);
        via_cells.insert({h.remainder, h.sign});
        CHECK(border_number(lam, h.remainder) == c);
        CHECK(h.cells == skew_cells(lam, h.remainder));
      }
      CHECK(via_cells == all);
    }
  }
}

TEST_CASE("border rim-hooks") {
  const auto h = border_rimhook_of_cell({5, 5, 4, 4, 3}, 7);
  CHECK(h.size() == 7);
  CHECK(h.cells == std::vector<Cell>{{2, 4}, {2, 5}, {3, 4}, {4, 3}, {4, 4}, {5, 2}, {5, 3}});
  CHECK(h.remainder == Partition{5, 3, 3, 2, 1});
  const auto row = border_rimhook_of_cell({6}, 1);
  CHECK(row.size() == 6);
  CHECK(row.remainder.empty());
  const auto g = border_rimhook_of_cell({5, 4, 4, 3, 2}, 15);
  CHECK(g.size() == 3);
  CHECK(g.remainder == Partition{5, 4, 4, 1, 1});
  CHECK_THROWS_AS(border_rimhook_of_cell({2, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(border_number({2, 1}, {1}), std::invalid_argument);
}

TEST_CASE("rim-hook tableaux") {
  const auto t = enumerate_rht({4, 3, 3, 1}, {3, 4, 4});
  REQUIRE(t.size() == 2);
  CHECK(t[0].sign == -1);
  CHECK(t[1].sign == -1);
  CHECK(t[0].filling.rows == std::vector<std::vector<int>>{{1, 1, 2, 2}, {1, 2, 2}, {3, 3, 3}, {3}});
  CHECK(t[1].filling.rows == std::vector<std::vector<int>>{{1, 1, 3, 3}, {1, 2, 3}, {2, 2, 3}, {2}});
  const auto u = enumerate_rht({3, 1}, {4});
  REQUIRE(u.size() == 1);
  CHECK(u[0].sign == -1);
  const auto v = enumerate_rht({5}, {5});
  REQUIRE(v.size() == 1);
  CHECK(v[0].sign == 1);
  for (const auto& x : t) CHECK(rht_sign(x.filling, {4, 3, 3, 1}, {3, 4, 4}) == x.sign);
  CHECK_FALSE(rht_sign(t[0].filling, {4, 3, 3, 1}, {4, 3, 4}));
}

TEST_CASE("RHT enumeration against exhaustive labelings") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions(n))
      for (const auto& beta : compositions(n)) {
        long sum = 0;
        for (const auto& x : enumerate_rht(lam, beta)) sum += x.sign;
        CHECK(sum == oracle::rht_signed_count(lam, beta));
      }
}

TEST_CASE("rimhook system tables") {
  const auto sys = rimhook_system();
  MatrixFamily fam(sys);
  CHECK(fam.A(4) == tables::to_matrix(tables::rimhook_A4));
  CHECK(fam.B(4) == tables::to_matrix(tables::rimhook_B4));
  for (const auto& lam : partitions(6)) {
    int total = 0;
    for (int L = 1; L <= 6; ++L) total += static_cast<int>(sys.succ_a(lam, L).size());
    CHECK(total == 6);
    CHECK(!sys.succ_a(lam, 6).empty() == (lam[1 < lam.length() ? 1 : 0] <= 1 || lam.length() == 1));
  }
  for (int n = 1; n <= 6; ++n) {
    const auto bsq = square_fold_B(fam.B(n));
    const auto& a = fam.A(n);
    for (const auto& lam : partitions(n))
      for (const auto& mu : partitions(n))
        CHECK(bsq(lam, mu) == a(mu, lam) / Rational(little_z(lam)));
  }
}

TEST_CASE("rimhook pairing") {
  const auto r = rimhook_pair({9, 8, 6, 6, 5, 4, 4, 2}, {9, 9, 9, 7, 5, 3, 1, 1});
  REQUIRE(r.kind == RimhookPairing::Kind::Matched);
  CHECK(r.ways[0].gamma == Partition{9, 8, 6, 6, 5, 3, 1, 1});
  CHECK(r.ways[0].L == 5);
  CHECK(r.ways[0].product() == 1);
  CHECK(r.ways[1].gamma == Partition{9, 8, 6, 4, 3, 3, 1, 1});
  CHECK(r.ways[1].L == 9);
  CHECK(r.ways[1].product() == -1);
  const auto d = rimhook_pair({2, 1}, {2, 1});
  CHECK(d.kind == RimhookPairing::Kind::Diagonal);
  CHECK(d.ways.size() == 3);
  CHECK_THROWS_AS(rimhook_pair({2}, {1}), std::invalid_argument);
}

TEST_CASE("rimhook pairing matches brute-force G") {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions(n);
    for (const auto& lam : ps) {
      for (const auto& mu : ps) {
        std::set<std::tuple<Partition, int, int>> g;
        for (int L = 1; L <= n; ++L)
          for (const auto& [gl, sl] : oracle::rim_hook_removals(lam, L))
            for (const auto& [gm, sm] : oracle::rim_hook_removals(mu, L))
              if (gl == gm) g.insert({gl, L, sl * sm});
        const auto res = rimhook_pair(lam, mu);
        std::set<std::tuple<Partition, int, int>> got;
        for (const auto& w : res.ways) got.insert({w.gamma, w.L, w.product()});
        CHECK(got == g);
        if (lam == mu) {
          CHECK(g.size() == static_cast<std::size_t>(n));
          continue;
        }
        REQUIRE((g.empty() || g.size() == 2));
        if (g.size() == 2) {
          CHECK(res.ways[0].product() == -res.ways[1].product());
          std::vector<int> meet;
          for (int r = 0; r < std::min(lam.length(), mu.length()); ++r)
            meet.push_back(std::min(lam[static_cast<std::size_t>(r)], mu[static_cast<std::size_t>(r)]));
          CHECK(res.ways[0].gamma == Partition(meet));
          CHECK(rimhook_partner(lam, mu, res.ways[0].gamma) == res.ways[1].gamma);
        }
      }
    }
  }
}
