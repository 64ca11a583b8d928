#include <doctest.h>

#include <set>

#include "locinv/kostka.hpp"
#include "oracles.hpp"

using namespace locinv;

TEST_CASE("is_ssyt") {
  CHECK(is_ssyt({{4, 3}, {{1, 1, 2, 2}, {2, 3, 3}}}, {4, 3}, {2, 3, 2}));
  CHECK(is_ssyt({{5}, {{1, 1, 1, 1, 1}}}, {5}, {5}));
  CHECK_FALSE(is_ssyt({{2, 2}, {{1, 2}, {1, 2}}}, {2, 2}, {2, 2}));
  CHECK_FALSE(is_ssyt({{2, 1}, {{2, 1}, {3}}}, {2, 1}, {1, 1, 1}));
}

TEST_CASE("enumerate_ssyt") {
  const auto t = enumerate_ssyt({4, 3}, {2, 3, 2});
  REQUIRE(t.size() == 2);
  CHECK(t[0].rows == std::vector<std::vector<int>>{{1, 1, 2, 2}, {2, 3, 3}});
  CHECK(t[1].rows == std::vector<std::vector<int>>{{1, 1, 2, 3}, {2, 2, 3}});
  CHECK(enumerate_ssyt({3, 1}, {2, 1, 1}).size() == 2);
  CHECK(enumerate_ssyt({1, 1, 1, 1}, {4}).empty());
  CHECK_THROWS_AS(enumerate_ssyt({3}, {2}), std::invalid_argument);
}

TEST_CASE("SSYT enumeration against label-by-label search") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions(n)) {
      for (const auto& beta : compositions(n)) {
        const auto ts = enumerate_ssyt(lam, beta);
        CHECK(static_cast<long>(ts.size()) == oracle::ssyt_count(lam, beta));
        for (std::size_t k = 0; k < ts.size(); ++k) {
          CHECK(is_ssyt(ts[k], lam, beta));
          if (k > 0) CHECK(filling_less(ts[k - 1], ts[k]));
          for (int i = 1; i <= beta.length(); ++i) {
            auto inner = restrict_labels(ts[k], i);
            CHECK(std::is_sorted(inner.shape.begin(), inner.shape.end(), std::greater<>{}));
            CHECK(oracle::distinct_columns(ts[k].cells_with_label(i)));
          }
        }
      }
    }
  }
}

TEST_CASE("srht_find") {
  auto a = srht_find({3, 3, 3}, {3, 2, 4});
  REQUIRE(a);
  CHECK(a->sign == -1);
  CHECK(a->filling.rows == std::vector<std::vector<int>>{{1, 1, 1}, {2, 2, 3}, {3, 3, 3}});
  auto b = srht_find({3, 3, 3}, {2, 4, 3});
  REQUIRE(b);
  CHECK(b->sign == -1);
  CHECK(b->filling.rows == std::vector<std::vector<int>>{{1, 1, 2}, {2, 2, 2}, {3, 3, 3}});
  CHECK_FALSE(srht_find({3, 3, 3}, {4, 2, 3}));
  auto c = srht_find({2, 1, 1}, {2, 1, 1});
  REQUIRE(c);
  CHECK(c->sign == 1);
  CHECK(srht_sign(c->filling, {2, 1, 1}, {2, 1, 1}) == 1);
  CHECK_FALSE(srht_sign(a->filling, {3, 3, 3}, {3, 3, 3}));
}

TEST_CASE("special rim-hooks agree with the diagram oracle") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions(n)) {
      for (int L = 1; L <= n; ++L) {
        auto expect = oracle::rim_hook_removals(mu, L, true);
        auto got = special_rimhook_of_size(mu, L);
        REQUIRE(expect.size() <= 1);
        CHECK(got.has_value() == (expect.size() == 1));
        if (got && !expect.empty()) {
          CHECK(got->remainder == expect[0].first);
          CHECK(got->sign == expect[0].second);
        }
        auto strips = horizontal_strip_removals(mu, L);
        auto strip_oracle = oracle::strip_removals(mu, L);
        std::sort(strips.begin(), strips.end());
        std::sort(strip_oracle.begin(), strip_oracle.end());
        CHECK(strips == strip_oracle);
      }
    }
  }
}

TEST_CASE("kostka local system") {
  const auto sys = kostka_system();
  auto s = sys.succ_a({4, 3}, 2);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<Composition>{{3, 2}, {4, 1}});
  CHECK(sys.succ_b({3, 3, 3}, 4) == std::vector<Composition>{{3, 2}});
  CHECK(sys.succ_b({3, 1}, 5).empty());
}

TEST_CASE("kostka pairing") {
  auto d = kostka_pair({6, 4, 2, 1}, {6, 4, 2, 1});
  CHECK(d.kind == KostkaPairing::Kind::Diagonal);
  CHECK(d.first == Partition{6, 4, 2});

  auto m = kostka_pair({6, 4, 2, 1}, {4, 3, 3, 3});
  REQUIRE(m.kind == KostkaPairing::Kind::Matched);
  CHECK(std::set<Partition>{m.first, m.second} == std::set<Partition>{{4, 2, 2}, {4, 3, 2}});
  CHECK(m.first_sign == -m.second_sign);

  auto m2 = kostka_pair({7, 2}, {4, 3, 2});
  REQUIRE(m2.kind == KostkaPairing::Kind::Matched);
  CHECK(std::set<Partition>{m2.first, m2.second} == std::set<Partition>{{4, 1}, {2, 1}});
  CHECK(kostka_partner({7, 2}, {4, 3, 2}, {4, 1}) == Partition{2, 1});
  CHECK(kostka_partner({7, 2}, {4, 3, 2}, {2, 1}) == Partition{4, 1});
  CHECK_THROWS_AS(kostka_pair({3}, {2}), std::invalid_argument);
}

TEST_CASE("kostka pairing matches brute-force G") {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions(n);
    for (const auto& lam : ps) {
      for (const auto& mu : ps) {
        std::vector<std::pair<Partition, int>> g;
        for (int L = 1; L <= n; ++L) {
          auto strips = oracle::strip_removals(lam, L);
          for (const auto& [gamma, sign] : oracle::rim_hook_removals(mu, L, true))
            if (std::find(strips.begin(), strips.end(), gamma) != strips.end()) g.emplace_back(gamma, sign);
        }
        const auto res = kostka_pair(lam, mu);
        if (lam == mu) {
          REQUIRE(g.size() == 1);
          CHECK(res.first == g[0].first);
          continue;
        }
        REQUIRE((g.empty() || g.size() == 2));
        if (g.empty()) {
          CHECK(res.kind == KostkaPairing::Kind::Empty);
          continue;
        }
        CHECK(g[0].second == -g[1].second);
        REQUIRE(res.kind == KostkaPairing::Kind::Matched);
        std::set<std::pair<Partition, int>> expect(g.begin(), g.end());
        std::set<std::pair<Partition, int>> got{{res.first, res.first_sign}, {res.second, res.second_sign}};
        CHECK(expect == got);
      }
    }
  }
}
