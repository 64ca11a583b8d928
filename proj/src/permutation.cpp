#include "locinv/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "locinv/scalars.hpp"

namespace locinv {

Permutation Permutation::from_cycles(std::vector<int> ground,
                                     const std::vector<std::vector<int>>& cycles) {
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
    throw std::invalid_argument("ground set has repeated elements");
  Permutation p;
  p.ground_ = ground;
  p.images_ = ground;
  std::set<int> used;
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int x = cycle[k];
      auto it = std::lower_bound(ground.begin(), ground.end(), x);
      if (it == ground.end() || *it != x)
        throw std::invalid_argument("cycle element " + std::to_string(x) + " not in ground set");
      if (!used.insert(x).second)
        throw std::invalid_argument("element " + std::to_string(x) + " appears twice in cycles");
      p.images_[static_cast<std::size_t>(it - ground.begin())] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::vector<int> ground;
  for (const auto& c : cycles) ground.insert(ground.end(), c.begin(), c.end());
  return from_cycles(std::move(ground), cycles);
}

Permutation Permutation::identity(std::vector<int> ground) { return from_cycles(std::move(ground), {}); }

int Permutation::operator()(int x) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
  if (it == ground_.end() || *it != x) throw std::out_of_range("element not in ground set");
  return images_[static_cast<std::size_t>(it - ground_.begin())];
}

std::vector<std::vector<int>> Permutation::canonical_cycles() const {
  std::vector<bool> seen(ground_.size(), false);
  std::vector<std::vector<int>> cycles;
  for (std::size_t s = 0; s < ground_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    int x = ground_[s];
    while (true) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(ground_.begin(), ground_.end(), x) - ground_.begin());
      if (seen[idx]) break;
      seen[idx] = true;
      cycle.push_back(x);
      x = images_[idx];
    }
    cycles.push_back(std::move(cycle));
  }
  std::reverse(cycles.begin(), cycles.end());
  return cycles;
}

Composition Permutation::cyc_comp() const {
  std::vector<int> lengths;
  for (const auto& c : canonical_cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Composition(std::move(lengths));
}

Partition Permutation::cyc_part() const { return sort_comp(cyc_comp()); }

std::string Permutation::str() const {
  std::string out;
  for (const auto& c : canonical_cycles()) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

BigInt count_by_cyc_comp(int n, const Composition& beta) {
  if (beta.size() != n) throw std::invalid_argument("composition size differs from n");
  return factorial(n) / big_z(beta);
}

std::vector<int> iota_ground(int n) {
  std::vector<int> g(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(g.begin(), g.end(), 1);
  return g;
}

std::vector<Permutation> permutations_with_cyc_comp(const std::vector<int>& ground,
                                                    const Composition& beta) {
  if (static_cast<int>(ground.size()) != beta.size())
    throw std::invalid_argument("composition size differs from the ground set");
  std::vector<int> sorted(ground);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Permutation> out;
  std::vector<std::vector<int>> cycles(static_cast<std::size_t>(beta.length()));
  std::set<int> unused(sorted.begin(), sorted.end());

  std::function<void(int)> fill_cycle = [&](int k) {
    if (k < 0) {
      out.push_back(Permutation::from_cycles(sorted, cycles));
      return;
    }
    auto& cycle = cycles[static_cast<std::size_t>(k)];
    const int len = beta[static_cast<std::size_t>(k)];
    std::function<void()> extend = [&]() {
      if (static_cast<int>(cycle.size()) == len) {
        fill_cycle(k - 1);
        return;
      }
      const std::vector<int> options(unused.begin(), unused.end());
      for (int x : options) {
        unused.erase(x);
        cycle.push_back(x);
        extend();
        cycle.pop_back();
        unused.insert(x);
      }
    };
    const int first = *unused.begin();
    unused.erase(first);
    cycle.push_back(first);
    extend();
    cycle.pop_back();
    unused.insert(first);
  };
  fill_cycle(beta.length() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace locinv
