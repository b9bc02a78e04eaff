#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "solviso/solviso.hpp"

namespace solviso::testing {

inline std::vector<Element> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Closure by repeated products of all pairs until nothing new appears.
inline std::set<Element> naive_closure(const GroupTable& g, std::set<Element> s) {
  s.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) grew |= s.insert(g.mul(a, b)).second;
  }
  return s;
}

/// Every subgroup of g, found by joining known subgroups with single elements
/// until a fixed point.
inline std::vector<std::set<Element>> subgroup_lattice(const GroupTable& g) {
  std::set<std::set<Element>> found{naive_closure(g, {})};
  std::vector<std::set<Element>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::set<Element>> next;
    for (const auto& h : frontier)
      for (Element x = 0; x < g.order(); ++x) {
        if (h.count(x)) continue;
        auto s = h;
        s.insert(x);
        auto c = naive_closure(g, s);
        if (found.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline bool naive_normal(const GroupTable& g, const std::set<Element>& k, const std::set<Element>& h) {
  for (auto x : h)
    for (auto y : k)
      if (!k.count(g.mul(g.mul(x, y), g.inverse(x)))) return false;
  return true;
}

/// Number of chains 1 = H0 < ... < Hm = top with each Hi normal of prime index
/// in Hi+1, counted over the subgroup lattice.
inline std::size_t lattice_series_count(const GroupTable& g, const std::set<Element>& top) {
  const auto lattice = subgroup_lattice(g);
  std::map<std::set<Element>, std::size_t> memo;
  std::function<std::size_t(const std::set<Element>&)> count = [&](const std::set<Element>& h) -> std::size_t {
    if (h.size() == 1) return 1;
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (const auto& k : lattice) {
      if (k.size() >= h.size() || h.size() % k.size() != 0 || !is_prime(h.size() / k.size())) continue;
      if (!std::includes(h.begin(), h.end(), k.begin(), k.end())) continue;
      if (!naive_normal(g, k, h)) continue;
      total += count(k);
    }
    return memo[h] = total;
  };
  return count(top);
}

inline std::set<Element> as_set(const Subgroup& s) {
  const auto xs = s.elements();
  return {xs.begin(), xs.end()};
}

/// Exhaustive search over all bijections; only for tiny orders.
inline bool brute_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  std::vector<Element> phi(a.order());
  std::iota(phi.begin(), phi.end(), 0);
  do {
    if (is_isomorphism(a, b, phi)) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

inline std::vector<NamedGroup> small_corpus(std::size_t max_order) { return solvable_corpus(max_order); }

}  // namespace solviso::testing
