#pragma once

#include <cassert>
#include <functional>
#include <optional>
#include <vector>

#include "solviso/group.hpp"
#include "solviso/stats.hpp"
#include "solviso/sylow.hpp"

namespace solviso {

/// G = P1 * P2 with every prime of |P1| above alpha and every prime of |P2| at
/// most alpha.
struct AlphaDecomposition {
  std::size_t alpha = 0;
  Subgroup p1;
  Subgroup p2;
};

/// Splits a Sylow basis at alpha: P1 collects primes > alpha, P2 primes <= alpha.
inline AlphaDecomposition alpha_split(const GroupTable& g, const SylowBasis& basis, std::size_t alpha) {
  std::vector<Element> large, small;
  for (const auto& e : basis.entries) {
    auto members = e.subgroup.elements();
    auto& dst = e.prime > alpha ? large : small;
    dst.insert(dst.end(), members.begin(), members.end());
  }
  AlphaDecomposition d{alpha, subgroup_closure(g, large), subgroup_closure(g, small)};
  assert(d.p1.order() * d.p2.order() == g.order());
  return d;
}

/// Checks the decomposition invariants; used by tests and debug assertions.
inline bool is_alpha_decomposition(const GroupTable& g, const AlphaDecomposition& d) {
  for (const auto& pp : factorize(d.p1.order()))
    if (pp.prime <= d.alpha) return false;
  for (const auto& pp : factorize(d.p2.order()))
    if (pp.prime > d.alpha) return false;
  return d.p1.order() * d.p2.order() == g.order() && intersect(d.p1, d.p2).order() == 1;
}

using DecompositionTester =
    std::function<std::optional<Isomorphism>(const AlphaDecomposition&, const AlphaDecomposition&)>;

/// Fixes one alpha-decomposition of g and tries it against the decomposition
/// of every Sylow basis of h. Returns the first witness the tester produces.
inline std::optional<Isomorphism> alpha_decomp_iso(const GroupTable& g, const GroupTable& h, std::size_t alpha,
                                                   const DecompositionTester& tester, SearchStats* stats = nullptr) {
  if (g.order() != h.order()) return std::nullopt;
  const auto dec_g = alpha_split(g, sylow_basis(g), alpha);
  for (const auto& basis : all_sylow_bases(h)) {
    if (stats) ++stats->bases;
    if (auto w = tester(dec_g, alpha_split(h, basis, alpha))) return w;
  }
  return std::nullopt;
}

}  // namespace solviso
