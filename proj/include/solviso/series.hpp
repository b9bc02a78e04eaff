#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "solviso/decomposition.hpp"
#include "solviso/group.hpp"
#include "solviso/stats.hpp"

namespace solviso {

/// chain[0] = {e} < chain[1] < ... < chain[m] = P2, each normal in the next
/// with prime index.
struct CompositionSeries {
  std::vector<Subgroup> chain;

  std::size_t length() const noexcept { return chain.empty() ? 0 : chain.size() - 1; }
  const Subgroup& top() const { return chain.back(); }
};

inline bool series_less(const CompositionSeries& a, const CompositionSeries& b) {
  const auto k = std::min(a.chain.size(), b.chain.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (lex_less(a.chain[i], b.chain[i])) return true;
    if (lex_less(b.chain[i], a.chain[i])) return false;
  }
  return a.chain.size() < b.chain.size();
}

struct AlphaCompositionPair {
  Subgroup p1;
  CompositionSeries s2;
};

/// Visitor for chain streams; return false to stop the enumeration.
using ChainVisitor = std::function<bool(const std::vector<Subgroup>&)>;

namespace detail {

// One representative per left coset xH of h inside p, in increasing index order.
inline std::vector<Element> coset_representatives(const Subgroup& p, const Subgroup& h) {
  const auto& g = p.parent();
  ElementSet covered = h.members();
  const auto hs = h.elements();
  std::vector<Element> reps;
  p.members().for_each([&](Element x) {
    if (covered.contains(x)) return;
    reps.push_back(x);
    for (Element y : hs) covered.insert(g.mul(x, y));
  });
  return reps;
}

struct ChainWalker {
  const Subgroup& top;
  bool composition_only;
  const std::function<bool(std::size_t, const Subgroup&)>* level_filter;
  const ChainVisitor& visit;
  std::vector<Subgroup> chain;
  std::vector<Element> gens;
  bool stopped = false;

  void run() {
    chain.push_back(Subgroup::trivial(top.parent()));
    if (top.order() == 1) {
      stopped = !visit(chain);
      return;
    }
    descend();
  }

  void descend() {
    const auto& g = top.parent();
    const auto& cur = chain.back();
    std::vector<std::pair<Subgroup, Element>> children;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Element x : coset_representatives(top, cur)) {
      if (composition_only) {
        bool normalizes = true;
        for (Element y : gens)
          if (!cur.contains(g.conjugate(x, y))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
      }
      const Element extra[] = {x};
      auto next = join(cur, gens, extra);
      if (composition_only && !is_prime(next.order() / cur.order())) continue;
      if (!seen.insert(next.members()).second) continue;
      children.emplace_back(std::move(next), x);
    }
    std::sort(children.begin(), children.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    for (auto& [sub, x] : children) {
      if (stopped) return;
      if (level_filter && !(*level_filter)(chain.size(), sub)) continue;
      const bool done = sub.order() == top.order();
      chain.push_back(std::move(sub));
      gens.push_back(x);
      if (done)
        stopped = !visit(chain);
      else
        descend();
      gens.pop_back();
      chain.pop_back();
    }
  }
};

}  // namespace detail

/// Raw chain stream: <x> for each element, then <G_k, x> for one x per coset,
/// deduplicated per level, until P is reached. Contains every maximal chain.
inline void enumerate_subgroup_chains(const Subgroup& p, const ChainVisitor& visit) {
  detail::ChainWalker w{p, false, nullptr, visit, {}, {}};
  w.run();
}

inline bool is_composition_series(const std::vector<Subgroup>& chain) {
  if (chain.empty() || chain.front().order() != 1) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!chain[i].is_subgroup_of(chain[i + 1])) return false;
    if (chain[i + 1].order() % chain[i].order() != 0) return false;
    if (!is_prime(chain[i + 1].order() / chain[i].order())) return false;
    if (!is_normal(chain[i], chain[i + 1])) return false;
  }
  return true;
}

/// Streams composition series of p in lexicographic order, pruning non-normal
/// or non-prime-index extensions as they arise. `level_filter(k, H)` may reject
/// a candidate for chain position k (k >= 1), pruning its whole subtree.
inline void for_each_composition_series(const Subgroup& p, const ChainVisitor& visit,
                                        const std::function<bool(std::size_t, const Subgroup&)>* level_filter = nullptr) {
  detail::ChainWalker w{p, true, level_filter, visit, {}, {}};
  w.run();
}

/// All composition series of a solvable p, deduplicated, in lexicographic order.
inline std::vector<CompositionSeries> enumerate_composition_series(const Subgroup& p) {
  std::vector<CompositionSeries> out;
  for_each_composition_series(p, [&](const std::vector<Subgroup>& chain) {
    out.push_back({chain});
    return true;
  });
  std::sort(out.begin(), out.end(), series_less);
  return out;
}

/// The lexicographically least composition series.
inline CompositionSeries first_composition_series(const Subgroup& p) {
  CompositionSeries out;
  for_each_composition_series(p, [&](const std::vector<Subgroup>& chain) {
    out.chain = chain;
    return false;
  });
  return out;
}

/// |P|^((1/2) log_p |P| + slack), p the smallest prime divisor of |P|.
inline double chain_count_bound(std::size_t order, double slack) {
  if (order <= 1) return 1.0;
  const double n = static_cast<double>(order);
  const double p = static_cast<double>(smallest_prime_divisor(order));
  return std::pow(n, 0.5 * std::log(n) / std::log(p) + slack);
}

using PairTester = std::function<std::optional<Isomorphism>(const AlphaCompositionPair&, const AlphaCompositionPair&)>;
using SeriesLevelFilter = std::function<bool(std::size_t, const Subgroup&, const Subgroup&)>;

/// Fixes the first composition series of P2 and tries every composition series
/// of Q2 against it. `level_filter(k, P2_k, Q2_k)` may prune candidates at
/// level k by a necessary condition; by default only orders are compared.
inline std::optional<Isomorphism> alpha_pair_iso_loop(const AlphaDecomposition& dec_g, const AlphaDecomposition& dec_h,
                                                      const PairTester& tester, SearchStats* stats = nullptr,
                                                      const SeriesLevelFilter& level_filter = nullptr) {
  if (dec_g.p1.order() != dec_h.p1.order() || dec_g.p2.order() != dec_h.p2.order()) return std::nullopt;
  const AlphaCompositionPair pair_g{dec_g.p1, first_composition_series(dec_g.p2)};
  std::optional<Isomorphism> found;
  std::function<bool(std::size_t, const Subgroup&)> filter = [&](std::size_t k, const Subgroup& q) {
    if (k >= pair_g.s2.chain.size()) return false;
    const auto& p = pair_g.s2.chain[k];
    if (p.order() != q.order()) return false;
    return !level_filter || level_filter(k, p, q);
  };
  for_each_composition_series(
      dec_h.p2,
      [&](const std::vector<Subgroup>& chain) {
        if (stats) ++stats->series;
        found = tester(pair_g, AlphaCompositionPair{dec_h.p1, CompositionSeries{chain}});
        return !found.has_value();
      },
      &filter);
  return found;
}

}  // namespace solviso
