#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "solviso/decomposition.hpp"
#include "solviso/graphenc.hpp"
#include "solviso/graphiso.hpp"
#include "solviso/group.hpp"
#include "solviso/ordering.hpp"
#include "solviso/series.hpp"
#include "solviso/stats.hpp"
#include "solviso/sylow.hpp"

namespace solviso {

// ---------------------------------------------------------------------------
// Generator enumeration: the brute-force oracle.

namespace detail {

struct GenEnum {
  const GroupTable& g;
  const GroupTable& h;
  std::vector<Element> gens;
  std::vector<Element> images;
  std::vector<std::size_t> gen_order;
  std::vector<std::vector<Element>> by_order;  // elements of h grouped by order

  // Extends gens[0..k) -> images[0..k) over the generated subgroup by BFS and
  // checks every Cayley-graph edge for consistency and injectivity.
  bool consistent(std::size_t k, std::vector<Element>& map) const {
    constexpr Element kNone = static_cast<Element>(-1);
    map.assign(g.order(), kNone);
    std::vector<bool> used(h.order(), false);
    std::vector<Element> queue{g.identity()};
    map[g.identity()] = h.identity();
    used[h.identity()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element u = queue[head];
      for (std::size_t i = 0; i < k; ++i) {
        const Element v = g.mul(u, gens[i]);
        const Element img = h.mul(map[u], images[i]);
        if (map[v] == kNone) {
          if (used[img]) return false;
          used[img] = true;
          map[v] = img;
          queue.push_back(v);
        } else if (map[v] != img) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Isomorphism> search(std::size_t depth) {
    std::vector<Element> map;
    if (depth == gens.size()) {
      if (!consistent(depth, map)) return std::nullopt;
      if (!is_isomorphism(g, h, map)) return std::nullopt;
      return map;
    }
    for (Element y : by_order[gen_order[depth]]) {
      images[depth] = y;
      if (!consistent(depth + 1, map)) continue;
      if (auto w = search(depth + 1)) return w;
    }
    return std::nullopt;
  }
};

}  // namespace detail

/// Fixes the greedy generating sequence of g and tries every tuple of images
/// in h (restricted to elements of matching order), extending multiplicatively
/// and checking consistency after each generator. Returns a verified
/// isomorphism or nullopt.
inline std::optional<Isomorphism> generator_enumeration_iso(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order()) return std::nullopt;
  detail::GenEnum e{g, h, greedy_generating_sequence(Subgroup::whole(g)).elems, {}, {}, {}};
  e.images.resize(e.gens.size());
  for (auto x : e.gens) e.gen_order.push_back(g.element_order(x));
  e.by_order.assign(h.order() + 1, {});
  for (Element y = 0; y < h.order(); ++y) e.by_order[h.element_order(y)].push_back(y);
  auto w = e.search(0);
  if (w && !is_isomorphism(g, h, *w)) throw Error(ErrorKind::WitnessVerificationFailed, "oracle produced a non-isomorphism");
  return w;
}

/// max(2, round(log2 n / log2 log2 n)); 2 for n < 4.
inline std::size_t choose_alpha(std::size_t n) {
  if (n < 4) return 2;
  const double l = std::log2(static_cast<double>(n));
  const auto a = static_cast<std::size_t>(std::llround(l / std::log2(l)));
  return std::max<std::size_t>(2, a);
}

// ---------------------------------------------------------------------------
// Isomorphism-invariant fingerprints used to prune candidate loops.

/// Sorted element orders of s, then the number of commuting pairs in s.
inline std::vector<std::size_t> subgroup_fingerprint(const Subgroup& s) {
  const auto& g = s.parent();
  const auto xs = s.elements();
  std::vector<std::size_t> out;
  out.reserve(xs.size() + 1);
  for (auto x : xs) out.push_back(g.element_order(x));
  std::sort(out.begin(), out.end());
  std::size_t commuting = 0;
  for (auto a : xs)
    for (auto b : xs) commuting += g.mul(a, b) == g.mul(b, a);
  out.push_back(commuting);
  return out;
}

struct EngineOptions {
  std::optional<std::size_t> alpha;
  /// Skip candidates that differ in an isomorphism invariant (subgroup
  /// fingerprints, generator orders). Never changes a verdict.
  bool invariant_pruning = true;
  /// Cross-check the final verdict against generator_enumeration_iso.
  bool verify_with_oracle = false;
  /// Canonize only candidates with the least ranked table (see
  /// canon_alpha_decomp). Never changes whether two forms are equal.
  bool reduce_candidates = true;
};

// ---------------------------------------------------------------------------
// Augmented pairs.

/// Holds X(A) and its canonical form so many candidate pairs B can be tested
/// against one A.
class PairMatcher {
 public:
  explicit PairMatcher(const AugmentedPair& a)
      : a_(a), xa_(build_X(a)), invariant_(refinement_invariant(xa_.graph)), canon_(canonize_colored_graph(xa_.graph)) {}

  std::optional<Isomorphism> match(const AugmentedPair& b, SearchStats* stats = nullptr) const {
    const auto& g = a_.group();
    const auto& h = b.group();
    if (g.order() != h.order() || a_.p1.order() != b.p1.order() || a_.s2.length() != b.s2.length() ||
        a_.g.elems.size() != b.g.elems.size())
      return std::nullopt;
    if (stats) ++stats->graph_tests;
    const auto xb = build_X(b);
    if (xb.graph.vertex_count != xa_.graph.vertex_count || xb.graph.edges.size() != xa_.graph.edges.size())
      return std::nullopt;
    if (refinement_invariant(xb.graph) != invariant_) return std::nullopt;
    const auto cb = canonize_colored_graph(xb.graph);
    if (stats) stats->canon_nodes += cb.nodes;
    const auto theta = isomorphism_from_canonical(xa_.graph, canon_, xb.graph, cb);
    if (!theta) return std::nullopt;
    // phi = (x1 x2 in H) o theta o (G -> leaf (x1, x2)).
    std::vector<Element> vertex_element(xb.graph.vertex_count, static_cast<Element>(-1));
    for (Element y = 0; y < h.order(); ++y) vertex_element[xb.element_vertex[y]] = y;
    Isomorphism phi(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      const auto y = vertex_element[(*theta)[xa_.element_vertex[x]]];
      if (y == static_cast<Element>(-1))
        throw Error(ErrorKind::WitnessVerificationFailed, "graph isomorphism does not preserve element nodes");
      phi[x] = y;
    }
    if (!is_pair_isomorphism(a_, b, phi))
      throw Error(ErrorKind::WitnessVerificationFailed, "decoded bijection is not a pair isomorphism");
    return phi;
  }

  const XEncoding& encoding() const noexcept { return xa_; }
  std::uint64_t canon_nodes() const noexcept { return canon_.nodes; }

 private:
  AugmentedPair a_;
  XEncoding xa_;
  std::uint64_t invariant_;
  CanonicalGraph canon_;
};

/// Decides (P1, S2, g) ≅ (Q1, S2', h) through graph isomorphism of the X
/// encodings; the returned bijection is verified as a pair isomorphism.
inline std::optional<Isomorphism> augmented_pair_iso(const AugmentedPair& a, const AugmentedPair& b,
                                                     SearchStats* stats = nullptr) {
  if (a.group().order() != b.group().order() || a.p1.order() != b.p1.order() || a.s2.length() != b.s2.length() ||
      a.g.elems.size() != b.g.elems.size())
    return std::nullopt;
  return PairMatcher(a).match(b, stats);
}

// ---------------------------------------------------------------------------
// Full pipeline.

/// Tries every irredundant generating sequence h of Q1 with |h| = |g| against
/// the pair (P1, S2, g) for the greedy g of P1.
inline std::optional<Isomorphism> composition_pair_iso(const AlphaCompositionPair& pg, const AlphaCompositionPair& ph,
                                                       const EngineOptions& opts, SearchStats* stats) {
  AugmentedPair a{pg.p1, pg.s2, greedy_generating_sequence(pg.p1)};
  const auto& g = pg.p1.parent();
  const auto& h = ph.p1.parent();
  std::vector<std::size_t> gen_orders, prefix_orders;
  {
    Subgroup cur = Subgroup::trivial(g);
    std::vector<Element> prefix;
    for (auto x : a.g.elems) {
      gen_orders.push_back(g.element_order(x));
      const Element extra[] = {x};
      cur = join(cur, prefix, extra);
      prefix.push_back(x);
      prefix_orders.push_back(cur.order());
    }
  }
  std::unique_ptr<PairMatcher> matcher;
  std::optional<Isomorphism> found;
  SequenceFilter filter = [&](std::size_t i, Element y) {
    if (!opts.invariant_pruning) return true;
    return h.element_order(y) == gen_orders[i];
  };
  enumerate_generating_sequences(
      ph.p1, a.g.elems.size(),
      [&](const GeneratingSequence& seq) {
        if (stats) ++stats->sequences;
        if (opts.invariant_pruning) {
          Subgroup cur = Subgroup::trivial(h);
          std::vector<Element> prefix;
          for (std::size_t i = 0; i < seq.elems.size(); ++i) {
            const Element extra[] = {seq.elems[i]};
            cur = join(cur, prefix, extra);
            prefix.push_back(seq.elems[i]);
            if (cur.order() != prefix_orders[i]) return true;
          }
        }
        if (!matcher) matcher = std::make_unique<PairMatcher>(a);
        found = matcher->match(AugmentedPair{ph.p1, ph.s2, seq}, stats);
        return !found.has_value();
      },
      &filter);
  return found;
}

/// Isomorphism of solvable groups: Sylow-basis loop, composition-series loop,
/// generating-sequence loop, then the graph test. Any witness is verified.
inline std::optional<Isomorphism> solvable_iso(const GroupTable& g, const GroupTable& h, const EngineOptions& opts = {},
                                               SearchStats* stats = nullptr) {
  if (!is_solvable(g) || !is_solvable(h)) throw Error(ErrorKind::NotSolvable, "input group is not solvable");
  std::optional<Isomorphism> result;
  if (g.order() == h.order()) {
    const auto alpha = opts.alpha.value_or(choose_alpha(g.order()));
    DecompositionTester dec_tester = [&](const AlphaDecomposition& dg, const AlphaDecomposition& dh) {
      if (opts.invariant_pruning &&
          (subgroup_fingerprint(dg.p1) != subgroup_fingerprint(dh.p1) ||
           subgroup_fingerprint(dg.p2) != subgroup_fingerprint(dh.p2) ||
           subgroup_fingerprint(Subgroup::whole(g)) != subgroup_fingerprint(Subgroup::whole(h))))
        return std::optional<Isomorphism>{};
      SeriesLevelFilter level_filter;
      if (opts.invariant_pruning)
        level_filter = [&](std::size_t, const Subgroup& p, const Subgroup& q) {
          return subgroup_fingerprint(p) == subgroup_fingerprint(q) &&
                 is_normal(p, Subgroup::whole(g)) == is_normal(q, Subgroup::whole(h));
        };
      PairTester pair_tester = [&](const AlphaCompositionPair& pg, const AlphaCompositionPair& ph) {
        return composition_pair_iso(pg, ph, opts, stats);
      };
      return alpha_pair_iso_loop(dg, dh, pair_tester, stats, level_filter);
    };
    result = alpha_decomp_iso(g, h, alpha, dec_tester, stats);
  }
  if (result && !is_isomorphism(g, h, *result))
    throw Error(ErrorKind::WitnessVerificationFailed, "pipeline witness is not a group isomorphism");
  if (opts.verify_with_oracle && result.has_value() != generator_enumeration_iso(g, h).has_value())
    throw Error(ErrorKind::WitnessVerificationFailed, "pipeline verdict disagrees with generator enumeration");
  return result;
}

// ---------------------------------------------------------------------------
// Canonical forms.

inline void write_table(std::ostream& out, const std::vector<std::vector<Element>>& t) {
  out << t.size() << '\n';
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

inline void write_set(std::ostream& out, const char* tag, const std::vector<Element>& s) {
  out << tag;
  for (auto x : s) out << ' ' << x;
  out << '\n';
}

/// (M, psi[P1], psi[P2,0], ..., psi[P2,m]); entries are 1-based.
struct CanonicalPairForm {
  std::vector<std::vector<Element>> table;
  std::vector<Element> p1;
  std::vector<std::vector<Element>> series;

  std::string serialize() const {
    std::ostringstream out;
    write_table(out, table);
    write_set(out, "P1", p1);
    for (std::size_t k = 0; k < series.size(); ++k) write_set(out, ("S" + std::to_string(k)).c_str(), series[k]);
    return out.str();
  }
  friend bool operator==(const CanonicalPairForm&, const CanonicalPairForm&) = default;
};

/// (M, psi[P1], psi[P2]); entries are 1-based.
struct CanonicalDecompForm {
  std::vector<std::vector<Element>> table;
  std::vector<Element> p1;
  std::vector<Element> p2;

  std::string serialize() const {
    std::ostringstream out;
    write_table(out, table);
    write_set(out, "P1", p1);
    write_set(out, "P2", p2);
    return out.str();
  }
  friend bool operator==(const CanonicalDecompForm&, const CanonicalDecompForm&) = default;
};

/// n x n table with entries in 1..n.
struct CanonicalGroupForm {
  std::vector<std::vector<Element>> table;

  std::string serialize() const {
    std::ostringstream out;
    write_table(out, table);
    return out.str();
  }
  friend bool operator==(const CanonicalGroupForm&, const CanonicalGroupForm&) = default;
};

inline std::vector<Element> one_based(const ElementSet& s) {
  auto out = s.members();
  for (auto& x : out) ++x;
  return out;
}

inline CanonicalPairForm pair_form_from_decoded(const DecodedPair& d) {
  CanonicalPairForm f;
  const auto n = d.table.order();
  f.table.assign(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) f.table[x][y] = d.table.mul(x, y) + 1;
  f.p1 = one_based(d.p1);
  for (const auto& s : d.series) f.series.push_back(one_based(s));
  return f;
}

/// Y(Can(X(pair))).
inline CanonicalPairForm canon_augmented_pair(const AugmentedPair& pair, SearchStats* stats = nullptr) {
  const auto x = build_X(pair);
  const auto c = canonize_colored_graph(x.graph);
  if (stats) stats->canon_nodes += c.nodes;
  return pair_form_from_decoded(decode_Y(c.graph, x.ell, x.m));
}

/// The table of p1 relabeled by rank under the word order; a complete
/// invariant of (P1, g).
inline std::vector<Element> ranked_table(const Subgroup& p1, const WordOrder& ord) {
  const auto& g = p1.parent();
  std::vector<Element> out;
  out.reserve(ord.by_rank.size() * ord.by_rank.size());
  for (auto x : ord.by_rank)
    for (auto y : ord.by_rank) out.push_back(static_cast<Element>(ord.rank[g.mul(x, y)]));
  return out;
}

/// Least pair form over every composition series of P2 and every minimum-length
/// generating sequence of P1, projected to (M, psi[P1], psi[P2]).
///
/// Candidates are ordered by (ranked_table, form) rather than by form alone.
/// ranked_table is an isomorphism invariant of the pair, so only sequences
/// with the least ranked table are canonized; when P2 is trivial they are all
/// isomorphic and one suffices. `reduce = false` canonizes every distinct
/// word order and minimizes by form alone.
inline CanonicalDecompForm canon_alpha_decomp(const AlphaDecomposition& dec, SearchStats* stats = nullptr,
                                              bool reduce = true) {
  const auto k = minimum_generating_length(dec.p1);
  std::map<std::vector<Element>, GeneratingSequence> rep;  // word order -> first sequence inducing it
  std::optional<std::vector<Element>> least;
  enumerate_generating_sequences(dec.p1, k, [&](const GeneratingSequence& seq) {
    if (stats) ++stats->sequences;
    const auto ord = word_ranks(dec.p1, seq);
    if (reduce) {
      auto key = ranked_table(dec.p1, ord);
      if (least && key > *least) return true;
      if (!least || key < *least) {
        least = std::move(key);
        rep.clear();
      }
      if (dec.p2.order() == 1 && !rep.empty()) return true;
    }
    rep.try_emplace(ord.by_rank, seq);
    return true;
  });

  std::optional<std::string> best_key;
  CanonicalPairForm best;
  for_each_composition_series(dec.p2, [&](const std::vector<Subgroup>& chain) {
    if (stats) ++stats->series;
    for (const auto& [ord, seq] : rep) {
      auto form = canon_augmented_pair(AugmentedPair{dec.p1, CompositionSeries{chain}, seq}, stats);
      auto key = form.serialize();
      if (!best_key || key < *best_key) {
        best_key = std::move(key);
        best = std::move(form);
      }
    }
    return true;
  });
  return CanonicalDecompForm{best.table, best.p1, best.series.back()};
}

/// Least decomposition form over all Sylow bases split at choose_alpha(n);
/// the output table is revalidated.
inline CanonicalGroupForm canon_group(const GroupTable& g, const EngineOptions& opts = {}, SearchStats* stats = nullptr) {
  if (!is_solvable(g)) throw Error(ErrorKind::NotSolvable, "input group is not solvable");
  const auto alpha = opts.alpha.value_or(choose_alpha(g.order()));
  std::optional<std::string> best_key;
  CanonicalDecompForm best;
  // Bases that split into the same (P1, P2) give the same form.
  std::vector<std::pair<ElementSet, ElementSet>> seen;
  for (const auto& basis : all_sylow_bases(g)) {
    if (stats) ++stats->bases;
    const auto dec = alpha_split(g, basis, alpha);
    std::pair<ElementSet, ElementSet> parts{dec.p1.members(), dec.p2.members()};
    if (std::find(seen.begin(), seen.end(), parts) != seen.end()) continue;
    seen.push_back(std::move(parts));
    auto form = canon_alpha_decomp(dec, stats, opts.reduce_candidates);
    auto key = form.serialize();
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best = std::move(form);
    }
  }
  CanonicalGroupForm out{best.table};
  std::vector<std::vector<Element>> zero = out.table;
  for (auto& row : zero)
    for (auto& x : row) --x;
  const auto check = validate_table(zero);
  if (opts.verify_with_oracle && !generator_enumeration_iso(g, check))
    throw Error(ErrorKind::WitnessVerificationFailed, "canonical table is not isomorphic to the input");
  return out;
}

}  // namespace solviso
