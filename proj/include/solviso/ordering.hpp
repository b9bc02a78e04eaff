#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "solviso/group.hpp"

namespace solviso {

/// Ordered generating sequence of a subgroup.
struct GeneratingSequence {
  std::vector<Element> elems;
  friend bool operator==(const GeneratingSequence&, const GeneratingSequence&) = default;
};

/// The order on P induced by shortlex-least words in the generators.
struct WordOrder {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> rank;                // indexed by element of G; npos outside P
  std::vector<Element> by_rank;                 // elements of P in increasing order
  std::vector<std::vector<std::size_t>> word;   // indexed by element; generator positions
};

/// Breadth-first search of the Cayley graph of (P, g) from the identity.
/// Parents are expanded in rank order and generators in sequence order, so the
/// first word to reach an element is its shortlex-least word.
inline WordOrder word_ranks(const Subgroup& p, const GeneratingSequence& gens) {
  const auto& g = p.parent();
  WordOrder out;
  out.rank.assign(g.order(), WordOrder::npos);
  out.word.assign(g.order(), {});
  out.rank[g.identity()] = 0;
  out.by_rank.push_back(g.identity());
  for (std::size_t head = 0; head < out.by_rank.size(); ++head) {
    const Element u = out.by_rank[head];
    for (std::size_t i = 0; i < gens.elems.size(); ++i) {
      const Element v = g.mul(u, gens.elems[i]);
      if (out.rank[v] != WordOrder::npos) continue;
      out.rank[v] = out.by_rank.size();
      out.by_rank.push_back(v);
      out.word[v] = out.word[u];
      out.word[v].push_back(i);
    }
  }
  if (out.by_rank.size() != p.order()) throw Error(ErrorKind::NotGenerating, "sequence does not generate P");
  for (Element x : out.by_rank)
    if (!p.contains(x)) throw Error(ErrorKind::NotGenerating, "generator outside P");
  return out;
}

/// Appends the smallest element outside the closure so far until P is reached.
inline GeneratingSequence greedy_generating_sequence(const Subgroup& p) {
  const auto& g = p.parent();
  GeneratingSequence out;
  Subgroup cur = Subgroup::trivial(g);
  p.members().for_each([&](Element x) {
    if (cur.contains(x)) return;
    out.elems.push_back(x);
    const Element extra[] = {x};
    cur = join(cur, out.elems, extra);
  });
  return out;
}

/// Irredundant: no element lies in the subgroup generated by its predecessors.
inline bool is_irredundant(const GroupTable& g, const GeneratingSequence& seq) {
  Subgroup cur = Subgroup::trivial(g);
  std::vector<Element> prefix;
  for (Element x : seq.elems) {
    if (cur.contains(x)) return false;
    const Element extra[] = {x};
    cur = join(cur, prefix, extra);
    prefix.push_back(x);
  }
  return true;
}

using SequenceVisitor = std::function<bool(const GeneratingSequence&)>;
/// filter(i, x) may reject x as the i-th element (0-based), pruning the subtree.
using SequenceFilter = std::function<bool(std::size_t, Element)>;

namespace detail {

struct SequenceWalker {
  const Subgroup& q;
  std::size_t k;
  const SequenceVisitor& visit;
  const SequenceFilter* filter;
  GeneratingSequence seq;
  bool stopped = false;

  void descend(const Subgroup& cur) {
    if (seq.elems.size() == k) {
      if (cur.order() == q.order()) stopped = !visit(seq);
      return;
    }
    if (cur.order() == q.order()) return;
    q.members().for_each([&](Element x) {
      if (stopped || cur.contains(x)) return;
      if (filter && !(*filter)(seq.elems.size(), x)) return;
      const Element extra[] = {x};
      auto next = join(cur, seq.elems, extra);
      seq.elems.push_back(x);
      descend(next);
      seq.elems.pop_back();
    });
  }
};

}  // namespace detail

/// Streams every irredundant generating sequence of q of length exactly k, in
/// lexicographic element order.
inline void enumerate_generating_sequences(const Subgroup& q, std::size_t k, const SequenceVisitor& visit,
                                           const SequenceFilter* filter = nullptr) {
  detail::SequenceWalker w{q, k, visit, filter, {}};
  w.descend(Subgroup::trivial(q.parent()));
}

inline std::vector<GeneratingSequence> all_generating_sequences(const Subgroup& q, std::size_t k) {
  std::vector<GeneratingSequence> out;
  enumerate_generating_sequences(q, k, [&](const GeneratingSequence& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

/// Minimum number of generators of q. Isomorphism-invariant, unlike the
/// greedy length.
inline std::size_t minimum_generating_length(const Subgroup& q) {
  for (std::size_t k = 0;; ++k) {
    bool any = false;
    enumerate_generating_sequences(q, k, [&](const GeneratingSequence&) {
      any = true;
      return false;
    });
    if (any) return k;
  }
}

}  // namespace solviso
