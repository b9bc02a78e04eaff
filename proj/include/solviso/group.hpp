#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "solviso/element_set.hpp"
#include "solviso/errors.hpp"

namespace solviso {

/// A finite group given by its full multiplication table. Immutable once built;
/// construct through validate_table().
class GroupTable {
 public:
  GroupTable() = default;

  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element x) const noexcept { return inverse_[x]; }
  Element conjugate(Element g, Element x) const noexcept { return mul(mul(g, x), inverse_[g]); }

  /// Row-major table, entry [a*n+b] = a*b.
  std::span<const Element> table() const noexcept { return table_; }

  std::size_t element_order(Element x) const noexcept {
    std::size_t k = 1;
    for (Element y = x; y != identity_; y = mul(y, x)) ++k;
    return k;
  }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(n_);
    for (std::size_t a = 0; a < n_; ++a) out[a].assign(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
    return out;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.table_ == b.table_; }

 private:
  friend GroupTable validate_table(const std::vector<std::vector<Element>>& raw);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

/// Validates the four group axioms and returns the table with identity and
/// inverses located. Throws Error naming the first witness on failure.
inline GroupTable validate_table(const std::vector<std::vector<Element>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorKind::ParseError, "empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n)
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                                             " entries, expected " + std::to_string(n));
    for (auto v : raw[i])
      if (v >= n) throw Error(ErrorKind::ParseError, "entry out of range in row " + std::to_string(i));
  }

  GroupTable g;
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = raw[a][b];

  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto v = raw[a][b];
      if (seen[v] == a)
        throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(a) + " repeats " + std::to_string(v));
      seen[v] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      auto v = raw[a][b];
      if (seen[v] == b)
        throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(b) + " repeats " + std::to_string(v));
      seen[v] = b;
    }
  }

  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoIdentity, "no two-sided identity");

  g.inverse_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool ok = false;
    for (Element y = 0; y < n && !ok; ++y) {
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inverse_[x] = y;
        ok = true;
      }
    }
    if (!ok) throw Error(ErrorKind::MissingInverse, "element " + std::to_string(x) + " has no two-sided inverse");
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::NonAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                     std::to_string(c) + ")");
    }
  return g;
}

/// A subgroup stored as a membership bitset. The parent table must outlive it.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const GroupTable& parent, ElementSet members)
      : parent_(&parent), members_(std::move(members)), order_(members_.count()) {}

  static Subgroup trivial(const GroupTable& g) {
    ElementSet s(g.order());
    s.insert(g.identity());
    return {g, std::move(s)};
  }
  static Subgroup whole(const GroupTable& g) {
    ElementSet s(g.order());
    for (Element x = 0; x < g.order(); ++x) s.insert(x);
    return {g, std::move(s)};
  }

  const GroupTable& parent() const noexcept { return *parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  std::vector<Element> elements() const { return members_.members(); }
  bool is_subgroup_of(const Subgroup& o) const noexcept { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  const GroupTable* parent_ = nullptr;
  ElementSet members_;
  std::size_t order_ = 0;
};

inline bool lex_less(const Subgroup& a, const Subgroup& b) noexcept { return lex_less(a.members(), b.members()); }

/// Smallest subgroup containing `seed`; worklist closure under right
/// multiplication by the seed elements.
template <typename Range>
Subgroup subgroup_closure(const GroupTable& g, const Range& seed) {
  ElementSet members(g.order());
  std::vector<Element> gens;
  for (Element s : seed)
    if (s != g.identity()) gens.push_back(s);
  std::vector<Element> queue{g.identity()};
  members.insert(g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element a = queue[head];
    for (Element s : gens) {
      const Element b = g.mul(a, s);
      if (!members.contains(b)) {
        members.insert(b);
        queue.push_back(b);
      }
    }
  }
  return {g, std::move(members)};
}

inline Subgroup subgroup_closure(const GroupTable& g, std::initializer_list<Element> seed) {
  return subgroup_closure(g, std::vector<Element>(seed));
}

/// Closure of h together with `extra`; `h_gens` must generate h.
inline Subgroup join(const Subgroup& h, std::span<const Element> h_gens, std::span<const Element> extra) {
  const auto& g = h.parent();
  ElementSet members = h.members();
  std::vector<Element> queue = h.elements();
  std::vector<Element> gens(h_gens.begin(), h_gens.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element a = queue[head];
    for (Element s : gens) {
      const Element b = g.mul(a, s);
      if (!members.contains(b)) {
        members.insert(b);
        queue.push_back(b);
      }
    }
  }
  return {g, std::move(members)};
}

inline Subgroup join(const Subgroup& h, std::span<const Element> extra) {
  const auto all = h.elements();
  return join(h, all, extra);
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) { return {a.parent(), a.members() & b.members()}; }

/// True iff h is normalised by every element of k.
inline bool is_normal(const Subgroup& h, const Subgroup& k) {
  if (!h.is_subgroup_of(k)) throw Error(ErrorKind::NotNested, "H is not contained in K");
  const auto& g = h.parent();
  const auto hs = h.elements();
  bool ok = true;
  k.members().for_each([&](Element x) {
    if (!ok) return;
    for (Element y : hs)
      if (!h.contains(g.conjugate(x, y))) {
        ok = false;
        return;
      }
  });
  return ok;
}

/// {a*b : a in A, b in B}.
inline ElementSet product_set(const Subgroup& a, const Subgroup& b) {
  const auto& g = a.parent();
  ElementSet out(g.order());
  const auto bs = b.elements();
  a.members().for_each([&](Element x) {
    for (Element y : bs) out.insert(g.mul(x, y));
  });
  return out;
}

inline Subgroup commutator_subgroup(const Subgroup& h) {
  const auto& g = h.parent();
  const auto hs = h.elements();
  std::vector<Element> comms;
  ElementSet seen(g.order());
  for (Element a : hs)
    for (Element b : hs) {
      const Element c = g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
      if (!seen.contains(c)) {
        seen.insert(c);
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

/// D0 = G, D(i+1) = [Di, Di], until the series stabilises.
inline std::vector<Subgroup> derived_series(const GroupTable& g) {
  std::vector<Subgroup> out{Subgroup::whole(g)};
  while (true) {
    auto next = commutator_subgroup(out.back());
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

inline bool is_solvable(const GroupTable& g) { return derived_series(g).back().order() == 1; }

inline bool is_abelian(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

struct PrimePower {
  std::size_t prime;
  std::size_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using PrimeFactorization = std::vector<PrimePower>;

inline PrimeFactorization factorize(std::size_t n) {
  PrimeFactorization out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::size_t smallest_prime_divisor(std::size_t n) {
  auto f = factorize(n);
  return f.empty() ? 1 : f.front().prime;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

/// Relabels g by the bijection perm (old element -> new element).
inline GroupTable relabel(const GroupTable& g, std::span<const Element> perm) {
  const auto n = g.order();
  std::vector<std::vector<Element>> raw(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) raw[perm[a]][perm[b]] = perm[g.mul(a, b)];
  return validate_table(raw);
}

/// True iff phi (indexed by elements of a) is a bijective homomorphism a -> b.
inline bool is_isomorphism(const GroupTable& a, const GroupTable& b, std::span<const Element> phi) {
  if (a.order() != b.order() || phi.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (auto v : phi) {
    if (v >= b.order() || hit[v]) return false;
    hit[v] = true;
  }
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

}  // namespace solviso
