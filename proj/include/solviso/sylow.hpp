#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "solviso/group.hpp"

namespace solviso {

struct SylowEntry {
  std::size_t prime;
  Subgroup subgroup;
};

/// One Sylow subgroup per prime divisor, in increasing prime order, pairwise
/// permutable.
struct SylowBasis {
  std::vector<SylowEntry> entries;

  friend bool operator==(const SylowBasis& a, const SylowBasis& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      if (a.entries[i].prime != b.entries[i].prime || !(a.entries[i].subgroup == b.entries[i].subgroup)) return false;
    return true;
  }
};

inline Subgroup normalizer(const Subgroup& h) {
  const auto& g = h.parent();
  const auto hs = h.elements();
  ElementSet out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element y : hs)
      if (!h.contains(g.conjugate(x, y))) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return {g, std::move(out)};
}

inline Subgroup conjugate_subgroup(const Subgroup& h, Element x) {
  const auto& g = h.parent();
  ElementSet out(g.order());
  h.members().for_each([&](Element y) { out.insert(g.conjugate(x, y)); });
  return {g, std::move(out)};
}

namespace detail {

inline std::size_t sylow_order(std::size_t n, std::size_t p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline bool is_p_power(std::size_t k, std::size_t p) {
  while (k % p == 0) k /= p;
  return k == 1;
}

}  // namespace detail

/// Sylow p-subgroup by constructive ascent: start from the smallest element of
/// order p, then repeatedly adjoin the smallest p-element of the normaliser
/// lying outside the current subgroup.
inline Subgroup sylow_subgroup(const GroupTable& g, std::size_t p) {
  const auto n = g.order();
  if (p < 2 || n % p != 0) throw Error(ErrorKind::NoSuchPrime, std::to_string(p) + " does not divide " + std::to_string(n));
  const auto target = detail::sylow_order(n, p);

  Subgroup cur = Subgroup::trivial(g);
  for (Element x = 0; x < n; ++x)
    if (g.element_order(x) == p) {
      cur = subgroup_closure(g, {x});
      break;
    }
  std::vector<Element> gens = cur.elements();
  while (cur.order() < target) {
    const auto norm = normalizer(cur);
    bool grew = false;
    for (Element y = 0; y < n && !grew; ++y) {
      if (!norm.contains(y) || cur.contains(y) || !detail::is_p_power(g.element_order(y), p)) continue;
      const Element extra[] = {y};
      cur = join(cur, extra);
      grew = true;
    }
    assert(grew && "Sylow ascent stuck");
    if (!grew) throw Error(ErrorKind::NotSolvable, "Sylow ascent stuck; table is not a group");
  }
  return cur;
}

/// All Sylow p-subgroups, as conjugates of sylow_subgroup(), sorted by
/// lex_less.
inline std::vector<Subgroup> all_sylow_subgroups(const GroupTable& g, std::size_t p) {
  const auto base = sylow_subgroup(g, p);
  std::vector<Subgroup> out;
  for (Element x = 0; x < g.order(); ++x) {
    auto c = conjugate_subgroup(base, x);
    if (std::none_of(out.begin(), out.end(), [&](const Subgroup& s) { return s == c; })) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return lex_less(a, b); });
  assert(out.size() % p == 1 % p);
  return out;
}

/// AB = BA as sets.
inline bool permutable(const Subgroup& a, const Subgroup& b) { return product_set(a, b) == product_set(b, a); }

namespace detail {

inline bool extend_basis(const std::vector<std::vector<Subgroup>>& candidates, std::vector<const Subgroup*>& chosen) {
  const auto level = chosen.size();
  if (level == candidates.size()) return true;
  for (const auto& cand : candidates[level]) {
    bool ok = true;
    for (const auto* prev : chosen)
      if (!permutable(*prev, cand)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(&cand);
    if (extend_basis(candidates, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// First pairwise-permutable selection of Sylow subgroups in candidate order.
/// Throws NotSolvable when none exists.
inline SylowBasis sylow_basis(const GroupTable& g) {
  const auto primes = factorize(g.order());
  std::vector<std::vector<Subgroup>> candidates;
  for (const auto& pp : primes) candidates.push_back(all_sylow_subgroups(g, pp.prime));
  std::vector<const Subgroup*> chosen;
  if (!detail::extend_basis(candidates, chosen))
    throw Error(ErrorKind::NotSolvable, "no pairwise permutable choice of Sylow subgroups");
  SylowBasis basis;
  for (std::size_t i = 0; i < primes.size(); ++i) basis.entries.push_back({primes[i].prime, *chosen[i]});
  return basis;
}

inline SylowBasis conjugate_basis(const SylowBasis& b, Element x) {
  SylowBasis out;
  for (const auto& e : b.entries) out.entries.push_back({e.prime, conjugate_subgroup(e.subgroup, x)});
  return out;
}

inline bool basis_less(const SylowBasis& a, const SylowBasis& b) {
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (lex_less(a.entries[i].subgroup, b.entries[i].subgroup)) return true;
    if (lex_less(b.entries[i].subgroup, a.entries[i].subgroup)) return false;
  }
  return false;
}

/// Every Sylow basis of g: the distinct conjugates of sylow_basis(g), sorted.
inline std::vector<SylowBasis> all_sylow_bases(const GroupTable& g) {
  const auto base = sylow_basis(g);
  std::vector<SylowBasis> out;
  for (Element x = 0; x < g.order(); ++x) {
    auto c = conjugate_basis(base, x);
    if (std::none_of(out.begin(), out.end(), [&](const SylowBasis& s) { return s == c; })) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), basis_less);
  assert(out.size() <= g.order());
  return out;
}

}  // namespace solviso
