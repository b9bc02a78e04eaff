#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "solviso/cayley_io.hpp"
#include "solviso/group.hpp"

namespace solviso {

namespace detail {

inline GroupTable table_from(std::size_t n, const std::function<Element(Element, Element)>& mul) {
  std::vector<std::vector<Element>> raw(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) raw[a][b] = mul(a, b);
  return validate_table(raw);
}

inline GroupTable permutation_group(std::size_t degree, bool even_only) {
  std::vector<Element> p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Element>> perms;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < degree; ++i)
      for (std::size_t j = i + 1; j < degree; ++j) inversions += p[i] > p[j];
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return table_from(perms.size(), [&](Element a, Element b) {
    std::vector<Element> c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = perms[a][perms[b][i]];
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
  });
}

}  // namespace detail

inline GroupTable cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "cyclic order must be positive");
  return detail::table_from(n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); });
}

/// (Z_p)^k with elements written in base p.
inline GroupTable elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParams, "elemabelian needs a prime");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= p;
  return detail::table_from(n, [p, k](Element a, Element b) {
    Element out = 0, scale = 1;
    for (std::size_t i = 0; i < k; ++i, a /= p, b /= p, scale *= p) out += ((a % p + b % p) % p) * scale;
    return out;
  });
}

/// Dihedral group of order n = 2m; element r^a s^b has index a + m*b.
inline GroupTable dihedral(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::BadParams, "dihedral order must be even and at least 2");
  const std::size_t m = n / 2;
  return detail::table_from(n, [m](Element x, Element y) {
    const std::size_t a = x % m, b = x / m, c = y % m, d = y / m;
    const std::size_t r = b ? (a + m - c) % m : (a + c) % m;
    return static_cast<Element>(r + m * ((b + d) % 2));
  });
}

/// a^i b^j with a^4 = 1, b^2 = a^2, b a b^-1 = a^-1; index i + 4j.
inline GroupTable quaternion8() {
  return detail::table_from(8, [](Element x, Element y) {
    const std::size_t i = x % 4, j = x / 4, k = y % 4, l = y / 4;
    std::size_t r = j ? (i + 4 - k) % 4 : (i + k) % 4;
    if (j && l) return static_cast<Element>((r + 2) % 4);
    return static_cast<Element>(r + 4 * ((j + l) % 2));
  });
}

/// Upper unitriangular 3x3 matrices over Z_p; (a, b, c) has index a + p*b + p^2*c.
inline GroupTable heisenberg(std::size_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParams, "heisenberg needs a prime");
  return detail::table_from(p * p * p, [p](Element x, Element y) {
    const std::size_t a = x % p, b = x / p % p, c = x / (p * p);
    const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    return static_cast<Element>((a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p));
  });
}

/// Z_q x| Z_p through the smallest r > 1 of multiplicative order p mod q;
/// (x, y) has index x + q*y.
inline GroupTable semidirect(std::size_t p, std::size_t q) {
  if (!is_prime(p) || !is_prime(q) || (q - 1) % p != 0)
    throw Error(ErrorKind::BadParams, "semidirect needs primes p, q with p | q-1");
  std::size_t r = 2;
  auto power = [q](std::size_t base, std::size_t e) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < e; ++i) out = out * base % q;
    return out;
  };
  while (power(r, p) != 1) ++r;
  return detail::table_from(p * q, [&](Element u, Element v) {
    const std::size_t x = u % q, y = u / q, x2 = v % q, y2 = v / q;
    return static_cast<Element>((x + power(r, y) * x2) % q + q * ((y + y2) % p));
  });
}

/// (a, b) has index a*|B| + b.
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t m = b.order();
  return detail::table_from(a.order() * m, [&](Element x, Element y) {
    return static_cast<Element>(a.mul(x / m, y / m) * m + b.mul(x % m, y % m));
  });
}

inline GroupTable symmetric(std::size_t degree) { return detail::permutation_group(degree, false); }
inline GroupTable alternating(std::size_t degree) { return detail::permutation_group(degree, true); }

/// 2x2 matrices of determinant 1 over Z_p.
inline GroupTable special_linear2(std::size_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParams, "special_linear2 needs a prime");
  std::vector<std::array<std::size_t, 4>> mats;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1) mats.push_back({a, b, c, d});
  return detail::table_from(mats.size(), [&](Element x, Element y) {
    const auto& m = mats[x];
    const auto& k = mats[y];
    const std::array<std::size_t, 4> r{(m[0] * k[0] + m[1] * k[2]) % p, (m[0] * k[1] + m[1] * k[3]) % p,
                                       (m[2] * k[0] + m[3] * k[2]) % p, (m[2] * k[1] + m[3] * k[3]) % p};
    return static_cast<Element>(std::lower_bound(mats.begin(), mats.end(), r) - mats.begin());
  });
}

namespace detail {

inline std::size_t parse_param(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || pos == 0) throw Error(ErrorKind::BadParams, "expected a positive integer, got '" + s + "'");
  return v;
}

}  // namespace detail

/// Builds a family member from CLI-style parameters; directprod takes two
/// .cayley paths.
inline GroupTable make_family(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw Error(ErrorKind::BadParams, family + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (family == "cyclic") {
    need(1);
    return cyclic(detail::parse_param(params[0]));
  }
  if (family == "elemabelian") {
    need(2);
    return elementary_abelian(detail::parse_param(params[0]), detail::parse_param(params[1]));
  }
  if (family == "dihedral") {
    need(1);
    return dihedral(detail::parse_param(params[0]));
  }
  if (family == "quaternion8") {
    need(0);
    return quaternion8();
  }
  if (family == "heisenberg") {
    need(1);
    return heisenberg(detail::parse_param(params[0]));
  }
  if (family == "semidirect") {
    need(2);
    return semidirect(detail::parse_param(params[0]), detail::parse_param(params[1]));
  }
  if (family == "directprod") {
    need(2);
    return direct_product(load_cayley(params[0]), load_cayley(params[1]));
  }
  if (family == "symmetric" || family == "alternating") {
    need(1);
    const auto degree = detail::parse_param(params[0]);
    if (degree > 6) throw Error(ErrorKind::BadParams, family + " degree must be at most 6");
    return family == "symmetric" ? symmetric(degree) : alternating(degree);
  }
  if (family == "sl2") {
    need(1);
    return special_linear2(detail::parse_param(params[0]));
  }
  throw Error(ErrorKind::BadParams, "unknown family '" + family + "'");
}

struct NamedGroup {
  std::string name;
  GroupTable table;
};

/// Solvable corpus groups up to order 64, ordered by order then name.
/// `with_large_elementary` adds Z2^5 and Z2^6, whose series and sequence
/// counts make canonization slow.
inline std::vector<NamedGroup> solvable_corpus(std::size_t max_order = 64, bool with_large_elementary = false) {
  const auto z = [](std::size_t n) { return cyclic(n); };
  const auto x = [](const GroupTable& a, const GroupTable& b) { return direct_product(a, b); };
  std::vector<NamedGroup> all{
      {"Z1", z(1)},
      {"Z2", z(2)},
      {"Z3", z(3)},
      {"Z4", z(4)},
      {"Z2^2", elementary_abelian(2, 2)},
      {"Z5", z(5)},
      {"Z6", z(6)},
      {"S3", dihedral(6)},
      {"Z7", z(7)},
      {"Z8", z(8)},
      {"Z4xZ2", x(z(4), z(2))},
      {"Z2^3", elementary_abelian(2, 3)},
      {"D8", dihedral(8)},
      {"Q8", quaternion8()},
      {"Z9", z(9)},
      {"Z3^2", elementary_abelian(3, 2)},
      {"Z10", z(10)},
      {"D10", dihedral(10)},
      {"Z12", z(12)},
      {"Z6xZ2", x(z(6), z(2))},
      {"D12", dihedral(12)},
      {"A4", alternating(4)},
      {"D14", dihedral(14)},
      {"Z16", z(16)},
      {"Z4^2", x(z(4), z(4))},
      {"Z2^4", elementary_abelian(2, 4)},
      {"Z2xQ8", x(z(2), quaternion8())},
      {"D16", dihedral(16)},
      {"Z3xS3", x(z(3), dihedral(6))},
      {"D18", dihedral(18)},
      {"Z7:Z3", semidirect(3, 7)},
      {"Z21", z(21)},
      {"S4", symmetric(4)},
      {"Z2xA4", x(z(2), alternating(4))},
      {"Z5^2", elementary_abelian(5, 2)},
      {"Z25", z(25)},
      {"Heis3", heisenberg(3)},
      {"Z9xZ3", x(z(9), z(3))},
      {"Z27", z(27)},
      {"Z3^3", elementary_abelian(3, 3)},
      {"Z32", z(32)},
      {"Z8xZ4", x(z(8), z(4))},
      {"Z11:Z5", semidirect(5, 11)},
      {"Z55", z(55)},
      {"Z19:Z3", semidirect(3, 19)},
      {"Z64", z(64)},
      {"Z8^2", x(z(8), z(8))},
  };
  if (with_large_elementary) {
    all.push_back({"Z2^5", elementary_abelian(2, 5)});
    all.push_back({"Z2^6", elementary_abelian(2, 6)});
  }
  std::vector<NamedGroup> out;
  for (auto& g : all)
    if (g.table.order() <= max_order) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(),
                   [](const NamedGroup& a, const NamedGroup& b) { return a.table.order() < b.table.order(); });
  return out;
}

/// Non-solvable groups: A5 and SL(2,5).
inline std::vector<NamedGroup> nonsolvable_corpus() {
  return {{"A5", alternating(5)}, {"SL(2,5)", special_linear2(5)}};
}

}  // namespace solviso
