#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "solviso/group.hpp"

namespace solviso {

/// Reads the .cayley format: n, then n rows of n 1-based indices.
inline GroupTable parse_cayley(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n <= 0) throw Error(ErrorKind::ParseError, "missing or invalid order on line 1");
  std::vector<std::vector<Element>> raw(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!(in >> v))
        throw Error(ErrorKind::ParseError, "row " + std::to_string(i + 1) + " is short or holds a non-integer token");
      if (v < 1 || v > n) throw Error(ErrorKind::ParseError, "entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      raw[i][j] = static_cast<Element>(v - 1);
    }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::ParseError, "trailing token '" + extra + "'");
  return validate_table(raw);
}

inline GroupTable parse_cayley(const std::string& text) {
  std::istringstream in(text);
  return parse_cayley(in);
}

inline GroupTable load_cayley(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_cayley(in);
}

inline void write_cayley(std::ostream& out, const GroupTable& g) {
  const auto n = g.order();
  out << n << '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b) + 1;
    out << '\n';
  }
}

inline std::string to_cayley(const GroupTable& g) {
  std::ostringstream out;
  write_cayley(out, g);
  return out.str();
}

}  // namespace solviso
