#pragma once

#include <cstdint>
#include <vector>

#include "solviso/element_set.hpp"

namespace solviso {

/// An element bijection between two groups: iso[x] is the image of x.
using Isomorphism = std::vector<Element>;

/// Loop counters for the enumeration layers; the desk-scale observable of the
/// running-time exponents.
struct SearchStats {
  std::uint64_t bases = 0;
  std::uint64_t series = 0;
  std::uint64_t sequences = 0;
  std::uint64_t canon_nodes = 0;
  std::uint64_t raw_chains = 0;
  std::uint64_t graph_tests = 0;

  SearchStats& operator+=(const SearchStats& o) {
    bases += o.bases;
    series += o.series;
    sequences += o.sequences;
    canon_nodes += o.canon_nodes;
    raw_chains += o.raw_chains;
    graph_tests += o.graph_tests;
    return *this;
  }
};

}  // namespace solviso
