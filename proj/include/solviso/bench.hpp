#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "solviso/families.hpp"
#include "solviso/iso_engine.hpp"

namespace solviso {

struct BenchRecord {
  std::string group_a;
  std::string group_b;
  std::size_t order = 0;
  std::string algo;
  bool isomorphic = false;
  std::uint64_t micros = 0;
  SearchStats stats;
};

inline constexpr const char* kBenchHeader = "group_a,group_b,order,algo,verdict,micros,bases,series,sequences,canon_nodes";

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchHeader << '\n';
  for (const auto& r : records)
    out << r.group_a << ',' << r.group_b << ',' << r.order << ',' << r.algo << ',' << (r.isomorphic ? "iso" : "noniso")
        << ',' << r.micros << ',' << r.stats.bases << ',' << r.stats.series << ',' << r.stats.sequences << ','
        << r.stats.canon_nodes << '\n';
}

/// Runs both algorithms on every ordered pair of equal-order corpus groups and
/// throws if any verdict differs.
inline std::vector<BenchRecord> run_bench(const std::vector<NamedGroup>& corpus) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> out;
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (a.table.order() != b.table.order()) continue;
      BenchRecord hybrid{a.name, b.name, a.table.order(), "hybrid", false, 0, {}};
      auto t0 = clock::now();
      hybrid.isomorphic = solvable_iso(a.table, b.table, {}, &hybrid.stats).has_value();
      hybrid.micros = std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count();

      BenchRecord genenum{a.name, b.name, a.table.order(), "genenum", false, 0, {}};
      t0 = clock::now();
      genenum.isomorphic = generator_enumeration_iso(a.table, b.table).has_value();
      genenum.micros = std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0).count();

      if (hybrid.isomorphic != genenum.isomorphic)
        throw Error(ErrorKind::WitnessVerificationFailed, "verdicts disagree on " + a.name + " vs " + b.name);
      out.push_back(std::move(hybrid));
      out.push_back(std::move(genenum));
    }
  return out;
}

/// The solvable corpus (including Z2^5 and Z2^6) restricted to max_order.
inline std::vector<BenchRecord> run_bench(std::size_t max_order) {
  return run_bench(solvable_corpus(max_order, true));
}

}  // namespace solviso
