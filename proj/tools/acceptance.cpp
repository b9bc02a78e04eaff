// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "solviso/solviso.hpp"

namespace {

using namespace solviso;

constexpr std::size_t kMaxOrder = 64;
constexpr std::size_t kMinGroups = 30;
constexpr double kOracleSecondsLimit = 600.0;
constexpr int kRelabelings = 20;
constexpr std::size_t kRoundTripMaxOrder = 32;
constexpr std::size_t kXYChecksPerGroup = 24;
constexpr std::size_t kVertexFactor = 8;
constexpr std::size_t kSeriesOracleMaxOrder = 32;
constexpr double kChainSlack = 3.0;
constexpr std::size_t kConjugacyMaxOrder = 24;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Element> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ColoredGraph relabel_graph(const ColoredGraph& g, const std::vector<Element>& perm) {
  ColoredGraph out;
  out.vertex_count = g.vertex_count;
  out.colors.resize(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) out.colors[perm[v]] = g.colors[v];
  for (auto [u, v] : g.edges) out.edges.emplace_back(perm[u], perm[v]);
  out.root = perm[g.root];
  out.normalize();
  return out;
}

/// Positive answers seen across the suite and how many verified independently.
struct WitnessLedger {
  std::size_t positives = 0;
  std::size_t verified = 0;

  void record(bool ok) {
    ++positives;
    verified += ok;
  }
};

struct Report {
  int failures = 0;

  void line(int id, const std::string& title, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ' ' << title << ": " << detail << std::endl;
    failures += !pass;
  }
};

/// Distinct (P1, P2) splits of g over all its Sylow bases.
std::vector<AlphaDecomposition> decompositions(const GroupTable& g, std::size_t alpha) {
  std::vector<AlphaDecomposition> out;
  for (const auto& basis : all_sylow_bases(g)) {
    auto d = alpha_split(g, basis, alpha);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const AlphaDecomposition& e) {
      return e.p1 == d.p1 && e.p2 == d.p2;
    });
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

/// Every augmented pair (decomposition, series of P2, minimum-length sequence
/// of P1); stops early when visit returns false.
void for_each_augmented_pair(const GroupTable& g, std::size_t alpha, const std::function<bool(const AugmentedPair&)>& visit) {
  for (const auto& d : decompositions(g, alpha)) {
    const auto series = enumerate_composition_series(d.p2);
    const auto seqs = all_generating_sequences(d.p1, minimum_generating_length(d.p1));
    for (const auto& s2 : series)
      for (const auto& seq : seqs)
        if (!visit(AugmentedPair{d.p1, s2, seq})) return;
  }
}

// 1 ---------------------------------------------------------------------------
void oracle_equivalence(const std::vector<NamedGroup>& corpus, WitnessLedger& ledger, Report& report) {
  std::mt19937_64 rng(kSeed);
  const auto start = Clock::now();
  std::size_t pairs = 0, disagreements = 0, isomorphic = 0;
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      ++pairs;
      const auto h = relabel(b.table, shuffled(b.table.order(), rng));
      const auto hybrid = solvable_iso(a.table, h);
      const auto oracle = generator_enumeration_iso(a.table, h);
      if (hybrid) ledger.record(is_isomorphism(a.table, h, *hybrid));
      if (oracle) ledger.record(is_isomorphism(a.table, h, *oracle));
      isomorphic += hybrid.has_value();
      if (hybrid.has_value() != oracle.has_value()) {
        ++disagreements;
        std::cout << "  disagreement: " << a.name << " vs " << b.name << '\n';
      }
    }
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << corpus.size() << " groups, " << pairs << " ordered pairs (" << isomorphic << " isomorphic), " << disagreements
    << " disagreements, " << secs << " s (limit " << kOracleSecondsLimit << " s)";
  report.line(1, "oracle equivalence", corpus.size() >= kMinGroups && disagreements == 0 && secs <= kOracleSecondsLimit,
              d.str());
}

// 2 ---------------------------------------------------------------------------
std::vector<std::string> canonical_law(const std::vector<NamedGroup>& corpus, Report& report) {
  std::mt19937_64 rng(kSeed + 2);
  std::vector<std::string> forms;
  std::size_t unstable = 0, law_violations = 0;
  for (const auto& g : corpus) {
    forms.push_back(canon_group(g.table).serialize());
    for (int i = 0; i < kRelabelings; ++i)
      if (canon_group(relabel(g.table, shuffled(g.table.order(), rng))).serialize() != forms.back()) {
        ++unstable;
        std::cout << "  relabeling changed the form of " << g.name << '\n';
      }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const bool same = forms[i] == forms[j];
      if (same != generator_enumeration_iso(corpus[i].table, corpus[j].table).has_value()) {
        ++law_violations;
        std::cout << "  law violated: " << corpus[i].name << " vs " << corpus[j].name << '\n';
      }
    }
  std::ostringstream d;
  d << corpus.size() << " groups, " << kRelabelings << " relabelings each, " << unstable << " unstable, "
    << law_violations << " law violations";
  report.line(2, "canonical-form law", unstable == 0 && law_violations == 0, d.str());
  return forms;
}

// 3 ---------------------------------------------------------------------------
void round_trips(const std::vector<NamedGroup>& corpus, WitnessLedger& ledger, Report& report) {
  std::mt19937_64 rng(kSeed + 3);
  std::size_t yx = 0, yx_bad = 0, xy = 0, xy_bad = 0;
  for (const auto& g : corpus) {
    if (g.table.order() > kRoundTripMaxOrder) continue;
    std::size_t xy_here = 0;
    for_each_augmented_pair(g.table, choose_alpha(g.table.order()), [&](const AugmentedPair& pair) {
      const auto enc = build_X(pair);
      const auto d = decode_Y(enc.graph, enc.ell, enc.m);
      std::vector<Element> ident(enc.n);
      for (Element x = 0; x < enc.n; ++x)
        ident[x] = static_cast<Element>(
            std::find(d.element_vertex.begin(), d.element_vertex.end(), enc.element_vertex[x]) -
            d.element_vertex.begin());
      ++yx;
      if (!is_pair_isomorphism(pair, d.pair(), ident)) ++yx_bad;

      if (xy_here < kXYChecksPerGroup) {
        ++xy_here;
        ++xy;
        const auto a = relabel_graph(enc.graph, shuffled(enc.graph.vertex_count, rng));
        const auto decoded = decode_Y(a, enc.ell, enc.m);
        const auto back = build_X(decoded.pair());
        const auto f = are_graphs_isomorphic(back.graph, a);
        if (f) ledger.record(is_graph_isomorphism(back.graph, a, *f));
        if (!f) ++xy_bad;
      }
      return true;
    });
  }
  std::ostringstream d;
  d << "Y(X(pair)) = pair on " << yx - yx_bad << "/" << yx << " augmented pairs; X(Y(A)) ~ A on " << xy - xy_bad
    << "/" << xy << " shuffled encodings (|G| <= " << kRoundTripMaxOrder << ")";
  report.line(3, "round trips", yx_bad == 0 && xy_bad == 0 && yx > 0, d.str());
}

// 4 ---------------------------------------------------------------------------
void graph_bounds(const std::vector<NamedGroup>& corpus, Report& report) {
  std::size_t builds = 0, violations = 0, worst_degree = 0;
  double worst_ratio = 0;
  for (const auto& g : corpus)
    for (std::size_t alpha : {2, 3, 4}) {
      std::size_t here = 0;
      for_each_augmented_pair(g.table, alpha, [&](const AugmentedPair& pair) {
        const auto enc = build_X(pair);
        const auto n = g.table.order();
        const auto deg = enc.graph.max_degree();
        worst_degree = std::max(worst_degree, deg);
        worst_ratio = std::max(worst_ratio, static_cast<double>(enc.graph.vertex_count) / static_cast<double>(n * n));
        ++builds;
        if (deg > std::max<std::size_t>(alpha + 1, 4) || enc.graph.vertex_count > kVertexFactor * n * n) {
          ++violations;
          std::cout << "  bound violated: " << g.name << " alpha=" << alpha << '\n';
        }
        return ++here < 4;
      });
    }
  std::ostringstream d;
  d << builds << " encodings over alpha in {2,3,4}, max degree " << worst_degree << ", max |V|/n^2 " << worst_ratio
    << " (limit " << kVertexFactor << "), " << violations << " violations";
  report.line(4, "graph bounds", violations == 0, d.str());
}

// 5 ---------------------------------------------------------------------------
std::set<Element> naive_closure(const GroupTable& g, std::set<Element> s) {
  s.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) grew |= s.insert(g.mul(a, b)).second;
  }
  return s;
}

/// Composition-series count from the full subgroup lattice.
std::size_t lattice_series_count(const GroupTable& g) {
  std::set<std::set<Element>> lattice{naive_closure(g, {})};
  std::vector<std::set<Element>> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<std::set<Element>> next;
    for (const auto& h : frontier)
      for (Element x = 0; x < g.order(); ++x) {
        if (h.count(x)) continue;
        auto s = h;
        s.insert(x);
        auto c = naive_closure(g, s);
        if (lattice.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  std::map<std::set<Element>, std::size_t> memo;
  std::function<std::size_t(const std::set<Element>&)> count = [&](const std::set<Element>& h) -> std::size_t {
    if (h.size() == 1) return 1;
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (const auto& k : lattice) {
      if (k.size() >= h.size() || h.size() % k.size() || !is_prime(h.size() / k.size())) continue;
      if (!std::includes(h.begin(), h.end(), k.begin(), k.end())) continue;
      bool normal = true;
      for (auto x : h)
        for (auto y : k) normal = normal && k.count(g.mul(g.mul(x, y), g.inverse(x)));
      if (normal) total += count(k);
    }
    return memo[h] = total;
  };
  std::set<Element> all;
  for (Element x = 0; x < g.order(); ++x) all.insert(x);
  return count(all);
}

void series_counts(const std::vector<NamedGroup>& corpus, Report& report) {
  std::size_t compared = 0, mismatches = 0, chain_groups = 0, over_bound = 0;
  for (const auto& g : corpus) {
    const auto whole = Subgroup::whole(g.table);
    if (g.table.order() <= kSeriesOracleMaxOrder) {
      ++compared;
      const auto got = enumerate_composition_series(whole).size();
      const auto want = lattice_series_count(g.table);
      if (got != want) {
        ++mismatches;
        std::cout << "  " << g.name << ": " << got << " series, lattice says " << want << '\n';
      }
    }
    std::uint64_t raw = 0;
    enumerate_subgroup_chains(whole, [&](const std::vector<Subgroup>&) {
      ++raw;
      return true;
    });
    ++chain_groups;
    if (static_cast<double>(raw) > chain_count_bound(g.table.order(), kChainSlack)) {
      ++over_bound;
      std::cout << "  " << g.name << ": " << raw << " raw chains exceed the bound\n";
    }
  }
  const bool pins = enumerate_composition_series(Subgroup::whole(elementary_abelian(2, 2))).size() == 3 &&
                    enumerate_composition_series(Subgroup::whole(elementary_abelian(3, 2))).size() == 4 &&
                    enumerate_composition_series(Subgroup::whole(elementary_abelian(5, 2))).size() == 6 &&
                    enumerate_composition_series(Subgroup::whole(cyclic(6))).size() == 2 &&
                    enumerate_composition_series(Subgroup::whole(cyclic(27))).size() == 1;
  std::ostringstream d;
  d << compared << " groups against the lattice oracle, " << mismatches << " mismatches; raw chains within bound for "
    << chain_groups - over_bound << "/" << chain_groups << " groups; pinned counts " << (pins ? "ok" : "wrong");
  report.line(5, "composition-series counts and bound", mismatches == 0 && over_bound == 0 && pins, d.str());
}

// 6 ---------------------------------------------------------------------------
void sylow_layer(const std::vector<NamedGroup>& corpus, Report& report) {
  std::size_t solvable_ok = 0, nonsolvable_rejected = 0, too_many = 0, not_conjugate = 0, conj_checked = 0;
  for (const auto& g : corpus) {
    try {
      sylow_basis(g.table);
      ++solvable_ok;
    } catch (const Error&) {
      std::cout << "  no Sylow basis for solvable " << g.name << '\n';
    }
    const auto bases = all_sylow_bases(g.table);
    if (bases.size() > g.table.order()) ++too_many;
    if (g.table.order() > kConjugacyMaxOrder) continue;
    ++conj_checked;
    for (std::size_t i = 0; i < bases.size(); ++i)
      for (std::size_t j = 0; j < bases.size(); ++j) {
        bool found = false;
        for (Element x = 0; x < g.table.order() && !found; ++x) found = conjugate_basis(bases[i], x) == bases[j];
        if (!found) ++not_conjugate;
      }
  }
  const auto bad = nonsolvable_corpus();
  for (const auto& g : bad) {
    try {
      sylow_basis(g.table);
      std::cout << "  Sylow basis found for " << g.name << '\n';
    } catch (const Error& e) {
      nonsolvable_rejected += e.kind() == ErrorKind::NotSolvable;
    }
  }
  std::ostringstream d;
  d << "bases on " << solvable_ok << "/" << corpus.size() << " solvable groups, rejected " << nonsolvable_rejected << "/"
    << bad.size() << " non-solvable (A5, SL(2,5)); " << too_many << " groups with more than n bases; "
    << not_conjugate << " non-conjugate basis pairs over " << conj_checked << " groups of order <= "
    << kConjugacyMaxOrder;
  report.line(6, "Sylow layer",
              solvable_ok == corpus.size() && nonsolvable_rejected == bad.size() && too_many == 0 && not_conjugate == 0,
              d.str());
}

// 7 ---------------------------------------------------------------------------
void witness_integrity(const std::vector<NamedGroup>& corpus, WitnessLedger& ledger, Report& report) {
  // Pair-level witnesses on relabeled copies of every decomposition's first pair.
  std::mt19937_64 rng(kSeed + 7);
  for (const auto& g : corpus) {
    const auto n = g.table.order();
    const auto phi = shuffled(n, rng);
    const auto h = relabel(g.table, phi);
    const auto d = decompositions(g.table, choose_alpha(n)).front();
    const AugmentedPair a{d.p1, first_composition_series(d.p2), greedy_generating_sequence(d.p1)};
    auto image = [&](const Subgroup& s) {
      ElementSet m(n);
      s.members().for_each([&](Element x) { m.insert(phi[x]); });
      return Subgroup(h, m);
    };
    CompositionSeries s2;
    for (const auto& s : a.s2.chain) s2.chain.push_back(image(s));
    GeneratingSequence seq;
    for (auto x : a.g.elems) seq.elems.push_back(phi[x]);
    const AugmentedPair b{image(a.p1), s2, seq};
    const auto w = augmented_pair_iso(a, b);
    if (w) ledger.record(is_pair_isomorphism(a, b, *w) && is_isomorphism(g.table, h, *w));
    if (!w) std::cout << "  no pair witness for " << g.name << '\n';
    ledger.record(w.has_value());
  }
  std::ostringstream d;
  d << ledger.verified << "/" << ledger.positives << " positive answers verified independently";
  report.line(7, "witness integrity", ledger.positives > 0 && ledger.verified == ledger.positives, d.str());
}

// 8 ---------------------------------------------------------------------------
std::string artifacts(const std::vector<NamedGroup>& canon_corpus, const std::vector<NamedGroup>& bench_corpus) {
  std::ostringstream out;
  for (const auto& g : canon_corpus) {
    out << "# " << g.name << '\n' << canon_group(g.table).serialize();
    const auto d = decompositions(g.table, choose_alpha(g.table.order())).front();
    const AugmentedPair pair{d.p1, first_composition_series(d.p2), greedy_generating_sequence(d.p1)};
    out << dump(canonize_colored_graph(build_X(pair).graph).graph);
  }
  auto records = run_bench(bench_corpus);
  for (auto& r : records) r.micros = 0;
  write_bench_csv(out, records);
  return out.str();
}

void determinism(const std::vector<NamedGroup>& canon_corpus, const std::vector<NamedGroup>& bench_corpus,
                 const std::string& save_path, Report& report) {
  const auto first = artifacts(canon_corpus, bench_corpus);
  const auto second = artifacts(canon_corpus, bench_corpus);
  if (!save_path.empty()) std::ofstream(save_path) << first;
  std::ostringstream d;
  d << "two runs over forms, dumps and CSV counters: " << first.size() << " bytes, "
    << (first == second ? "identical" : "different");
  report.line(8, "determinism", first == second, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string save_path;
  app.add_option("--artifacts", save_path, "Write the determinism artifacts to this file");
  CLI11_PARSE(app, argc, argv);

  // Z2^5 and Z2^6 take part wherever canonization is not involved.
  const auto full = solvable_corpus(kMaxOrder, true);
  const auto canon_corpus = solvable_corpus(kMaxOrder, false);

  Report report;
  WitnessLedger ledger;
  const auto start = Clock::now();
  try {
    oracle_equivalence(full, ledger, report);
    canonical_law(canon_corpus, report);
    round_trips(full, ledger, report);
    graph_bounds(full, report);
    series_counts(full, report);
    sylow_layer(full, report);
    witness_integrity(full, ledger, report);
    determinism(canon_corpus, full, save_path, report);
  } catch (const std::exception& e) {
    std::cout << "[FAIL] suite aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << "total " << seconds_since(start) << " s, " << report.failures << " failing criteria" << std::endl;
  return report.failures ? 1 : 0;
}
