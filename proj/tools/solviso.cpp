#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "solviso/solviso.hpp"

namespace {

using namespace solviso;

enum Exit { kOk = 0, kNotIsomorphic = 1, kInputError = 2, kNotSolvable = 3 };

void print_members(const ElementSet& s) {
  bool first = true;
  s.for_each([&](Element x) {
    std::cout << (first ? "" : " ") << x + 1;
    first = false;
  });
  std::cout << '\n';
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomorphism testing and canonical forms for solvable groups given by Cayley tables"};
  app.require_subcommand(1);

  std::string file_a, file_b, out_path, family, algo = "hybrid";
  std::vector<std::string> params;
  std::size_t alpha = 0, max_order = 0;
  bool witness = false;

  auto* validate = app.add_subcommand("validate", "Check the group axioms");
  validate->add_option("file", file_a)->required();

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two groups");
  iso->add_option("fileA", file_a)->required();
  iso->add_option("fileB", file_b)->required();
  iso->add_option("--alpha", alpha, "Prime split threshold (default: chosen from n)")->check(CLI::PositiveNumber);
  iso->add_option("--algo", algo)->check(CLI::IsMember({"hybrid", "genenum"}));
  iso->add_flag("--witness", witness, "Print the isomorphism as a 1-based permutation");

  auto* canon = app.add_subcommand("canon", "Print the canonical table");
  canon->add_option("file", file_a)->required();

  auto* series = app.add_subcommand("series", "Print all composition series");
  series->add_option("file", file_a)->required();

  auto* sylow = app.add_subcommand("sylow", "Print a Sylow basis");
  sylow->add_option("file", file_a)->required();

  auto* bench = app.add_subcommand("bench", "Compare both algorithms on the corpus");
  bench->add_option("--max-order", max_order)->required();
  bench->add_option("--out", out_path)->required();

  auto* gen = app.add_subcommand("gen", "Write a group from a named family");
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) {
      const auto g = load_cayley(file_a);
      std::cout << "ok order " << g.order() << (is_solvable(g) ? " solvable" : " not-solvable") << '\n';
      return kOk;
    }
    if (*iso) {
      const auto g = load_cayley(file_a);
      const auto h = load_cayley(file_b);
      std::optional<Isomorphism> phi;
      if (algo == "genenum") {
        phi = generator_enumeration_iso(g, h);
      } else {
        EngineOptions opts;
        if (alpha) opts.alpha = alpha;
        phi = solvable_iso(g, h, opts);
      }
      std::cout << (phi ? "isomorphic" : "not isomorphic") << '\n';
      if (phi && witness) {
        for (std::size_t i = 0; i < phi->size(); ++i) std::cout << (i ? " " : "") << (*phi)[i] + 1;
        std::cout << '\n';
      }
      return phi ? kOk : kNotIsomorphic;
    }
    if (*canon) {
      const auto form = canon_group(load_cayley(file_a));
      std::cout << form.serialize();
      return kOk;
    }
    if (*series) {
      const auto g = load_cayley(file_a);
      if (!is_solvable(g)) throw Error(ErrorKind::NotSolvable, "input group is not solvable");
      const auto all = enumerate_composition_series(Subgroup::whole(g));
      std::cout << all.size() << '\n';
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::cout << "series " << i + 1 << '\n';
        for (const auto& s : all[i].chain) print_members(s.members());
      }
      return kOk;
    }
    if (*sylow) {
      const auto basis = sylow_basis(load_cayley(file_a));
      for (const auto& e : basis.entries) {
        std::cout << e.prime << ':';
        e.subgroup.members().for_each([](Element x) { std::cout << ' ' << x + 1; });
        std::cout << '\n';
      }
      return kOk;
    }
    if (*bench) {
      const auto records = run_bench(max_order);
      std::ofstream out(out_path);
      if (!out) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
      write_bench_csv(out, records);
      std::cout << records.size() << " records written to " << out_path << '\n';
      return kOk;
    }
    if (*gen) {
      write_file(out_path, to_cayley(make_family(family, params)));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::NotSolvable ? kNotSolvable : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
