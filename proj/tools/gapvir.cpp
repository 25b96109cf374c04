// Command line front end: parses JSON inputs, dispatches to the library,
// prints JSON verdicts (or DOT for graphs) on standard output.
//
// Exit codes: 0 = property holds / positive verdict,
//             1 = property violated / negative verdict,
//             2 = input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gapvir/corpus.hpp"
#include "gapvir/cover.hpp"
#include "gapvir/json_io.hpp"
#include "gapvir/mois.hpp"
#include "gapvir/verma.hpp"

namespace {

using gapvir::Json;

constexpr long kDefaultWindow = 12;
constexpr long kDefaultDepth = 6;
constexpr long kDefaultLmax = 6;

long default_window() {
  if (const char* env = std::getenv("GAPVIR_WINDOW")) {
    try {
      long w = std::stol(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("GAPVIR_WINDOW must be a positive integer");
  }
  return kDefaultWindow;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in gap-p Virasoro algebras and their modules"};
  app.require_subcommand(1);
  bool json_output = false;
  app.add_flag("--json", json_output, "machine readable output (always on)");

  std::string file, file_b, emit_dir;
  long window = 0;  // 0 = use default
  long depth = kDefaultDepth;
  long lmax = kDefaultLmax;
  long omega_m = 0, omega_n = 0;
  int gap_p = 0;
  bool dot = false;

  auto* validate = app.add_subcommand("validate-f", "check the module conditions on F");
  validate->add_option("file", file)->required();

  auto* axioms = app.add_subcommand("axioms", "module axiom sweep for a spec");
  axioms->add_option("file", file)->required();
  axioms->add_option("--window", window);

  auto* linkage = app.add_subcommand("linkage", "component linkage graph");
  linkage->add_option("file", file)->required();
  linkage->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");

  auto* reducible = app.add_subcommand("reducible", "reducibility of the module");
  reducible->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test for two specs");
  iso->add_option("a", file)->required();
  iso->add_option("b", file_b)->required();

  auto* verma = app.add_subcommand("verma", "highest weight verdict and graded dimensions");
  verma->add_option("file", file)->required();
  verma->add_option("--depth", depth);

  auto* singular = app.add_subcommand("singular", "singular vectors up to a depth");
  singular->add_option("file", file)->required();
  singular->add_option("--depth", depth);

  auto* omega = app.add_subcommand("omega", "minimal annihilation order of the window operators");
  omega->add_option("file", file)->required();
  omega->add_option("--m", omega_m)->required();
  omega->add_option("--n", omega_n)->required();
  omega->add_option("--lmax", lmax);
  omega->add_option("--window", window);

  auto* jtest = app.add_subcommand("jtest", "membership of a tensor in the kernel ideal J");
  jtest->add_option("file", file)->required();

  auto* lie = app.add_subcommand("lie-check", "bracket axioms and the Virasoro embedding");
  lie->add_option("--p", gap_p)->required();
  lie->add_option("--window", window);

  auto* examples = app.add_subcommand("examples", "rerun the bundled example corpus");
  examples->add_option("--emit", emit_dir, "also write the corpus as JSON files");

  app.parse(argc, argv);
  (void)json_output;
  const long win = window > 0 ? window : default_window();

  if (*validate) {
    const gapvir::MoisSpec spec = gapvir::mois_spec_from_json(load_json(file));
    const gapvir::ValidationReport report = gapvir::validate_f(spec.F);
    emit(gapvir::validation_report_to_json(report));
    return report.valid() ? 0 : 1;
  }

  if (*axioms) {
    const gapvir::MoisSpec spec = gapvir::mois_spec_from_json(load_json(file));
    const gapvir::Report report = gapvir::check_module_axioms(spec, win);
    emit(gapvir::report_to_json(report));
    return report.passed() ? 0 : 1;
  }

  if (*linkage) {
    const gapvir::MoisSpec spec = gapvir::mois_spec_from_json(load_json(file));
    const gapvir::LinkageGraph graph = gapvir::linkage_graph(spec.F);
    if (dot)
      std::cout << gapvir::emit_dot(graph);
    else
      emit(gapvir::linkage_graph_to_json(graph));
    return 0;
  }

  if (*reducible) {
    const gapvir::MoisSpec spec = gapvir::mois_spec_from_json(load_json(file));
    const gapvir::ReducibilityVerdict verdict = gapvir::classify_reducibility(spec);
    emit(gapvir::reducibility_to_json(verdict));
    return verdict.reducible ? 0 : 1;
  }

  if (*iso) {
    const gapvir::MoisSpec a = gapvir::mois_spec_from_json(load_json(file));
    const gapvir::MoisSpec b = gapvir::mois_spec_from_json(load_json(file_b));
    const auto witness = gapvir::iso_test(a, b);
    Json out{{"isomorphic", witness.has_value()}};
    if (witness) out["witness"] = gapvir::iso_witness_to_json(*witness);
    emit(out);
    return witness ? 0 : 1;
  }

  if (*verma) {
    const gapvir::HighestWeight hw = gapvir::highest_weight_from_json(load_json(file));
    const gapvir::VermaVerdict verdict = gapvir::verma_verdict(hw);
    Json dims = Json::array();
    for (long d = 0; d <= depth; ++d)
      dims.push_back(static_cast<long>(gapvir::pbw_basis(d).size()));
    Json out = gapvir::verma_verdict_to_json(verdict);
    out["graded_dims"] = dims;
    emit(out);
    return verdict.irreducible ? 0 : 1;
  }

  if (*singular) {
    const gapvir::HighestWeight hw = gapvir::highest_weight_from_json(load_json(file));
    Json out = Json::array();
    bool found = false;
    for (long d = 1; d <= depth; ++d) {
      const auto basis = gapvir::singular_vectors(hw, d);
      found = found || !basis.empty();
      Json vectors = Json::array();
      for (const auto& v : basis) vectors.push_back(gapvir::verma_vector_to_json(v));
      out.push_back(Json{{"depth", d}, {"vectors", vectors}});
    }
    emit(Json{{"found", found}, {"depths", out}});
    return found ? 0 : 1;
  }

  if (*omega) {
    const gapvir::MoisSpec spec = gapvir::mois_spec_from_json(load_json(file));
    const auto min_l = gapvir::omega_min_l(spec, omega_m, omega_n, win, lmax);
    Json out{{"found", min_l.has_value()}};
    if (min_l) out["min_l"] = *min_l;
    emit(out);
    return min_l ? 0 : 1;
  }

  if (*jtest) {
    const auto [spec, tensor] = gapvir::tensor_vector_from_json(load_json(file));
    const bool member = gapvir::j_membership(spec, tensor);
    const bool pi_zero = gapvir::pi_map(spec, tensor).is_zero();
    emit(Json{{"member", member}, {"pi_zero", pi_zero}});
    return member ? 0 : 1;
  }

  if (*lie) {
    const gapvir::GapParam p(gap_p);
    const gapvir::Report axioms_report = gapvir::check_lie_axioms(p, win);
    const gapvir::Report embed_report = gapvir::vir_embedding_check(p, win);
    emit(Json{{"axioms", gapvir::report_to_json(axioms_report)},
              {"embedding", gapvir::report_to_json(embed_report)}});
    return axioms_report.passed() && embed_report.passed() ? 0 : 1;
  }

  if (*examples) {
    if (!emit_dir.empty()) {
      for (const auto& entry : gapvir::bundled_examples()) {
        std::ofstream out(emit_dir + "/" + entry.name + ".json");
        if (!out)
          throw std::invalid_argument("cannot write to '" + emit_dir + "'");
        out << gapvir::mois_spec_to_json(entry.spec).dump(2) << "\n";
      }
    }
    const gapvir::Report report = gapvir::run_corpus();
    emit(gapvir::report_to_json(report));
    return report.passed() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    CLI::App app;
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    emit(Json{{"error", e.what()}});
    return 2;
  }
}
