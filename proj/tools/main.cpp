// Command-line front end: graph generation, products, derangements,
// lamplighter tools, isomorphism checks, spectra, convergence reports and
// the theorem verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spiderweb/ball.hpp"
#include "spiderweb/derangement.hpp"
#include "spiderweb/families.hpp"
#include "spiderweb/iso.hpp"
#include "spiderweb/json_io.hpp"
#include "spiderweb/lamplighter.hpp"
#include "spiderweb/limits.hpp"
#include "spiderweb/paths.hpp"
#include "spiderweb/products.hpp"
#include "spiderweb/spectra.hpp"
#include "spiderweb/verify.hpp"

namespace {

using spiderweb::Graph;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUndecided = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

Graph make_family(const std::string& family, int k, int n, long long m,
                  int window) {
  if (family == "debruijn") return spiderweb::de_bruijn(k, n);
  if (family == "cycle")
    return window > 0 ? spiderweb::cycle_window(window)
                      : spiderweb::cycle(m > 0 ? m : n);
  if (family == "spiderweb")
    return window > 0 ? spiderweb::spider_web_window(k, n, window)
                      : spiderweb::spider_web(k, n, m);
  if (family == "theta") return spiderweb::theta_graph_m(k, n, m);
  throw std::invalid_argument("unknown family: " + family);
}

std::string status_name(spiderweb::CheckStatus s) {
  switch (s) {
    case spiderweb::CheckStatus::pass:
      return "pass";
    case spiderweb::CheckStatus::fail:
      return "fail";
    default:
      return "undecided";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spider-web graph algebra and lamplighter spectra toolkit"};
  app.require_subcommand(1);
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for all randomized sampling");

  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  std::string family, format = "json", out_path;
  int k = 2, n = 0, window = 0, radius = 0, qmax = 30;
  long long m = 1;
  gen->add_option("--family", family, "debruijn|cycle|spiderweb|theta")->required();
  gen->add_option("--k", k, "alphabet size");
  gen->add_option("--n", n, "dimension / level");
  gen->add_option("--m", m, "cycle length");
  gen->add_option("--window", window, "window half-width for infinite cases");
  gen->add_option("--format", format, "json|dot");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* product = app.add_subcommand("product", "tensor product or line graph");
  std::string op, file_a, file_b;
  product->add_option("op", op, "tensor|line")->required();
  product->add_option("a", file_a, "graph A (json)")->required();
  product->add_option("b", file_b, "graph B (json, tensor only)");
  product->add_option("--out", out_path, "output file (default stdout)");

  auto* derange = app.add_subcommand("derange", "graph derangement");
  derange->add_option("a", file_a, "graph (json)")->required();

  auto* comp = app.add_subcommand("components", "components of g (x) C_M");
  std::string m_text = "1";
  comp->add_option("a", file_a, "graph (json); or use --family");
  comp->add_option("--family", family, "debruijn|cycle|spiderweb|theta");
  comp->add_option("--k", k, "alphabet size");
  comp->add_option("--n", n, "dimension (cycle length for --family cycle)");
  comp->add_option("--m", m_text, "cycle length M, or 'inf'");

  auto* lamp = app.add_subcommand("lamplighter", "lamplighter group tools");
  auto* schreier = lamp->add_subcommand("schreier", "level action graph");
  schreier->add_option("--k", k)->required();
  schreier->add_option("--n", n)->required();
  schreier->add_option("--format", format, "json|dot");
  schreier->add_option("--out", out_path);
  auto* cball = lamp->add_subcommand("cayley-ball", "exact Cayley graph ball");
  cball->add_option("--k", k)->required();
  cball->add_option("--r", radius)->required();
  cball->add_option("--format", format, "json|dot");
  cball->add_option("--out", out_path);
  auto* kesten = lamp->add_subcommand("kesten", "truncated Kesten measure CSV");
  kesten->add_option("--k", k)->required();
  kesten->add_option("--qmax", qmax);
  kesten->add_option("--out", out_path);
  lamp->require_subcommand(1);

  auto* iso = app.add_subcommand("iso", "isomorphism search");
  std::string kind = "weak";
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();
  iso->add_option("--kind", kind, "weak|strong");

  auto* euler = app.add_subcommand("euler", "Eulerian circuit");
  euler->add_option("a", file_a)->required();
  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian cycle");
  long long cap = 10000000;
  hamilton->add_option("a", file_a)->required();
  hamilton->add_option("--cap", cap, "backtracking node cap");

  auto* spectrum = app.add_subcommand("spectrum", "spider-web spectra CSV");
  bool numeric = false, expand = false;
  spectrum->add_option("--k", k)->required();
  spectrum->add_option("--n", n)->required();
  spectrum->add_option("--m", m)->required();
  spectrum->add_flag("--numeric", numeric, "cross-check with the eigensolver");
  spectrum->add_flag("--expand", expand, "print the expanded polynomial");
  spectrum->add_option("--out", out_path);

  auto* converge = app.add_subcommand("converge", "ball statistics CSV");
  std::string pairs_text = "2,2;4,4;8,8";
  int rmax = 2;
  converge->add_option("--k", k)->required();
  converge->add_option("--pairs", pairs_text, "semicolon-separated N,M pairs");
  converge->add_option("--rmax", rmax);
  converge->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "theorem verification suites");
  std::string suite, report_path;
  int nmax = -1;
  long long mmax = -1;
  verify->add_option("suite", suite,
                     "tensor|debruijn|schreier|spectra|transitivity|coverings|"
                     "convergence|all")
      ->required();
  verify->add_option("--k", k, "restrict to one alphabet size");
  verify->add_option("--nmax", nmax);
  verify->add_option("--mmax", mmax);
  verify->add_option("--report", report_path, "machine-readable JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help et al.
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) {
      Graph g = make_family(family, k, n, m, window);
      emit(format == "dot" ? spiderweb::to_dot(g) : spiderweb::to_json(g),
           out_path);
      return kExitOk;
    }
    if (product->parsed()) {
      Graph a = spiderweb::load_graph(file_a);
      Graph result;
      if (op == "tensor") {
        if (file_b.empty()) throw std::invalid_argument("tensor needs two graphs");
        result = spiderweb::tensor(a, spiderweb::load_graph(file_b));
      } else if (op == "line") {
        result = spiderweb::line_graph(a);
      } else {
        throw std::invalid_argument("unknown product op: " + op);
      }
      emit(spiderweb::to_json(result), out_path);
      return kExitOk;
    }
    if (derange->parsed()) {
      Graph a = spiderweb::load_graph(file_a);
      for (long long d : spiderweb::graph_derangement_per_component(a))
        std::cout << d << "\n";
      return kExitOk;
    }
    if (comp->parsed()) {
      // here --m is the tensor factor, so the cycle family length comes
      // from --n
      Graph a = file_a.empty() ? make_family(family, k, n, 0, 0)
                               : spiderweb::load_graph(file_a);
      std::optional<long long> mm;
      if (m_text != "inf") mm = std::stoll(m_text);
      spiderweb::ComponentPrediction pred = spiderweb::predict_components(a, mm);
      auto show = [](std::optional<long long> v) {
        return v ? std::to_string(*v) : std::string("inf");
      };
      std::cout << "derangement " << pred.derangement << "\n";
      std::cout << "canonical " << show(pred.canonical) << "\n";
      std::cout << "paper-formula " << show(pred.paper) << "\n";
      if (mm) {
        Graph t = spiderweb::tensor(a, spiderweb::cycle(*mm));
        std::cout << "union-find " << spiderweb::component_count(t) << "\n";
      }
      if (pred.discrepancy)
        std::cout << "warning: canonical and paper-formula counts disagree\n";
      return kExitOk;
    }
    if (schreier->parsed()) {
      Graph g = spiderweb::schreier_level_graph(k, n);
      emit(format == "dot" ? spiderweb::to_dot(g) : spiderweb::to_json(g),
           out_path);
      return kExitOk;
    }
    if (cball->parsed()) {
      spiderweb::RootedBall b = spiderweb::cayley_ball(k, radius);
      emit(format == "dot" ? spiderweb::to_dot(b.graph)
                           : spiderweb::to_json(b.graph),
           out_path);
      return kExitOk;
    }
    if (kesten->parsed()) {
      spiderweb::SpectralMeasure mu = spiderweb::kesten_measure(k, qmax);
      std::ostringstream csv;
      csv << "p,q,value,weight\n";
      for (const auto& [key, w] : mu.atoms)
        csv << key.p << "," << key.q << "," << mu.atom_value(key) << ","
            << w.convert_to<double>() << "\n";
      csv << "# truncated total mass " << mu.total_mass().convert_to<double>()
          << "\n";
      emit(csv.str(), out_path);
      return kExitOk;
    }
    if (iso->parsed()) {
      Graph a = spiderweb::load_graph(file_a);
      Graph b = spiderweb::load_graph(file_b);
      spiderweb::IsoOptions opt;
      opt.kind = kind == "strong" ? spiderweb::MorphKind::strong
                                  : spiderweb::MorphKind::weak;
      opt.vertex_cap = 4096;
      spiderweb::IsoResult r = spiderweb::find_iso(a, b, opt);
      if (r.status == spiderweb::SearchStatus::undecided) {
        std::cout << "undecided\n";
        return kExitUndecided;
      }
      std::cout << (r.status == spiderweb::SearchStatus::found
                        ? "isomorphic"
                        : "not isomorphic")
                << "\n";
      return kExitOk;
    }
    if (euler->parsed()) {
      Graph a = spiderweb::load_graph(file_a);
      spiderweb::Path p = spiderweb::eulerian_circuit(a);
      for (int e : p.edges) std::cout << e << " ";
      std::cout << "\n";
      return kExitOk;
    }
    if (hamilton->parsed()) {
      Graph a = spiderweb::load_graph(file_a);
      spiderweb::HamiltonianResult r = spiderweb::hamiltonian_cycle(a, cap);
      if (r.status == spiderweb::SearchStatus::undecided) {
        std::cout << "undecided\n";
        return kExitUndecided;
      }
      if (r.status == spiderweb::SearchStatus::none) {
        std::cout << "no hamiltonian cycle\n";
        return kExitOk;
      }
      for (int e : r.cycle.edges) std::cout << e << " ";
      std::cout << "\n";
      return kExitOk;
    }
    if (spectrum->parsed()) {
      spiderweb::SpectralMeasure mu = spiderweb::closed_form_spectrum(k, n, m);
      const long long total = m * spiderweb::ipow(k, n);
      std::ostringstream csv;
      csv << "p,q,value,multiplicity,weight\n";
      for (const auto& [key, w] : mu.atoms) {
        spiderweb::BigRational scaled = w * total;
        long long mult = boost::multiprecision::numerator(scaled)
                             .convert_to<long long>();
        csv << key.p << "," << key.q << "," << mu.atom_value(key) << "," << mult
            << "," << w.convert_to<double>() << "\n";
      }
      if (expand)
        csv << "# charpoly "
            << spiderweb::spiderweb_charpoly(k, n, m).expand().str() << "\n";
      if (numeric) {
        std::vector<double> lam = spiderweb::numeric_spectrum(
            spiderweb::underlying(spiderweb::spider_web(k, n, m)));
        std::vector<double> closed = mu.expand_multiset(total);
        double worst = 0;
        for (size_t i = 0; i < lam.size(); ++i)
          worst = std::max(worst, std::abs(lam[i] - closed[i]));
        csv << "# eigensolver max deviation " << worst << "\n";
      }
      emit(csv.str(), out_path);
      return kExitOk;
    }
    if (converge->parsed()) {
      std::vector<std::pair<int, long long>> pairs;
      std::istringstream in(pairs_text);
      std::string item;
      while (std::getline(in, item, ';')) {
        auto comma = item.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("bad --pairs format");
        pairs.emplace_back(std::stoi(item.substr(0, comma)),
                           std::stoll(item.substr(comma + 1)));
      }
      emit(spiderweb::convergence_csv(
               spiderweb::convergence_report(k, pairs, rmax)),
           out_path);
      return kExitOk;
    }
    if (verify->parsed()) {
      spiderweb::VerifyOptions opt;
      if (verify->count("--k") > 0) opt.ks = {k};
      opt.nmax = nmax;
      opt.mmax = mmax;
      opt.seed = seed;
      std::vector<spiderweb::CheckResult> results =
          spiderweb::run_suite(suite, opt);
      bool any_fail = false, any_undecided = false;
      nlohmann::ordered_json report;
      report["seed"] = seed;
      report["results"] = nlohmann::ordered_json::array();
      for (const auto& r : results) {
        nlohmann::ordered_json row;
        row["suite"] = r.suite;
        row["check"] = r.check;
        row["params"] = r.params;
        row["status"] = status_name(r.status);
        if (!r.detail.empty()) row["witness"] = r.detail;
        row["runtime_ms"] = r.runtime_ms;
        report["results"].push_back(row);
        std::cout << status_name(r.status) << "  " << r.check << " ["
                  << r.params << "]"
                  << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
        any_fail |= r.status == spiderweb::CheckStatus::fail;
        any_undecided |= r.status == spiderweb::CheckStatus::undecided;
      }
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << report.dump(2) << "\n";
      }
      if (any_fail) return kExitFailed;
      if (any_undecided) return kExitUndecided;
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalid;
}
