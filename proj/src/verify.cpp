#include "spiderweb/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "spiderweb/derangement.hpp"
#include "spiderweb/families.hpp"
#include "spiderweb/iso.hpp"
#include "spiderweb/lamplighter.hpp"
#include "spiderweb/limits.hpp"
#include "spiderweb/paths.hpp"
#include "spiderweb/products.hpp"
#include "spiderweb/spectra.hpp"

namespace spiderweb {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult run_check(const std::string& suite, const std::string& check,
                      const std::string& params,
                      const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult r;
  r.suite = suite;
  r.check = check;
  r.params = params;
  auto t0 = Clock::now();
  try {
    auto [ok, detail] = body();
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r.detail = detail;
  } catch (const std::exception& ex) {
    r.status = CheckStatus::fail;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

std::string kv(int k, int n, long long m) {
  std::ostringstream s;
  s << "k=" << k << " N=" << n << " M=" << m;
  return s.str();
}

std::vector<int> ks_or(const VerifyOptions& o, std::vector<int> dflt) {
  return o.ks.empty() ? dflt : o.ks;
}

Graph relabel(const Graph& g, const std::function<std::string(std::string)>& f) {
  Graph h = g;
  for (Edge& e : h.edges) e.label = f(e.label);
  return h;
}

}  // namespace

std::vector<CheckResult> criterion_structure(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  int nmax = o.nmax < 0 ? 4 : o.nmax;
  long long mmax = o.mmax < 0 ? 6 : o.mmax;
  for (int k : ks_or(o, {2, 3}))
    for (int n = 0; n <= nmax; ++n)
      for (long long m = 1; m <= mmax; ++m)
        out.push_back(run_check(
            "tensor", "spiderweb_is_debruijn_tensor_cycle", kv(k, n, m), [&] {
              GraphMorphism w = spiderweb_tensor_iso(k, n, m);
              std::string why;
              bool ok = verify_isomorphism(w, MorphKind::strong, &why);
              return std::make_pair(ok, why);
            }));
  return out;
}

std::vector<CheckResult> criterion_line_graphs(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  int nmax = o.nmax < 0 ? 4 : o.nmax;
  for (int k : ks_or(o, {2, 3}))
    for (int n = 0; n <= nmax; ++n) {
      out.push_back(
          run_check("debruijn", "line_of_debruijn", kv(k, n, 1), [&] {
            GraphMorphism w = de_bruijn_line_iso(k, n);
            std::string why;
            bool ok = verify_isomorphism(w, MorphKind::weak, &why);
            return std::make_pair(ok, why);
          }));
      out.push_back(run_check("debruijn", "line_of_gamma", kv(k, n, 1), [&] {
        GraphMorphism w = gamma_line_iso(k, n);
        std::string why;
        bool ok = verify_isomorphism(w, MorphKind::weak, &why);
        return std::make_pair(ok, why);
      }));
    }
  return out;
}

std::vector<CheckResult> criterion_schreier(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  int nmax = o.nmax < 0 ? 4 : o.nmax;
  for (int k : ks_or(o, {2, 3}))
    for (int n = 0; n <= nmax; ++n)
      out.push_back(
          run_check("schreier", "gamma_weakly_iso_debruijn", kv(k, n, 1), [&] {
            IsoWitness w = gamma_bruijn_iso(k, n);
            std::string why;
            bool ok = verify_isomorphism(w.morphism, MorphKind::weak, &why);
            return std::make_pair(ok, why);
          }));
  // No strong isomorphism exists for (2,2) and (2,3) under any
  // identification of the two label alphabets.
  for (int n : {2, 3})
    out.push_back(
        run_check("schreier", "no_strong_iso_gamma_debruijn", kv(2, n, 1), [&] {
          Graph b = de_bruijn(2, n);
          for (int swap = 0; swap < 2; ++swap) {
            Graph gr = relabel(schreier_level_graph(2, n), [&](std::string l) {
              int i = l[1] - '0';
              return "R" + std::to_string(swap ? 1 - i : i);
            });
            IsoOptions opt;
            opt.kind = MorphKind::strong;
            IsoResult r = find_iso(b, gr, opt);
            if (r.status == SearchStatus::undecided)
              return std::make_pair(false, std::string("search undecided"));
            if (r.status == SearchStatus::found)
              return std::make_pair(false,
                                    std::string("unexpected strong witness"));
          }
          return std::make_pair(true, std::string());
        }));
  return out;
}

std::vector<CheckResult> criterion_spectra_exact(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  long long cap = o.mmax < 0 ? 64 : o.mmax;
  for (int k : ks_or(o, {2, 3}))
    for (int n = 0; ipow(k, n) <= cap; ++n)
      for (long long m = 1; m * ipow(k, n) <= cap; ++m)
        out.push_back(run_check(
            "spectra", "factored_charpoly_equals_determinant", kv(k, n, m), [&] {
              IntPolynomial expanded = spiderweb_charpoly(k, n, m).expand();
              Graph u = underlying(spider_web(k, n, m));
              IntPolynomial det = charpoly_exact(adjacency_matrix_exact(u));
              bool ok = expanded == det;
              return std::make_pair(
                  ok, ok ? std::string()
                         : "expanded " + expanded.str() + " != " + det.str());
            }));
  return out;
}

std::vector<CheckResult> criterion_spectra_closed(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  int nmax = o.nmax < 0 ? 4 : o.nmax;
  long long mmax = o.mmax < 0 ? 6 : o.mmax;
  for (int k : ks_or(o, {2, 3}))
    for (int n = 0; n <= nmax; ++n)
      for (long long m = 1; m <= mmax; ++m)
        out.push_back(run_check(
            "spectra", "closed_form_matches_eigensolver", kv(k, n, m), [&] {
              const long long total = m * ipow(k, n);
              SpectralMeasure mu = closed_form_spectrum(k, n, m);
              bool minus2k = mu.atoms.count(AtomKey{1, 1}) > 0;
              if (minus2k != (m % 2 == 0))
                return std::make_pair(false,
                                      std::string("-2k presence disagrees with M parity"));
              std::vector<double> closed = mu.expand_multiset(total);
              if (static_cast<long long>(closed.size()) != total)
                return std::make_pair(false,
                                      std::string("multiplicities do not sum to M*k^N"));
              std::vector<double> numeric =
                  numeric_spectrum(underlying(spider_web(k, n, m)));
              double worst = 0;
              for (size_t i = 0; i < closed.size(); ++i)
                worst = std::max(worst, std::abs(closed[i] - numeric[i]));
              std::ostringstream d;
              d << "max deviation " << worst;
              return std::make_pair(worst <= 1e-8, d.str());
            }));
  return out;
}

std::vector<CheckResult> criterion_kesten(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (int k : ks_or(o, {2, 3}))
    out.push_back(run_check("spectra", "kesten_mass_near_one",
                            "k=" + std::to_string(k) + " qmax=30", [&] {
                              double mass = kesten_measure(k, 30)
                                                .total_mass()
                                                .convert_to<double>();
                              std::ostringstream d;
                              d << "mass " << mass;
                              return std::make_pair(std::abs(mass - 1.0) < 1e-6,
                                                    d.str());
                            }));
  out.push_back(run_check(
      "spectra", "spectral_distance_shrinks_along_diagonal", "k=2 N=2 vs N=6", [&] {
        SpectralMeasure kesten = kesten_measure(2, 30);
        double d2 = measure_distance(closed_form_spectrum(2, 2, 2), kesten);
        double d6 = measure_distance(closed_form_spectrum(2, 6, 6), kesten);
        std::ostringstream d;
        d << "d(2,2)=" << d2 << " d(6,6)=" << d6;
        return std::make_pair(d6 < d2, d.str());
      }));
  return out;
}

std::vector<CheckResult> criterion_convergence(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  (void)o;
  out.push_back(run_check(
      "convergence", "radius2_balls_all_match_cayley", "k=2 N=8 M=8 r=2", [&] {
        double f = match_fraction(spider_web(2, 8, 8), 2, cayley_ball(2, 2));
        std::ostringstream d;
        d << "fraction " << f;
        return std::make_pair(f == 1.0, d.str());
      }));
  out.push_back(run_check(
      "convergence", "match_fractions_nondecreasing", "k=2 diag 2,4,8 r<=2", [&] {
        std::vector<std::pair<int, long long>> pairs{{2, 2}, {4, 4}, {8, 8}};
        std::vector<ConvergenceRow> rows = convergence_report(2, pairs, 2);
        for (int r = 0; r <= 2; ++r) {
          double prev = -1;
          for (const ConvergenceRow& row : rows) {
            if (row.r != r) continue;
            if (row.match < prev) {
              std::ostringstream d;
              d << "fraction drops at N=M=" << row.n << " r=" << r;
              return std::make_pair(false, d.str());
            }
            prev = row.match;
          }
        }
        return std::make_pair(true, std::string());
      }));
  return out;
}

namespace {

Graph random_connected_oriented(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  int n = nv(rng);
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex();
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    if (rng() % 2)
      g.add_edge(u, v);
    else
      g.add_edge(v, u);
  }
  std::uniform_int_distribution<int> extra(0, n);
  int additions = extra(rng);
  std::uniform_int_distribution<int> anyv(0, n - 1);
  for (int i = 0; i < additions; ++i) g.add_edge(anyv(rng), anyv(rng));
  return g;
}

}  // namespace

std::vector<CheckResult> criterion_components(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  long long mmax = o.mmax < 0 ? 12 : o.mmax;
  std::vector<std::pair<std::string, Graph>> bases;
  for (int n = 0; n <= 3; ++n)
    bases.emplace_back("debruijn(2," + std::to_string(n) + ")", de_bruijn(2, n));
  for (long long d = 1; d <= 12; ++d)
    bases.emplace_back("cycle(" + std::to_string(d) + ")", cycle(d));
  std::mt19937 rng(12345u ^ o.seed);
  for (int i = 0; i < 20; ++i)
    bases.emplace_back("random" + std::to_string(i),
                       random_connected_oriented(rng, 8));
  out.push_back(run_check(
      "tensor", "component_count_matches_gcd_prediction",
      "bases x cycle(M<=" + std::to_string(mmax) + ")", [&] {
        long long checked = 0;
        for (const auto& [name, g] : bases)
          for (long long m = 1; m <= mmax; ++m) {
            ComponentPrediction pred = predict_components(g, m);
            int actual = component_count(tensor(g, cycle(m)));
            ++checked;
            if (!pred.canonical || *pred.canonical != actual) {
              std::ostringstream d;
              d << name << " M=" << m << ": union-find " << actual
                << " vs prediction "
                << (pred.canonical ? std::to_string(*pred.canonical) : "inf");
              return std::make_pair(false, d.str());
            }
          }
        std::ostringstream d;
        d << checked << " grid points";
        return std::make_pair(true, d.str());
      }));
  out.push_back(run_check(
      "tensor", "cycle4_cycle10_discrepancy_reported", "der=4 M=10", [&] {
        ComponentPrediction pred = predict_components(cycle(4), 10);
        int actual = component_count(tensor(cycle(4), cycle(10)));
        bool ok = pred.canonical && *pred.canonical == 2 && actual == 2 &&
                  pred.paper && *pred.paper == 4 && pred.discrepancy;
        std::ostringstream d;
        d << "union-find " << actual << ", canonical "
          << (pred.canonical ? std::to_string(*pred.canonical) : "inf")
          << ", centered-representative formula "
          << (pred.paper ? std::to_string(*pred.paper) : "inf");
        return std::make_pair(ok, d.str());
      }));
  return out;
}

std::vector<CheckResult> criterion_transitivity(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  int nmax = o.nmax < 0 ? 3 : o.nmax;
  long long mmax = o.mmax < 0 ? 4 : o.mmax;
  for (int n = 1; n <= nmax; ++n)
    for (long long m = 1; m <= mmax; ++m) {
      out.push_back(run_check(
          "transitivity", "transitive_iff_m_geq_n", kv(2, n, m), [&] {
            Transitivity t = is_vertex_transitive(spider_web(2, n, m));
            if (t == Transitivity::undecided)
              return std::make_pair(false, std::string("orbit search undecided"));
            bool expect = m >= n;
            bool got = t == Transitivity::yes;
            std::ostringstream d;
            d << "transitive=" << (got ? "yes" : "no");
            return std::make_pair(got == expect, d.str());
          }));
      out.push_back(run_check(
          "transitivity", "witnesses_iff_m_geq_n", kv(2, n, m), [&] {
            if (m >= n) {
              TransitivityWitnesses w = transitivity_witnesses(2, n, m);
              return std::make_pair(w.orbit_covers_all,
                                    std::string("orbit closure"));
            }
            try {
              transitivity_witnesses(2, n, m);
            } catch (const std::invalid_argument&) {
              return std::make_pair(true, std::string("rejected as expected"));
            }
            return std::make_pair(false,
                                  std::string("witnesses built despite M < N"));
          }));
    }
  return out;
}

std::vector<CheckResult> criterion_coverings(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  int nmax = o.nmax < 0 ? 4 : o.nmax;
  for (int k : ks_or(o, {2, 3}))
    for (int n = 0; n < nmax; ++n)
      out.push_back(run_check("coverings", "gamma_tower_covers", kv(k, n + 1, 1), [&] {
        bool ok = is_covering(gamma_covering(k, n));
        return std::make_pair(ok, std::string());
      }));
  for (int n = 0; n <= 3; ++n)
    for (long long m = 1; m <= 3; ++m)
      out.push_back(run_check(
          "coverings", "spiderweb_slice_covers", kv(2, n, m), [&] {
            bool ok = is_covering(spiderweb_slice_covering(2, n, m, 2));
            return std::make_pair(ok, std::string());
          }));
  out.push_back(run_check(
      "coverings", "drop_first_symbol_is_not_covering", kv(2, 2, 1), [&] {
        GraphMorphism m = debruijn_drop_first(2, 2);
        if (!is_morphism(m))
          return std::make_pair(false, std::string("not even a morphism"));
        bool covering = is_covering(m);
        return std::make_pair(
            !covering, std::string(covering ? "unexpectedly a covering" : ""));
      }));
  return out;
}

std::vector<CheckResult> criterion_euler_hamilton(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  int nmax = o.nmax < 0 ? 3 : o.nmax;
  long long mmax = o.mmax < 0 ? 3 : o.mmax;
  for (int n = 0; n <= nmax; ++n)
    for (long long m = 1; m <= mmax; ++m) {
      out.push_back(run_check("coverings", "euler_circuit", kv(2, n, m), [&] {
        Graph g = spider_web(2, n, m);
        Path p = eulerian_circuit(g);
        return std::make_pair(replay_euler(g, p), std::string());
      }));
      out.push_back(run_check("coverings", "hamiltonian_cycle", kv(2, n, m), [&] {
        Graph g = spider_web(2, n, m);
        HamiltonianResult r = hamiltonian_cycle(g);
        if (r.status != SearchStatus::found)
          return std::make_pair(false, std::string("no cycle found"));
        return std::make_pair(replay_hamilton(g, r.cycle), std::string());
      }));
    }
  return out;
}

std::vector<CheckResult> criterion_group_core(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (int k : ks_or(o, {2, 3, 6}))
    out.push_back(run_check(
        "schreier", "relators_evaluate_to_identity", "k=" + std::to_string(k), [&] {
          for (const Word& w : classic_relators(k, 8))
            if (!evaluate(w, k).is_identity())
              return std::make_pair(false, std::string("classic relator broken"));
          for (const Word& w : xgen_relators(k, 8))
            if (!evaluate(w, k).is_identity())
              return std::make_pair(false, std::string("x-generator relator broken"));
          return std::make_pair(true, std::string());
        }));
  out.push_back(run_check(
      "schreier", "act_level_is_an_action", "10^4 random triples", [&] {
        std::mt19937 rng(777u ^ o.seed);
        auto random_element = [&](int k) {
          LampElement g = LampElement::identity(k);
          std::uniform_int_distribution<int> pos(-3, 3), val(0, k - 1),
              shift(-3, 3);
          for (int i = 0; i < 3; ++i) {
            int v = val(rng);
            if (v) g.lamps[pos(rng)] = v;
          }
          for (auto it = g.lamps.begin(); it != g.lamps.end();)
            it = it->second == 0 ? g.lamps.erase(it) : std::next(it);
          g.shift = shift(rng);
          return g;
        };
        for (int k : {2, 3})
          for (int i = 0; i < 5000; ++i) {
            LampElement g = random_element(k), h = random_element(k);
            std::string x(6, '0');
            for (char& c : x)
              c = static_cast<char>('0' + std::uniform_int_distribution<int>(
                                               0, k - 1)(rng));
            if (act_level(multiply(g, h), x) != act_level(g, act_level(h, x)))
              return std::make_pair(false, std::string("homomorphism broken"));
          }
        return std::make_pair(true, std::string());
      }));
  int nmax = o.nmax < 0 ? 3 : o.nmax;
  long long mmax = o.mmax < 0 ? 4 : o.mmax;
  for (int n = 1; n <= nmax; ++n)
    for (long long m = 1; m <= mmax; ++m)
      out.push_back(run_check(
          "schreier", "h_subgroup_normal_iff_n_divides_m", kv(2, n, m), [&] {
            NormalityReport rep = normality_report(
                [n, m](const LampElement& g) { return in_h(g, n, m); }, 2, 6);
            bool expect_normal = m % n == 0;
            std::ostringstream d;
            d << rep.describe() << " (" << rep.members_checked << " members)";
            return std::make_pair(rep.violation_found != expect_normal, d.str());
          }));
  return out;
}

std::vector<std::string> suite_names() {
  return {"tensor",       "debruijn",  "schreier",    "spectra",
          "transitivity", "coverings", "convergence", "all"};
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& o) {
  auto append = [](std::vector<CheckResult>& into,
                   std::vector<CheckResult> from) {
    for (CheckResult& r : from) into.push_back(std::move(r));
  };
  std::vector<CheckResult> out;
  if (name == "tensor" || name == "all") {
    append(out, criterion_structure(o));
    append(out, criterion_components(o));
  }
  if (name == "debruijn" || name == "all") {
    append(out, criterion_line_graphs(o));
  }
  if (name == "schreier" || name == "all") {
    append(out, criterion_schreier(o));
    append(out, criterion_group_core(o));
  }
  if (name == "spectra" || name == "all") {
    append(out, criterion_spectra_exact(o));
    append(out, criterion_spectra_closed(o));
    append(out, criterion_kesten(o));
  }
  if (name == "transitivity" || name == "all") {
    append(out, criterion_transitivity(o));
  }
  if (name == "coverings" || name == "all") {
    append(out, criterion_coverings(o));
    append(out, criterion_euler_hamilton(o));
  }
  if (name == "convergence" || name == "all") {
    append(out, criterion_convergence(o));
  }
  if (out.empty() && name != "all")
    throw std::invalid_argument("unknown suite: " + name);
  return out;
}

}  // namespace spiderweb
