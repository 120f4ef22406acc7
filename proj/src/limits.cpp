#include "spiderweb/limits.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "spiderweb/families.hpp"
#include "spiderweb/iso.hpp"
#include "spiderweb/lamplighter.hpp"
#include "spiderweb/products.hpp"
#include "spiderweb/spectra.hpp"

namespace spiderweb {

namespace {

RootedBall extract(const Graph& g, int v, int r, BallCompare mode) {
  RootedBall b = ball(g, v, r);
  if (mode == BallCompare::underlying && b.graph.directed) {
    b.graph = underlying(b.graph);
  }
  return b;
}

bool balls_isomorphic(const RootedBall& a, const RootedBall& b,
                      BallCompare mode) {
  IsoOptions opt;
  opt.kind = mode == BallCompare::oriented_labeled ? MorphKind::strong
                                                   : MorphKind::weak;
  opt.rooted = true;
  opt.src_root = a.root;
  opt.dst_root = b.root;
  opt.vertex_cap = 10000;
  IsoResult res = find_iso(a.graph, b.graph, opt);
  if (res.status == SearchStatus::undecided)
    throw std::runtime_error("ball comparison undecided");
  return res.status == SearchStatus::found;
}

}  // namespace

BallDistribution empirical_root_measure(const Graph& g, int r,
                                        BallCompare mode) {
  BallDistribution dist;
  dist.radius = r;
  dist.total = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) {
    RootedBall b = extract(g, v, r, mode);
    bool placed = false;
    for (BallClass& cls : dist.classes) {
      if (cls.representative.graph.num_vertices() != b.graph.num_vertices() ||
          cls.representative.graph.num_edges() != b.graph.num_edges())
        continue;
      if (balls_isomorphic(b, cls.representative, mode)) {
        ++cls.count;
        placed = true;
        break;
      }
    }
    if (!placed) dist.classes.push_back(BallClass{std::move(b), 1});
  }
  return dist;
}

double match_fraction(const Graph& g, int r, const RootedBall& reference,
                      BallCompare mode) {
  RootedBall ref = reference;
  if (ref.radius != r) ref = ball(reference.graph, reference.root, r);
  if (mode == BallCompare::underlying && ref.graph.directed)
    ref.graph = underlying(ref.graph);
  long long hits = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (balls_isomorphic(extract(g, v, r, mode), ref, mode)) ++hits;
  return g.num_vertices() == 0
             ? 1.0
             : static_cast<double>(hits) / g.num_vertices();
}

BoundCheckReport product_distance_bound_check(
    const std::vector<std::array<RootedGraph, 4>>& samples) {
  BoundCheckReport report;
  for (const auto& [g, h, p, q] : samples) {
    RootedDistance left = rooted_distance(g.graph, g.root, h.graph, h.root);
    RootedDistance right = rooted_distance(p.graph, p.root, q.graph, q.root);
    Graph gp = tensor(g.graph, p.graph);
    Graph hq = tensor(h.graph, q.graph);
    int root_gp = g.root * p.graph.num_vertices() + p.root;
    int root_hq = h.root * q.graph.num_vertices() + q.root;
    RootedDistance product = rooted_distance(gp, root_gp, hq, root_hq);
    ++report.checked;
    double bound = std::max(left.value(), right.value());
    if (product.value() > bound + 1e-15) {
      report.all_hold = false;
      std::ostringstream msg;
      msg << "sample " << report.checked << ": product distance "
          << product.value() << " exceeds max(" << left.value() << ", "
          << right.value() << ")";
      report.first_failure = msg.str();
      return report;
    }
  }
  return report;
}

std::vector<ConvergenceRow> convergence_report(
    int k, const std::vector<std::pair<int, long long>>& pairs, int rmax,
    int kesten_qmax) {
  std::vector<ConvergenceRow> rows;
  SpectralMeasure kesten = kesten_measure(k, kesten_qmax);
  std::vector<RootedBall> references;
  for (int r = 0; r <= rmax; ++r) references.push_back(cayley_ball(k, r));
  for (const auto& [n, m] : pairs) {
    Graph sw = spider_web(k, n, m);
    double spectral = measure_distance(closed_form_spectrum(k, n, m), kesten);
    for (int r = 0; r <= rmax; ++r) {
      ConvergenceRow row;
      row.n = n;
      row.m = m;
      row.r = r;
      row.match = match_fraction(sw, r, references[r]);
      row.spectral_distance = spectral;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "N,M,r,match_fraction,spectral_distance\n";
  for (const ConvergenceRow& row : rows)
    out << row.n << "," << row.m << "," << row.r << "," << row.match << ","
        << row.spectral_distance << "\n";
  return out.str();
}

}  // namespace spiderweb
