#pragma once

#include <array>
#include <string>
#include <vector>

#include "spiderweb/ball.hpp"
#include "spiderweb/graph.hpp"

namespace spiderweb {

enum class BallCompare { oriented_unlabeled, oriented_labeled, underlying };

struct BallClass {
  RootedBall representative;
  long long count = 0;
};

struct BallDistribution {
  int radius = 0;
  long long total = 0;
  std::vector<BallClass> classes;  // frequency = count / total
};

// Extracts the r-ball at every vertex and buckets by rooted isomorphism
// (oriented unlabeled by default).
BallDistribution empirical_root_measure(const Graph& g, int r,
                                        BallCompare mode = BallCompare::oriented_unlabeled);

// Fraction of vertices whose r-ball is isomorphic to the radius-r truncation
// of the reference ball.
double match_fraction(const Graph& g, int r, const RootedBall& reference,
                      BallCompare mode = BallCompare::oriented_unlabeled);

struct RootedGraph {
  Graph graph;
  int root = 0;
};

// d((g (x) p, (v,x))^0, (h (x) q, (w,y))^0) <= max of the factor distances,
// asserted on each sampled quadruple (g,h,p,q).
struct BoundCheckReport {
  long long checked = 0;
  bool all_hold = true;
  std::string first_failure;
};
BoundCheckReport product_distance_bound_check(
    const std::vector<std::array<RootedGraph, 4>>& samples);

struct ConvergenceRow {
  int n = 0;
  long long m = 0;
  int r = 0;
  double match = 0;
  double spectral_distance = 0;
};

// Match fractions of spider_web(k, N, M) against the lamplighter Cayley ball
// for every r <= rmax, plus the Kolmogorov distance of the exact spectral
// measure from the truncated Kesten measure.
std::vector<ConvergenceRow> convergence_report(
    int k, const std::vector<std::pair<int, long long>>& pairs, int rmax,
    int kesten_qmax = 30);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace spiderweb
