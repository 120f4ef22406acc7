#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spiderweb/graph.hpp"
#include "spiderweb/polynomial.hpp"

namespace spiderweb {

// P_i: characteristic polynomial of the weight-k path on i vertices.
// P_0 = 1, P_1 = x, P_i = x P_{i-1} - k^2 P_{i-2}; the roots are
// 2k cos(t pi/(i+1)), 1 <= t <= i, all simple.
IntPolynomial path_charpoly(int i, int k);

// Q_{k,M}: characteristic polynomial of the weight-k cycle of length M,
// prod_l (x - 2k cos(2 pi l / M)), computed through the rescaled first-kind
// Chebyshev recurrence R_0 = 2, R_1 = x, R_M = x R_{M-1} - k^2 R_{M-2},
// Q = R_M - 2 k^M.
IntPolynomial cycle_charpoly(long long m, int k);

struct FactoredCharPoly {
  std::vector<std::pair<IntPolynomial, BigInt>> factors;  // (factor, exponent)
  BigInt total_degree() const;
  // Throws when the total degree exceeds the cap.
  IntPolynomial expand(long long degree_cap = 5000) const;
};

// Q * P_N^{M(k-1)} * prod_{i=1..N-1} P_i^{M(k-1)^2 k^{N-i-1}},
// total degree M k^N.
FactoredCharPoly spiderweb_charpoly(int k, int n, long long m);

// Atom positions are exact reduced fractions p/q in [0,1] standing for the
// value 2k cos(p pi / q); (0,1) is +2k and (1,1) is -2k.
struct AtomKey {
  long long p = 0;
  long long q = 1;
  friend bool operator<(const AtomKey& a, const AtomKey& b) {
    return a.p * b.q < b.p * a.q;
  }
  bool operator==(const AtomKey&) const = default;
};

struct SpectralMeasure {
  int k = 2;
  std::map<AtomKey, BigRational> atoms;  // positive weights
  BigRational total_mass() const;
  double atom_value(const AtomKey& key) const;  // 2k cos(p pi / q)
  // Atom values repeated by multiplicity = weight * total_count, ascending.
  std::vector<double> expand_multiset(long long total_count) const;
};

std::map<AtomKey, long long> closed_form_multiplicities(int k, int n,
                                                        long long m);
SpectralMeasure closed_form_spectrum(int k, int n, long long m);

// All eigenvalues of a symmetric real matrix, ascending; throws on
// non-symmetric input.
std::vector<double> numeric_spectrum(const std::vector<std::vector<double>>& a);
std::vector<double> numeric_spectrum(const Graph& g);  // non-oriented graphs

// Kolmogorov sup-CDF distance, computed with exact rational weights.
double measure_distance(const SpectralMeasure& a, const SpectralMeasure& b);

}  // namespace spiderweb
