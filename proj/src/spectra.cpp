#include "spiderweb/spectra.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "spiderweb/families.hpp"

namespace spiderweb {

IntPolynomial path_charpoly(int i, int k) {
  if (i < 0) throw std::invalid_argument("path_charpoly needs i >= 0");
  IntPolynomial prev2 = IntPolynomial::constant(1);  // P_0
  if (i == 0) return prev2;
  IntPolynomial prev1 = IntPolynomial::x();  // P_1
  const IntPolynomial xp = IntPolynomial::x();
  const IntPolynomial k2 = IntPolynomial::constant(BigInt(k) * k);
  for (int j = 2; j <= i; ++j) {
    IntPolynomial cur = xp * prev1 - k2 * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

IntPolynomial cycle_charpoly(long long m, int k) {
  if (m < 1) throw std::invalid_argument("cycle_charpoly needs M >= 1");
  IntPolynomial prev2 = IntPolynomial::constant(2);  // R_0
  IntPolynomial prev1 = IntPolynomial::x();          // R_1
  const IntPolynomial xp = IntPolynomial::x();
  const IntPolynomial k2 = IntPolynomial::constant(BigInt(k) * k);
  if (m == 1) return prev1 - IntPolynomial::constant(2 * BigInt(k));
  for (long long j = 2; j <= m; ++j) {
    IntPolynomial cur = xp * prev1 - k2 * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  BigInt km = 1;
  for (long long j = 0; j < m; ++j) km *= k;
  return prev1 - IntPolynomial::constant(2 * km);
}

BigInt FactoredCharPoly::total_degree() const {
  BigInt d = 0;
  for (const auto& [f, e] : factors) d += BigInt(f.degree()) * e;
  return d;
}

IntPolynomial FactoredCharPoly::expand(long long degree_cap) const {
  if (total_degree() > degree_cap)
    throw std::invalid_argument("expansion degree exceeds the cap");
  IntPolynomial r = IntPolynomial::constant(1);
  for (const auto& [f, e] : factors)
    r = r * f.pow(e.convert_to<unsigned long long>());
  return r;
}

FactoredCharPoly spiderweb_charpoly(int k, int n, long long m) {
  if (k < 2 || n < 0 || m < 1)
    throw std::invalid_argument("spiderweb_charpoly needs k >= 2, N >= 0, M >= 1");
  FactoredCharPoly fcp;
  fcp.factors.emplace_back(cycle_charpoly(m, k), BigInt(1));
  if (n >= 1)
    fcp.factors.emplace_back(path_charpoly(n, k), BigInt(m) * (k - 1));
  for (int i = n - 1; i >= 1; --i)
    fcp.factors.emplace_back(
        path_charpoly(i, k),
        BigInt(m) * (k - 1) * (k - 1) * BigInt(ipow(k, n - i - 1)));
  return fcp;
}

BigRational SpectralMeasure::total_mass() const {
  BigRational s = 0;
  for (const auto& [key, w] : atoms) s += w;
  return s;
}

double SpectralMeasure::atom_value(const AtomKey& key) const {
  return 2.0 * k * std::cos(M_PI * static_cast<double>(key.p) / key.q);
}

std::vector<double> SpectralMeasure::expand_multiset(long long total) const {
  std::vector<double> out;
  for (const auto& [key, w] : atoms) {
    BigRational count = w * total;
    if (denominator(count) != 1)
      throw std::logic_error("weights do not resolve to multiplicities");
    long long c = numerator(count).convert_to<long long>();
    for (long long i = 0; i < c; ++i) out.push_back(atom_value(key));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<AtomKey, long long> closed_form_multiplicities(int k, int n,
                                                        long long m) {
  if (k < 2 || n < 0 || m < 1)
    throw std::invalid_argument("closed form needs k >= 2, N >= 0, M >= 1");
  std::map<AtomKey, long long> mult;
  mult[{0, 1}] = 1;                  // 2k
  if (m % 2 == 0) mult[{1, 1}] = 1;  // -2k, even cycle length only
  // The cycle factor contributes atoms with q up to M, the path factors with
  // q up to N+1; both ranges are needed for the multiplicities to add up to
  // the vertex count.
  long long qmax = std::max<long long>(n + 1, m);
  for (long long q = 2; q <= qmax; ++q) {
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      long long s = 0;
      for (long long j = 1; j * q <= n; ++j)
        s += m * (k - 1) * (k - 1) * ipow(k, n - j * q);
      if ((n + 1) % q == 0) s += m * (k - 1);      // P_N factor
      if ((m * p) % (2 * q) == 0) s += 2;          // cycle factor
      if (s > 0) mult[{p, q}] = s;
    }
  }
  return mult;
}

SpectralMeasure closed_form_spectrum(int k, int n, long long m) {
  SpectralMeasure mu;
  mu.k = k;
  const BigInt total = BigInt(m) * BigInt(ipow(k, n));
  for (const auto& [key, c] : closed_form_multiplicities(k, n, m))
    mu.atoms[key] = BigRational(BigInt(c)) / BigRational(total);
  return mu;
}

std::vector<double> numeric_spectrum(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd mat(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("numeric_spectrum needs a square matrix");
    for (int j = 0; j < n; ++j) mat(i, j) = a[i][j];
  }
  if (!mat.isApprox(mat.transpose(), 0.0))
    throw std::invalid_argument("numeric_spectrum needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed");
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> numeric_spectrum(const Graph& g) {
  if (g.directed)
    throw std::invalid_argument(
        "numeric_spectrum works on non-oriented graphs; take underlying() first");
  return numeric_spectrum(adjacency_matrix(g));
}

double measure_distance(const SpectralMeasure& a, const SpectralMeasure& b) {
  if (a.k != b.k)
    throw std::invalid_argument("measure_distance needs a common degree 2k");
  // Walk atom positions by ascending value = descending p/q; the sup of
  // |CDF_a - CDF_b| over the line is attained right after an atom.
  std::set<AtomKey> keys;
  for (const auto& [key, w] : a.atoms) keys.insert(key);
  for (const auto& [key, w] : b.atoms) keys.insert(key);
  BigRational ca = 0, cb = 0, best = 0;
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    if (auto f = a.atoms.find(*it); f != a.atoms.end()) ca += f->second;
    if (auto f = b.atoms.find(*it); f != b.atoms.end()) cb += f->second;
    BigRational diff = ca > cb ? ca - cb : cb - ca;
    if (diff > best) best = diff;
  }
  return best.convert_to<double>();
}

}  // namespace spiderweb
