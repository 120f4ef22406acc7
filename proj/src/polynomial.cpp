#include "spiderweb/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace spiderweb {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt v) {
  return IntPolynomial({std::move(v)});
}

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

BigInt IntPolynomial::eval(const BigInt& v) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

double IntPolynomial::eval_double(double v) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = r * v + it->convert_to<double>();
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::pow(unsigned long long e) const {
  IntPolynomial r = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    BigInt v = c_[i];
    if (!first) out << (v < 0 ? " - " : " + ");
    else if (v < 0) out << "-";
    first = false;
    BigInt av = abs(v);
    if (av != 1 || i == 0) out << av.str();
    if (i > 0) {
      if (av != 1) out << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

BigInt det_exact(std::vector<std::vector<BigInt>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (int i = col + 1; i < n; ++i)
      for (int j = col + 1; j < n; ++j) {
        BigInt v = a[i][j] * a[col][col] - a[i][col] * a[col][j];
        a[i][j] = v / prev;  // exact by the Bareiss identity
      }
    prev = a[col][col];
  }
  return sign * a[n - 1][n - 1];
}

IntPolynomial charpoly_exact(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("charpoly_exact needs a square matrix");
  // Values of det(xI - A) at x = 0..n.
  std::vector<BigInt> values(n + 1);
  for (int x = 0; x <= n; ++x) {
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = (i == j ? BigInt(x) : BigInt(0)) - a[i][j];
    values[x] = det_exact(std::move(m));
  }
  // Lagrange interpolation on the nodes 0..n with rational coefficients.
  IntPolynomial master = IntPolynomial::constant(1);
  for (int x = 0; x <= n; ++x)
    master = master * IntPolynomial({-BigInt(x), 1});
  std::vector<BigRational> acc(n + 1, 0);
  for (int x = 0; x <= n; ++x) {
    // master / (X - x) by synthetic division (exact).
    std::vector<BigInt> quo(n + 1, 0);
    BigInt carry = 0;
    for (int j = n + 1; j-- > 0;) {
      carry = master.coeff(j + 1) + carry * x;
      quo[j] = carry;
    }
    BigInt denom = 1;
    for (int j = 0; j <= n; ++j)
      if (j != x) denom *= BigInt(x - j);
    BigRational scale = BigRational(values[x]) / BigRational(denom);
    for (int j = 0; j <= n; ++j) acc[j] += scale * BigRational(quo[j]);
  }
  std::vector<BigInt> coeffs(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (denominator(acc[j]) != 1)
      throw std::logic_error("charpoly interpolation produced a non-integer");
    coeffs[j] = numerator(acc[j]);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace spiderweb
