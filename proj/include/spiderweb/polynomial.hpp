#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spiderweb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dense big-integer coefficients, ascending degree, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static IntPolynomial constant(BigInt v);
  static IntPolynomial x();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt eval(const BigInt& v) const;
  double eval_double(double v) const;
  IntPolynomial pow(unsigned long long e) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  std::string str() const;

 private:
  std::vector<BigInt> c_;
  void trim();
};

BigInt det_exact(std::vector<std::vector<BigInt>> a);  // Bareiss

// det(xI - A), monic of degree n, via exact determinant evaluation at
// x = 0..n and Lagrange interpolation over the rationals.
IntPolynomial charpoly_exact(const std::vector<std::vector<long long>>& a);

}  // namespace spiderweb
