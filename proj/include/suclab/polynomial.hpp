#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "suclab/matrix.hpp"

namespace suclab {

/// Univariate polynomial over the integers, coefficients in ascending degree.
/// Always normalized: no trailing (leading-degree) zeros, so the zero
/// polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial monomial(const Integer& coeff, int degree);
  /// (x - root)
  static IntPolynomial linear_factor(const Integer& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(int i) const;
  const Integer& leading() const;

  IntPolynomial derivative() const;
  /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
  Integer content() const;
  /// p / content(p) with positive leading coefficient.
  IntPolynomial primitive_part() const;
  /// q(x) = p(x + shift)
  IntPolynomial shifted(const Integer& shift) const;

  /// Horner evaluation.
  Integer operator()(const Integer& x) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial scaled(const Integer& factor) const;

  bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Pseudo-remainder of a by b: some power of lc(b) times a, reduced mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Z[x] via a primitive-part pseudo-remainder sequence.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace suclab
