#include "suclab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "suclab/error.hpp"

namespace suclab {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const Integer& coeff, int degree) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1, Integer(0));
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear_factor(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, Integer(1)});
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c(coeffs_);
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(const Integer& shift) const {
  // Horner in the ring: r = r * (x + shift) + c_i, from the top coefficient down.
  IntPolynomial r;
  const IntPolynomial step(std::vector<Integer>{shift, Integer(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * step + IntPolynomial(std::vector<Integer>{*it});
  }
  return r;
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  return *this + rhs.scaled(-1);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> c(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::scaled(const Integer& factor) const {
  std::vector<Integer> c(coeffs_);
  for (auto& x : c) x *= factor;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("pseudo_remainder: division by zero polynomial");
  IntPolynomial r = a;
  const Integer lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPolynomial t = IntPolynomial::monomial(r.leading(), r.degree() - b.degree()) * b;
    r = r.scaled(lb) - t;
  }
  return r;
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace suclab
