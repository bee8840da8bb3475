#include "suclab/linalg.hpp"

#include <utility>

#include "suclab/error.hpp"

namespace suclab {

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial{1};

  // c holds the characteristic polynomial of the leading r x r principal
  // submatrix, highest degree first. Each step multiplies by the lower
  // triangular Toeplitz matrix whose first column is
  //   (1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S).
  std::vector<Integer> c{Integer(1), Integer(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Integer> t(r + 2);
    t[0] = 1;
    t[1] = -m(r, r);

    IntVector s(r);  // A^k S, starting with S = column r above the diagonal
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * s[j];
      t[k + 2] = -dot;
      if (k + 1 == r) break;
      IntVector next(r, Integer(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * s[j];
      s = std::move(next);
    }

    std::vector<Integer> nc(r + 2, Integer(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < r + 1; ++j) nc[i] += t[i - j] * c[j];
    }
    c = std::move(nc);
  }

  std::vector<Integer> ascending(c.rbegin(), c.rend());
  return IntPolynomial(std::move(ascending));
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("is_squarefree: zero polynomial");
  if (p.degree() <= 1) return true;
  return polynomial_gcd(p, p.derivative()).degree() == 0;
}

namespace {

// In-place Bareiss elimination; returns the rank and, for square input, leaves
// the determinant (up to the tracked sign) in the last pivot.
std::size_t bareiss(IntMatrix& a, int* sign) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
      if (sign) *sign = -*sign;
    }
    const Integer& p = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = p * a(i, j);
        tmp -= f * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a(m);
  return bareiss(a, nullptr);
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw PreconditionError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a(m);
  int sign = 1;
  if (bareiss(a, &sign) < n) return 0;
  return sign * a(n - 1, n - 1);
}

std::vector<long> integer_roots_in(const IntPolynomial& p, long lo, long hi) {
  std::vector<long> roots;
  for (long c = lo; c <= hi; ++c)
    if (p(Integer(c)) == 0) roots.push_back(c);
  return roots;
}

}  // namespace suclab
