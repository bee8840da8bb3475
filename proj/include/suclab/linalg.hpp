#pragma once

#include <cstddef>
#include <vector>

#include "suclab/matrix.hpp"
#include "suclab/polynomial.hpp"

namespace suclab {

/// det(xI - M), computed division-free (Berkowitz) so every intermediate is
/// an integer. Throws PreconditionError for non-square input.
IntPolynomial char_poly(const IntMatrix& m);

/// True iff p has no repeated complex root, i.e. gcd(p, p') is a constant.
/// Throws PreconditionError on the zero polynomial.
bool is_squarefree(const IntPolynomial& p);

inline Integer eval_at_integer(const IntPolynomial& p, const Integer& c) { return p(c); }

/// Rank over Q by fraction-free (Bareiss) elimination. Rectangular input is fine.
std::size_t rank(const IntMatrix& m);

/// Determinant by Bareiss elimination with row pivoting.
Integer determinant(const IntMatrix& m);

/// Integer roots of p in [lo, hi], ascending.
std::vector<long> integer_roots_in(const IntPolynomial& p, long lo, long hi);

}  // namespace suclab
