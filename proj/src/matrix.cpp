#include "suclab/matrix.hpp"

#include <sstream>

#include "suclab/error.hpp"

namespace suclab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::column_vector(const IntVector& entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw PreconditionError("hconcat: row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& other) const {
  if (cols_ != other.cols_) throw PreconditionError("vconcat: column count mismatch");
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(rows_ + r, c) = other(r, c);
  return m;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (!is_square() || perm.size() != rows_) throw PreconditionError("permuted: size mismatch");
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(perm[i], perm[j]) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("operator+: shape mismatch");
  IntMatrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += rhs.data_[i];
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("operator-: shape mismatch");
  IntMatrix m(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= rhs.data_[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("operator*: inner dimension mismatch");
  IntMatrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += a * rhs(k, j);
    }
  }
  return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw PreconditionError("matrix-vector: dimension mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix m(*this);
  for (auto& x : m.data_) x *= factor;
  return m;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : ",[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : ",") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace suclab
