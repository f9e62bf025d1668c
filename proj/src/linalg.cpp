#include "parind/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace parind {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  IntVec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    long long s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      long long x = (*this)(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += x * o(k, c);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (long long x : a_)
    if (x != 0) return false;
  return true;
}

std::size_t rank(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c);

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[pivot_row]);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Rational factor = a[r][c] / a[pivot_row][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[pivot_row][k];
    }
    ++pivot_row;
  }
  return pivot_row;
}

IntMatrix select(const IntMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

std::string to_string(const Rational& q) {
  return q.str();
}

}  // namespace parind
