#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace parind {

using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<long long>;

/// Dense row-major integer matrix. Used for Weyl actions and complex differentials.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  long long& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  long long operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntVec column(std::size_t c) const;
  IntVec apply(const IntVec& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool is_zero() const;

  const std::vector<long long>& data() const { return a_; }

  auto operator<=>(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> a_;
};

/// Exact rank over Q by fraction-based Gaussian elimination.
std::size_t rank(const IntMatrix& m);

/// Submatrix on the given row and column indices (in the given order).
IntMatrix select(const IntMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols);

std::string to_string(const Rational& q);

}  // namespace parind
