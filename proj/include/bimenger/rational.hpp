#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bimenger/error.hpp"

namespace bimenger {

// mpq_class keeps every result of arithmetic in canonical form (lowest terms,
// positive denominator). Values built from a numerator/denominator pair must
// go through make_rational so they are canonicalised too.
using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw Error(ErrorKind::dimension_mismatch, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline bool is_integral(std::span<const Rational> values) {
  for (const auto& v : values)
    if (!is_integral(v)) return false;
  return true;
}

/// Exact "p/q" form; integers are written with an explicit "/1".
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorKind::syntax_error, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::syntax_error, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

/// Dense row-major matrix. Only what the LP and regularity code need.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

inline RationalMatrix scaled(const RationalMatrix& m, const Rational& factor) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * factor;
  return out;
}

}  // namespace bimenger
