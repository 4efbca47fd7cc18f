#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "bimenger/rational.hpp"

namespace bimenger {

/// Row and column indices of a square submatrix.
struct Submatrix {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

namespace detail {

// Calls visit(idx) for each k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns false.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Exact inverse by Gauss-Jordan over rationals; nullopt when singular.
inline std::optional<RationalMatrix> inverse(RationalMatrix a) {
  const std::size_t n = a.rows();
  RationalMatrix inv(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

// Fraction-free determinant (Bareiss) of a k x k integer matrix, k <= 5,
// stored row-major in `m` with stride 5.
inline std::int64_t bareiss_det(std::array<std::int64_t, 25> m, std::size_t k) {
  if (k == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (m[i * 5 + i] == 0) {
      std::size_t r = i + 1;
      while (r < k && m[r * 5 + i] == 0) ++r;
      if (r == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(m[i * 5 + c], m[r * 5 + c]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r)
      for (std::size_t c = i + 1; c < k; ++c)
        m[r * 5 + c] = static_cast<std::int64_t>(
            (static_cast<__int128>(m[r * 5 + c]) * m[i * 5 + i] - static_cast<__int128>(m[r * 5 + i]) * m[i * 5 + c]) /
            prev);
    prev = m[i * 5 + i];
  }
  return sign * m[(k - 1) * 5 + (k - 1)];
}

// Integer route: with A = A'/D (A' integral), kR⁻¹ = kD·adj(R')/det(R').
// Entry magnitudes are capped so every intermediate fits in 64 bits.
class IntegerRegularity {
 public:
  static std::optional<IntegerRegularity> make(const RationalMatrix& a, long k, std::size_t max_order) {
    if (max_order > 5) return std::nullopt;
    mpz_class denom = 1;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) denom = lcm(denom, mpz_class(a(r, c).get_den()));
    mpz_class scale = denom * k;
    if (!scale.fits_slong_p()) return std::nullopt;
    IntegerRegularity out;
    out.rows_ = a.rows();
    out.cols_ = a.cols();
    out.scale_ = scale.get_si();
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        mpz_class v = a(r, c).get_num() * (denom / a(r, c).get_den());
        if (abs(v) > 100) return std::nullopt;
        out.entries_.push_back(v.get_si());
      }
    return out;
  }

  // True when R is singular or scale·adj(R)/det(R) is integral.
  bool ok(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    const std::size_t k = rows.size();
    std::array<std::int64_t, 25> m{};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i * 5 + j] = entries_[rows[i] * cols_ + cols[j]];
    const std::int64_t det = bareiss_det(m, k);
    if (det == 0) return true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        // adj(R)_{ij} = (-1)^{i+j} det(R without row j and column i)
        std::array<std::int64_t, 25> minor{};
        std::size_t rr = 0;
        for (std::size_t r = 0; r < k; ++r) {
          if (r == j) continue;
          std::size_t cc = 0;
          for (std::size_t c = 0; c < k; ++c) {
            if (c == i) continue;
            minor[rr * 5 + cc++] = m[r * 5 + c];
          }
          ++rr;
        }
        std::int64_t cof = bareiss_det(minor, k - 1);
        if ((i + j) % 2 == 1) cof = -cof;
        const __int128 scaled = static_cast<__int128>(cof) * scale_;
        if (scaled % det != 0) return false;
      }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> entries_;
};

inline RationalMatrix submatrix(const RationalMatrix& a, const Submatrix& s) {
  RationalMatrix out(s.rows.size(), s.cols.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    for (std::size_t j = 0; j < s.cols.size(); ++j) out(i, j) = a(s.rows[i], s.cols[j]);
  return out;
}

inline bool exact_ok(const RationalMatrix& a, long k, const Submatrix& s) {
  auto inv = inverse(submatrix(a, s));
  if (!inv) return true;
  for (std::size_t r = 0; r < inv->rows(); ++r)
    for (std::size_t c = 0; c < inv->cols(); ++c)
      if (!is_integral(Rational((*inv)(r, c) * k))) return false;
  return true;
}

}  // namespace detail

enum class RegularityRoute { automatic, exact_rational };

/// First non-singular square submatrix R (order <= max_order, scanned by
/// increasing order, then lexicographic row and column sets) for which kR⁻¹
/// is not integral.
inline std::optional<Submatrix> find_k_regular_violation(const RationalMatrix& a, long k, std::size_t max_order,
                                                         RegularityRoute route = RegularityRoute::automatic) {
  std::optional<detail::IntegerRegularity> fast;
  if (route == RegularityRoute::automatic) fast = detail::IntegerRegularity::make(a, k, max_order);
  std::optional<Submatrix> bad;
  for (std::size_t order = 1; order <= max_order && !bad; ++order) {
    detail::for_each_combination(a.rows(), order, [&](const std::vector<std::size_t>& rows) {
      return detail::for_each_combination(a.cols(), order, [&](const std::vector<std::size_t>& cols) {
        const bool ok = fast ? fast->ok(rows, cols) : detail::exact_ok(a, k, {rows, cols});
        if (!ok) bad = Submatrix{rows, cols};
        return ok;
      });
    });
  }
  return bad;
}

/// Whether every non-singular square submatrix R of order <= max_order has
/// kR⁻¹ integral.
inline bool check_k_regular(const RationalMatrix& a, long k, std::size_t max_order,
                            RegularityRoute route = RegularityRoute::automatic) {
  return !find_k_regular_violation(a, k, max_order, route).has_value();
}

}  // namespace bimenger
