#pragma once

#include "torelli/error.hpp"
#include "torelli/laurent_poly.hpp"
#include "torelli/trunc_series.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace torelli {

// Ring element helpers.  `zero_like`/`one_like` take a sample element so that
// truncated series pick up the right order.
inline Integer zero_like(const Integer&) { return 0; }
inline Integer one_like(const Integer&) { return 1; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline LaurentPoly zero_like(const LaurentPoly&) { return {}; }
inline LaurentPoly one_like(const LaurentPoly&) { return LaurentPoly(1L); }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline TruncSeries zero_like(const TruncSeries& s) { return TruncSeries::zero(s.order()); }
inline TruncSeries one_like(const TruncSeries& s) { return TruncSeries::one(s.order()); }
inline bool is_zero(const TruncSeries& x) { return x.is_zero(); }

inline std::string ring_to_string(const Integer& x) { return x.get_str(); }
inline std::string ring_to_string(const Rational& x) { return x.get_str(); }
inline std::string ring_to_string(const LaurentPoly& x) { return x.to_string(); }
inline std::string ring_to_string(const TruncSeries& x) { return x.to_string(); }

/// Inverse of a unit, or nothing if `x` is not invertible in its ring.
inline std::optional<Integer> unit_inverse(const Integer& x) {
  if (x == 1 || x == -1) return x;
  return std::nullopt;
}
inline std::optional<Rational> unit_inverse(const Rational& x) {
  if (x == 0) return std::nullopt;
  return Rational(1 / x);
}
inline std::optional<LaurentPoly> unit_inverse(const LaurentPoly& x) { return x.unit_inverse(); }
inline std::optional<TruncSeries> unit_inverse(const TruncSeries& x) { return x.inverse(); }

/// Dense square matrix over a commutative ring, stored row-major.
template <class R>
class SquareMatrix {
public:
  using value_type = R;

  SquareMatrix() = default;
  SquareMatrix(int dim, const R& fill) : dim_(dim), entries_(static_cast<std::size_t>(dim * dim), fill) {}

  static SquareMatrix zero(int dim, const R& sample = R()) { return SquareMatrix(dim, zero_like(sample)); }
  static SquareMatrix identity(int dim, const R& sample = R()) {
    SquareMatrix m = zero(dim, sample);
    for (int i = 0; i < dim; ++i) m(i, i) = one_like(sample);
    return m;
  }
  static SquareMatrix from_rows(const std::vector<std::vector<R>>& rows) {
    const int n = static_cast<int>(rows.size());
    SquareMatrix m;
    m.dim_ = n;
    m.entries_.reserve(static_cast<std::size_t>(n * n));
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument("SquareMatrix::from_rows: ragged rows");
      m.entries_.insert(m.entries_.end(), row.begin(), row.end());
    }
    return m;
  }

  int dim() const noexcept { return dim_; }
  R& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
  const R& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
  const std::vector<R>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const R& x) { return torelli::is_zero(x); });
  }
  bool is_identity() const { return *this == identity(dim_, sample()); }

  /// An entry usable as a ring sample (carries the truncation order for series).
  R sample() const { return entries_.empty() ? R() : entries_.front(); }

  template <class F>
  auto map(F&& f) const -> SquareMatrix<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<std::vector<S>> rows(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) rows[static_cast<std::size_t>(i)].push_back(f((*this)(i, j)));
    return SquareMatrix<S>::from_rows(rows);
  }

  SquareMatrix transpose() const {
    SquareMatrix t = *this;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    check_dim(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    check_dim(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
  }
  SquareMatrix& operator*=(const R& c) {
    for (auto& x : entries_) x = x * c;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(const SquareMatrix& a) { return zero(a.dim_, a.sample()) - a; }
  friend SquareMatrix operator*(SquareMatrix a, const R& c) { return a *= c; }
  friend SquareMatrix operator*(const R& c, SquareMatrix a) { return a *= c; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_dim(b);
    const int n = a.dim_;
    SquareMatrix out = zero(n, a.sample());
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const R& aik = a(i, k);
        if (torelli::is_zero(aik)) continue;
        for (int j = 0; j < n; ++j) {
          const R& bkj = b(k, j);
          if (torelli::is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim_; ++i) {
      os << (i ? "; " : "") << "[";
      for (int j = 0; j < dim_; ++j) os << (j ? ", " : "") << ring_to_string((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

private:
  void check_dim(const SquareMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("SquareMatrix: dimension mismatch");
  }

  int dim_ = 0;
  std::vector<R> entries_;
};

template <class R>
R matrix_trace(const SquareMatrix<R>& a) {
  R sum = zero_like(a.sample());
  for (int i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

/// Division-free determinant by dynamic programming over column subsets:
/// row i is matched to a column j not yet used, picking up the sign of the
/// inversions that j makes with the already-used columns.  O(2^n n) ring
/// multiplications.
template <class R>
R determinant(const SquareMatrix<R>& a) {
  const int n = a.dim();
  if (n == 0) return one_like(R());
  if (n > 24) throw std::invalid_argument("determinant: subset expansion limited to dim <= 24");
  const R zero = zero_like(a.sample());
  std::vector<R> dp(std::size_t{1} << n, zero);
  std::vector<bool> live(dp.size(), false);
  dp[0] = one_like(a.sample());
  live[0] = true;
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask]) continue;
    const int row = std::popcount(mask);
    if (row == n) continue;
    for (int col = 0; col < n; ++col) {
      if (mask & (1u << col)) continue;
      const R& entry = a(row, col);
      if (is_zero(entry)) continue;
      const int above = std::popcount(mask >> (col + 1));
      R term = dp[mask] * entry;
      const std::uint32_t next = mask | (1u << col);
      if (above % 2)
        dp[next] -= term;
      else
        dp[next] += term;
      live[next] = true;
    }
  }
  return dp.back();
}

/// Leibniz expansion sum_sigma sgn(sigma) prod_i a_{i,sigma(i)}.  Independent of
/// `determinant`; used as a cross-check on small matrices.
template <class R>
R determinant_permutation_sum(const SquareMatrix<R>& a) {
  const int n = a.dim();
  if (n > 8) throw std::invalid_argument("determinant_permutation_sum: dim > 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  R sum = zero_like(a.sample());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    R prod = one_like(a.sample());
    bool vanishes = false;
    for (int i = 0; i < n && !vanishes; ++i) {
      const R& x = a(i, perm[static_cast<std::size_t>(i)]);
      if (is_zero(x))
        vanishes = true;
      else
        prod = prod * x;
    }
    if (vanishes) continue;
    if (inversions % 2)
      sum -= prod;
    else
      sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

template <class R>
SquareMatrix<R> minor_matrix(const SquareMatrix<R>& a, int row, int col) {
  const int n = a.dim();
  std::vector<std::vector<R>> rows;
  for (int i = 0; i < n; ++i) {
    if (i == row) continue;
    std::vector<R> r;
    for (int j = 0; j < n; ++j)
      if (j != col) r.push_back(a(i, j));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return SquareMatrix<R>(0, a.sample());
  return SquareMatrix<R>::from_rows(rows);
}

template <class R>
SquareMatrix<R> adjugate(const SquareMatrix<R>& a) {
  const int n = a.dim();
  SquareMatrix<R> adj = SquareMatrix<R>::zero(n, a.sample());
  if (n == 1) {
    adj(0, 0) = one_like(a.sample());
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      R cof = determinant(minor_matrix(a, j, i));
      adj(i, j) = ((i + j) % 2) ? R(zero_like(cof) - cof) : cof;
    }
  return adj;
}

/// Inverse as adjugate times the inverse of the determinant, which must be a
/// unit of the coefficient ring.
template <class R>
SquareMatrix<R> inverse_unit_det(const SquareMatrix<R>& a) {
  const R det = determinant(a);
  auto inv = unit_inverse(det);
  if (!inv) throw Error(ErrorCode::NotInvertible, "determinant " + ring_to_string(det) + " is not a unit");
  return adjugate(a) * *inv;
}

/// Result of reading off M = I + h^k C + O(h^{k+1}).
struct SeriesValuation {
  int depth = 0;
  SquareMatrix<Rational> lead;
};

SeriesValuation series_matrix_valuation(const SquareMatrix<TruncSeries>& m);

/// Coefficient matrix of h^j.
SquareMatrix<Rational> series_coefficient(const SquareMatrix<TruncSeries>& m, int j);

SquareMatrix<TruncSeries> truncate(const SquareMatrix<TruncSeries>& m, int order);

SquareMatrix<TruncSeries> laurent_matrix_to_series(const SquareMatrix<LaurentPoly>& m, int sign, int order);

/// Rank over Q by fraction-free (Bareiss) elimination after clearing row
/// denominators.
int rank_exact(const SquareMatrix<Rational>& m);
int rank_exact(const std::vector<std::vector<Integer>>& rows);

/// Rank over the fraction field Q(u), by Bareiss elimination with exact
/// Laurent division.
int rank_exact(const SquareMatrix<LaurentPoly>& m);

}  // namespace torelli
