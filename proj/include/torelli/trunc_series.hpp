#pragma once

#include "torelli/laurent_poly.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace torelli {

/// Power series in h with exact rational coefficients, truncated after h^N.
/// All arithmetic discards terms of degree > N.  Binary operations require
/// equal orders; use `truncate` to bring operands down first.
class TruncSeries {
public:
  TruncSeries() : TruncSeries(1) {}
  explicit TruncSeries(int order);
  TruncSeries(int order, const Rational& constant);
  TruncSeries(int order, std::vector<Rational> coeffs);

  static TruncSeries zero(int order) { return TruncSeries(order); }
  static TruncSeries one(int order) { return TruncSeries(order, Rational(1)); }
  /// The monomial c*h^k (zero if k > order).
  static TruncSeries monomial(int order, int k, const Rational& c = 1);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  bool is_zero() const;
  /// Least j with nonzero coefficient, or nothing for the zero series.
  std::optional<int> valuation() const;

  TruncSeries truncate(int order) const;
  /// Multiplicative inverse when the constant term is nonzero.
  std::optional<TruncSeries> inverse() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

private:
  void require_same_order(const TruncSeries& rhs) const;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

/// sum_{j<=N} (m h)^j / j!
TruncSeries exp_series(long m, int order);

/// Substitutes u = sign * e^h into p, i.e. u^m -> sign^m * exp(m h).
TruncSeries laurent_to_series(const LaurentPoly& p, int sign, int order);

}  // namespace torelli
