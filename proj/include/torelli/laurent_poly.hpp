#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torelli {

using Integer = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial in one variable u with arbitrary-precision integer
/// coefficients.  Terms are kept sorted by exponent; zero coefficients are
/// never stored, so the zero polynomial has no terms.
class LaurentPoly {
public:
  using Exponent = std::int64_t;
  using Term = std::pair<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit scalar embedding
  LaurentPoly(const Integer& c);  // NOLINT
  LaurentPoly(std::initializer_list<Term> terms);

  static LaurentPoly monomial(Exponent e, const Integer& c = 1);
  /// Builds from an arbitrary term list, merging duplicates and dropping zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  Exponent min_exponent() const { return terms_.front().first; }
  Exponent max_exponent() const { return terms_.back().first; }
  Integer coefficient(Exponent e) const;

  /// Value at u = ±1.
  Integer evaluate_at_sign(int sign) const;

  /// A unit of Z[u,u^-1] is ±u^k; returns its inverse, or nothing.
  std::optional<LaurentPoly> unit_inverse() const;

  /// Exact quotient if `divisor` divides `*this` in Z[u,u^-1].
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& divisor) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly laurent_multiply(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace torelli
