#include "torelli/trunc_series.hpp"

#include "torelli/error.hpp"

#include <ostream>
#include <sstream>

namespace torelli {

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries::TruncSeries(int order, const Rational& constant) : TruncSeries(order) {
  coeffs_[0] = constant;
}

TruncSeries::TruncSeries(int order, std::vector<Rational> coeffs) : TruncSeries(order) {
  for (std::size_t j = 0; j < coeffs.size() && j < coeffs_.size(); ++j) {
    coeffs_[j] = std::move(coeffs[j]);
    coeffs_[j].canonicalize();
  }
}

TruncSeries TruncSeries::monomial(int order, int k, const Rational& c) {
  TruncSeries s(order);
  if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

bool TruncSeries::is_zero() const { return !valuation().has_value(); }

std::optional<int> TruncSeries::valuation() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return static_cast<int>(j);
  return std::nullopt;
}

TruncSeries TruncSeries::truncate(int order) const {
  if (order > this->order()) throw std::invalid_argument("TruncSeries::truncate: cannot raise order");
  return TruncSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::optional<TruncSeries> TruncSeries::inverse() const {
  if (coeffs_[0] == 0) return std::nullopt;
  const int n = order();
  TruncSeries inv(n);
  Rational c0inv = 1 / coeffs_[0];
  inv.coeffs_[0] = c0inv;
  for (int j = 1; j <= n; ++j) {
    Rational acc = 0;
    for (int i = 1; i <= j; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * inv.coeffs_[static_cast<std::size_t>(j - i)];
    inv.coeffs_[static_cast<std::size_t>(j)] = -acc * c0inv;
  }
  return inv;
}

void TruncSeries::require_same_order(const TruncSeries& rhs) const {
  if (rhs.order() != order()) throw std::invalid_argument("TruncSeries: mismatched truncation orders");
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_same_order(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_same_order(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_same_order(b);
  const std::size_t n = a.coeffs_.size();
  TruncSeries out(a.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[j] << ")";
    if (j == 1) os << "*h";
    if (j > 1) os << "*h^" << j;
  }
  if (first) os << "0";
  os << " + O(h^" << coeffs_.size() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.to_string(); }

TruncSeries exp_series(long m, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational term = 1;
  for (int j = 0; j <= order; ++j) {
    c[static_cast<std::size_t>(j)] = term;
    Rational step(Integer(m), Integer(j + 1));
    step.canonicalize();
    term *= step;
  }
  return TruncSeries(order, std::move(c));
}

TruncSeries laurent_to_series(const LaurentPoly& p, int sign, int order) {
  if (order < 1) throw std::invalid_argument("laurent_to_series: order must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("laurent_to_series: sign must be +1 or -1");
  // Coefficient of h^j is sum_m c_m sign^m m^j / j!; accumulate the integer
  // power sums first and divide by j! once.
  const auto n = static_cast<std::size_t>(order) + 1;
  std::vector<Integer> power_sums(n, Integer(0));
  Integer mpow;
  for (const auto& [m, c] : p.terms()) {
    Integer signed_c = (sign < 0 && (m % 2 != 0)) ? Integer(-c) : c;
    Integer base(static_cast<long>(m));
    mpow = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_addmul(power_sums[j].get_mpz_t(), signed_c.get_mpz_t(), mpow.get_mpz_t());
      mpow *= base;
    }
  }
  std::vector<Rational> coeffs(n);
  Integer factorial = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) factorial *= static_cast<unsigned long>(j);
    coeffs[j] = Rational(power_sums[j], factorial);
  }
  return TruncSeries(order, std::move(coeffs));
}

}  // namespace torelli
