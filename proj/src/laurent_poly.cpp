#include "torelli/laurent_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace torelli {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(from_terms(std::vector<Term>(terms))) {}

LaurentPoly LaurentPoly::monomial(Exponent e, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

Integer LaurentPoly::evaluate_at_sign(int sign) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    if (sign < 0 && (e % 2 != 0))
      sum -= c;
    else
      sum += c;
  }
  return sum;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = terms_.front();
  if (c != 1 && c != -1) return std::nullopt;
  return monomial(-e, c);
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly();
  // Work with ordinary polynomials A, B having nonzero constant terms.
  const Exponent shift = min_exponent() - divisor.min_exponent();
  const Exponent deg_b = divisor.max_exponent() - divisor.min_exponent();
  const Exponent deg_a = max_exponent() - min_exponent();
  if (deg_a < deg_b) return std::nullopt;
  std::vector<Integer> rem(static_cast<std::size_t>(deg_a + 1));
  for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - min_exponent())] = c;
  std::vector<Integer> b(static_cast<std::size_t>(deg_b + 1));
  for (const auto& [e, c] : divisor.terms_) b[static_cast<std::size_t>(e - divisor.min_exponent())] = c;
  const Integer& lead = b.back();

  std::vector<Term> quotient;
  for (Exponent d = deg_a; d >= deg_b; --d) {
    Integer& top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer q = top / lead;
    const Exponent qe = d - deg_b;
    for (Exponent j = 0; j <= deg_b; ++j) {
      if (b[static_cast<std::size_t>(j)] != 0)
        rem[static_cast<std::size_t>(qe + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    quotient.emplace_back(qe + shift, std::move(q));
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return from_terms(std::move(quotient));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, subtract ? Integer(-ib->second) : ib->second);
      ++ib;
    } else {
      Integer c = subtract ? Integer(ia->second - ib->second) : Integer(ia->second + ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const LaurentPoly& big = lhs.size() >= rhs.size() ? lhs : rhs;
  const LaurentPoly& small = lhs.size() >= rhs.size() ? rhs : lhs;

  LaurentPoly out;
  if (small.size() == 1) {
    const auto& [se, sc] = small.terms_.front();
    out.terms_.reserve(big.size());
    for (const auto& [e, c] : big.terms_) out.terms_.emplace_back(e + se, c * sc);
    return out;
  }

  const LaurentPoly::Exponent lo = big.min_exponent() + small.min_exponent();
  const LaurentPoly::Exponent span = big.max_exponent() + small.max_exponent() - lo + 1;
  // Dense accumulation is only worthwhile while the span stays comparable to
  // the number of partial products.
  if (span <= 4 * static_cast<LaurentPoly::Exponent>(big.size() * small.size()) + 64) {
    std::vector<Integer> acc(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : big.terms_)
      for (const auto& [eb, cb] : small.terms_)
        mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(),
                   cb.get_mpz_t());
    for (LaurentPoly::Exponent i = 0; i < span; ++i) {
      auto& c = acc[static_cast<std::size_t>(i)];
      if (c != 0) out.terms_.emplace_back(i + lo, std::move(c));
    }
    return out;
  }

  std::vector<LaurentPoly::Term> products;
  products.reserve(big.size() * small.size());
  for (const auto& [ea, ca] : big.terms_)
    for (const auto& [eb, cb] : small.terms_) products.emplace_back(ea + eb, ca * cb);
  return LaurentPoly::from_terms(std::move(products));
}

LaurentPoly laurent_multiply(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "u";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace torelli
