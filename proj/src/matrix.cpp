#include "torelli/matrix.hpp"

namespace torelli {

SquareMatrix<Rational> series_coefficient(const SquareMatrix<TruncSeries>& m, int j) {
  return m.map([j](const TruncSeries& s) { return j <= s.order() ? s[j] : Rational(0); });
}

SquareMatrix<TruncSeries> truncate(const SquareMatrix<TruncSeries>& m, int order) {
  return m.map([order](const TruncSeries& s) { return s.truncate(order); });
}

SquareMatrix<TruncSeries> laurent_matrix_to_series(const SquareMatrix<LaurentPoly>& m, int sign, int order) {
  return m.map([&](const LaurentPoly& p) { return laurent_to_series(p, sign, order); });
}

SeriesValuation series_matrix_valuation(const SquareMatrix<TruncSeries>& m) {
  const int order = m.sample().order();
  if (!series_coefficient(m, 0).is_identity())
    throw Error(ErrorCode::NotUnipotent, "constant term of the series matrix is not the identity");
  for (int k = 1; k <= order; ++k) {
    auto lead = series_coefficient(m, k);
    if (!lead.is_zero()) return {k, std::move(lead)};
  }
  throw Error(ErrorCode::ValuationExceedsOrder,
              "matrix is the identity through h^" + std::to_string(order) + "; raise the truncation order");
}

int rank_exact(const std::vector<std::vector<Integer>>& input) {
  auto a = input;
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a.front().size());
  Integer prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    const Integer p = prow[static_cast<std::size_t>(col)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const Integer f = row[static_cast<std::size_t>(col)];
      for (int c = col; c < cols; ++c) {
        auto& x = row[static_cast<std::size_t>(c)];
        x = p * x - f * prow[static_cast<std::size_t>(c)];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

int rank_exact(const SquareMatrix<Rational>& m) {
  const int n = m.dim();
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Integer den = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) {
      const Rational& x = m(i, j);
      rows[static_cast<std::size_t>(i)].push_back(Integer(x.get_num() * (den / x.get_den())));
    }
  }
  return rank_exact(rows);
}

int rank_exact(const SquareMatrix<LaurentPoly>& m) {
  const int n = m.dim();
  std::vector<std::vector<LaurentPoly>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)].push_back(m(i, j));
  LaurentPoly prev(1L);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    const auto prow = a[static_cast<std::size_t>(rank)];
    const LaurentPoly p = prow[static_cast<std::size_t>(col)];
    for (int r = rank + 1; r < n; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const LaurentPoly f = row[static_cast<std::size_t>(col)];
      for (int c = col; c < n; ++c) {
        LaurentPoly x = p * row[static_cast<std::size_t>(c)] - f * prow[static_cast<std::size_t>(c)];
        auto q = x.exact_divide(prev);
        if (!q) throw Error(ErrorCode::InexactDivision, "Bareiss step did not divide exactly");
        row[static_cast<std::size_t>(c)] = std::move(*q);
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace torelli
