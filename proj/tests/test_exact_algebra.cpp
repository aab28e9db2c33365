#include "doctest.h"

#include "oracles.hpp"
#include "torelli/matrix.hpp"

#include <random>

using namespace torelli;

namespace {

LaurentPoly u(long e = 1, long c = 1) { return LaurentPoly::monomial(e, c); }

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int span = 6, long max_coef = 50) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(-span, span);
  std::uniform_int_distribution<long> coef(-max_coef, max_coef);
  LaurentPoly p;
  for (int k = nterms(rng); k > 0; --k) p += u(exp(rng), coef(rng));
  return p;
}

TruncSeries random_series(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  std::vector<Rational> c;
  for (int j = 0; j <= order; ++j) c.push_back(q(num(rng), den(rng)));
  return TruncSeries(order, c);
}

SquareMatrix<LaurentPoly> random_laurent_matrix(std::mt19937_64& rng, int dim) {
  SquareMatrix<LaurentPoly> m = SquareMatrix<LaurentPoly>::zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = random_poly(rng, 3, 3, 5);
  return m;
}

oracle::Poly to_oracle(const LaurentPoly& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[static_cast<long>(e)] = c;
  return out;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("multiplication examples") {
    CHECK(laurent_multiply(u(1) + u(-1), u(1)) == u(2) + 1);
    CHECK(laurent_multiply(LaurentPoly(1) - u(1), LaurentPoly(1) + u(1)) == LaurentPoly(1) - u(2));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) CHECK(laurent_multiply(random_poly(rng), LaurentPoly()).is_zero());
  }

  TEST_CASE("zero polynomial has no stored terms") {
    CHECK(LaurentPoly().terms().empty());
    CHECK((u(3) - u(3)).terms().empty());
    CHECK(LaurentPoly(0).is_zero());
    const LaurentPoly p{{2, 0}, {1, 3}};
    CHECK(p.terms().size() == 1);
  }

  TEST_CASE("exponent range of a product is the sum of ranges") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      const auto a = random_poly(rng), b = random_poly(rng);
      if (a.is_zero() || b.is_zero()) continue;
      const auto p = a * b;
      CHECK(p.min_exponent() == a.min_exponent() + b.min_exponent());
      CHECK(p.max_exponent() == a.max_exponent() + b.max_exponent());
    }
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 1000; ++k) {
      const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE(a + b == b + a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a - a == LaurentPoly());
    }
  }

  TEST_CASE("large products use big integers") {
    LaurentPoly p = LaurentPoly(1) + u(1, 1000000007L);
    LaurentPoly acc(1);
    for (int k = 0; k < 8; ++k) acc *= p;
    Integer expected;
    mpz_pow_ui(expected.get_mpz_t(), Integer(1000000007L).get_mpz_t(), 8);
    CHECK(acc.coefficient(8) == expected);
    CHECK(acc.coefficient(4) == expected / Integer(1000000007L) / Integer(1000000007L) /
                                    Integer(1000000007L) / Integer(1000000007L) * 70);
  }

  TEST_CASE("units and exact division") {
    CHECK(u(3, -1).unit_inverse() == u(-3, -1));
    CHECK_FALSE((u(1) + 1).unit_inverse().has_value());
    CHECK_FALSE(u(1, 2).unit_inverse().has_value());
    const auto a = u(2) + u(-1, 3) - 4, b = u(1) - u(-2);
    CHECK((a * b).exact_divide(b) == a);
    CHECK_FALSE((a * b + 1).exact_divide(b).has_value());
  }

  TEST_CASE("evaluation at signs") {
    const auto p = u(3, 2) + u(-2) - 5;
    CHECK(p.evaluate_at_sign(1) == -2);
    CHECK(p.evaluate_at_sign(-1) == -6);
  }

  TEST_CASE("formatting") {
    CHECK((u(-4, 3) - u(6, 2)).to_string() == "3*u^-4 - 2*u^6");
    CHECK(LaurentPoly().to_string() == "0");
  }
}

TEST_SUITE("series") {
  TEST_CASE("substitution examples") {
    CHECK(laurent_to_series(u(1), 1, 3) == TruncSeries(3, std::vector<Rational>{1, 1, q(1, 2), q(1, 6)}));
    CHECK(laurent_to_series(u(1), -1, 2) == TruncSeries(2, std::vector<Rational>{-1, -1, q(-1, 2)}));
    for (int s : {1, -1}) CHECK(laurent_to_series(u(1) * u(-1), s, 5) == TruncSeries::one(5));
  }

  TEST_CASE("exp_series examples") {
    CHECK(exp_series(0, 4) == TruncSeries::one(4));
    CHECK(exp_series(2, 2) == TruncSeries(2, std::vector<Rational>{1, 2, 2}));
    CHECK(exp_series(-1, 1) == TruncSeries(1, std::vector<Rational>{1, -1}));
    CHECK(exp_series(3, 4)[4] == q(81, 24));
  }

  TEST_CASE("constant term is the value at u = eps") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
      const auto p = random_poly(rng);
      for (int s : {1, -1}) CHECK(laurent_to_series(p, s, 4)[0] == Rational(p.evaluate_at_sign(s)));
    }
  }

  TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 300; ++k) {
      const auto a = random_poly(rng), b = random_poly(rng);
      for (int s : {1, -1}) {
        REQUIRE(laurent_to_series(a * b, s, 8) == laurent_to_series(a, s, 8) * laurent_to_series(b, s, 8));
        REQUIRE(laurent_to_series(a + b, s, 8) == laurent_to_series(a, s, 8) + laurent_to_series(b, s, 8));
      }
    }
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(31337);
    for (int k = 0; k < 1000; ++k) {
      const auto a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
    }
  }

  TEST_CASE("truncation is a ring homomorphism onto lower orders") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
      const auto a = random_series(rng, 7), b = random_series(rng, 7);
      CHECK((a * b).truncate(3) == a.truncate(3) * b.truncate(3));
      CHECK((a + b).truncate(3) == a.truncate(3) + b.truncate(3));
      CHECK((a * b).order() == 7);
    }
  }

  TEST_CASE("coefficients stay canonical") {
    const TruncSeries s(2, std::vector<Rational>{Rational(2, 4), Rational(3, 6), 0});
    CHECK(s[0].get_den() == 2);
    CHECK(s[1].get_str() == "1/2");
  }

  TEST_CASE("valuation and inverse") {
    CHECK(TruncSeries::zero(4).valuation() == std::nullopt);
    CHECK(TruncSeries::monomial(4, 3, 2).valuation() == 3);
    const auto s = exp_series(2, 6);
    CHECK(*s.inverse() * s == TruncSeries::one(6));
    CHECK(*s.inverse() == exp_series(-2, 6));
    CHECK_FALSE(TruncSeries::monomial(4, 1).inverse().has_value());
  }

  TEST_CASE("mismatched orders are rejected") {
    CHECK_THROWS(TruncSeries::one(3) + TruncSeries::one(4));
    CHECK_THROWS(TruncSeries::one(3) * TruncSeries::one(4));
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("determinant examples") {
    using M = SquareMatrix<LaurentPoly>;
    CHECK(determinant(M::identity(5)) == LaurentPoly(1));
    M d = M::identity(5);
    d(0, 0) = u(1);
    d(1, 1) = u(-1);
    CHECK(determinant(d) == LaurentPoly(1));
    CHECK(determinant(M::from_rows({{0, u(1)}, {-u(-1), 0}})) == LaurentPoly(1));
    CHECK(determinant(M::zero(3)).is_zero());
  }

  TEST_CASE("trace examples") {
    using M = SquareMatrix<LaurentPoly>;
    CHECK(matrix_trace(M::identity(5)) == LaurentPoly(5));
    M e = M::zero(5);
    e(0, 0) = 1;
    e(1, 1) = -1;
    CHECK(matrix_trace(e).is_zero());
    M d = M::zero(5);
    d(0, 0) = u(1);
    d(1, 1) = u(2);
    CHECK(matrix_trace(d) == u(1) + u(2));
  }

  TEST_CASE("subset DP agrees with Leibniz oracle") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 15; ++k) {
      const auto m = random_laurent_matrix(rng, 5);
      std::vector<std::vector<oracle::Poly>> rows(5);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) rows[static_cast<std::size_t>(i)].push_back(to_oracle(m(i, j)));
      const auto det = determinant(m);
      CHECK(to_oracle(det) == oracle::leibniz_det(rows));
      CHECK(determinant_permutation_sum(m) == det);
    }
  }

  TEST_CASE("det multiplicativity and trace linearity") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 10; ++k) {
      const auto a = random_laurent_matrix(rng, 5), b = random_laurent_matrix(rng, 5),
                 c = random_laurent_matrix(rng, 5);
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
      CHECK((a * b) * c == a * (b * c));
      CHECK(matrix_trace(a + b) == matrix_trace(a) + matrix_trace(b));
      CHECK(matrix_trace(a * u(2, 3)) == matrix_trace(a) * u(2, 3));
      CHECK(matrix_trace(a * b) == matrix_trace(b * a));
    }
  }

  TEST_CASE("inverse through the adjugate") {
    using M = SquareMatrix<LaurentPoly>;
    const M m = M::from_rows({{u(1), 1, 0}, {0, u(-2), 3}, {0, 0, -1}});
    const auto inv = inverse_unit_det(m);
    CHECK(m * inv == M::identity(3));
    CHECK(inv * m == M::identity(3));
    const M singular = M::from_rows({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(inverse_unit_det(singular), Error);
    const M two = M::from_rows({{2, 0}, {0, 1}});
    CHECK_THROWS_AS(inverse_unit_det(two), Error);
  }

  TEST_CASE("exact rank") {
    using QM = SquareMatrix<Rational>;
    CHECK(rank_exact(QM::identity(5)) == 5);
    CHECK(rank_exact(QM::zero(4)) == 0);
    CHECK(rank_exact(QM::from_rows({{q(1, 2), 1}, {1, 2}})) == 1);
    CHECK(rank_exact(QM::from_rows({{q(1, 3), 1, 0}, {0, 0, 1}, {q(2, 3), 2, 5}})) == 2);
    using LM = SquareMatrix<LaurentPoly>;
    CHECK(rank_exact(LM::from_rows({{u(1), u(2)}, {1, u(1)}})) == 1);
    CHECK(rank_exact(LM::from_rows({{u(1), 1}, {1, u(1)}})) == 2);
  }
}

TEST_SUITE("valuation") {
  using SM = SquareMatrix<TruncSeries>;
  using QM = SquareMatrix<Rational>;

  SM from_coefficients(const std::vector<QM>& coeffs, int order) {
    SM m = SM::zero(coeffs.front().dim(), TruncSeries::zero(order));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
          m(r, c) += TruncSeries::monomial(order, static_cast<int>(j), coeffs[j](r, c));
    return m;
  }

  TEST_CASE("examples") {
    const QM c = QM::from_rows({{0, 1}, {0, 0}});
    const QM b = QM::from_rows({{1, 0}, {2, q(1, 3)}});
    const auto id = QM::identity(2);
    const auto r = series_matrix_valuation(from_coefficients({id, QM::zero(2), c}, 4));
    CHECK(r.depth == 2);
    CHECK(r.lead == c);
    CHECK_THROWS_WITH_AS(series_matrix_valuation(SM::identity(2, TruncSeries::zero(6))),
                         doctest::Contains("VALUATION_EXCEEDS_ORDER"), Error);
    const auto r1 = series_matrix_valuation(from_coefficients({id, c, b}, 4));
    CHECK(r1.depth == 1);
    CHECK(r1.lead == c);
  }

  TEST_CASE("non-identity constant term") {
    const QM c = QM::from_rows({{2, 0}, {0, 1}});
    try {
      series_matrix_valuation(from_coefficients({c}, 3));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotUnipotent);
    }
  }

  TEST_CASE("determinant of synthetic unipotent matrices") {
    // det(I + h^k C + h^{k+1} D) = 1 + h^k trace C mod h^{k+1}
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
      const int order = 2 + trial % 5;
      const int k = 1 + trial % order;
      std::vector<QM> coeffs(static_cast<std::size_t>(order + 1), QM::zero(5));
      coeffs[0] = QM::identity(5);
      for (int j = k; j <= order; ++j)
        for (int r = 0; r < 5; ++r)
          for (int c = 0; c < 5; ++c) coeffs[static_cast<std::size_t>(j)](r, c) = q(num(rng), den(rng));
      const auto m = from_coefficients(coeffs, order);
      const auto det = determinant(m);
      CHECK(det[0] == 1);
      for (int j = 1; j < k; ++j) CHECK(det[j] == 0);
      CHECK(det[k] == matrix_trace(coeffs[static_cast<std::size_t>(k)]));
    }
  }
}
