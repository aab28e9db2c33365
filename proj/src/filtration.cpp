#include "torelli/filtration.hpp"

namespace torelli {

namespace {

GeneratorImages<Rational> degree0_images(const RepDefinition& rep, CaseTag eps) {
  const auto images = rep.images();
  const int sign = sign_of(eps);
  auto at_sign = [sign](const LaurentPoly& p) { return Rational(p.evaluate_at_sign(sign)); };
  GeneratorImages<Rational> out;
  for (std::size_t i = 0; i < images.gens.size(); ++i) {
    out.gens.push_back(images.gens[i].map(at_sign));
    out.inverses.push_back(images.inverses[i].map(at_sign));
  }
  return out;
}

// Coefficients of h^1..h^{upto-1} vanish and the constant term is I.
bool agrees_with_identity_below(const SquareMatrix<TruncSeries>& s, int upto) {
  if (!series_coefficient(s, 0).is_identity()) return false;
  for (int j = 1; j < upto; ++j)
    if (!series_coefficient(s, j).is_zero()) return false;
  return true;
}

}  // namespace

SquareMatrix<TruncSeries> word_series(const RepDefinition& rep, const MCGWord& w, CaseTag eps, int order) {
  const auto value = evaluate_word(w, rep.images());
  return laurent_matrix_to_series(value, sign_of(eps), order);
}

SquareMatrix<TruncSeries> word_series_by_generators(const RepDefinition& rep, const MCGWord& w, CaseTag eps,
                                                    int order) {
  const auto images = rep.images();
  GeneratorImages<TruncSeries> series;
  for (std::size_t i = 0; i < images.gens.size(); ++i) {
    series.gens.push_back(laurent_matrix_to_series(images.gens[i], sign_of(eps), order));
    series.inverses.push_back(laurent_matrix_to_series(images.inverses[i], sign_of(eps), order));
  }
  return evaluate_word(w, series);
}

SquareMatrix<Rational> degree0_matrix(const RepDefinition& rep, const MCGWord& g, CaseTag eps) {
  return evaluate_word(g, degree0_images(rep, eps));
}

bool det_lemma_holds(const SquareMatrix<TruncSeries>& u, int depth, const SquareMatrix<Rational>& lead) {
  const auto det = determinant_permutation_sum(truncate(u, depth)).truncate(depth);
  TruncSeries expected = TruncSeries::one(depth) + TruncSeries::monomial(depth, depth, matrix_trace(lead));
  return det == expected;
}

FiltrationReport analyze(const RepDefinition& rep, const MCGWord& w, CaseTag eps, int order) {
  if (order < 1) throw std::invalid_argument("analyze: order must be >= 1");
  FiltrationReport r;
  r.word = w.to_string();
  r.eps = eps;
  r.order = order;
  r.normalization = rep.normalization;
  r.torelli = is_torelli(w);
  if (!r.torelli) throw Error(ErrorCode::NotTorelli, "'" + r.word + "' acts nontrivially on homology");

  const auto series = word_series(rep, w, eps, order);
  r.degree0_trivial = series_coefficient(series, 0).is_identity();
  if (!r.degree0_trivial)
    throw Error(ErrorCode::Degree0Nontrivial,
                "constant term of rho('" + r.word + "') at u = " + std::to_string(sign_of(eps)) + " is not I");

  auto val = series_matrix_valuation(series);
  r.depth = val.depth;
  r.delta = std::move(val.lead);
  r.trace = matrix_trace(r.delta);
  r.trivial_projection = r.trace / 5;
  r.det_lemma_ok = det_lemma_holds(series, r.depth, r.delta);
  r.det_identically_one = determinant(series) == TruncSeries::one(order);
  return r;
}

bool verify_det_lemma(const RepDefinition& rep, const MCGWord& w, CaseTag eps, int order) {
  return analyze(rep, w, eps, order).det_lemma_ok;
}

std::string outcome_name(LeadingTermOutcome o) {
  switch (o) {
    case LeadingTermOutcome::Holds: return "HOLDS";
    case LeadingTermOutcome::Deeper: return "DEEPER";
    case LeadingTermOutcome::Fails: return "FAILS";
  }
  return "FAILS";
}

AdditivityResult check_delta_additivity(const RepDefinition& rep, const MCGWord& x, const MCGWord& y, CaseTag eps,
                                        int order) {
  const auto rx = analyze(rep, x, eps, order);
  const auto ry = analyze(rep, y, eps, order);
  if (rx.depth != ry.depth)
    throw Error(ErrorCode::DepthMismatch,
                "depths " + std::to_string(rx.depth) + " and " + std::to_string(ry.depth) + " differ");
  AdditivityResult result;
  result.depth = rx.depth;
  result.expected = rx.delta + ry.delta;
  const auto product = word_series(rep, x * y, eps, order);
  if (!agrees_with_identity_below(product, result.depth)) return result;
  const auto lead = series_coefficient(product, result.depth);
  if (lead != result.expected) return result;
  result.outcome = result.expected.is_zero() ? LeadingTermOutcome::Deeper : LeadingTermOutcome::Holds;
  return result;
}

bool check_equivariance(const RepDefinition& rep, const MCGWord& g, const MCGWord& x, CaseTag eps, int order) {
  const auto rx = analyze(rep, x, eps, order);
  const auto rc = analyze(rep, g * x * g.inverse(), eps, order);
  if (rc.depth != rx.depth) return false;
  const auto phi = degree0_matrix(rep, g, eps);
  const auto phi_inv = degree0_matrix(rep, g.inverse(), eps);
  return rc.delta == phi * rx.delta * phi_inv;
}

BracketResult check_bracket(const RepDefinition& rep, const MCGWord& x, const MCGWord& y, CaseTag eps, int order) {
  const auto rx = analyze(rep, x, eps, order);
  const auto ry = analyze(rep, y, eps, order);
  BracketResult result;
  result.depth_x = rx.depth;
  result.depth_y = ry.depth;
  const int target = rx.depth + ry.depth;
  if (order < target + 1)
    throw Error(ErrorCode::ValuationExceedsOrder,
                "bracket of depths " + std::to_string(rx.depth) + " and " + std::to_string(ry.depth) +
                    " needs order >= " + std::to_string(target + 1));
  result.matrix_commutator = rx.delta * ry.delta - ry.delta * rx.delta;
  const auto series = word_series(rep, commutator(x, y), eps, order);
  if (!agrees_with_identity_below(series, target)) return result;
  if (series_coefficient(series, target) != result.matrix_commutator) return result;
  result.outcome = result.matrix_commutator.is_zero() ? LeadingTermOutcome::Deeper : LeadingTermOutcome::Holds;
  return result;
}

}  // namespace torelli
