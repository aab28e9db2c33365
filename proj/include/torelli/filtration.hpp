#pragma once

#include "torelli/jones_rep.hpp"

#include <optional>
#include <string>

namespace torelli {

/// Branch of the substitution u = eps * e^h.
enum class CaseTag : int { Plus = 1, Minus = -1 };

inline int sign_of(CaseTag c) { return static_cast<int>(c); }
inline std::string case_name(CaseTag c) { return c == CaseTag::Plus ? "plus" : "minus"; }

inline constexpr int kDefaultOrder = 12;

/// rho(w) over Z[u, u^-1], expanded entrywise under u = eps * e^h.
SquareMatrix<TruncSeries> word_series(const RepDefinition& rep, const MCGWord& w, CaseTag eps, int order);

/// Product of the per-generator series matrices (substitute first, multiply
/// second).  Agrees with `word_series` because substitution is a ring map.
SquareMatrix<TruncSeries> word_series_by_generators(const RepDefinition& rep, const MCGWord& w, CaseTag eps,
                                                    int order);

struct FiltrationReport {
  std::string word;
  CaseTag eps = CaseTag::Plus;
  int order = kDefaultOrder;
  bool torelli = false;
  bool degree0_trivial = false;
  int depth = 0;
  SquareMatrix<Rational> delta;
  Rational trace;
  bool det_lemma_ok = false;
  /// det of the whole series matrix equals 1 through h^order.
  bool det_identically_one = false;
  Rational trivial_projection;
  std::optional<Normalization> normalization;
};

/// Depth k and leading matrix Delta_k(w) of rho(w) = I + h^k Delta_k(w) + ...
/// Throws NOT_TORELLI, DEGREE0_NONTRIVIAL or VALUATION_EXCEEDS_ORDER.
FiltrationReport analyze(const RepDefinition& rep, const MCGWord& w, CaseTag eps, int order = kDefaultOrder);

/// det(U) == 1 + h^k trace(C) mod h^{k+1} for U = I + h^k C + O(h^{k+1}),
/// with det computed by the Leibniz permutation sum.
bool det_lemma_holds(const SquareMatrix<TruncSeries>& u, int depth, const SquareMatrix<Rational>& lead);

bool verify_det_lemma(const RepDefinition& rep, const MCGWord& w, CaseTag eps, int order = kDefaultOrder);

enum class LeadingTermOutcome { Holds, Deeper, Fails };

std::string outcome_name(LeadingTermOutcome o);

struct AdditivityResult {
  LeadingTermOutcome outcome = LeadingTermOutcome::Fails;
  int depth = 0;  // common depth of x and y
  SquareMatrix<Rational> expected;  // Delta_k(x) + Delta_k(y)
};

/// Delta_k(xy) = Delta_k(x) + Delta_k(y); DEEPER when the sum vanishes and xy
/// is the identity through h^k.  Throws DEPTH_MISMATCH if depths differ.
AdditivityResult check_delta_additivity(const RepDefinition& rep, const MCGWord& x, const MCGWord& y, CaseTag eps,
                                        int order = kDefaultOrder);

/// Delta_k(g x g^-1) = phi0(g) Delta_k(x) phi0(g)^-1 and depth is preserved.
bool check_equivariance(const RepDefinition& rep, const MCGWord& g, const MCGWord& x, CaseTag eps,
                        int order = kDefaultOrder);

struct BracketResult {
  LeadingTermOutcome outcome = LeadingTermOutcome::Fails;
  int depth_x = 0;
  int depth_y = 0;
  SquareMatrix<Rational> matrix_commutator;
};

/// For x of depth j and y of depth k, [x, y] agrees with I through h^{j+k-1}
/// and its h^{j+k} coefficient is Delta_j(x) Delta_k(y) - Delta_k(y) Delta_j(x).
/// Throws VALUATION_EXCEEDS_ORDER if order < j + k + 1.
BracketResult check_bracket(const RepDefinition& rep, const MCGWord& x, const MCGWord& y, CaseTag eps,
                            int order = kDefaultOrder);

/// Constant-term matrix phi0(g) (the representation at u = eps).
SquareMatrix<Rational> degree0_matrix(const RepDefinition& rep, const MCGWord& g, CaseTag eps);

}  // namespace torelli
