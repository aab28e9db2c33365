#pragma once

#include "torelli/presentation.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torelli {

/// Non-crossing perfect matching of {1..n}, pairs (i, j) with i < j sorted by i.
struct LinkPattern {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()) * 2; }
  /// Partner of point p.
  int partner(int p) const;
  bool is_valid() const;
  std::string to_string() const;

  friend auto operator<=>(const LinkPattern&, const LinkPattern&) = default;
};

/// All non-crossing perfect matchings of {1..n}, lexicographic on pair lists.
std::vector<LinkPattern> enumerate_link_patterns(int n);

/// Temperley-Lieb cup generator E_i on link patterns of n points with loop
/// value delta = -(u^m + u^-m).  Column p holds the image of pattern p.
SquareMatrix<LaurentPoly> tl_generator(int i, int n, int m);

LaurentPoly loop_value(int m);

struct Normalization {
  int eta = 1;  // +1 or -1
  long a = 0;
  long m = 1;

  friend bool operator==(const Normalization&, const Normalization&) = default;
};

enum class Provenance { Constructed, Loaded };

/// Generator images of c1..c5 over Z[u, u^-1].
struct RepDefinition {
  int dim = 5;
  std::vector<SquareMatrix<LaurentPoly>> generators;
  std::optional<Normalization> normalization;
  Provenance provenance = Provenance::Constructed;

  /// Common value of det rho(c_i) (+1 or -1) once validated.
  int determinant_sign() const;
  GeneratorImages<LaurentPoly> images() const;

  friend bool operator==(const RepDefinition& a, const RepDefinition& b) {
    return a.dim == b.dim && a.generators == b.generators && a.normalization == b.normalization;
  }
};

/// Minimal positive m (or the forced one) and integral a with
/// d*a + 2*r*m = 0, where d is the number of link patterns and r = rank E_i.
std::pair<long, long> solve_normalization(int n, std::optional<long> forced_m = std::nullopt);

/// rho(c_i) = eta u^a (I + u^m E_i) on the five link patterns of six points.
RepDefinition build_rep(int eta, long a, long m);

struct IntRange {
  long lo = 0;
  long hi = -1;
  bool empty() const { return hi < lo; }
};

struct SearchFailure {
  Normalization candidate;
  std::string reason;
};

/// Thrown by `search_valid_rep` when no candidate passes.
class SearchExhausted : public Error {
public:
  explicit SearchExhausted(std::vector<SearchFailure> failures);
  const std::vector<SearchFailure>& failures() const noexcept { return failures_; }

private:
  std::vector<SearchFailure> failures_;
};

/// Tries candidates in order (m ascending, then a ascending, then eta in the
/// given order) and returns the first one with det rho(c_i) in {+1, -1} and
/// every presentation relation holding exactly.
RepDefinition search_valid_rep(const std::vector<int>& etas, IntRange a_range, IntRange m_range);

/// Validation in the order: braid and commutation relations
/// (RELATION_FAILURE), determinant in {+1, -1} and independent of i
/// (DET_NOT_PM1), remaining presentation relations (RELATION_FAILURE).
/// Returns the full relation report when everything passes.
RelationReport validate_rep(const RepDefinition& rep);

nlohmann::json rep_to_document(const RepDefinition& rep);
/// Schema checks only; provenance becomes Loaded.
RepDefinition parse_rep_document(const nlohmann::json& doc);
/// Parses and re-validates; provenance becomes Loaded.
RepDefinition rep_from_document(const nlohmann::json& doc);

// Standard Young tableaux.
using Shape = std::vector<int>;
long syt_count_enumerate(const Shape& shape);
long syt_count_hook(const Shape& shape);
/// Both counts; throws if they disagree.
long syt_count(const Shape& shape);

}  // namespace torelli
