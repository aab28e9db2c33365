#include "torelli/jones_rep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace torelli {

int LinkPattern::partner(int p) const {
  for (const auto& [i, j] : pairs) {
    if (i == p) return j;
    if (j == p) return i;
  }
  throw Error(ErrorCode::IndexRange, "point " + std::to_string(p) + " not in pattern");
}

bool LinkPattern::is_valid() const {
  const int n = size();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [i, j] : pairs) {
    if (i < 1 || j > n || i >= j) return false;
    if (seen[static_cast<std::size_t>(i)]++ || seen[static_cast<std::size_t>(j)]++) return false;
  }
  for (const auto& [a, b] : pairs)
    for (const auto& [c, d] : pairs)
      if (a < c && c < b && b < d) return false;
  return std::is_sorted(pairs.begin(), pairs.end());
}

std::string LinkPattern::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < pairs.size(); ++k)
    os << (k ? "," : "") << "(" << pairs[k].first << "," << pairs[k].second << ")";
  os << "}";
  return os.str();
}

std::vector<LinkPattern> enumerate_link_patterns(int n) {
  if (n <= 0 || n % 2 != 0) throw Error(ErrorCode::OddN, "link patterns need a positive even n, got " + std::to_string(n));
  // Matchings of the interval [lo, hi]: lo pairs with some j leaving two
  // even-length intervals on either side.
  std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> rec = [&](int lo, int hi) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (lo > hi) {
      out.emplace_back();
      return out;
    }
    for (int j = lo + 1; j <= hi; j += 2) {
      for (const auto& inner : rec(lo + 1, j - 1))
        for (const auto& outer : rec(j + 1, hi)) {
          std::vector<std::pair<int, int>> p{{lo, j}};
          p.insert(p.end(), inner.begin(), inner.end());
          p.insert(p.end(), outer.begin(), outer.end());
          std::sort(p.begin(), p.end());
          out.push_back(std::move(p));
        }
    }
    return out;
  };
  std::vector<LinkPattern> patterns;
  for (auto& p : rec(1, n)) patterns.push_back(LinkPattern{std::move(p)});
  std::sort(patterns.begin(), patterns.end());
  return patterns;
}

LaurentPoly loop_value(int m) { return LaurentPoly{{-m, Integer(-1)}, {m, Integer(-1)}}; }

SquareMatrix<LaurentPoly> tl_generator(int i, int n, int m) {
  const auto patterns = enumerate_link_patterns(n);
  if (i < 1 || i > n - 1) throw Error(ErrorCode::IndexRange, "TL generator index " + std::to_string(i));
  const int d = static_cast<int>(patterns.size());
  const LaurentPoly delta = loop_value(m);
  auto e = SquareMatrix<LaurentPoly>::zero(d);
  for (int col = 0; col < d; ++col) {
    const auto& p = patterns[static_cast<std::size_t>(col)];
    const int j = p.partner(i);
    if (j == i + 1) {
      e(col, col) += delta;
      continue;
    }
    const int k = p.partner(i + 1);
    LinkPattern q;
    for (const auto& pr : p.pairs)
      if (pr.first != i && pr.second != i && pr.first != i + 1 && pr.second != i + 1) q.pairs.push_back(pr);
    q.pairs.emplace_back(i, i + 1);
    q.pairs.emplace_back(std::min(j, k), std::max(j, k));
    std::sort(q.pairs.begin(), q.pairs.end());
    const auto it = std::lower_bound(patterns.begin(), patterns.end(), q);
    e(static_cast<int>(it - patterns.begin()), col) += LaurentPoly(1L);
  }
  return e;
}

std::pair<long, long> solve_normalization(int n, std::optional<long> forced_m) {
  if (n != 4 && n != 6) throw Error(ErrorCode::IndexRange, "normalization is solved for n in {4, 6}");
  const long d = static_cast<long>(enumerate_link_patterns(n).size());
  const long r = rank_exact(tl_generator(1, n, 1));
  // det(eta u^a (I + u^m E)) = eta^d u^(d a) (-u^(2m))^r
  auto solve_for = [&](long m) -> std::optional<long> {
    if ((2 * r * m) % d != 0) return std::nullopt;
    return -(2 * r * m) / d;
  };
  if (forced_m) {
    if (*forced_m < 1) throw Error(ErrorCode::NoSolution, "m must be positive");
    if (auto a = solve_for(*forced_m)) return {*a, *forced_m};
    throw Error(ErrorCode::NoSolution, std::to_string(d) + "a + " + std::to_string(2 * r * *forced_m) +
                                           " = 0 has no integer solution");
  }
  for (long m = 1; m <= d; ++m)
    if (auto a = solve_for(m)) return {*a, m};
  throw Error(ErrorCode::NoSolution, "no m <= d solves the determinant constraint");
}

RepDefinition build_rep(int eta, long a, long m) {
  constexpr int n = 6;
  RepDefinition rep;
  rep.dim = static_cast<int>(enumerate_link_patterns(n).size());
  const auto id = SquareMatrix<LaurentPoly>::identity(rep.dim);
  const LaurentPoly scale = LaurentPoly::monomial(a, eta);
  const LaurentPoly twist = LaurentPoly::monomial(m);
  for (int i = 1; i <= kNumGenerators; ++i)
    rep.generators.push_back((id + tl_generator(i, n, static_cast<int>(m)) * twist) * scale);
  rep.normalization = Normalization{eta, a, m};
  rep.provenance = Provenance::Constructed;
  return rep;
}

int RepDefinition::determinant_sign() const {
  const auto det = determinant(generators.front());
  if (det == LaurentPoly(1L)) return 1;
  if (det == LaurentPoly(-1L)) return -1;
  throw Error(ErrorCode::DetNotPm1, "det rho(c1) = " + det.to_string());
}

GeneratorImages<LaurentPoly> RepDefinition::images() const {
  return GeneratorImages<LaurentPoly>::from_generators(generators);
}

namespace {

std::string normalization_label(const Normalization& n) {
  return "(eta=" + std::to_string(n.eta) + ", a=" + std::to_string(n.a) + ", m=" + std::to_string(n.m) + ")";
}

std::string summarize(const std::vector<SearchFailure>& failures) {
  std::ostringstream os;
  os << failures.size() << " candidate(s) rejected";
  const std::size_t shown = std::min<std::size_t>(failures.size(), 5);
  for (std::size_t k = 0; k < shown; ++k)
    os << "; " << normalization_label(failures[k].candidate) << ": " << failures[k].reason;
  if (failures.size() > shown) os << "; ...";
  return os.str();
}

// Determinant gate shared by search and validation: returns a failure reason.
std::optional<std::string> determinant_failure(const RepDefinition& rep) {
  std::optional<LaurentPoly> first;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    const auto det = determinant(rep.generators[i]);
    if (det != LaurentPoly(1L) && det != LaurentPoly(-1L))
      return "det rho(c" + std::to_string(i + 1) + ") = " + det.to_string() + " is not +1 or -1";
    if (first && *first != det) return "det rho(c_i) differs between generators";
    first = det;
  }
  return std::nullopt;
}

}  // namespace

SearchExhausted::SearchExhausted(std::vector<SearchFailure> failures)
    : Error(ErrorCode::SearchExhausted, summarize(failures)), failures_(std::move(failures)) {}

RepDefinition search_valid_rep(const std::vector<int>& etas, IntRange a_range, IntRange m_range) {
  std::vector<SearchFailure> failures;
  if (etas.empty() || a_range.empty() || m_range.empty()) throw SearchExhausted(std::move(failures));
  for (long m = std::max(1L, m_range.lo); m <= m_range.hi; ++m)
    for (long a = a_range.lo; a <= a_range.hi; ++a)
      for (int eta : etas) {
        const Normalization cand{eta, a, m};
        RepDefinition rep = build_rep(eta, a, m);
        if (auto why = determinant_failure(rep)) {
          failures.push_back({cand, "DET_NOT_PM1: " + *why});
          continue;
        }
        const auto report = check_presentation(rep.generators);
        if (const auto* f = report.first_failure()) {
          failures.push_back({cand, "RELATION_FAILURE: " + f->name});
          continue;
        }
        return rep;
      }
  throw SearchExhausted(std::move(failures));
}

RelationReport validate_rep(const RepDefinition& rep) {
  if (rep.generators.size() != kNumGenerators) throw Error(ErrorCode::SchemaError, "need five generator matrices");
  for (const auto& g : rep.generators)
    if (g.dim() != rep.dim) throw Error(ErrorCode::SchemaError, "generator dimension mismatch");
  auto report = check_presentation(rep.generators);
  for (const auto& r : report.relations)
    if (!r.passed && (r.kind == RelationKind::Braid || r.kind == RelationKind::Commute))
      throw Error(ErrorCode::RelationFailure, r.name);
  if (auto why = determinant_failure(rep)) throw Error(ErrorCode::DetNotPm1, *why);
  if (const auto* f = report.first_failure()) throw Error(ErrorCode::RelationFailure, f->name);
  return report;
}

nlohmann::json rep_to_document(const RepDefinition& rep) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : rep.generators) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < g.dim(); ++j) {
        nlohmann::json entry = nlohmann::json::array();
        for (const auto& [e, c] : g(i, j).terms()) entry.push_back({e, c.get_str()});
        row.push_back(std::move(entry));
      }
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  nlohmann::json doc;
  doc["dim"] = rep.dim;
  doc["variable"] = "u";
  doc["generators"] = std::move(gens);
  if (rep.normalization)
    doc["normalization"] = {{"eta", rep.normalization->eta}, {"a", rep.normalization->a}, {"m", rep.normalization->m}};
  else
    doc["normalization"] = nullptr;
  return doc;
}

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

LaurentPoly parse_entry(const nlohmann::json& entry) {
  if (!entry.is_array()) schema_error("matrix entry must be a list of [exponent, coefficient] pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& term : entry) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
      schema_error("term must be [integer exponent, decimal coefficient string]");
    Integer c;
    const auto text = term[1].get<std::string>();
    if (text.empty() || c.set_str(text, 10) != 0) schema_error("bad coefficient '" + text + "'");
    terms.emplace_back(term[0].get<std::int64_t>(), c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

RepDefinition parse_rep_document(const nlohmann::json& doc) {
  if (!doc.is_object()) schema_error("document must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() != 5)
    schema_error("\"dim\" must be 5");
  if (!doc.contains("variable") || doc["variable"] != "u") schema_error("\"variable\" must be \"u\"");
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].size() != kNumGenerators)
    schema_error("\"generators\" must hold five matrices");
  RepDefinition rep;
  rep.dim = 5;
  rep.provenance = Provenance::Loaded;
  for (const auto& g : doc["generators"]) {
    if (!g.is_array() || g.size() != 5) schema_error("each generator must be a 5x5 array");
    std::vector<std::vector<LaurentPoly>> rows;
    for (const auto& row : g) {
      if (!row.is_array() || row.size() != 5) schema_error("each generator must be a 5x5 array");
      std::vector<LaurentPoly> r;
      for (const auto& entry : row) r.push_back(parse_entry(entry));
      rows.push_back(std::move(r));
    }
    rep.generators.push_back(SquareMatrix<LaurentPoly>::from_rows(rows));
  }
  if (!doc.contains("normalization")) schema_error("missing \"normalization\"");
  const auto& norm = doc["normalization"];
  if (!norm.is_null()) {
    if (!norm.is_object() || !norm.contains("eta") || !norm.contains("a") || !norm.contains("m") ||
        !norm["eta"].is_number_integer() || !norm["a"].is_number_integer() || !norm["m"].is_number_integer())
      schema_error("\"normalization\" must be {eta, a, m} or null");
    const int eta = norm["eta"].get<int>();
    if (eta != 1 && eta != -1) schema_error("eta must be +1 or -1");
    rep.normalization = Normalization{eta, norm["a"].get<long>(), norm["m"].get<long>()};
  }
  return rep;
}

RepDefinition rep_from_document(const nlohmann::json& doc) {
  RepDefinition rep = parse_rep_document(doc);
  validate_rep(rep);
  return rep;
}

long syt_count_enumerate(const Shape& shape) {
  // Add boxes one at a time to rows that stay a partition.
  std::vector<int> filled(shape.size(), 0);
  const int total = std::accumulate(shape.begin(), shape.end(), 0);
  std::function<long(int)> rec = [&](int placed) -> long {
    if (placed == total) return 1;
    long count = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] >= shape[r]) continue;
      if (r > 0 && filled[r] >= filled[r - 1]) continue;
      ++filled[r];
      count += rec(placed + 1);
      --filled[r];
    }
    return count;
  };
  return rec(0);
}

long syt_count_hook(const Shape& shape) {
  const int total = std::accumulate(shape.begin(), shape.end(), 0);
  Integer num = 1;
  for (int k = 2; k <= total; ++k) num *= k;
  Integer den = 1;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      int below = 0;
      for (std::size_t r2 = r + 1; r2 < shape.size() && shape[r2] > c; ++r2) ++below;
      den *= shape[r] - c + below;
    }
  return Integer(num / den).get_si();
}

long syt_count(const Shape& shape) {
  for (std::size_t r = 0; r < shape.size(); ++r)
    if (shape[r] <= 0 || (r > 0 && shape[r] > shape[r - 1])) throw std::invalid_argument("syt_count: not a partition");
  const long brute = syt_count_enumerate(shape);
  const long hook = syt_count_hook(shape);
  if (brute != hook) throw std::logic_error("syt_count: enumeration and hook-length formula disagree");
  return brute;
}

}  // namespace torelli
