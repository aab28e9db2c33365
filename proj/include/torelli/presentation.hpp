#pragma once

#include "torelli/symplectic.hpp"

#include <string>
#include <vector>

namespace torelli {

enum class RelationKind { Braid, Commute, Chain, HyperellipticSquare, HyperellipticCentral };

struct RelationResult {
  std::string name;
  RelationKind kind;
  bool passed = false;
  std::string difference;  // lhs - rhs when the relation fails
};

struct RelationReport {
  std::vector<RelationResult> relations;

  bool all_passed() const;
  /// First failing relation, or nullptr.
  const RelationResult* first_failure() const;
};

namespace detail {

template <class R>
RelationResult compare_relation(std::string name, RelationKind kind, const SquareMatrix<R>& lhs,
                                const SquareMatrix<R>& rhs) {
  RelationResult r{std::move(name), kind, lhs == rhs, {}};
  if (!r.passed) r.difference = (lhs - rhs).to_string();
  return r;
}

}  // namespace detail

/// Genus-2 presentation relations on five generator images, in a fixed order:
/// braid relations, distant commutation, (c1c2c3c4c5)^6 = 1, iota^2 = 1 and
/// iota c_i = c_i iota for the hyperelliptic element iota.  Relations are
/// compared in inverse-free form, so the generators need not be invertible.
template <class R>
RelationReport check_presentation(const std::vector<SquareMatrix<R>>& gens) {
  if (gens.size() != kNumGenerators) throw std::invalid_argument("check_presentation: need five generators");
  const int n = gens.front().dim();
  const auto id = SquareMatrix<R>::identity(n, gens.front().sample());
  const auto g = [&](int i) -> const SquareMatrix<R>& { return gens[static_cast<std::size_t>(i - 1)]; };
  RelationReport report;
  for (int i = 1; i < kNumGenerators; ++i) {
    report.relations.push_back(detail::compare_relation(
        "braid c" + std::to_string(i) + " c" + std::to_string(i + 1), RelationKind::Braid,
        g(i) * g(i + 1) * g(i), g(i + 1) * g(i) * g(i + 1)));
  }
  for (int i = 1; i <= kNumGenerators; ++i)
    for (int j = i + 2; j <= kNumGenerators; ++j)
      report.relations.push_back(detail::compare_relation(
          "commute c" + std::to_string(i) + " c" + std::to_string(j), RelationKind::Commute, g(i) * g(j),
          g(j) * g(i)));

  SquareMatrix<R> chain = id;
  for (int i = 1; i <= kNumGenerators; ++i) chain = chain * g(i);
  report.relations.push_back(
      detail::compare_relation("chain (c1 c2 c3 c4 c5)^6 = 1", RelationKind::Chain, power_of(chain, 6), id));

  SquareMatrix<R> iota = id;
  for (int i = 1; i <= kNumGenerators; ++i) iota = iota * g(i);
  for (int i = kNumGenerators; i >= 1; --i) iota = iota * g(i);
  report.relations.push_back(
      detail::compare_relation("hyperelliptic iota^2 = 1", RelationKind::HyperellipticSquare, iota * iota, id));
  for (int i = 1; i <= kNumGenerators; ++i)
    report.relations.push_back(detail::compare_relation("hyperelliptic iota central c" + std::to_string(i),
                                                        RelationKind::HyperellipticCentral, iota * g(i),
                                                        g(i) * iota));
  return report;
}

}  // namespace torelli
