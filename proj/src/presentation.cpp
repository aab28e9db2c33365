#include "torelli/presentation.hpp"

#include <algorithm>

namespace torelli {

bool RelationReport::all_passed() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.passed; });
}

const RelationResult* RelationReport::first_failure() const {
  for (const auto& r : relations)
    if (!r.passed) return &r;
  return nullptr;
}

}  // namespace torelli
