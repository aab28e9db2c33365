#include "torelli/rep_theory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace torelli {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  parts_.erase(std::remove(parts_.begin(), parts_.end(), 0), parts_.end());
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 0; }))
    throw std::invalid_argument("Partition: negative part");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Integer class_size(const Partition& cycle_type) {
  const int n = cycle_type.size();
  Integer order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  std::map<int, int> mult;
  for (int p : cycle_type.parts()) ++mult[p];
  Integer z = 1;
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return order / z;
}

std::vector<std::pair<Partition, Integer>> conjugacy_classes(int n) {
  std::vector<std::pair<Partition, Integer>> out;
  for (auto& p : partitions_of(n)) {
    Integer size = class_size(p);
    out.emplace_back(std::move(p), std::move(size));
  }
  return out;
}

namespace {

// Beta-set (first-column hook lengths) of a partition.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int l = static_cast<int>(parts.size());
  std::vector<int> beta;
  for (int i = 0; i < l; ++i) beta.push_back(parts[static_cast<std::size_t>(i)] + (l - 1 - i));
  return beta;  // strictly decreasing
}

std::vector<int> parts_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    const int p = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

long mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t next) {
  if (next == mu.size()) return lambda.empty() ? 1 : 0;
  const int r = mu[next];
  const auto beta = beta_set(lambda);
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Removing a rim hook of length r moves a bead from beta_i to beta_i - r;
    // its height is the number of beads jumped over.
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    auto moved = beta;
    moved[i] = target;
    const long sub = mn_recursive(parts_from_beta(moved), mu, next + 1);
    total += (height % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: partitions of different n");
  return mn_recursive(lambda.parts(), mu.parts(), 0);
}

int CharacterTable::index_of_irrep(const Partition& p) const {
  const auto it = std::find(irreps.begin(), irreps.end(), p);
  if (it == irreps.end()) throw std::invalid_argument("unknown irrep " + p.to_string());
  return static_cast<int>(it - irreps.begin());
}

int CharacterTable::index_of_class(const Partition& p) const {
  const auto it = std::find(classes.begin(), classes.end(), p);
  if (it == classes.end()) throw std::invalid_argument("unknown class " + p.to_string());
  return static_cast<int>(it - classes.begin());
}

long CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  return values[static_cast<std::size_t>(index_of_irrep(lambda))][static_cast<std::size_t>(index_of_class(mu))];
}

bool CharacterTable::rows_orthogonal() const {
  for (std::size_t a = 0; a < irreps.size(); ++a)
    for (std::size_t b = 0; b < irreps.size(); ++b) {
      Integer sum = 0;
      for (std::size_t c = 0; c < classes.size(); ++c) sum += class_sizes[c] * values[a][c] * values[b][c];
      if (sum != (a == b ? group_order : Integer(0))) return false;
    }
  return true;
}

bool CharacterTable::columns_orthogonal() const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t d = 0; d < classes.size(); ++d) {
      Integer sum = 0;
      for (std::size_t a = 0; a < irreps.size(); ++a) sum += Integer(values[a][c]) * values[a][d];
      const Integer expected = c == d ? Integer(group_order / class_sizes[c]) : Integer(0);
      if (sum != expected) return false;
    }
  return true;
}

CharacterTable character_table(int n) {
  CharacterTable t;
  t.irreps = partitions_of(n);
  for (auto& [p, size] : conjugacy_classes(n)) {
    t.classes.push_back(p);
    t.class_sizes.push_back(size);
  }
  t.group_order = 1;
  for (int k = 2; k <= n; ++k) t.group_order *= k;
  for (const auto& lambda : t.irreps) {
    std::vector<long> row;
    for (const auto& mu : t.classes) row.push_back(mn_character(lambda, mu));
    t.values.push_back(std::move(row));
  }
  return t;
}

nlohmann::json character_table_document(const CharacterTable& table) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < table.classes.size(); ++c)
    classes.push_back({{"cycle_type", table.classes[c].to_string()}, {"size", table.class_sizes[c].get_str()}});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t a = 0; a < table.irreps.size(); ++a) {
    nlohmann::json vals = nlohmann::json::array();
    for (long v : table.values[a]) vals.push_back(std::to_string(v));
    rows.push_back({{"irrep", table.irreps[a].to_string()}, {"values", vals}});
  }
  return {{"group", "S" + std::to_string(table.irreps.front().size())},
          {"order", table.group_order.get_str()},
          {"classes", classes},
          {"rows", rows},
          {"rows_orthogonal", table.rows_orthogonal()},
          {"columns_orthogonal", table.columns_orthogonal()}};
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(lengths);
}

std::vector<int> adjacent_transposition_word(const Permutation& p) {
  // Bubble sort by right multiplication: p s_j1 s_j2 ... s_jk = id, so
  // p = s_jk ... s_j1.
  Permutation q = p;
  std::vector<int> applied;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t j = 0; j + 1 < q.size(); ++j)
      if (q[j] > q[j + 1]) {
        std::swap(q[j], q[j + 1]);
        applied.push_back(static_cast<int>(j) + 1);
        swapped = true;
      }
  }
  std::reverse(applied.begin(), applied.end());
  return applied;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

S6Module::S6Module(const RepDefinition& rep, CaseTag eps) : eps_(eps) {
  const int sign = sign_of(eps);
  for (const auto& g : rep.generators)
    gens_.push_back(g.map([sign](const LaurentPoly& p) { return Rational(p.evaluate_at_sign(sign)); }));
  const auto id = RationalMatrix::identity(rep.dim);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] * gens_[i] != id)
      throw Error(ErrorCode::NotInvolutive, "phi0(c" + std::to_string(i + 1) + ")^2 != I");
  // Coxeter relations make c_i -> (i, i+1) a well-defined map on S_6.
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      const auto& a = gens_[i];
      const auto& b = gens_[j];
      const bool ok = j == i + 1 ? (a * b * a == b * a * b) : (a * b == b * a);
      if (!ok)
        throw Error(ErrorCode::RelationFailure,
                    "Coxeter relation between phi0(c" + std::to_string(i + 1) + ") and phi0(c" + std::to_string(j + 1) + ")");
    }
  perms_ = all_permutations(6);
  for (const auto& p : perms_) images_.push_back(s6_matrix(p));
  for (const auto& p : perms_) {
    Permutation inv(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) inv[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
    inverse_images_.push_back(images_[index_of(inv)]);
  }
}

std::size_t S6Module::index_of(const Permutation& p) const {
  const auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || *it != p) throw std::invalid_argument("not a permutation of 6 points");
  return static_cast<std::size_t>(it - perms_.begin());
}

RationalMatrix S6Module::s6_matrix(const Permutation& sigma) const {
  auto m = RationalMatrix::identity(gens_.front().dim());
  for (int i : adjacent_transposition_word(sigma)) m = m * gens_[static_cast<std::size_t>(i - 1)];
  return m;
}

Rational S6Module::character(const Partition& type) const {
  for (std::size_t k = 0; k < perms_.size(); ++k)
    if (cycle_type(perms_[k]) == type) return matrix_trace(images_[k]);
  throw std::invalid_argument("no permutation of cycle type " + type.to_string());
}

std::map<Partition, Integer> S6Module::decompose_conjugation_module(const CharacterTable& table) const {
  std::map<Partition, Integer> out;
  for (const auto& lambda : table.irreps) {
    Rational sum = 0;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      const Rational chi_v = character(table.classes[c]);
      sum += Rational(table.class_sizes[c]) * table.value(lambda, table.classes[c]) * chi_v * chi_v;
    }
    sum /= Rational(table.group_order);
    if (sum.get_den() != 1) throw std::logic_error("non-integral multiplicity for " + lambda.to_string());
    out[lambda] = sum.get_num();
  }
  return out;
}

RationalMatrix S6Module::conjugation_operator(const Permutation& sigma) const {
  const std::size_t k = index_of(sigma);
  const auto& phi = images_[k];
  const auto& phi_inv = inverse_images_[k];
  const int n = phi.dim();
  RationalMatrix op = RationalMatrix::zero(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        if (phi(i, r) == 0) continue;
        for (int c = 0; c < n; ++c) op(i * n + j, r * n + c) = phi(i, r) * phi_inv(c, j);
      }
  return op;
}

RationalMatrix S6Module::isotypic_projector(const Partition& lambda, const CharacterTable& table) const {
  const int n = gens_.front().dim();
  RationalMatrix sum = RationalMatrix::zero(n * n);
  for (const auto& p : perms_) {
    const long chi = table.value(lambda, cycle_type(p));
    if (chi == 0) continue;
    sum += conjugation_operator(p) * Rational(chi);
  }
  Rational scale(Integer(syt_count(lambda.parts())), table.group_order);
  scale.canonicalize();
  return sum * scale;
}

std::size_t S6Module::generated_group_order(std::size_t cap) const {
  std::set<std::vector<Rational>> seen;
  std::vector<RationalMatrix> frontier{RationalMatrix::identity(gens_.front().dim())};
  seen.insert(frontier.front().entries());
  while (!frontier.empty() && seen.size() < cap) {
    std::vector<RationalMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens_) {
        auto prod = m * g;
        if (seen.insert(prod.entries()).second) next.push_back(std::move(prod));
        if (seen.size() >= cap) return seen.size();
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Rational project_trivial(const RationalMatrix& m) { return matrix_trace(m) / Rational(m.dim()); }

std::vector<Rational> flatten(const RationalMatrix& m) { return m.entries(); }

RationalMatrix unflatten(const std::vector<Rational>& v, int dim) {
  RationalMatrix m = RationalMatrix::zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = v[static_cast<std::size_t>(i * dim + j)];
  return m;
}

std::vector<Rational> apply(const RationalMatrix& op, const std::vector<Rational>& v) {
  const int n = op.dim();
  std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (op(i, j) != 0) out[static_cast<std::size_t>(i)] += op(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

long weyl_dim_c2(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("weyl_dim_c2: negative label");
  return static_cast<long>(a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6;
}

}  // namespace torelli
