#pragma once

#include "torelli/filtration.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace torelli {

/// Weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  /// Sorts descending and drops zeros.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const;  // the integer n being partitioned
  std::string to_string() const;  // e.g. "[3,1,1,1]"

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// Partitions of n in reverse lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

/// n! / z_mu with z_mu = prod_k k^{m_k} m_k!.
Integer class_size(const Partition& cycle_type);

std::vector<std::pair<Partition, Integer>> conjugacy_classes(int n);
inline std::vector<std::pair<Partition, Integer>> conjugacy_classes_s6() { return conjugacy_classes(6); }

/// chi_lambda(mu) by the Murnaghan-Nakayama rim-hook recursion.
long mn_character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  std::vector<Partition> irreps;  // rows
  std::vector<Partition> classes;  // columns
  std::vector<Integer> class_sizes;
  std::vector<std::vector<long>> values;  // values[row][col]
  Integer group_order;

  int index_of_irrep(const Partition& p) const;
  int index_of_class(const Partition& p) const;
  long value(const Partition& lambda, const Partition& mu) const;
  /// Sum over classes of |C| chi chi' equals |G| [lambda == lambda'].
  bool rows_orthogonal() const;
  /// Sum over irreps of chi(mu) chi(nu) equals |G|/|C_mu| [mu == nu].
  bool columns_orthogonal() const;
};

CharacterTable character_table(int n);

nlohmann::json character_table_document(const CharacterTable& table);

/// Permutation of {0..n-1} as an image array; composition (s t)(x) = s(t(x)).
using Permutation = std::vector<int>;

Partition cycle_type(const Permutation& p);
/// Adjacent transpositions s_{i} (1-based, swapping i-1 and i in 0-based terms)
/// whose product in order equals p.
std::vector<int> adjacent_transposition_word(const Permutation& p);
std::vector<Permutation> all_permutations(int n);

using RationalMatrix = SquareMatrix<Rational>;

/// The degree-0 image of the mapping class group at u = eps, viewed as a
/// representation of S_6 through c_i -> (i, i+1), together with the
/// conjugation action on M(5, Q).
class S6Module {
public:
  /// Throws NOT_INVOLUTIVE if some phi0(c_i)^2 != I, or RELATION_FAILURE if
  /// the Coxeter relations of S_6 fail (then the map would be ill-defined).
  S6Module(const RepDefinition& rep, CaseTag eps);

  CaseTag eps() const noexcept { return eps_; }
  const std::vector<RationalMatrix>& generators() const noexcept { return gens_; }
  /// phi0(sigma) for sigma written as a product of adjacent transpositions.
  RationalMatrix s6_matrix(const Permutation& sigma) const;
  /// trace phi0(sigma) indexed by cycle type.
  Rational character(const Partition& cycle_type) const;

  /// Multiplicity of each irreducible in M(5,Q) = V (x) V*:
  /// (1/720) sum_sigma chi_lambda(sigma) chi_V(sigma)^2.
  std::map<Partition, Integer> decompose_conjugation_module(const CharacterTable& table) const;

  /// 25x25 matrix of m -> Phi m Phi^-1 on row-major flattened 5x5 matrices.
  RationalMatrix conjugation_operator(const Permutation& sigma) const;

  /// P_lambda = (dim lambda / 720) sum_sigma chi_lambda(sigma) Conj_sigma.
  RationalMatrix isotypic_projector(const Partition& lambda, const CharacterTable& table) const;

  /// Order of the matrix group generated by phi0(c_1..c_5), by closure
  /// enumeration; stops once `cap` elements are found.
  std::size_t generated_group_order(std::size_t cap = 1000) const;

private:
  CaseTag eps_;
  std::vector<RationalMatrix> gens_;
  std::vector<Permutation> perms_;
  std::vector<RationalMatrix> images_;  // images_[k] = phi0(perms_[k])
  std::vector<RationalMatrix> inverse_images_;
  std::size_t index_of(const Permutation& p) const;
};

/// Trivial-isotypic coordinate of m under conjugation: trace(m) / 5, the
/// scalar c with projection c * I.
Rational project_trivial(const RationalMatrix& m);

std::vector<Rational> flatten(const RationalMatrix& m);
RationalMatrix unflatten(const std::vector<Rational>& v, int dim);
std::vector<Rational> apply(const RationalMatrix& op, const std::vector<Rational>& v);

/// dim Gamma_{a,b} = (a+1)(b+1)(a+b+2)(a+2b+3)/6 for the rank-2 symplectic group.
long weyl_dim_c2(int a, int b);

}  // namespace torelli
