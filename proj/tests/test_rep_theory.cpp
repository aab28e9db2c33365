#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"

using namespace torelli;

namespace {

const S6Module& module_for(CaseTag eps) {
  static const S6Module plus(support::jones(), CaseTag::Plus);
  static const S6Module minus(support::jones(), CaseTag::Minus);
  return eps == CaseTag::Plus ? plus : minus;
}

const CharacterTable& table() {
  static const CharacterTable t = character_table(6);
  return t;
}

const CaseTag kCases[] = {CaseTag::Plus, CaseTag::Minus};

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("canonical form and counts") {
    CHECK(Partition({1, 3, 0, 2}).parts() == std::vector<int>{3, 2, 1});
    CHECK(Partition({3, 1, 1, 1}).to_string() == "[3,1,1,1]");
    CHECK(Partition({4, 2}).size() == 6);
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
    const auto p6 = partitions_of(6);
    CHECK(p6.front() == Partition({6}));
    CHECK(p6.back() == Partition({1, 1, 1, 1, 1, 1}));
  }

  TEST_CASE("class sizes") {
    CHECK(class_size(Partition({1, 1, 1, 1, 1, 1})) == 1);
    CHECK(class_size(Partition({2, 1, 1, 1, 1})) == 15);
    Integer total = 0;
    for (const auto& [mu, size] : conjugacy_classes_s6()) {
      total += size;
      CHECK(size == oracle::count_cycle_type(6, mu.parts()));
    }
    CHECK(total == 720);
  }
}

TEST_SUITE("characters") {
  TEST_CASE("trivial and sign rows") {
    for (const auto& mu : partitions_of(6)) {
      CHECK(mn_character(Partition({6}), mu) == 1);
      long transpositions = 0;
      for (int part : mu.parts()) transpositions += part - 1;
      CHECK(mn_character(Partition({1, 1, 1, 1, 1, 1}), mu) == (transpositions % 2 ? -1 : 1));
    }
  }

  TEST_CASE("identity column equals tableau counts") {
    for (int n = 1; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n))
        CHECK(mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
              oracle::syt_brute_force(lambda.parts()));
  }

  TEST_CASE("orthogonality for n up to 8") {
    for (int n = 1; n <= 8; ++n) {
      const auto t = character_table(n);
      CHECK(t.rows_orthogonal());
      CHECK(t.columns_orthogonal());
    }
    CHECK(table().irreps.size() == 11);
    CHECK(table().group_order == 720);
  }

  TEST_CASE("independent orthogonality sums") {
    const auto& t = table();
    for (std::size_t a = 0; a < t.irreps.size(); ++a)
      for (std::size_t b = 0; b < t.irreps.size(); ++b) {
        Integer s = 0;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          s += t.class_sizes[c] * t.values[a][c] * t.values[b][c];
        CHECK(s == (a == b ? 720 : 0));
      }
  }

  TEST_CASE("perturbed table fails orthogonality") {
    auto t = table();
    t.values[3][2] += 1;
    CHECK_FALSE(t.rows_orthogonal());
    CHECK_FALSE(t.columns_orthogonal());
  }

  TEST_CASE("document rows are labelled in canonical order") {
    const auto doc = character_table_document(table());
    CHECK(doc.dump() == character_table_document(character_table(6)).dump());
    CHECK(doc.dump().find("[3,1,1,1]") != std::string::npos);
  }

  TEST_CASE("representation character matches a table row") {
    // The degree-0 module is five dimensional, so it is [3,3] or [2,2,2].
    for (CaseTag eps : kCases) {
      const auto& mod = module_for(eps);
      int matches = 0;
      for (const auto& lambda : {Partition({3, 3}), Partition({2, 2, 2})}) {
        bool all = true;
        for (const auto& mu : table().classes)
          if (mod.character(mu) != Rational(table().value(lambda, mu))) all = false;
        matches += all;
      }
      CHECK(matches == 1);
    }
  }
}

TEST_SUITE("permutations") {
  TEST_CASE("transposition words reproduce the permutation") {
    for (const auto& p : all_permutations(5)) {
      Permutation acc{0, 1, 2, 3, 4};
      for (int s : adjacent_transposition_word(p)) {
        // right-multiply by s_{s}: swap positions s-1 and s
        std::swap(acc[static_cast<std::size_t>(s - 1)], acc[static_cast<std::size_t>(s)]);
      }
      CHECK(acc == p);
    }
    CHECK(all_permutations(6).size() == 720);
    CHECK(cycle_type({1, 0, 3, 4, 2, 5}) == Partition({3, 2, 1}));
  }
}

TEST_SUITE("s6 module") {
  TEST_CASE("matrices") {
    for (CaseTag eps : kCases) {
      const auto& mod = module_for(eps);
      CHECK(mod.s6_matrix({0, 1, 2, 3, 4, 5}) == RationalMatrix::identity(5));
      for (int i = 1; i <= 5; ++i) {
        Permutation t{0, 1, 2, 3, 4, 5};
        std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
        const auto m = mod.s6_matrix(t);
        CHECK(m == degree0_matrix(support::jones(), MCGWord::generator(i), eps));
        CHECK(m * m == RationalMatrix::identity(5));
      }
      CHECK(mod.generated_group_order() == 720);
    }
  }

  TEST_CASE("homomorphism on random pairs") {
    const auto& mod = module_for(CaseTag::Plus);
    const auto perms = all_permutations(6);
    for (std::size_t k = 0; k < 720; k += 37) {
      const auto& s = perms[k];
      const auto& t = perms[(k * 7 + 11) % 720];
      Permutation st(6);
      for (int x = 0; x < 6; ++x) st[static_cast<std::size_t>(x)] = s[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])];
      CHECK(mod.s6_matrix(st) == mod.s6_matrix(s) * mod.s6_matrix(t));
    }
  }

  TEST_CASE("non-involutive generators are rejected") {
    RepDefinition rep = support::jones();
    rep.generators[2] = rep.generators[2] * LaurentPoly(2);
    try {
      S6Module bad(rep, CaseTag::Plus);
      FAIL("expected NOT_INVOLUTIVE");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInvolutive);
    }
  }

  TEST_CASE("decomposition of the conjugation module") {
    for (CaseTag eps : kCases) {
      const auto mult = module_for(eps).decompose_conjugation_module(table());
      const std::map<Partition, long> expected{
          {Partition({6}), 1}, {Partition({4, 2}), 1}, {Partition({2, 2, 2}), 1}, {Partition({3, 1, 1, 1}), 1}};
      Integer dim = 0;
      for (const auto& lambda : table().irreps) {
        const long want = expected.count(lambda) ? expected.at(lambda) : 0;
        CHECK(mult.at(lambda) == want);
        dim += mult.at(lambda) * syt_count(lambda.parts());
      }
      CHECK(dim == 25);
      CHECK(mult.at(Partition({1, 1, 1, 1, 1, 1})) == 0);
    }
    CHECK(module_for(CaseTag::Plus).decompose_conjugation_module(table()) ==
          module_for(CaseTag::Minus).decompose_conjugation_module(table()));
  }

  TEST_CASE("isotypic projectors") {
    const std::map<Partition, int> ranks{
        {Partition({6}), 1}, {Partition({4, 2}), 9}, {Partition({2, 2, 2}), 5}, {Partition({3, 1, 1, 1}), 10}};
    for (CaseTag eps : kCases) {
      const auto& mod = module_for(eps);
      RationalMatrix total = RationalMatrix::zero(25);
      std::vector<RationalMatrix> ps;
      for (const auto& lambda : table().irreps) {
        auto p = mod.isotypic_projector(lambda, table());
        CHECK(p * p == p);
        CHECK(rank_exact(p) == (ranks.count(lambda) ? ranks.at(lambda) : 0));
        total += p;
        ps.push_back(std::move(p));
      }
      CHECK(total == RationalMatrix::identity(25));
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); b += 3) CHECK((ps[a] * ps[b]).is_zero());

      // center identification and trace-free complement
      const auto& trivial = ps[static_cast<std::size_t>(table().index_of_irrep(Partition({6})))];
      for (int k = 0; k < 25; ++k) {
        std::vector<Rational> e(25, Rational(0));
        e[static_cast<std::size_t>(k)] = 1;
        const auto basis = unflatten(e, 5);
        CHECK(unflatten(torelli::apply(trivial, e), 5) == RationalMatrix::identity(5) * project_trivial(basis));
        for (std::size_t a = 0; a < ps.size(); ++a) {
          if (table().irreps[a] == Partition({6})) continue;
          CHECK(matrix_trace(unflatten(torelli::apply(ps[a], e), 5)) == 0);
        }
      }
    }
  }

  TEST_CASE("conjugation operator") {
    const auto& mod = module_for(CaseTag::Minus);
    const Permutation sigma{2, 0, 1, 4, 3, 5};
    const auto op = mod.conjugation_operator(sigma);
    const auto phi = mod.s6_matrix(sigma);
    RationalMatrix m = RationalMatrix::zero(5);
    m(0, 3) = 2;
    m(4, 1) = Rational(-1, 2);
    const auto direct = phi * m * mod.s6_matrix({1, 2, 0, 4, 3, 5});
    CHECK(unflatten(torelli::apply(op, flatten(m)), 5) == direct);
  }
}

TEST_SUITE("trivial projection") {
  TEST_CASE("examples") {
    CHECK(project_trivial(RationalMatrix::identity(5)) == 1);
    RationalMatrix e = RationalMatrix::zero(5);
    e(0, 0) = 1;
    e(1, 1) = -1;
    CHECK(project_trivial(e) == 0);
  }

  TEST_CASE("vanishes on every catalog leading term") {
    for (const auto& w : support::catalog_words())
      for (CaseTag eps : kCases) CHECK(project_trivial(analyze(support::jones(), w, eps).delta) == 0);
  }
}

TEST_SUITE("weyl dimensions") {
  TEST_CASE("examples") {
    CHECK(weyl_dim_c2(0, 0) == 1);
    CHECK(weyl_dim_c2(2, 0) == 10);
    CHECK(weyl_dim_c2(0, 2) == 14);
    CHECK(weyl_dim_c2(0, 0) + weyl_dim_c2(2, 0) + weyl_dim_c2(0, 2) == 25);
    CHECK(weyl_dim_c2(0, 1) == 5);
    CHECK(weyl_dim_c2(1, 0) == 4);
  }

  TEST_CASE("agrees with Freudenthal multiplicities") {
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        CHECK(weyl_dim_c2(a, b) == oracle::c2_dimension_freudenthal(a, b));
        CHECK(weyl_dim_c2(a, b) > 0);
      }
  }
}
