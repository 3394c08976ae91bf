#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ascheme/classify.hpp"
#include "ascheme/corpus.hpp"
#include "ascheme/io.hpp"

using namespace ascheme;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

std::string fixture(const std::string& name) {
  return slurp(std::string(ASCHEME_FIXTURE_DIR) + "/" + name);
}

void require_value(const Cplx& got, double re, double im = 0.0) {
  REQUIRE(std::abs(got - Cplx(re, im)) < 1e-6);
}

}  // namespace

TEST_CASE("coset scheme fixture matches its construction byte for byte") {
  Scheme S = psl2_7_sylow2_coset_scheme();
  REQUIRE(serialize_scheme(S) == fixture("as21_19.scm"));
  Scheme parsed = parse_scheme(fixture("as21_19.scm"));
  REQUIRE(parsed.rel == S.rel);
  REQUIRE(parsed.rank == 6);
  REQUIRE(parsed.n == 21);
}

TEST_CASE("coset scheme structure") {
  Scheme S = parse_scheme(fixture("as21_19.scm"));
  REQUIRE(S.valency == std::vector<int>{1, 2, 2, 4, 4, 8});
  REQUIRE(S.star == std::vector<int>{0, 1, 2, 4, 3, 5});
  REQUIRE_FALSE(is_commutative(S));

  std::vector<ClosedSubset> subs = enumerate_closed_subsets(S);
  REQUIRE(subs.size() == 4);
  REQUIRE(subs[0].members == std::vector<int>{0});
  REQUIRE(subs[1].members == std::vector<int>{0, 1});
  REQUIRE(subs[2].members == std::vector<int>{0, 2});
  REQUIRE(subs[3].members == std::vector<int>{0, 1, 2, 3, 4, 5});
  for (const ClosedSubset& H : subs)
    REQUIRE(H.strongly_normal == (H.members.size() == 6));

  REQUIRE(thin_residue(S).n_H == 21);
  REQUIRE(derived_closed_subset(S).n_H == 21);
}

TEST_CASE("coset scheme character table and golden rendering") {
  Scheme S = parse_scheme(fixture("as21_19.scm"));
  CharacterTable tab = character_table(S);
  REQUIRE(tab.rows.size() == 3);

  const std::vector<std::vector<double>> want = {
      {1, 2, 2, 4, 4, 8},
      {1, -1, -1, 1, 1, -1},
      {2, 1, 1, -2, -2, 0},
  };
  const std::vector<double> mult = {1, 8, 6};
  for (int i = 0; i < 3; ++i) {
    REQUIRE(tab.rows[i].multiplicity == Catch::Approx(mult[i]).margin(1e-6));
    for (int s = 0; s < 6; ++s) require_value(tab.rows[i].values[s], want[i][s]);
  }

  std::string golden =
      slurp(std::string(ASCHEME_GOLDEN_DIR) + "/chartable_as21_19.txt");
  REQUIRE(format_character_table(tab) == golden);
}

TEST_CASE("coset scheme fusion is too coarse to be group-like") {
  Scheme S = parse_scheme(fixture("as21_19.scm"));
  CharacterTable tab = character_table(S);
  FusionPartition F = fusion_partition(S, tab);
  REQUIRE(F.classes == std::vector<std::vector<int>>{{0}, {1, 2}, {3, 4}, {5}});
  REQUIRE_FALSE(is_group_like(S, tab, F).group_like);
  REQUIRE(classify(S, tab).all_hold);
  // Too few characters for the symmetric-derived structure test.
  REQUIRE_FALSE(verify_two_nonlinear_symmetric_derived(S, tab).applicable);
}

TEST_CASE("wreath extension of the coset scheme by two points") {
  Scheme A = parse_scheme(fixture("as21_19.scm"));
  Scheme B = parse_scheme(fixture("trivial2.scm"));
  REQUIRE(B.rel == trivial_scheme(2).rel);
  Scheme W = wreath_product(A, B);
  REQUIRE(W.n == 42);
  REQUIRE(W.rank == 7);

  CharacterTable tab = character_table(W);
  REQUIRE(tab.rows.size() == 4);
  const std::vector<std::vector<double>> want = {
      {1, 2, 2, 4, 4, 8, 21},
      {1, 2, 2, 4, 4, 8, -21},
      {1, -1, -1, 1, 1, -1, 0},
      {2, 1, 1, -2, -2, 0, 0},
  };
  const std::vector<double> mult = {1, 1, 16, 12};
  for (int i = 0; i < 4; ++i) {
    REQUIRE(tab.rows[i].multiplicity == Catch::Approx(mult[i]).margin(1e-6));
    for (int s = 0; s < 7; ++s) require_value(tab.rows[i].values[s], want[i][s]);
  }

  CharacterTable built =
      wreath_character_table(A, character_table(A), B, character_table(B));
  REQUIRE(built.rows.size() == tab.rows.size());
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    REQUIRE(built.rows[i].multiplicity ==
            Catch::Approx(tab.rows[i].multiplicity).margin(1e-6));
    for (int s = 0; s < 7; ++s)
      REQUIRE(std::abs(built.rows[i].values[s] - tab.rows[i].values[s]) < 1e-6);
  }

  ClosedSubset Sp = derived_closed_subset(W);
  REQUIRE(Sp.members == std::vector<int>{0, 1, 2, 3, 4, 5});
  REQUIRE_FALSE(is_symmetric_set(W, Sp.members));
  REQUIRE_FALSE(verify_two_nonlinear_symmetric_derived(W, tab).applicable);
  REQUIRE_FALSE(is_group_like(W, tab).group_like);
  REQUIRE(classify(W, tab).all_hold);
}

TEST_CASE("group fixtures round-trip and coset-shape verdicts") {
  struct Row {
    const char* file;
    GroupSpec group;
    bool predicate;
  };
  const std::vector<Row> rows = {
      {"s3.grp", dihedral_group(3), true},
      {"d4.grp", dihedral_group(4), true},
      {"q8.grp", dicyclic_group(2), true},
      {"c4.grp", cyclic_group(4), false},
  };
  for (const Row& row : rows) {
    INFO(row.file);
    std::string text = fixture(row.file);
    REQUIRE(serialize_group(row.group) == text);
    GroupSpec G = parse_group(text);
    REQUIRE(G.mul == row.group.mul);
    ConCosResult cc = concos_check(G);
    REQUIRE(cc.predicate == row.predicate);
    REQUIRE(cc.consistent);
  }
}
