#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "ascheme/char_table.hpp"
#include "ascheme/constructions.hpp"
#include "ascheme/group.hpp"
#include "ascheme/scheme.hpp"
#include "group_char_oracle.hpp"

using namespace ascheme;

namespace {

bool approx(Cplx a, Cplx b, double tol = 1e-6) { return std::abs(a - b) < tol; }

bool row_is(const CharacterRow& row, std::vector<Cplx> values, double degree,
            double mult) {
  if (row.degree != degree || row.multiplicity != mult) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!approx(row.values[i], values[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("trivial scheme character table") {
  for (int n : {2, 5, 8}) {
    CharacterTable t = character_table(trivial_scheme(n));
    REQUIRE(t.rows.size() == 2);
    CHECK(row_is(t.rows[0], {1.0, double(n - 1)}, 1, 1));
    CHECK(row_is(t.rows[1], {1.0, -1.0}, 1, n - 1));
  }
}

TEST_CASE("cyclic character tables carry roots of unity") {
  CharacterTable t3 = character_table(thin_scheme(cyclic_group(3)));
  REQUIRE(t3.rows.size() == 3);
  Cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
  CHECK(row_is(t3.rows[0], {1, 1, 1}, 1, 1));
  CHECK(row_is(t3.rows[1], {1.0, std::conj(w), w}, 1, 1));
  CHECK(row_is(t3.rows[2], {1.0, w, std::conj(w)}, 1, 1));

  CharacterTable t4 = character_table(thin_scheme(cyclic_group(4)));
  REQUIRE(t4.rows.size() == 4);
  Cplx i(0, 1);
  CHECK(row_is(t4.rows[0], {1, 1, 1, 1}, 1, 1));
  CHECK(row_is(t4.rows[1], {1, -1, 1, -1}, 1, 1));
  CHECK(row_is(t4.rows[2], {1.0, -i, -1.0, i}, 1, 1));
  CHECK(row_is(t4.rows[3], {1.0, i, -1.0, -i}, 1, 1));
}

TEST_CASE("two-block scheme table and census") {
  Scheme S = wreath_product(trivial_scheme(2), trivial_scheme(2));
  CharacterTable t = character_table(S);
  REQUIRE(t.rows.size() == 3);
  CHECK(row_is(t.rows[0], {1, 1, 2}, 1, 1));
  CHECK(row_is(t.rows[1], {1, 1, -2}, 1, 1));
  CHECK(row_is(t.rows[2], {1, -1, 0}, 1, 2));
  CharacterCensus c = character_census(t);
  CHECK(c.linear == 2);
  CHECK(c.nonlinear == 1);
}

TEST_CASE("thin scheme of a nonabelian group has matrix characters") {
  CharacterTable t = character_table(thin_scheme(dihedral_group(3)));
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].degree == 1);
  CHECK(t.rows[1].degree == 1);
  CHECK(t.rows[2].degree == 2);
  CHECK(t.rows[2].multiplicity == 2);
  // Degree-2 character of the regular representation: 2 on e, -1 on the
  // rotations, 0 on the reflections.
  CHECK(row_is(t.rows[2], {2, -1, -1, 0, 0, 0}, 2, 2));
  CharacterCensus c = character_census(t);
  CHECK(c.linear == 2);
  CHECK(c.nonlinear == 1);
}

TEST_CASE("group scheme tables match the oracle on small groups") {
  for (const auto& [name, G] : group_catalog(12)) {
    INFO(name);
    Scheme S = group_scheme(G);
    CharacterTable tab = character_table(S);
    auto classes = conjugacy_classes(G);
    auto chars = oracle::group_characters(G);
    REQUIRE(tab.rows.size() == chars.size());
    // Predicted scheme row for chi: value over class K is chi(K)|K|/chi(1),
    // multiplicity chi(1)^2.
    std::vector<char> used(chars.size(), 0);
    for (const auto& chi : chars) {
      std::vector<Cplx> want(classes.size());
      for (std::size_t k = 0; k < classes.size(); ++k)
        want[k] = chi.on_class[k] * double(classes[k].size()) / chi.degree;
      bool found = false;
      for (std::size_t i = 0; i < tab.rows.size() && !found; ++i) {
        if (used[i]) continue;
        bool same = tab.rows[i].multiplicity == chi.degree * chi.degree;
        for (std::size_t k = 0; k < want.size() && same; ++k)
          same = approx(tab.rows[i].values[k], want[k]);
        if (same) {
          used[i] = 1;
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("restriction to a closed subset decomposes integrally") {
  Scheme S = thin_scheme(dihedral_group(3));
  ClosedSubset H = as_closed_subset(S, {0, 1, 2});
  CharacterTable tab = character_table(S);
  // The degree-2 row restricted to the rotation subscheme (a C3) splits into
  // the two nontrivial linear characters.
  RestrictionDecomposition dec = restrict_and_decompose(S, H, tab.rows[2]);
  REQUIRE(dec.sub_table.rows.size() == 3);
  CHECK(dec.coefficients == std::vector<int>{0, 1, 1});
  // The principal row restricts to the subscheme principal.
  RestrictionDecomposition dp = restrict_and_decompose(S, H, tab.rows[0]);
  CHECK(dp.coefficients == std::vector<int>{1, 0, 0});
}

TEST_CASE("character product with a linear quotient character") {
  Scheme S = thin_scheme(cyclic_group(4));
  CharacterTable tab = character_table(S);
  ClosedSubset T = as_closed_subset(S, {0, 2});
  REQUIRE(T.strongly_normal);
  QuotientMap Q = quotient_scheme(S, T);
  CharacterTable qt = character_table(Q.quotient);
  // Nontrivial quotient character has values (1, -1).
  REQUIRE(qt.rows.size() == 2);
  const CharacterRow& zeta = qt.rows[1];
  // Multiplying the row (1,-i,-1,i) by zeta gives (1,i,-1,-i).
  int idx = char_product(S, tab, 2, Q, zeta);
  CHECK(idx == 3);
  // Multiplying the principal row gives the order-2 linear row.
  int idx0 = char_product(S, tab, 0, Q, zeta);
  CHECK(row_is(tab.rows[idx0], {1, -1, 1, -1}, 1, 1));
  CharacterRow fake = zeta;
  fake.multiplicity = 2;
  CHECK_THROWS_AS(char_product(S, tab, 0, Q, fake), NotARow);
}

TEST_CASE("fusion of a thin scheme gives the group scheme") {
  GroupSpec G = dihedral_group(3);
  Scheme T = thin_scheme(G);
  CharacterTable tab = character_table(T);
  FusionPartition F = fusion_partition(T, tab);
  REQUIRE(F.classes.size() == 3);
  CHECK(F.classes[0] == std::vector<int>{0});
  CHECK(F.classes[1] == std::vector<int>{1, 2});
  CHECK(F.classes[2] == std::vector<int>{3, 4, 5});
  GroupLikeness gl = is_group_like(T, tab, F);
  CHECK(gl.group_like);
  CHECK(gl.center_dim == 3);
  FusionResult fr = fuse(T, tab);
  CHECK(fr.fused.rel == group_scheme(G).rel);
}

TEST_CASE("fused table corresponds to the unfused table") {
  GroupSpec G = dicyclic_group(2);
  Scheme T = thin_scheme(G);
  CharacterTable tab = character_table(T);
  FusionResult fr = fuse(T, tab);
  CharacterTable ft = character_table(fr.fused);
  REQUIRE(ft.rows.size() == tab.rows.size());
  // Each unfused row chi corresponds to a fused row with values
  // sum_{s in class} chi(sigma_s)/chi(1) and multiplicity chi(1) m_chi.
  for (const auto& row : tab.rows) {
    std::vector<Cplx> want(fr.partition.classes.size());
    for (std::size_t c = 0; c < fr.partition.classes.size(); ++c) {
      Cplx sum = 0;
      for (int s : fr.partition.classes[c]) sum += row.values[s];
      want[c] = sum / row.degree;
    }
    int idx = find_row(ft, want);
    CHECK(ft.rows[idx].multiplicity == row.degree * row.multiplicity);
    CHECK(ft.rows[idx].degree == 1);
  }
}

TEST_CASE("census counts multiplicity-one rows as linear") {
  // Group scheme of D4: five classes, degrees 1,1,1,1,2 so multiplicities
  // 1,1,1,1,4: four linear rows, one nonlinear.
  CharacterTable t = character_table(group_scheme(dihedral_group(4)));
  CharacterCensus c = character_census(t);
  CHECK(c.linear == 4);
  CHECK(c.nonlinear == 1);
  // Abelian group scheme: everything linear.
  CharacterTable ta = character_table(group_scheme(cyclic_group(8)));
  CharacterCensus ca = character_census(ta);
  CHECK(ca.linear == 8);
  CHECK(ca.nonlinear == 0);
}

TEST_CASE("linear row count equals the index of the derived closed subset") {
  for (const GroupSpec& G :
       {dihedral_group(3), dihedral_group(4), dicyclic_group(2), alternating4(),
        cyclic_group(6)}) {
    for (Scheme S : {thin_scheme(G), group_scheme(G)}) {
      CharacterTable tab = character_table(S);
      ClosedSubset Sp = derived_closed_subset(S);
      CHECK(character_census(tab).linear == S.n / Sp.n_H);
    }
  }
}
