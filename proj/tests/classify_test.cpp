#include <catch2/catch_amalgamated.hpp>

#include "ascheme/classify.hpp"
#include "ascheme/constructions.hpp"
#include "ascheme/group.hpp"

using namespace ascheme;

namespace {

Scheme wreath4() {
  return validate_scheme({{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}});
}

int nonlinear(const Scheme& S) {
  return character_census(character_table(S)).nonlinear;
}

}  // namespace

TEST_CASE("one nonlinear character, commutative test") {
  for (int n : {3, 5, 6}) {
    Scheme S = trivial_scheme(n);
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_one_nonlinear_commutative(S, tab);
    CAPTURE(n, v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(character_census(tab).nonlinear == 1);
  }

  // Two points: no nonlinear character and no two-element thin residue.
  {
    Scheme S = trivial_scheme(2);
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_one_nonlinear_commutative(S, tab);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(character_census(tab).nonlinear == 0);
  }

  {
    Scheme S = wreath4();
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_one_nonlinear_commutative(S, tab);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(character_census(tab).nonlinear == 1);
    REQUIRE(thin_residue(S).members.size() == 2);
  }

  // Census two on both sides of the equivalence.
  {
    Scheme S = wreath_product(thin_scheme(cyclic_group(3)), trivial_scheme(2));
    CharacterTable tab = character_table(S);
    REQUIRE(character_census(tab).nonlinear == 2);
    VerifierResult v = verify_one_nonlinear_commutative(S, tab);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
  }
  {
    Scheme S = group_scheme(dihedral_group(5));
    CharacterTable tab = character_table(S);
    REQUIRE(character_census(tab).nonlinear == 2);
    VerifierResult v = verify_one_nonlinear_commutative(S, tab);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
  }
}

TEST_CASE("one nonlinear character, general test") {
  struct Case {
    Scheme S;
    int expected_nonlinear;
  };
  std::vector<Case> cases;
  cases.push_back({thin_scheme(dihedral_group(3)), 1});
  cases.push_back({thin_scheme(dihedral_group(4)), 1});
  cases.push_back({thin_scheme(alternating4()), 1});
  cases.push_back({thin_scheme(cyclic_group(4)), 0});
  cases.push_back({wreath4(), 1});
  cases.push_back({group_scheme(dihedral_group(5)), 2});
  for (auto& c : cases) {
    CharacterTable tab = character_table(c.S);
    REQUIRE(character_census(tab).nonlinear == c.expected_nonlinear);
    VerifierResult v = verify_one_nonlinear_general(c.S, tab);
    CAPTURE(v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
  }
}

TEST_CASE("two nonlinear characters, commutative test") {
  // Thin residue of three relations, wreath extension.
  {
    Scheme S = wreath_product(thin_scheme(cyclic_group(3)), trivial_scheme(2));
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_two_nonlinear_commutative(S, tab);
    CAPTURE(v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(character_census(tab).nonlinear == 2);
    REQUIRE(thin_residue(S).members.size() == 3);
    REQUIRE(v.detail.find("wreath-over-O") != std::string::npos);
  }
  {
    Scheme S = group_scheme(dihedral_group(5));
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_two_nonlinear_commutative(S, tab);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(thin_residue(S).members.size() == 3);
  }

  // Two-element thin residue with a vanishing four-relation subset.
  {
    Scheme S = group_scheme(direct_product(dihedral_group(4), cyclic_group(2)));
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_two_nonlinear_commutative(S, tab);
    CAPTURE(v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(character_census(tab).nonlinear == 2);
    REQUIRE(thin_residue(S).members.size() == 2);
    REQUIRE(v.detail.find("vanishing") != std::string::npos);
  }
  {
    Scheme S = group_scheme(semidirect_cyclic(8, 2, 5));
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_two_nonlinear_commutative(S, tab);
    CAPTURE(v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(character_census(tab).nonlinear == 2);
    REQUIRE(v.detail.find("vanishing") != std::string::npos);
  }

  // Census zero and one keep the equivalence with a false structure side.
  {
    Scheme S = thin_scheme(cyclic_group(8));
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_two_nonlinear_commutative(S, tab);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
  }
  {
    Scheme S = group_scheme(dihedral_group(4));
    CharacterTable tab = character_table(S);
    REQUIRE(character_census(tab).nonlinear == 1);
    VerifierResult v = verify_two_nonlinear_commutative(S, tab);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
  }

  // Fewer than four relations fall outside the hypothesis.
  {
    Scheme S = wreath4();
    VerifierResult v = verify_two_nonlinear_commutative(S, character_table(S));
    REQUIRE_FALSE(v.applicable);
  }
}

TEST_CASE("two nonlinear characters, symmetric derived subset test") {
  // Modular group of order 16: both nonlinear characters vanish off the
  // four central elements.
  {
    Scheme S = thin_scheme(semidirect_cyclic(8, 2, 5));
    CharacterTable tab = character_table(S);
    REQUIRE(tab.rows.size() == 10);
    REQUIRE(character_census(tab).nonlinear == 2);
    ClosedSubset Sp = derived_closed_subset(S);
    REQUIRE(Sp.members == std::vector<int>{0, 4});
    REQUIRE(is_symmetric_set(S, Sp.members));
    VerifierResult v = verify_two_nonlinear_symmetric_derived(S, tab);
    CAPTURE(v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
  }

  // Wreath extension over a three-relation derived subset.
  {
    Scheme S = wreath_product(wreath4(), trivial_scheme(2));
    CharacterTable tab = character_table(S);
    REQUIRE(character_census(tab).nonlinear == 2);
    VerifierResult v = verify_two_nonlinear_symmetric_derived(S, tab);
    CAPTURE(v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(v.detail.find("|image(S')|=3") != std::string::npos);
  }

  // Censuses other than two keep the equivalence.
  for (auto* make : {+[] { return thin_scheme(dihedral_group(4)); },
                     +[] { return thin_scheme(dicyclic_group(2)); },
                     +[] { return thin_scheme(cyclic_group(16)); }}) {
    Scheme S = make();
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_two_nonlinear_symmetric_derived(S, tab);
    CAPTURE(v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
    REQUIRE(character_census(tab).nonlinear != 2);
  }

  // Non-symmetric derived subset is outside the hypothesis.
  {
    Scheme S = thin_scheme(dihedral_group(3));
    VerifierResult v = verify_two_nonlinear_symmetric_derived(S, character_table(S));
    REQUIRE_FALSE(v.applicable);
  }
}

TEST_CASE("prime index restriction dichotomy") {
  for (auto* make : {+[] { return thin_scheme(dihedral_group(3)); },
                     +[] { return thin_scheme(alternating4()); },
                     +[] { return thin_scheme(dihedral_group(4)); },
                     +[] { return thin_scheme(cyclic_group(6)); },
                     +[] { return group_scheme(dihedral_group(5)); },
                     +[] { return wreath4(); }}) {
    Scheme S = make();
    CharacterTable tab = character_table(S);
    VerifierResult v = verify_clifford_prime_index(S, tab);
    CAPTURE(S.n, S.rank, v.detail);
    REQUIRE(v.applicable);
    REQUIRE(v.holds);
  }

  // No proper strongly normal subset of prime index.
  for (auto* make : {+[] { return one_point_scheme(); },
                     +[] { return trivial_scheme(5); }}) {
    Scheme S = make();
    VerifierResult v = verify_clifford_prime_index(S, character_table(S));
    REQUIRE_FALSE(v.applicable);
    REQUIRE(v.holds);
  }
}

TEST_CASE("classifier aggregate") {
  {
    Scheme S = wreath4();
    Classification c = classify(S);
    REQUIRE(c.verifiers.size() == 5);
    REQUIRE(c.verifiers[0].id == "one_nonlinear_commutative");
    REQUIRE(c.verifiers[1].id == "one_nonlinear_general");
    REQUIRE(c.verifiers[2].id == "two_nonlinear_commutative");
    REQUIRE(c.verifiers[3].id == "two_nonlinear_symmetric_derived");
    REQUIRE(c.verifiers[4].id == "clifford_prime_index");
    REQUIRE(c.all_hold);
    REQUIRE(c.census.nonlinear == 1);
    REQUIRE(c.census.linear == 2);
    REQUIRE(c.likeness.group_like);
    REQUIRE(c.thin_residue_size == 2);
    REQUIRE(c.derived_size == 2);
  }
  {
    Classification c = classify(thin_scheme(semidirect_cyclic(8, 2, 5)));
    REQUIRE(c.all_hold);
    REQUIRE(c.census.nonlinear == 2);
    REQUIRE(c.verifiers[3].applicable);
  }
}

TEST_CASE("derived subgroup and coset shape versus one nonlinear character") {
  for (auto* make : {+[] { return dihedral_group(3); },
                     +[] { return dihedral_group(4); },
                     +[] { return dicyclic_group(2); },
                     +[] { return alternating4(); }}) {
    GroupSpec G = make();
    ConCosResult r = concos_check(G);
    CAPTURE(G.order);
    REQUIRE(r.predicate);
    REQUIRE(r.exactly_one_nonlinear);
    REQUIRE(r.consistent);
  }

  for (auto* make : {+[] { return cyclic_group(4); },
                     +[] { return cyclic_group(6); },
                     +[] { return direct_product(cyclic_group(2), cyclic_group(2)); }}) {
    GroupSpec G = make();
    ConCosResult r = concos_check(G);
    REQUIRE_FALSE(r.predicate);
    REQUIRE_FALSE(r.derived_two_classes);
    REQUIRE_FALSE(r.exactly_one_nonlinear);
    REQUIRE(r.consistent);
  }

  // Derived subgroup of three classes.
  {
    ConCosResult r = concos_check(dihedral_group(5));
    REQUIRE_FALSE(r.derived_two_classes);
    REQUIRE_FALSE(r.predicate);
    REQUIRE(r.consistent);
  }
  // Two classes in the derived subgroup but a coset that splits.
  {
    ConCosResult r = concos_check(dihedral_group(6));
    REQUIRE(r.derived_two_classes);
    REQUIRE_FALSE(r.cosets_single_classes);
    REQUIRE_FALSE(r.predicate);
    REQUIRE(r.consistent);
  }
  {
    ConCosResult r = concos_check(semidirect_cyclic(8, 2, 5));
    REQUIRE(r.derived_two_classes);
    REQUIRE_FALSE(r.cosets_single_classes);
    REQUIRE_FALSE(r.exactly_one_nonlinear);
    REQUIRE(r.consistent);
  }
}
