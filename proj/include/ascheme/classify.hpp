#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "ascheme/char_table.hpp"
#include "ascheme/constructions.hpp"
#include "ascheme/error.hpp"
#include "ascheme/group.hpp"
#include "ascheme/scheme.hpp"

namespace ascheme {

// Result of one verifier: an equivalence holds or fails on this scheme, or
// the verifier's hypotheses do not apply. census_side is the character
// count, structure_side the structural characterization; fired_case reports
// which alternative of a two-case characterization matched (0 = none).
struct VerifierResult {
  std::string id;
  bool applicable = false;
  bool holds = true;
  bool census_side = false;
  bool structure_side = false;
  int fired_case = 0;
  std::string detail;
};

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline int count_nonlinear(const CharacterTable& tab) {
  return character_census(tab).nonlinear;
}

inline bool vanishes_off(const Scheme& S, const CharacterRow& row,
                         const std::vector<char>& in) {
  for (int s = 0; s < S.rank; ++s)
    if (!in[s] && std::abs(row.values[s]) > kValueTol * S.n) return false;
  return true;
}

// Index of a closed subset inside a larger one, cross-checked against the
// quotient order of the subscheme.
inline int subset_index(const Scheme& S, const ClosedSubset& H,
                        const ClosedSubset& O) {
  check(H.n_H % O.n_H == 0, "valency sum of O does not divide that of H");
  int index = H.n_H / O.n_H;
  Scheme sub = subscheme(S, 0, H);
  std::vector<int> o_in_sub;
  for (std::size_t i = 0; i < H.members.size(); ++i)
    if (O.contains(H.members[i])) o_in_sub.push_back(int(i));
  check(int(o_in_sub.size()) == int(O.members.size()),
        "O is not contained in H");
  QuotientMap q = quotient_scheme(sub, as_closed_subset(sub, o_in_sub));
  check(q.quotient.n == index, "subset index disagrees with quotient order");
  return index;
}

}  // namespace detail

// Commutative schemes: exactly one nonlinear irreducible character iff the
// thin residue has two elements and the scheme is its wreath extension.
inline VerifierResult verify_one_nonlinear_commutative(const Scheme& S,
                                                       const CharacterTable& tab) {
  VerifierResult r;
  r.id = "one_nonlinear_commutative";
  r.applicable = is_commutative(S);
  if (!r.applicable) {
    r.detail = "scheme is not commutative";
    return r;
  }
  ClosedSubset O = thin_residue(S);
  r.census_side = detail::count_nonlinear(tab) == 1;
  r.structure_side = O.members.size() == 2 && recognize_wreath(S, O).is_wreath;
  if (r.structure_side) r.fired_case = 1;
  r.holds = r.census_side == r.structure_side;
  r.detail = "nonlinear=" + std::to_string(detail::count_nonlinear(tab)) +
             " |O(S)|=" + std::to_string(O.members.size()) +
             " wreath=" + (r.structure_side ? std::string("yes") : std::string("no"));
  return r;
}

// Any scheme: exactly one nonlinear irreducible character iff the scheme is
// group-like and its fusion has a two-element thin residue it is a wreath
// extension of.
inline VerifierResult verify_one_nonlinear_general(const Scheme& S,
                                                   const CharacterTable& tab) {
  VerifierResult r;
  r.id = "one_nonlinear_general";
  r.applicable = true;
  r.census_side = detail::count_nonlinear(tab) == 1;
  FusionPartition F = fusion_partition(S, tab);
  GroupLikeness gl = is_group_like(S, tab, F);
  std::string extra;
  if (gl.group_like) {
    FusionResult fr = fuse(S, tab);
    ClosedSubset O = thin_residue(fr.fused);
    r.structure_side =
        O.members.size() == 2 && recognize_wreath(fr.fused, O).is_wreath;
    extra = " |O(fused)|=" + std::to_string(O.members.size());
  }
  if (r.structure_side) r.fired_case = 1;
  r.holds = r.census_side == r.structure_side;
  r.detail = "nonlinear=" + std::to_string(detail::count_nonlinear(tab)) +
             " group_like=" + (gl.group_like ? "yes" : "no") + extra;
  return r;
}

// Commutative schemes with more than three relations: exactly two nonlinear
// characters iff either the thin residue has three elements and the scheme
// is its wreath extension, or it has two and some strongly normal four-
// element subset H of index two over it absorbs every nonlinear character.
inline VerifierResult verify_two_nonlinear_commutative(
    const Scheme& S, const CharacterTable& tab,
    const std::vector<ClosedSubset>* subsets = nullptr) {
  VerifierResult r;
  r.id = "two_nonlinear_commutative";
  r.applicable = is_commutative(S) && S.rank > 3;
  if (!r.applicable) {
    r.detail = "needs a commutative scheme with more than 3 relations";
    return r;
  }
  r.census_side = detail::count_nonlinear(tab) == 2;
  ClosedSubset O = thin_residue(S);
  bool case_i = O.members.size() == 3 && recognize_wreath(S, O).is_wreath;
  bool case_ii = false;
  std::string which;
  if (O.members.size() == 2) {
    std::vector<ClosedSubset> local;
    if (!subsets) {
      local = enumerate_closed_subsets(S);
      subsets = &local;
    }
    for (const ClosedSubset& H : *subsets) {
      if (!H.strongly_normal || H.members.size() != 4) continue;
      if (!std::includes(H.members.begin(), H.members.end(), O.members.begin(),
                         O.members.end()))
        continue;
      if (detail::subset_index(S, H, O) != 2) continue;
      auto in = detail::member_map(H.members, S.rank);
      bool vanish = true;
      for (const auto& row : tab.rows)
        if (row.multiplicity > 1.5 && !detail::vanishes_off(S, row, in)) {
          vanish = false;
          break;
        }
      if (vanish) {
        case_ii = true;
        which = " H={";
        for (int m : H.members) which += std::to_string(m) + ",";
        which.back() = '}';
        break;
      }
    }
  }
  r.structure_side = case_i || case_ii;
  r.fired_case = case_i ? 1 : case_ii ? 2 : 0;
  r.holds = r.census_side == r.structure_side;
  r.detail = "nonlinear=" + std::to_string(detail::count_nonlinear(tab)) +
             " |O(S)|=" + std::to_string(O.members.size()) +
             (case_i ? " wreath-over-O" : "") + (case_ii ? " vanishing" + which : "");
  return r;
}

// Schemes with more than three irreducible characters and a symmetric
// derived closed subset: exactly two nonlinear characters iff the scheme is
// group-like and its fusion either is a wreath extension of the three-
// element image of the derived subset, or that image has two elements and
// some strongly normal H of index two over the derived subset, fusing to
// four elements, absorbs both nonlinear characters.
inline VerifierResult verify_two_nonlinear_symmetric_derived(
    const Scheme& S, const CharacterTable& tab,
    const std::vector<ClosedSubset>* subsets = nullptr) {
  VerifierResult r;
  r.id = "two_nonlinear_symmetric_derived";
  ClosedSubset Sp = derived_closed_subset(S);
  r.applicable = int(tab.rows.size()) > 3 && is_symmetric_set(S, Sp.members);
  if (!r.applicable) {
    r.detail = "needs more than 3 characters and a symmetric derived subset";
    return r;
  }
  r.census_side = detail::count_nonlinear(tab) == 2;
  FusionPartition F = fusion_partition(S, tab);
  GroupLikeness gl = is_group_like(S, tab, F);
  std::string extra = std::string(" group_like=") + (gl.group_like ? "yes" : "no");
  if (gl.group_like) {
    FusionResult fr = fuse(S, tab);
    // The derived subset is a union of fusion classes; take its image.
    std::vector<int> image;
    for (std::size_t c = 0; c < fr.partition.classes.size(); ++c) {
      bool inside = Sp.contains(fr.partition.classes[c][0]);
      for (int s : fr.partition.classes[c])
        detail::check(Sp.contains(s) == inside,
                      "derived subset is not a union of fusion classes");
      if (inside) image.push_back(int(c));
    }
    ClosedSubset SpF = as_closed_subset(fr.fused, image);
    extra += " |image(S')|=" + std::to_string(image.size());
    bool case_i =
        image.size() == 3 && recognize_wreath(fr.fused, SpF).is_wreath;
    bool case_ii = false;
    if (image.size() == 2) {
      std::vector<ClosedSubset> local;
      if (!subsets) {
        local = enumerate_closed_subsets(S);
        subsets = &local;
      }
      for (const ClosedSubset& H : *subsets) {
        if (!H.strongly_normal) continue;
        if (!std::includes(H.members.begin(), H.members.end(),
                           Sp.members.begin(), Sp.members.end()))
          continue;
        if (H.n_H != 2 * Sp.n_H) continue;
        // H must fuse to four elements.
        std::set<int> fused_classes;
        bool union_of_classes = true;
        for (int s : H.members) fused_classes.insert(fr.partition.class_of[s]);
        for (int c : fused_classes)
          for (int s : fr.partition.classes[c])
            if (!H.contains(s)) union_of_classes = false;
        if (!union_of_classes || fused_classes.size() != 4) continue;
        detail::check(detail::subset_index(S, H, Sp) == 2,
                      "index by valency disagrees with quotient order");
        auto in = detail::member_map(H.members, S.rank);
        bool vanish = true;
        for (const auto& row : tab.rows)
          if (row.multiplicity > 1.5 && !detail::vanishes_off(S, row, in)) {
            vanish = false;
            break;
          }
        if (vanish) {
          case_ii = true;
          break;
        }
      }
    }
    r.structure_side = case_i || case_ii;
    r.fired_case = case_i ? 1 : case_ii ? 2 : 0;
  }
  r.holds = r.census_side == r.structure_side;
  r.detail = "nonlinear=" + std::to_string(detail::count_nonlinear(tab)) + extra;
  return r;
}

// For every strongly normal subset T of prime index p, each irreducible
// character either restricts irreducibly to T and its p twists by the linear
// quotient characters are pairwise distinct, or it vanishes off T and
// restricts to a sum of at most p distinct irreducibles, each once. Exactly
// one of the two cases must hold per character.
inline VerifierResult verify_clifford_prime_index(
    const Scheme& S, const CharacterTable& tab,
    const std::vector<ClosedSubset>* subsets = nullptr) {
  VerifierResult r;
  r.id = "clifford_prime_index";
  std::vector<ClosedSubset> local;
  if (!subsets) {
    local = enumerate_closed_subsets(S);
    subsets = &local;
  }
  int pairs = 0;
  for (const ClosedSubset& T : *subsets) {
    if (!T.strongly_normal || T.n_H == S.n) continue;
    if (S.n % T.n_H != 0) {
      r.holds = false;
      r.detail = "subset valency sum does not divide the order";
      return r;
    }
    int p = S.n / T.n_H;
    if (!detail::is_prime(p)) continue;
    ++pairs;
    QuotientMap Q = quotient_scheme(S, T);
    CharacterTable qtab = character_table(Q.quotient);
    detail::check(int(qtab.rows.size()) == p, "prime quotient has p characters");
    auto in = detail::member_map(T.members, S.rank);

    for (std::size_t i = 0; i < tab.rows.size(); ++i) {
      RestrictionDecomposition dec = restrict_and_decompose(S, T, tab.rows[i]);
      int support = 0, total = 0, maxc = 0;
      for (int c : dec.coefficients) {
        if (c > 0) ++support;
        total += c;
        maxc = std::max(maxc, c);
      }
      // Equal coefficients on the support (Clifford shape).
      for (int c : dec.coefficients)
        if (c != 0 && c != maxc) {
          r.holds = false;
          r.detail = "restriction has unequal nonzero coefficients at row " +
                     std::to_string(i);
          return r;
        }

      bool case1 = false;
      if (support == 1 && total == 1) {
        std::set<int> products;
        for (int j = 0; j < p; ++j)
          products.insert(char_product(S, tab, int(i), Q, qtab.rows[j]));
        case1 = int(products.size()) == p;
      }
      bool vanish = detail::vanishes_off(S, tab.rows[i], in);
      bool case2 = vanish && maxc <= 1 && support >= 1 && support <= p;
      if (case1 == case2) {
        r.holds = false;
        r.detail = "row " + std::to_string(i) + " fits " +
                   (case1 ? "both cases" : "neither case") + " over a subset of index " +
                   std::to_string(p);
        return r;
      }
    }
  }
  r.applicable = pairs > 0;
  r.detail = std::to_string(pairs) + " prime-index strongly normal subsets checked";
  return r;
}

struct Classification {
  CharacterCensus census;
  GroupLikeness likeness;
  int thin_residue_size = 0;
  int derived_size = 0;
  std::vector<VerifierResult> verifiers;
  bool all_hold = true;
};

inline Classification classify(const Scheme& S, const CharacterTable& tab) {
  Classification c;
  c.census = character_census(tab);
  c.likeness = is_group_like(S, tab);
  c.thin_residue_size = int(thin_residue(S).members.size());
  c.derived_size = int(derived_closed_subset(S).members.size());
  c.verifiers = {
      verify_one_nonlinear_commutative(S, tab),
      verify_one_nonlinear_general(S, tab),
      verify_two_nonlinear_commutative(S, tab),
      verify_two_nonlinear_symmetric_derived(S, tab),
      verify_clifford_prime_index(S, tab),
  };
  for (const auto& v : c.verifiers) c.all_hold = c.all_hold && v.holds;
  return c;
}

inline Classification classify(const Scheme& S) {
  return classify(S, character_table(S));
}

// Group test: exactly one nonlinear irreducible character iff the derived
// subgroup consists of exactly two conjugacy classes and every other coset
// of it is a single class.
struct ConCosResult {
  bool exactly_one_nonlinear = false;
  bool derived_two_classes = false;
  bool cosets_single_classes = false;
  bool predicate = false;
  bool consistent = false;
};

inline ConCosResult concos_check(const GroupSpec& G) {
  validate_group(G);
  ConCosResult r;
  std::vector<int> D = derived_subgroup(G);
  std::vector<char> inD(G.order, 0);
  for (int g : D) inD[g] = 1;
  auto classes = conjugacy_classes(G);
  int classes_in_derived = 0;
  for (const auto& cls : classes) {
    bool inside = inD[cls[0]];
    for (int g : cls)
      detail::check(bool(inD[g]) == inside,
                    "derived subgroup is not a union of classes");
    if (inside) ++classes_in_derived;
  }
  r.derived_two_classes = classes_in_derived == 2;

  // Cosets gD for g outside D, as sorted sets.
  std::set<std::vector<int>> cosets;
  for (int g = 0; g < G.order; ++g) {
    if (inD[g]) continue;
    std::vector<int> coset;
    for (int d : D) coset.push_back(G.at(g, d));
    std::sort(coset.begin(), coset.end());
    cosets.insert(std::move(coset));
  }
  r.cosets_single_classes = true;
  for (const auto& coset : cosets) {
    std::vector<int> cls;
    for (const auto& k : classes)
      if (std::binary_search(coset.begin(), coset.end(), k[0]) &&
          k.size() == coset.size())
        cls = k;
    if (cls != coset) {
      r.cosets_single_classes = false;
      break;
    }
  }
  r.predicate = r.derived_two_classes && r.cosets_single_classes;

  CharacterTable tab = character_table(group_scheme(G));
  r.exactly_one_nonlinear = character_census(tab).nonlinear == 1;
  r.consistent = r.predicate == r.exactly_one_nonlinear;
  return r;
}

}  // namespace ascheme
