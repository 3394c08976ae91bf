#pragma once

#include <algorithm>
#include <array>
#include <iterator>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ascheme/classify.hpp"
#include "ascheme/constructions.hpp"

namespace ascheme {

namespace detail {

// Representatives of PSL(2,7): determinant-one matrices over F_7 up to sign,
// each stored as the lexicographically smaller of {M, -M}.
inline std::array<int, 4> psl7_canonical(std::array<int, 4> u) {
  std::array<int, 4> v{(7 - u[0]) % 7, (7 - u[1]) % 7, (7 - u[2]) % 7,
                       (7 - u[3]) % 7};
  return std::min(u, v);
}

inline std::vector<int> generated_subgroup(const GroupSpec& G,
                                           const std::vector<int>& gens) {
  std::vector<char> in(G.order, 0);
  std::vector<int> work;
  auto add = [&](int g) {
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  };
  add(0);
  for (int g : gens) add(g);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j)
      add(G.at(work[i], work[j]));
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace detail

// The simple group of order 168 as canonical matrix representatives, sorted
// lexicographically with the identity moved to element 0.
inline GroupSpec psl2_7_group() {
  std::vector<std::array<int, 4>> el;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d)
          if (((a * d - b * c) % 7 + 7) % 7 == 1)
            el.push_back(detail::psl7_canonical({a, b, c, d}));
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  detail::check(el.size() == 168, "PSL(2,7) must have 168 elements");
  auto it = std::find(el.begin(), el.end(), std::array<int, 4>{1, 0, 0, 1});
  detail::check(it != el.end(), "identity representative missing");
  std::swap(el[0], *it);

  auto key = [](const std::array<int, 4>& u) {
    return ((u[0] * 7 + u[1]) * 7 + u[2]) * 7 + u[3];
  };
  std::vector<int> lookup(7 * 7 * 7 * 7, -1);
  for (std::size_t i = 0; i < el.size(); ++i) lookup[key(el[i])] = int(i);

  GroupSpec G;
  G.order = 168;
  G.mul.resize(std::size_t(168) * 168);
  for (int x = 0; x < 168; ++x)
    for (int y = 0; y < 168; ++y) {
      const auto& u = el[x];
      const auto& v = el[y];
      std::array<int, 4> w{(u[0] * v[0] + u[1] * v[2]) % 7,
                           (u[0] * v[1] + u[1] * v[3]) % 7,
                           (u[2] * v[0] + u[3] * v[2]) % 7,
                           (u[2] * v[1] + u[3] * v[3]) % 7};
      int z = lookup[key(detail::psl7_canonical(w))];
      detail::check(z >= 0, "product left the element set");
      G.mul[std::size_t(x) * 168 + y] = z;
    }
  validate_group(G);
  return G;
}

// Rank-6 scheme on the 21 left cosets of a Sylow 2-subgroup of PSL(2,7).
// Deterministic construction: the Sylow subgroup is the first closure of
// {a, b} of size 8 with a of order 4 and b of order 2 outside <a>, scanning
// element ids upward; points are cosets ordered by least member; relations
// are double cosets H g H tagged by least member, relabeled with the
// diagonal first and the rest ascending by (valency, tag).
inline Scheme psl2_7_sylow2_coset_scheme() {
  GroupSpec G = psl2_7_group();
  const int n = G.order;
  std::vector<int> ord = element_orders(G);

  std::vector<int> H;
  for (int a = 1; a < n && H.empty(); ++a) {
    if (ord[a] != 4) continue;
    std::vector<int> cyc = detail::generated_subgroup(G, {a});
    for (int b = 1; b < n; ++b) {
      if (ord[b] != 2 || std::binary_search(cyc.begin(), cyc.end(), b)) continue;
      std::vector<int> sub = detail::generated_subgroup(G, {a, b});
      if (sub.size() == 8) {
        H = std::move(sub);
        break;
      }
    }
  }
  detail::check(H.size() == 8, "no Sylow 2-subgroup of order 8 found");

  std::vector<int> coset_of(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] != -1) continue;
    std::vector<int> c;
    for (int h : H) c.push_back(G.at(g, h));
    std::sort(c.begin(), c.end());
    for (int x : c) coset_of[x] = int(cosets.size());
    cosets.push_back(std::move(c));
  }
  const int m = int(cosets.size());
  detail::check(m == 21, "PSL(2,7) must have 21 Sylow 2-cosets");

  std::vector<int> inv(n);
  for (int g = 0; g < n; ++g) inv[g] = group_inverse(G, g);

  std::vector<int> tag(std::size_t(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int g = G.at(inv[cosets[x][0]], cosets[y][0]);
      int best = n;
      for (int h1 : H) {
        int u = G.at(h1, g);
        for (int h2 : H) best = std::min(best, G.at(u, h2));
      }
      tag[std::size_t(x) * m + y] = best;
    }

  int diag = tag[0];
  std::vector<std::pair<int, int>> off;  // (valency, tag) from row 0
  for (int t : std::vector<int>(tag.begin(), tag.begin() + m)) {
    if (t == diag) continue;
    bool seen = false;
    for (auto& p : off) seen = seen || p.second == t;
    if (seen) continue;
    int v = int(std::count(tag.begin(), tag.begin() + m, t));
    off.emplace_back(v, t);
  }
  std::sort(off.begin(), off.end());
  std::vector<int> label(n, -1);
  label[diag] = 0;
  for (std::size_t i = 0; i < off.size(); ++i) label[off[i].second] = int(i) + 1;

  std::vector<int> mat(std::size_t(m) * m);
  for (std::size_t i = 0; i < mat.size(); ++i) {
    detail::check(label[tag[i]] != -1, "relation tag missing from the first row");
    mat[i] = label[tag[i]];
  }
  return validate_scheme(mat, m);
}

struct CorpusOptions {
  int max_group_order = 16;
  int max_wreath_order = 60;
};

struct CorpusEntry {
  std::string id;
  Scheme scheme;
};

// All base schemes plus every ordered wreath product of two bases of order
// at least 2 whose order stays within max_wreath_order; sorted by id.
inline std::vector<CorpusEntry> build_corpus(const CorpusOptions& opt = {}) {
  std::vector<CorpusEntry> base;
  base.push_back({"point1", one_point_scheme()});
  for (int k = 2; k <= 8; ++k)
    base.push_back({"trivial" + std::to_string(k), trivial_scheme(k)});
  for (const NamedGroup& g : group_catalog(opt.max_group_order)) {
    base.push_back({"gs:" + g.name, group_scheme(g.group)});
    if (!is_abelian(g.group))
      base.push_back({"thin:" + g.name, thin_scheme(g.group)});
  }
  Scheme as21 = psl2_7_sylow2_coset_scheme();
  base.push_back({"wr42", wreath_product(as21, trivial_scheme(2))});
  base.push_back({"as21", std::move(as21)});

  std::vector<CorpusEntry> out = base;
  for (const CorpusEntry& A : base)
    for (const CorpusEntry& B : base) {
      if (A.scheme.n < 2 || B.scheme.n < 2) continue;
      if (A.scheme.n * B.scheme.n > opt.max_wreath_order) continue;
      out.push_back({"wr(" + A.id + "," + B.id + ")",
                     wreath_product(A.scheme, B.scheme)});
    }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

struct CheckReport {
  std::string id;
  bool ok = true;
  std::string failure;
};

struct SchemeCheckStats {
  int verifier_checks = 0;  // applicable verifier runs
  int wreath_laws = 0;      // recognized decompositions checked for the valency law
};

// The per-scheme battery: regularity of intersection numbers, character
// table column sums, linear character count, thin residue minimality, the
// wreath valency law, and the five classification verifiers.
inline CheckReport check_scheme_properties(const std::string& id, const Scheme& S,
                                           SchemeCheckStats* stats = nullptr) {
  CheckReport r{id, true, ""};
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.failure = msg;
  };

  for (int g = 0; g < S.rank && r.ok; ++g)
    for (int h = 0; h < S.rank && r.ok; ++h) {
      long long sum = 0;
      for (int k = 0; k < S.rank; ++k)
        sum += (long long)S.lam(g, h, k) * S.valency[k];
      if (sum != (long long)S.valency[g] * S.valency[h])
        fail("valency identity fails at " + detail::pair_str(g, h));
    }
  if (!r.ok) return r;

  CharacterTable tab = character_table(S);
  for (int s = 1; s < S.rank && r.ok; ++s) {
    Cplx col = 0;
    for (const auto& row : tab.rows) col += row.multiplicity * row.values[s];
    if (std::abs(col) > kValueTol * S.n)
      fail("multiplicity-weighted column " + std::to_string(s) +
           " does not vanish");
  }
  if (r.ok) {
    double mass = 0, sq = 0;
    for (const auto& row : tab.rows) {
      mass += row.multiplicity * row.degree;
      sq += row.degree * row.degree;
    }
    if (std::abs(mass - S.n) > kValueTol * S.n)
      fail("multiplicity-weighted degrees do not sum to the order");
    else if (std::abs(sq - S.rank) > kValueTol * S.rank)
      fail("squared degrees do not sum to the rank");
  }
  if (!r.ok) return r;

  ClosedSubset Sp = derived_closed_subset(S);
  CharacterCensus census = character_census(tab);
  if (S.n % Sp.n_H != 0 || census.linear != S.n / Sp.n_H) {
    fail("linear character count " + std::to_string(census.linear) +
         " is not the index of the derived subset");
    return r;
  }

  if (S.rank > kEnumerationRankLimit) {
    fail("rank exceeds the subset enumeration limit");
    return r;
  }
  std::vector<ClosedSubset> subs = enumerate_closed_subsets(S);

  ClosedSubset O = thin_residue(S);
  if (!O.strongly_normal) {
    fail("thin residue is not strongly normal");
    return r;
  }
  std::vector<int> meet;  // intersection of all strongly normal subsets
  bool first = true;
  for (const ClosedSubset& T : subs) {
    if (!T.strongly_normal) continue;
    if (!std::includes(T.members.begin(), T.members.end(), O.members.begin(),
                       O.members.end())) {
      fail("a strongly normal subset misses the thin residue");
      return r;
    }
    if (first) {
      meet = T.members;
      first = false;
    } else {
      std::vector<int> next;
      std::set_intersection(meet.begin(), meet.end(), T.members.begin(),
                            T.members.end(), std::back_inserter(next));
      meet = std::move(next);
    }
  }
  if (meet != O.members) {
    fail("thin residue is not the meet of the strongly normal subsets");
    return r;
  }

  for (const ClosedSubset& T : subs) {
    WreathRecognition rec = recognize_wreath(S, T);
    if (!rec.is_wreath || T.n_H == S.n || T.members.size() == 1) continue;
    QuotientMap Q = quotient_scheme(S, T);
    for (int s = 0; s < S.rank; ++s) {
      if (T.contains(s)) continue;
      if (S.valency[s] != T.n_H * Q.quotient.valency[Q.rel_map[s]]) {
        fail("wreath valency law fails for relation " + std::to_string(s) +
             " over the subset of valency " + std::to_string(T.n_H));
        return r;
      }
    }
    if (stats) ++stats->wreath_laws;
  }

  std::vector<VerifierResult> vs = {
      verify_one_nonlinear_commutative(S, tab),
      verify_one_nonlinear_general(S, tab),
      verify_two_nonlinear_commutative(S, tab, &subs),
      verify_two_nonlinear_symmetric_derived(S, tab, &subs),
      verify_clifford_prime_index(S, tab, &subs),
  };
  for (const VerifierResult& v : vs) {
    if (stats && v.applicable) ++stats->verifier_checks;
    if (!v.holds) {
      fail("verifier " + v.id + " failed: " + v.detail);
      return r;
    }
  }

  GroupLikeness gl = is_group_like(S, tab);
  if (gl.group_like) {
    FusionResult fr = fuse(S, tab);
    CharacterTable ftab = character_table(fr.fused);
    if (fr.fused.rank != int(tab.rows.size()))
      fail("fused scheme rank differs from the character count");
    else if (int(ftab.rows.size()) != fr.fused.rank)
      fail("fused scheme is not of full character rank");
  }
  return r;
}

// The per-group battery: the coset-shape test against the character census,
// and both directions of the two-nonlinear structure theorem on the group
// scheme, with the extra coset conclusions when the wreath case fires.
inline CheckReport check_group_properties(const NamedGroup& g) {
  CheckReport r{"group:" + g.name, true, ""};
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.failure = msg;
  };

  ConCosResult cc = concos_check(g.group);
  if (!cc.consistent) {
    fail("coset-shape predicate disagrees with the census");
    return r;
  }

  Scheme GS = group_scheme(g.group);
  CharacterTable tab = character_table(GS);
  bool two = character_census(tab).nonlinear == 2;
  VerifierResult v = verify_two_nonlinear_commutative(GS, tab);
  if (two != (v.applicable && v.structure_side)) {
    fail("two-nonlinear census disagrees with the structure test");
    return r;
  }
  if (v.applicable && v.fired_case == 1) {
    std::vector<int> D = derived_subgroup(g.group);
    std::vector<char> inD(g.group.order, 0);
    for (int x : D) inD[x] = 1;
    auto classes = conjugacy_classes(g.group);
    int inside = 0;
    for (const auto& cls : classes)
      if (inD[cls[0]]) ++inside;
    if (inside != 3) {
      fail("wreath case fired but the derived subgroup is not 3 classes");
      return r;
    }
    for (const auto& cls : classes) {
      if (inD[cls[0]]) continue;
      std::vector<int> coset;
      for (int d : D) coset.push_back(g.group.at(cls[0], d));
      std::sort(coset.begin(), coset.end());
      if (coset != cls) {
        fail("wreath case fired but a derived coset splits into classes");
        return r;
      }
    }
  }
  return r;
}

struct CorpusSummary {
  int schemes = 0;
  int groups = 0;
  int verifier_checks = 0;
  int wreath_laws = 0;
  std::vector<CheckReport> failures;

  bool ok() const { return failures.empty(); }
};

inline CorpusSummary run_corpus(const CorpusOptions& opt = {},
                                std::ostream* log = nullptr) {
  CorpusSummary sum;
  SchemeCheckStats stats;
  for (const CorpusEntry& e : build_corpus(opt)) {
    ++sum.schemes;
    CheckReport r;
    try {
      r = check_scheme_properties(e.id, e.scheme, &stats);
    } catch (const Error& err) {
      r = {e.id, false, std::string("exception: ") + err.what()};
    }
    if (!r.ok) {
      sum.failures.push_back(r);
      if (log) *log << "FAIL " << r.id << ": " << r.failure << "\n";
    }
  }
  for (const NamedGroup& g : group_catalog(opt.max_group_order)) {
    ++sum.groups;
    CheckReport r;
    try {
      r = check_group_properties(g);
    } catch (const Error& err) {
      r = {"group:" + g.name, false, std::string("exception: ") + err.what()};
    }
    if (!r.ok) {
      sum.failures.push_back(r);
      if (log) *log << "FAIL " << r.id << ": " << r.failure << "\n";
    }
  }
  sum.verifier_checks = stats.verifier_checks;
  sum.wreath_laws = stats.wreath_laws;
  if (log)
    *log << "corpus: " << sum.schemes << " schemes, " << sum.groups
         << " groups, " << sum.verifier_checks << " verifier checks, "
         << sum.wreath_laws << " wreath valency laws, "
         << sum.failures.size() << " failures\n";
  return sum;
}

}  // namespace ascheme
