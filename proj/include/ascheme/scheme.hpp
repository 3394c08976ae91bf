#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ascheme/error.hpp"

namespace ascheme {

// Size guards. Validation is O(n^3) and the intersection tensor is rank^3;
// these caps keep both at desk scale.
inline constexpr int kMaxPoints = 512;
inline constexpr int kMaxRank = 128;
inline constexpr int kEnumerationRankLimit = 24;

// A finite association scheme: a partition of X x X into `rank` relations
// such that relation 0 is the diagonal, the transpose of every relation is a
// relation (star), and the number of g-h paths from x to y depends only on
// the relation of (x,y) (the intersection numbers lambda_{ghk}). Immutable
// after construction by validate_scheme.
struct Scheme {
  int n = 0;                 // |X|
  int rank = 0;              // |S|
  std::vector<int> rel;      // n*n row-major; rel[i*n+j] in [0, rank)
  std::vector<int> star;     // star[star[s]] == s, star[0] == 0
  std::vector<int> valency;  // valency[s] = n_s = lambda_{s,s*,0}
  std::vector<int> lambda;   // rank^3, index (g*rank + h)*rank + k
  // product[g*rank+h] = sorted {k : lambda_{ghk} != 0}, the complex product gh
  std::vector<std::vector<int>> product;

  int at(int i, int j) const { return rel[std::size_t(i) * n + j]; }
  int lam(int g, int h, int k) const {
    return lambda[(std::size_t(g) * rank + h) * rank + k];
  }
  const std::vector<int>& prod(int g, int h) const {
    return product[std::size_t(g) * rank + h];
  }
  bool thin() const {
    return std::all_of(valency.begin(), valency.end(),
                       [](int v) { return v == 1; });
  }
};

// A subset of relations closed under the complex product, with its valency
// sum and structural flags.
struct ClosedSubset {
  std::vector<int> members;  // sorted, always contains 0
  int n_H = 0;               // sum of member valencies
  bool strongly_normal = false;
  bool thin = false;  // all member valencies 1

  bool contains(int s) const {
    return std::binary_search(members.begin(), members.end(), s);
  }
  std::size_t size() const { return members.size(); }
};

namespace detail {

inline std::string pair_str(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

inline std::vector<char> member_map(const std::vector<int>& members, int rank) {
  std::vector<char> in(rank, 0);
  for (int s : members) {
    if (s < 0 || s >= rank) throw Error("relation index out of range: " + std::to_string(s));
    in[s] = 1;
  }
  return in;
}

}  // namespace detail

// Checks every axiom on a relation-index matrix and returns the Scheme with
// star, valencies and the full intersection tensor. The tensor check runs in
// O(n^3) total: for each (g,h) only the pairs reachable by a g-h path are
// touched, and untouched pairs are accounted for by comparing per-relation
// touch counts with the relation's total pair count.
inline Scheme validate_scheme(const std::vector<int>& mat, int n) {
  if (n <= 0) throw NotAPartition("empty point set");
  if (n > kMaxPoints)
    throw RankTooLarge("point count " + std::to_string(n) + " exceeds cap " +
                       std::to_string(kMaxPoints));
  if (mat.size() != std::size_t(n) * n)
    throw NotAPartition("matrix is not " + std::to_string(n) + "x" + std::to_string(n));

  int rank = 0;
  for (int v : mat) {
    if (v < 0) throw NotAPartition("negative relation index " + std::to_string(v));
    rank = std::max(rank, v + 1);
  }
  if (rank > kMaxRank)
    throw RankTooLarge("rank " + std::to_string(rank) + " exceeds cap " +
                       std::to_string(kMaxRank));

  Scheme S;
  S.n = n;
  S.rank = rank;
  S.rel = mat;

  // Diagonal is relation 0 and nothing else; every index occurs.
  std::vector<char> used(rank, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = S.at(i, j);
      used[v] = 1;
      if (i == j && v != 0)
        throw NotAPartition("diagonal entry at point " + std::to_string(i) +
                            " is " + std::to_string(v) + ", not 0");
      if (i != j && v == 0)
        throw NotAPartition("relation 0 occurs off the diagonal at " +
                            detail::pair_str(i, j));
    }
  for (int s = 0; s < rank; ++s)
    if (!used[s])
      throw NotAPartition("relation index " + std::to_string(s) + " is unused");

  // Star: the transpose of each relation must be a single relation.
  S.star.assign(rank, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = S.at(i, j), t = S.at(j, i);
      if (S.star[s] == -1)
        S.star[s] = t;
      else if (S.star[s] != t)
        throw NoTranspose("transpose of relation " + std::to_string(s) +
                          " hits relations " + std::to_string(S.star[s]) +
                          " and " + std::to_string(t) + " (at " +
                          detail::pair_str(i, j) + ")");
    }
  for (int s = 0; s < rank; ++s)
    if (S.star[S.star[s]] != s)
      throw NoTranspose("star is not an involution at relation " + std::to_string(s));

  // Row lists and total pair counts per relation.
  std::vector<std::vector<int>> rows(std::size_t(rank) * n);
  std::vector<long long> pair_count(rank, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = S.at(i, j);
      rows[std::size_t(s) * n + i].push_back(j);
      ++pair_count[s];
    }

  // Intersection numbers. count/stamp are epoch-cleared per (g,h).
  S.lambda.assign(std::size_t(rank) * rank * rank, 0);
  std::vector<int> count(std::size_t(n) * n, 0);
  std::vector<int> stamp(std::size_t(n) * n, -1);
  std::vector<int> touched;
  touched.reserve(std::size_t(n) * n);
  std::vector<int> lam_gh(rank), touched_per_rel(rank), first_pair(rank);
  int epoch = -1;

  for (int g = 0; g < rank; ++g)
    for (int h = 0; h < rank; ++h) {
      ++epoch;
      touched.clear();
      for (int x = 0; x < n; ++x)
        for (int z : rows[std::size_t(g) * n + x])
          for (int y : rows[std::size_t(h) * n + z]) {
            std::size_t p = std::size_t(x) * n + y;
            if (stamp[p] != epoch) {
              stamp[p] = epoch;
              count[p] = 0;
              touched.push_back(int(p));
            }
            ++count[p];
          }
      std::fill(lam_gh.begin(), lam_gh.end(), -1);
      std::fill(touched_per_rel.begin(), touched_per_rel.end(), 0);
      for (int p : touched) {
        int k = S.rel[p];
        ++touched_per_rel[k];
        if (lam_gh[k] == -1) {
          lam_gh[k] = count[p];
          first_pair[k] = p;
        } else if (lam_gh[k] != count[p]) {
          throw IrregularIntersection(
              "lambda(" + std::to_string(g) + "," + std::to_string(h) + "," +
              std::to_string(k) + ") differs between pairs " +
              detail::pair_str(first_pair[k] / n, first_pair[k] % n) + " [" +
              std::to_string(lam_gh[k]) + "] and " +
              detail::pair_str(p / n, p % n) + " [" + std::to_string(count[p]) + "]");
        }
      }
      for (int k = 0; k < rank; ++k) {
        if (lam_gh[k] == -1) continue;
        if (touched_per_rel[k] != pair_count[k]) {
          // Some pair of relation k has no g-h path while others do.
          for (int x = 0; x < n; ++x)
            for (int y : rows[std::size_t(k) * n + x]) {
              std::size_t p = std::size_t(x) * n + std::size_t(y);
              if (stamp[p] != epoch)
                throw IrregularIntersection(
                    "lambda(" + std::to_string(g) + "," + std::to_string(h) +
                    "," + std::to_string(k) + ") differs between pairs " +
                    detail::pair_str(first_pair[k] / n, first_pair[k] % n) +
                    " [" + std::to_string(lam_gh[k]) + "] and " +
                    detail::pair_str(x, y) + " [0]");
            }
          detail::check(false, "irregular relation had no zero-count pair");
        }
        S.lambda[(std::size_t(g) * rank + h) * rank + k] = lam_gh[k];
      }
    }

  // Valencies, and row-regularity of each relation.
  S.valency.assign(rank, 0);
  for (int s = 0; s < rank; ++s) {
    S.valency[s] = S.lam(s, S.star[s], 0);
    if (pair_count[s] != (long long)S.valency[s] * n)
      throw IrregularIntersection("relation " + std::to_string(s) +
                                  " has irregular row sums: " +
                                  std::to_string(pair_count[s]) + " pairs, valency " +
                                  std::to_string(S.valency[s]));
  }

  // Cheap internal cross-checks on the tensor.
  for (int s = 0; s < rank; ++s)
    detail::check(S.valency[S.star[s]] == S.valency[s],
                  "star changes valency at relation " + std::to_string(s));
  for (int h = 0; h < rank; ++h)
    for (int k = 0; k < rank; ++k)
      detail::check(S.lam(0, h, k) == (h == k ? 1 : 0), "lambda(0,h,k) != delta_hk");
  for (int g = 0; g < rank; ++g)
    for (int h = 0; h < rank; ++h) {
      long long sum = 0;
      for (int k = 0; k < rank; ++k) sum += (long long)S.lam(g, h, k) * S.valency[k];
      detail::check(sum == (long long)S.valency[g] * S.valency[h],
                    "sum_k lambda_ghk n_k != n_g n_h at (" + std::to_string(g) +
                        "," + std::to_string(h) + ")");
    }

  S.product.assign(std::size_t(rank) * rank, {});
  for (int g = 0; g < rank; ++g)
    for (int h = 0; h < rank; ++h) {
      auto& pr = S.product[std::size_t(g) * rank + h];
      for (int k = 0; k < rank; ++k)
        if (S.lam(g, h, k) != 0) pr.push_back(k);
    }

  return S;
}

inline Scheme validate_scheme(const std::vector<std::vector<int>>& rows) {
  int n = int(rows.size());
  std::vector<int> flat;
  flat.reserve(std::size_t(n) * n);
  for (const auto& r : rows) {
    if (int(r.size()) != n) throw NotAPartition("matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate_scheme(flat, n);
}

// The intersection tensor as its own type, for callers that want it bare.
struct IntersectionTensor {
  int rank = 0;
  std::vector<int> lambda;  // rank^3, same layout as Scheme::lambda
  int lam(int g, int h, int k) const {
    return lambda[(std::size_t(g) * rank + h) * rank + k];
  }
};

inline IntersectionTensor intersection_numbers(const Scheme& S) {
  return IntersectionTensor{S.rank, S.lambda};
}

inline bool is_commutative(const Scheme& S) {
  for (int g = 0; g < S.rank; ++g)
    for (int h = g + 1; h < S.rank; ++h)
      for (int k = 0; k < S.rank; ++k)
        if (S.lam(g, h, k) != S.lam(h, g, k)) return false;
  return true;
}

// True iff every relation in H is its own transpose.
inline bool is_symmetric_set(const Scheme& S, const std::vector<int>& H) {
  auto in = detail::member_map(H, S.rank);
  (void)in;
  return std::all_of(H.begin(), H.end(), [&](int s) { return S.star[s] == s; });
}

// HK = { t : lambda_{hkt} != 0 for some h in H, k in K }.
inline std::vector<int> complex_product(const Scheme& S, const std::vector<int>& H,
                                        const std::vector<int>& K) {
  if (H.empty() || K.empty()) throw EmptyInput("complex product of an empty set");
  std::vector<char> out(S.rank, 0);
  detail::member_map(H, S.rank);
  detail::member_map(K, S.rank);
  for (int h : H)
    for (int k : K)
      for (int t : S.prod(h, k)) out[t] = 1;
  std::vector<int> res;
  for (int t = 0; t < S.rank; ++t)
    if (out[t]) res.push_back(t);
  return res;
}

inline bool is_closed_set(const Scheme& S, const std::vector<int>& H) {
  auto in = detail::member_map(H, S.rank);
  for (int g : H)
    for (int h : H)
      for (int t : S.prod(g, h))
        if (!in[t]) return false;
  return true;
}

namespace detail {

inline ClosedSubset make_subset(const Scheme& S, std::vector<int> members);

}  // namespace detail

// Smallest closed subset containing T (and 0), by iterating complex products
// and star to a fixed point.
inline ClosedSubset closure(const Scheme& S, const std::vector<int>& T) {
  if (T.empty()) throw EmptyInput("closure of an empty set");
  std::vector<char> in(S.rank, 0);
  std::vector<int> work;
  auto add = [&](int s) {
    if (s < 0 || s >= S.rank)
      throw Error("relation index out of range: " + std::to_string(s));
    if (!in[s]) {
      in[s] = 1;
      work.push_back(s);
    }
  };
  add(0);
  for (int s : T) {
    add(s);
    add(S.star[s]);
  }
  for (bool grew = true; grew;) {
    std::size_t before = work.size();
    for (std::size_t a = 0; a < work.size(); ++a)
      for (std::size_t b = 0; b < work.size(); ++b)
        for (int t : S.prod(work[a], work[b])) {
          add(t);
          add(S.star[t]);
        }
    grew = work.size() != before;
  }
  std::vector<int> members;
  for (int s = 0; s < S.rank; ++s)
    if (in[s]) members.push_back(s);
  return detail::make_subset(S, std::move(members));
}

// Strong normality is sHs* = H for every relation s. Containing every ss*
// is necessary but weaker in general (any subgroup of a thin scheme passes
// it); the two agree on commutative schemes, which is asserted.
inline bool is_strongly_normal(const Scheme& S, const ClosedSubset& H) {
  if (!is_closed_set(S, H.members)) throw NotClosed("subset is not closed");
  auto in = detail::member_map(H.members, S.rank);
  bool by_ss = true;
  for (int s = 0; s < S.rank && by_ss; ++s)
    for (int t : S.prod(s, S.star[s]))
      if (!in[t]) {
        by_ss = false;
        break;
      }
  bool by_conj = true;
  for (int s = 0; s < S.rank && by_conj; ++s) {
    auto sH = complex_product(S, {s}, H.members);
    auto sHs = complex_product(S, sH, {S.star[s]});
    by_conj = sHs == H.members;
  }
  detail::check(!by_conj || by_ss, "sHs* = H but some ss* escapes H");
  if (by_ss && !by_conj)
    detail::check(!is_commutative(S),
                  "ss* criterion must match sHs* = H on a commutative scheme");
  return by_conj;
}

namespace detail {

inline ClosedSubset make_subset(const Scheme& S, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  ClosedSubset H;
  H.members = std::move(members);
  H.n_H = 0;
  H.thin = true;
  for (int s : H.members) {
    H.n_H += S.valency[s];
    if (S.valency[s] != 1) H.thin = false;
  }
  detail::check(!H.members.empty() && H.members[0] == 0, "subset misses relation 0");
  detail::check(is_closed_set(S, H.members), "make_subset got a non-closed set");
  H.strongly_normal = is_strongly_normal(S, H);
  return H;
}

}  // namespace detail

// Wraps an explicit member list as a ClosedSubset, checking closedness.
inline ClosedSubset as_closed_subset(const Scheme& S, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0)
    members.insert(members.begin(), 0);
  if (!is_closed_set(S, members)) throw NotClosed("subset is not closed");
  return detail::make_subset(S, std::move(members));
}

// All closed subsets, brute force over bitmasks of nondiagonal relations.
// Sorted by (size, lexicographic members).
inline std::vector<ClosedSubset> enumerate_closed_subsets(const Scheme& S) {
  if (S.rank > kEnumerationRankLimit)
    throw RankTooLarge("closed-subset enumeration is guarded at rank " +
                       std::to_string(kEnumerationRankLimit) + ", got " +
                       std::to_string(S.rank));
  int r = S.rank;
  std::vector<std::uint32_t> pmask(std::size_t(r) * r, 0);
  for (int g = 0; g < r; ++g)
    for (int h = 0; h < r; ++h) {
      std::uint32_t m = 0;
      for (int t : S.prod(g, h)) m |= std::uint32_t(1) << t;
      pmask[std::size_t(g) * r + h] = m;
    }
  std::vector<ClosedSubset> out;
  std::uint64_t total = std::uint64_t(1) << (r - 1);
  std::vector<int> bits;
  for (std::uint64_t m = 0; m < total; ++m) {
    std::uint32_t cand = (std::uint32_t(m) << 1) | 1u;
    bits.clear();
    for (int s = 0; s < r; ++s)
      if (cand >> s & 1) bits.push_back(s);
    bool closed = true;
    for (std::size_t a = 0; a < bits.size() && closed; ++a)
      for (std::size_t b = 0; b < bits.size(); ++b)
        if (pmask[std::size_t(bits[a]) * r + bits[b]] & ~cand) {
          closed = false;
          break;
        }
    if (closed) out.push_back(detail::make_subset(S, bits));
  }
  std::sort(out.begin(), out.end(), [](const ClosedSubset& a, const ClosedSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

// Thin residue O(S): the closure of the union of all ss*. It is strongly
// normal by construction; minimality against every enumerated strongly
// normal subset is asserted in the property suite.
inline ClosedSubset thin_residue(const Scheme& S) {
  std::vector<int> gen = {0};
  for (int s = 0; s < S.rank; ++s)
    for (int t : S.prod(s, S.star[s])) gen.push_back(t);
  ClosedSubset O = closure(S, gen);
  detail::check(O.strongly_normal, "thin residue is not strongly normal");
  return O;
}

// Quotient of (X,S) over a closed subset H: points are the blocks xH, and
// (xH, yH) carries the relation of the double coset H rel(x,y) H. Computed
// point-wise; the double-coset labelling is the built-in cross-check (every
// pair of points between two blocks must land in the same double coset).
struct QuotientMap {
  std::vector<std::vector<int>> blocks;  // block id -> sorted points
  std::vector<int> block_of;             // point -> block id
  std::vector<int> rel_map;              // parent relation -> quotient relation
  Scheme quotient;
};

inline QuotientMap quotient_scheme(const Scheme& S, const ClosedSubset& H) {
  if (!is_closed_set(S, H.members)) throw NotClosed("subset is not closed");
  auto in = detail::member_map(H.members, S.rank);

  QuotientMap Q;
  Q.block_of.assign(S.n, -1);
  for (int x = 0; x < S.n; ++x) {
    if (Q.block_of[x] != -1) continue;
    int id = int(Q.blocks.size());
    std::vector<int> blk;
    for (int y = 0; y < S.n; ++y)
      if (in[S.at(x, y)]) {
        detail::check(Q.block_of[y] == -1, "xH blocks do not partition X");
        Q.block_of[y] = id;
        blk.push_back(y);
      }
    detail::check(int(blk.size()) == H.n_H, "|xH| != n_H");
    Q.blocks.push_back(std::move(blk));
  }
  int qn = int(Q.blocks.size());
  detail::check(S.n == H.n_H * qn, "n_S != n_H * #blocks");

  // Double cosets HsH, labelled in discovery order of their least member.
  Q.rel_map.assign(S.rank, -1);
  int next = 0;
  for (int s = 0; s < S.rank; ++s) {
    if (Q.rel_map[s] != -1) continue;
    auto dc = complex_product(S, complex_product(S, H.members, {s}), H.members);
    for (int t : dc) {
      detail::check(Q.rel_map[t] == -1, "double cosets are not disjoint");
      Q.rel_map[t] = next;
    }
    ++next;
  }

  std::vector<int> qmat(std::size_t(qn) * qn, -1);
  for (int x = 0; x < S.n; ++x)
    for (int y = 0; y < S.n; ++y) {
      int q = Q.rel_map[S.at(x, y)];
      int& cell = qmat[std::size_t(Q.block_of[x]) * qn + Q.block_of[y]];
      detail::check(cell == -1 || cell == q,
                    "block pair sees two quotient relations");
      cell = q;
    }
  Q.quotient = validate_scheme(qmat, qn);
  detail::check(Q.quotient.rank == next, "quotient rank != number of double cosets");
  detail::check(Q.quotient.thin() == H.strongly_normal,
                "thin quotient must coincide with strong normality");
  return Q;
}

// Subscheme on the block xH: points xH, relations s restricted to xH x xH
// for s in H, relabelled by the ascending order of H's members.
inline Scheme subscheme(const Scheme& S, int x, const ClosedSubset& H) {
  if (!is_closed_set(S, H.members)) throw NotClosed("subset is not closed");
  if (x < 0 || x >= S.n) throw Error("point out of range: " + std::to_string(x));
  auto in = detail::member_map(H.members, S.rank);
  std::vector<int> pts;
  for (int y = 0; y < S.n; ++y)
    if (in[S.at(x, y)]) pts.push_back(y);
  std::vector<int> relabel(S.rank, -1);
  for (std::size_t i = 0; i < H.members.size(); ++i) relabel[H.members[i]] = int(i);
  int m = int(pts.size());
  std::vector<int> mat(std::size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int s = S.at(pts[i], pts[j]);
      detail::check(relabel[s] != -1, "relation outside H inside a block");
      mat[std::size_t(i) * m + j] = relabel[s];
    }
  Scheme sub = validate_scheme(mat, m);
  detail::check(sub.n == H.n_H, "subscheme order != n_H");
  return sub;
}

namespace detail {

// Multiplication table of a thin scheme: g*h is the unique k with
// lambda_{ghk} = 1. Identity is relation 0, inverse is star.
inline std::vector<int> thin_group_table(const Scheme& T) {
  check(T.thin(), "thin_group_table on a non-thin scheme");
  int r = T.rank;
  std::vector<int> mul(std::size_t(r) * r);
  for (int g = 0; g < r; ++g)
    for (int h = 0; h < r; ++h) {
      const auto& p = T.prod(g, h);
      check(p.size() == 1, "thin product is not a single relation");
      mul[std::size_t(g) * r + h] = p[0];
    }
  return mul;
}

// Subgroup generated by the commutators of a multiplication table.
inline std::vector<int> derived_subgroup_of_table(const std::vector<int>& mul, int r,
                                                  const std::vector<int>& inv) {
  std::vector<char> in(r, 0);
  in[0] = 1;
  std::vector<int> work = {0};
  auto add = [&](int g) {
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  };
  auto m = [&](int a, int b) { return mul[std::size_t(a) * r + b]; };
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) add(m(m(a, b), inv[m(b, a)]));
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) add(m(work[i], work[j]));
  std::vector<int> out;
  for (int g = 0; g < r; ++g)
    if (in[g]) out.push_back(g);
  return out;
}

}  // namespace detail

// S' = preimage of the derived subgroup of the group S//O(S). Closed and
// strongly normal; the quotient S//S' is an abelian group (all asserted).
inline ClosedSubset derived_closed_subset(const Scheme& S) {
  ClosedSubset O = thin_residue(S);
  QuotientMap Q = quotient_scheme(S, O);
  const Scheme& G = Q.quotient;
  std::vector<int> mul = detail::thin_group_table(G);
  std::vector<int> D = detail::derived_subgroup_of_table(mul, G.rank, G.star);
  std::vector<char> inD(G.rank, 0);
  for (int d : D) inD[d] = 1;
  std::vector<int> members;
  for (int s = 0; s < S.rank; ++s)
    if (inD[Q.rel_map[s]]) members.push_back(s);
  ClosedSubset Sp = detail::make_subset(S, std::move(members));
  detail::check(Sp.strongly_normal, "derived closed subset is not strongly normal");
  QuotientMap QA = quotient_scheme(S, Sp);
  std::vector<int> amul = detail::thin_group_table(QA.quotient);
  int ar = QA.quotient.rank;
  for (int a = 0; a < ar; ++a)
    for (int b = 0; b < ar; ++b)
      detail::check(amul[std::size_t(a) * ar + b] == amul[std::size_t(b) * ar + a],
                    "quotient over S' is not abelian");
  return Sp;
}

// The full relation set as a ClosedSubset.
inline ClosedSubset full_subset(const Scheme& S) {
  std::vector<int> all(S.rank);
  std::iota(all.begin(), all.end(), 0);
  return detail::make_subset(S, std::move(all));
}

}  // namespace ascheme
