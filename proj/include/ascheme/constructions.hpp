#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ascheme/char_table.hpp"
#include "ascheme/error.hpp"
#include "ascheme/group.hpp"
#include "ascheme/scheme.hpp"

namespace ascheme {

inline Scheme one_point_scheme() { return validate_scheme({0}, 1); }

// Diagonal plus a single relation for all other pairs.
inline Scheme trivial_scheme(int n) {
  if (n < 2) throw Error("trivial scheme needs at least 2 points");
  std::vector<int> mat(std::size_t(n) * n, 1);
  for (int i = 0; i < n; ++i) mat[std::size_t(i) * n + i] = 0;
  return validate_scheme(mat, n);
}

// rel(x, y) = x^-1 y: one relation per group element, all valencies 1.
inline Scheme thin_scheme(const GroupSpec& G) {
  validate_group(G);
  int n = G.order;
  std::vector<int> mat(std::size_t(n) * n);
  for (int x = 0; x < n; ++x) {
    int xi = group_inverse(G, x);
    for (int y = 0; y < n; ++y) mat[std::size_t(x) * n + y] = G.at(xi, y);
  }
  return validate_scheme(mat, n);
}

// rel(x, y) = conjugacy class of x^-1 y; the adjacency algebra is the class
// algebra of G.
inline Scheme group_scheme(const GroupSpec& G) {
  validate_group(G);
  int n = G.order;
  auto classes = conjugacy_classes(G);
  std::vector<int> class_of(n);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int g : classes[i]) class_of[g] = int(i);
  std::vector<int> mat(std::size_t(n) * n);
  for (int x = 0; x < n; ++x) {
    int xi = group_inverse(G, x);
    for (int y = 0; y < n; ++y)
      mat[std::size_t(x) * n + y] = class_of[G.at(xi, y)];
  }
  Scheme S = validate_scheme(mat, n);
  detail::check(S.rank == int(classes.size()), "one relation per conjugacy class");
  return S;
}

// Wreath product on X x Y (A on the fibers X, B across): point (x, y) has
// index y*|X| + x; relation s of A keeps its index within a fiber, relation
// f >= 1 of B becomes |S_A| - 1 + f across fibers.
inline Scheme wreath_product(const Scheme& A, const Scheme& B) {
  int nA = A.n, nB = B.n;
  int n = nA * nB;
  if (n > kMaxPoints)
    throw RankTooLarge("wreath product has " + std::to_string(n) + " points");
  std::vector<int> mat(std::size_t(n) * n);
  for (int y1 = 0; y1 < nB; ++y1)
    for (int x1 = 0; x1 < nA; ++x1)
      for (int y2 = 0; y2 < nB; ++y2)
        for (int x2 = 0; x2 < nA; ++x2) {
          int p = y1 * nA + x1, q = y2 * nA + x2;
          mat[std::size_t(p) * n + q] =
              y1 == y2 ? A.at(x1, x2) : A.rank - 1 + B.at(y1, y2);
        }
  Scheme W = validate_scheme(mat, n);
  detail::check(W.rank == A.rank + B.rank - 1, "wreath rank != |S_A| + |S_B| - 1");
  for (int s = 0; s < A.rank; ++s)
    detail::check(W.valency[s] == A.valency[s], "inner wreath valency changed");
  for (int f = 1; f < B.rank; ++f)
    detail::check(W.valency[A.rank - 1 + f] == nA * B.valency[f],
                  "across wreath valency != |X| * n_f");
  return W;
}

// Character table of the wreath product, built from the factor tables alone:
// a nonprincipal chi of A lifts with its values inside and 0 across; every
// psi of B lifts with n_s * psi(1) inside and |X| * psi(sigma_f) across.
// Multiplicities come from the standard-character system
// sum_chi m_chi chi(sigma_u) = n delta_u0.
inline CharacterTable wreath_character_table(const Scheme& A, const CharacterTable& tA,
                                             const Scheme& B, const CharacterTable& tB) {
  int rW = A.rank + B.rank - 1;
  int nW = A.n * B.n;
  std::vector<CharacterRow> rows;
  for (std::size_t i = 0; i < tA.rows.size(); ++i) {
    if (int(i) == tA.principal_index) continue;
    CharacterRow row;
    row.degree = tA.rows[i].degree;
    row.values.assign(rW, Cplx(0, 0));
    for (int s = 0; s < A.rank; ++s) row.values[s] = tA.rows[i].values[s];
    rows.push_back(std::move(row));
  }
  int principal_source = -1;
  for (std::size_t j = 0; j < tB.rows.size(); ++j) {
    CharacterRow row;
    row.degree = tB.rows[j].degree;
    row.values.resize(rW);
    for (int s = 0; s < A.rank; ++s)
      row.values[s] = double(A.valency[s]) * tB.rows[j].degree;
    for (int f = 1; f < B.rank; ++f)
      row.values[A.rank - 1 + f] = double(A.n) * tB.rows[j].values[f];
    if (int(j) == tB.principal_index) principal_source = int(rows.size());
    rows.push_back(std::move(row));
  }

  int R = int(rows.size());
  Eigen::MatrixXcd X(rW, R);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(rW);
  b[0] = double(nW);
  for (int u = 0; u < rW; ++u)
    for (int i = 0; i < R; ++i) X(u, i) = rows[i].values[u];
  Eigen::VectorXcd m = X.colPivHouseholderQr().solve(b);
  detail::check((X * m - b).cwiseAbs().maxCoeff() < kValueTol * nW,
                "wreath multiplicity system is inconsistent");
  for (int i = 0; i < R; ++i) {
    if (std::abs(m[i].imag()) > kValueTol ||
        !detail::near_integer(m[i].real(), kValueTol) || m[i].real() < 1.0 - kValueTol)
      throw NonIntegralMultiplicity("wreath multiplicity " +
                                    std::to_string(m[i].real()) +
                                    " is not a positive integer");
    rows[i].multiplicity = std::round(m[i].real());
  }

  CharacterTable tab;
  tab.n = nW;
  tab.rank = rW;
  tab.rows = std::move(rows);
  detail::check(std::abs(tab.rows[principal_source].multiplicity - 1.0) < kValueTol,
                "lifted principal character has multiplicity != 1");
  std::swap(tab.rows[0], tab.rows[principal_source]);
  std::sort(tab.rows.begin() + 1, tab.rows.end(), detail::row_less);
  tab.principal_index = 0;

  double deg_sq = 0, std_dim = 0;
  for (const auto& row : tab.rows) {
    deg_sq += row.degree * row.degree;
    std_dim += row.multiplicity * row.degree;
  }
  detail::check(std::abs(deg_sq - rW) < kValueTol, "wreath degree squares != rank");
  detail::check(std::abs(std_dim - nW) < kValueTol,
                "wreath multiplicity-degree sum != point count");
  return tab;
}

// Wreath recognition over a closed subset H, via three conditions:
//  - block: every relation outside H covers complete block products,
//  - rank: |S| = |H| + |S//H| - 1,
//  - tensor: lambda_shk = lambda_hsk = n_h delta_ks for h in H, s outside.
// block && rank is the decomposition itself (and implies tensor); for
// commutative schemes the three are equivalent.
struct WreathRecognition {
  bool is_wreath = false;
  bool block_condition = false;
  bool rank_condition = false;
  bool tensor_condition = false;
};

inline WreathRecognition recognize_wreath(const Scheme& S, const ClosedSubset& H) {
  if (!is_closed_set(S, H.members)) throw NotClosed("subset is not closed");
  auto in = detail::member_map(H.members, S.rank);
  WreathRecognition R;

  R.tensor_condition = true;
  for (int s = 0; s < S.rank && R.tensor_condition; ++s) {
    if (in[s]) continue;
    for (int h : H.members) {
      for (int k = 0; k < S.rank; ++k) {
        int want = k == s ? S.valency[h] : 0;
        if (S.lam(s, h, k) != want || S.lam(h, s, k) != want) {
          R.tensor_condition = false;
          break;
        }
      }
      if (!R.tensor_condition) break;
    }
  }

  QuotientMap Q = quotient_scheme(S, H);
  R.rank_condition = S.rank == int(H.members.size()) + Q.quotient.rank - 1;

  int nblocks = int(Q.blocks.size());
  std::vector<long long> cnt(std::size_t(S.rank) * nblocks * nblocks, 0);
  for (int x = 0; x < S.n; ++x)
    for (int y = 0; y < S.n; ++y) {
      int s = S.at(x, y);
      if (!in[s])
        ++cnt[(std::size_t(s) * nblocks + Q.block_of[x]) * nblocks + Q.block_of[y]];
    }
  long long full = (long long)H.n_H * H.n_H;
  R.block_condition = true;
  for (long long c : cnt)
    if (c != 0 && c != full) {
      R.block_condition = false;
      break;
    }

  if (is_commutative(S))
    detail::check(R.block_condition == R.rank_condition &&
                      R.rank_condition == R.tensor_condition,
                  "wreath conditions disagree on a commutative scheme");
  R.is_wreath = R.block_condition && R.rank_condition;
  if (R.is_wreath) {
    detail::check(R.tensor_condition, "wreath decomposition without tensor condition");
    // Confirm by intersection numbers against subscheme wreath quotient.
    Scheme W = wreath_product(subscheme(S, 0, H), Q.quotient);
    std::vector<int> to_w(S.rank, -1);
    for (std::size_t i = 0; i < H.members.size(); ++i) to_w[H.members[i]] = int(i);
    for (int s = 0; s < S.rank; ++s)
      if (!in[s]) to_w[s] = int(H.members.size()) - 1 + Q.rel_map[s];
    for (int g = 0; g < S.rank; ++g)
      for (int h = 0; h < S.rank; ++h)
        for (int k = 0; k < S.rank; ++k)
          detail::check(S.lam(g, h, k) == W.lam(to_w[g], to_w[h], to_w[k]),
                        "recognized wreath has mismatched intersection numbers");
  }
  return R;
}

}  // namespace ascheme
