#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ascheme/error.hpp"
#include "ascheme/scheme.hpp"

namespace ascheme {

using Cplx = std::complex<double>;

// Tolerances: kEigenTol separates eigenvalues, kValueTol certifies
// integrality and zero values. Degenerate random splittings are retried with
// fresh seeds up to kSeedAttempts times.
inline constexpr double kEigenTol = 1e-8;
inline constexpr double kValueTol = 1e-6;
inline constexpr int kSeedAttempts = 8;
inline constexpr std::uint64_t kBaseSeed = 0x5eed0f17ULL;

// One irreducible character: chi(sigma_s) for every relation s, the degree
// chi(1), and the multiplicity of chi in the standard module.
struct CharacterRow {
  std::vector<Cplx> values;
  double degree = 0;
  double multiplicity = 0;
};

// Rows in canonical order: the principal character (chi(sigma_s) = n_s)
// first, the rest ascending by (degree, multiplicity, value vector).
struct CharacterTable {
  int n = 0;
  int rank = 0;
  std::vector<CharacterRow> rows;
  int principal_index = 0;
};

namespace detail {

inline Eigen::VectorXcd alg_product(const Scheme& S, const Eigen::VectorXcd& u,
                                    const Eigen::VectorXcd& v) {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(S.rank);
  for (int g = 0; g < S.rank; ++g) {
    if (std::abs(u[g]) < 1e-15) continue;
    for (int h = 0; h < S.rank; ++h) {
      Cplx uv = u[g] * v[h];
      if (std::abs(uv) < 1e-15) continue;
      for (int k : S.prod(g, h)) w[k] += uv * double(S.lam(g, h, k));
    }
  }
  return w;
}

inline bool near_integer(double x, double tol) {
  return std::abs(x - std::round(x)) < tol;
}

inline bool is_principal_row(const Scheme& S, const CharacterRow& row) {
  for (int s = 0; s < S.rank; ++s)
    if (std::abs(row.values[s] - Cplx(double(S.valency[s]))) >
        kValueTol * std::max(1.0, double(S.valency[s])))
      return false;
  return true;
}

// Canonical order among non-principal rows.
inline bool row_less(const CharacterRow& a, const CharacterRow& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
  for (std::size_t s = 0; s < a.values.size(); ++s) {
    double dre = a.values[s].real() - b.values[s].real();
    if (std::abs(dre) > kValueTol) return dre < 0;
    double dim = a.values[s].imag() - b.values[s].imag();
    if (std::abs(dim) > kValueTol) return dim < 0;
  }
  return false;
}

// Splits the adjacency algebra via its center in the regular representation.
// The center is the nullspace of the stacked commutation constraints
// sum_g c_g (lambda_ghk - lambda_hgk) = 0, extracted from the constraints'
// Gram matrix so the basis stays orthonormal even with repeated spectrum; a
// random central element is then eigen-split, each eigenvector rescaled to a
// primitive central idempotent e, and degree, multiplicity and character
// values are read off e.
inline std::vector<CharacterRow> general_char_rows(const Scheme& S,
                                                   std::uint64_t seed) {
  const int r = S.rank;
  const double n = double(S.n);

  Eigen::MatrixXd M(r * r, r);
  for (int h = 0; h < r; ++h)
    for (int k = 0; k < r; ++k)
      for (int g = 0; g < r; ++g)
        M(h * r + k, g) = double(S.lam(g, h, k) - S.lam(h, g, k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> null_eig(M.transpose() * M);
  if (null_eig.info() != Eigen::Success)
    throw NumericalDegeneracy("nullspace eigen decomposition failed");
  const auto& ev = null_eig.eigenvalues();  // ascending
  double thr = kEigenTol * std::max(1.0, ev[r - 1]);
  int d = 0;
  while (d < r && ev[d] <= thr) ++d;
  if (d < 1) throw NumericalDegeneracy("center of the adjacency algebra is empty");
  Eigen::MatrixXd B = null_eig.eigenvectors().leftCols(d);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Eigen::VectorXd rc(d);
  for (int i = 0; i < d; ++i) rc[i] = U(rng);
  Eigen::VectorXcd z = (B * rc).cast<Cplx>();

  Eigen::MatrixXd Mz(d, d);
  for (int j = 0; j < d; ++j) {
    Eigen::VectorXcd w = alg_product(S, z, B.col(j).cast<Cplx>());
    Eigen::VectorXd wr = w.real();
    check(w.imag().cwiseAbs().maxCoeff() < 1e-9,
          "center product left the real span");
    Eigen::VectorXd coord = B.transpose() * wr;
    check((wr - B * coord).cwiseAbs().maxCoeff() < 1e-7 * std::max(1.0, n),
          "center is not closed under the algebra product");
    Mz.col(j) = coord;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(Mz);
  if (es.info() != Eigen::Success)
    throw NumericalDegeneracy("eigen decomposition of the central element failed");
  Eigen::VectorXcd mu = es.eigenvalues();
  double scale = std::max(1.0, mu.cwiseAbs().maxCoeff());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(mu[i] - mu[j]) < 1e-6 * scale)
        throw NumericalDegeneracy("random central element has a repeated eigenvalue");

  std::vector<double> reg_trace(r, 0.0);
  for (int h = 0; h < r; ++h)
    for (int k = 0; k < r; ++k) reg_trace[h] += double(S.lam(h, k, k));

  std::vector<CharacterRow> rows;
  Eigen::VectorXcd idem_sum = Eigen::VectorXcd::Zero(r);
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXcd c = B.cast<Cplx>() * es.eigenvectors().col(i);
    int k0 = 0;
    for (int k = 1; k < r; ++k)
      if (std::abs(c[k]) > std::abs(c[k0])) k0 = k;
    if (std::abs(c[k0]) < 1e-12)
      throw NumericalDegeneracy("central eigenvector vanished");
    Eigen::VectorXcd cc = alg_product(S, c, c);
    Cplx alpha = cc[k0] / c[k0];
    if (std::abs(alpha) < 1e-12)
      throw NumericalDegeneracy("central eigenvector squares to zero");
    Eigen::VectorXcd e = c / alpha;
    Eigen::VectorXcd ee = alg_product(S, e, e);
    if ((ee - e).cwiseAbs().maxCoeff() > kValueTol)
      throw NumericalDegeneracy("central idempotent rescale failed");
    idem_sum += e;

    Cplx deg_sq = 0;
    for (int h = 0; h < r; ++h) deg_sq += e[h] * reg_trace[h];
    if (std::abs(deg_sq.imag()) > kValueTol || deg_sq.real() < 1.0 - kValueTol)
      throw NumericalDegeneracy("squared degree is not a positive real");
    double degree = std::sqrt(deg_sq.real());
    if (!near_integer(degree, kValueTol))
      throw NumericalDegeneracy("character degree " + std::to_string(degree) +
                                " is not integral");
    degree = std::round(degree);

    Cplx m0 = n * e[0] / degree;
    if (std::abs(m0.imag()) > kValueTol)
      throw NumericalDegeneracy("multiplicity has an imaginary part");
    double mult = m0.real();
    if (!near_integer(mult, kValueTol) || mult < 1.0 - kValueTol)
      throw NonIntegralMultiplicity("multiplicity " + std::to_string(mult) +
                                    " is not a positive integer");
    mult = std::round(mult);

    CharacterRow row;
    row.degree = degree;
    row.multiplicity = mult;
    row.values.resize(r);
    for (int s = 0; s < r; ++s)
      row.values[s] = n * e[S.star[s]] * double(S.valency[s]) / mult;
    check(std::abs(row.values[0] - Cplx(degree)) < kValueTol,
          "chi(sigma_0) does not match the degree");
    rows.push_back(std::move(row));
  }

  check(std::abs(idem_sum[0] - Cplx(1.0)) < kValueTol,
        "central idempotents do not sum to the identity");
  for (int s = 1; s < r; ++s)
    check(std::abs(idem_sum[s]) < kValueTol,
          "central idempotents do not sum to the identity");
  return rows;
}

// Commutative path: a random Hermitian element of the adjacency algebra in
// the standard representation splits C^X into the rank common eigenspaces;
// character values are the joint eigenvalues, multiplicities the dimensions.
inline std::vector<CharacterRow> commutative_char_rows(const Scheme& S,
                                                       std::uint64_t seed) {
  const int r = S.rank;
  const int n = S.n;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<Cplx> coef(r);
  for (int s = 0; s < r; ++s) {
    if (S.star[s] < s) continue;
    if (S.star[s] == s) {
      coef[s] = Cplx(U(rng), 0.0);
    } else {
      coef[s] = Cplx(U(rng), U(rng));
      coef[S.star[s]] = std::conj(coef[s]);
    }
  }

  Eigen::MatrixXcd C(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C(i, j) = coef[S.at(i, j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> saes(C);
  if (saes.info() != Eigen::Success)
    throw NumericalDegeneracy("Hermitian eigen decomposition failed");
  Eigen::VectorXd ev = saes.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

  std::vector<std::pair<int, int>> clusters;
  int lo = 0;
  for (int i = 1; i <= n; ++i)
    if (i == n || ev[i] - ev[i - 1] > 1e-6 * scale) {
      clusters.push_back({lo, i});
      lo = i;
    }
  if (int(clusters.size()) != r)
    throw NumericalDegeneracy("random Hermitian element separated " +
                              std::to_string(clusters.size()) +
                              " eigenspaces, expected " + std::to_string(r));

  std::vector<std::vector<int>> row_list(std::size_t(r) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      row_list[std::size_t(S.at(i, j)) * n + i].push_back(j);

  std::vector<CharacterRow> rows;
  for (auto [a, b] : clusters) {
    int dim = b - a;
    Eigen::MatrixXcd V = saes.eigenvectors().middleCols(a, dim);
    CharacterRow row;
    row.degree = 1.0;
    row.multiplicity = double(dim);
    row.values.resize(r);
    double inv_m_sum = 0;
    for (int s = 0; s < r; ++s) {
      Eigen::MatrixXcd W(n, dim);
      W.setZero();
      for (int i = 0; i < n; ++i)
        for (int j : row_list[std::size_t(s) * n + i]) W.row(i) += V.row(j);
      Eigen::MatrixXcd P = V.adjoint() * W;
      Cplx theta = P.trace() / double(dim);
      check((P - theta * Eigen::MatrixXcd::Identity(dim, dim))
                    .cwiseAbs()
                    .maxCoeff() < kValueTol * std::max(1.0, double(n)),
            "adjacency matrix is not scalar on a joint eigenspace");
      row.values[s] = theta;
      inv_m_sum += std::norm(theta) / double(S.valency[s]);
    }
    check(std::abs(double(n) / inv_m_sum - double(dim)) < kValueTol * n,
          "orthogonality multiplicity disagrees with eigenspace dimension");
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void sort_rows_canonically(const Scheme& S, CharacterTable& tab) {
  int principal = -1;
  for (std::size_t i = 0; i < tab.rows.size(); ++i)
    if (is_principal_row(S, tab.rows[i])) {
      check(principal == -1, "two rows look principal");
      principal = int(i);
    }
  check(principal != -1, "no principal row found");
  check(std::abs(tab.rows[principal].multiplicity - 1.0) < kValueTol,
        "principal row has multiplicity != 1");
  std::swap(tab.rows[0], tab.rows[principal]);
  std::sort(tab.rows.begin() + 1, tab.rows.end(), row_less);
  tab.principal_index = 0;
}

inline void check_table_invariants(const Scheme& S, const CharacterTable& tab) {
  double deg_sq = 0, std_dim = 0;
  for (const auto& row : tab.rows) {
    deg_sq += row.degree * row.degree;
    std_dim += row.multiplicity * row.degree;
  }
  check(std::abs(deg_sq - double(S.rank)) < kValueTol,
        "sum of squared degrees != rank");
  check(std::abs(std_dim - double(S.n)) < kValueTol,
        "sum of multiplicity * degree != point count");
  for (int s = 1; s < S.rank; ++s) {
    Cplx sum = 0;
    for (const auto& row : tab.rows) sum += row.multiplicity * row.values[s];
    check(std::abs(sum) < kValueTol * S.n,
          "standard character is nonzero off the diagonal relation");
  }
}

}  // namespace detail

// The complex character table of the adjacency algebra. On commutative input
// an independent Hermitian-splitting path is run as well and the two results
// are required to agree.
inline CharacterTable character_table(const Scheme& S) {
  std::vector<CharacterRow> rows;
  for (int attempt = 0;; ++attempt) {
    try {
      rows = detail::general_char_rows(S, kBaseSeed + attempt);
      break;
    } catch (const NumericalDegeneracy&) {
      if (attempt + 1 >= kSeedAttempts) throw;
    }
  }
  CharacterTable tab;
  tab.n = S.n;
  tab.rank = S.rank;
  tab.rows = std::move(rows);
  detail::sort_rows_canonically(S, tab);
  detail::check_table_invariants(S, tab);

  if (is_commutative(S)) {
    std::vector<CharacterRow> crows;
    for (int attempt = 0;; ++attempt) {
      try {
        crows = detail::commutative_char_rows(S, kBaseSeed ^ (0x9e3779b9ULL + attempt));
        break;
      } catch (const NumericalDegeneracy&) {
        if (attempt + 1 >= kSeedAttempts) throw;
      }
    }
    CharacterTable ctab;
    ctab.n = S.n;
    ctab.rank = S.rank;
    ctab.rows = std::move(crows);
    detail::sort_rows_canonically(S, ctab);
    detail::check(ctab.rows.size() == tab.rows.size(),
                  "commutative path found a different number of characters");
    for (std::size_t i = 0; i < tab.rows.size(); ++i) {
      detail::check(tab.rows[i].degree == ctab.rows[i].degree &&
                        tab.rows[i].multiplicity == ctab.rows[i].multiplicity,
                    "commutative path disagrees on degree or multiplicity");
      for (int s = 0; s < S.rank; ++s)
        detail::check(std::abs(tab.rows[i].values[s] - ctab.rows[i].values[s]) <
                          kValueTol * std::max(1.0, double(S.n)),
                      "commutative path disagrees on a character value");
    }
  }
  return tab;
}

// Index of the table row matching the given values, within kValueTol.
inline int find_row(const CharacterTable& tab, const std::vector<Cplx>& values) {
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < values.size() && ok; ++s)
      ok = std::abs(tab.rows[i].values[s] - values[s]) < kValueTol * 10;
    if (ok && values.size() == tab.rows[i].values.size()) return int(i);
  }
  throw NotARow("no table row matches the given character values");
}

// linear <=> multiplicity 1. The count of linear rows equals the index of
// the derived closed subset.
struct CharacterCensus {
  int linear = 0;
  int nonlinear = 0;
};

inline CharacterCensus character_census(const CharacterTable& tab) {
  CharacterCensus c;
  for (const auto& row : tab.rows)
    (std::abs(row.multiplicity - 1.0) < kValueTol ? c.linear : c.nonlinear) += 1;
  return c;
}

// chi restricted to the subscheme over H, decomposed into the subscheme's
// irreducible characters with nonnegative integer coefficients.
struct RestrictionDecomposition {
  CharacterTable sub_table;
  std::vector<int> coefficients;
};

inline RestrictionDecomposition restrict_and_decompose(const Scheme& S,
                                                       const ClosedSubset& H,
                                                       const CharacterRow& chi) {
  RestrictionDecomposition out;
  Scheme sub = subscheme(S, 0, H);
  out.sub_table = character_table(sub);
  int hsize = int(H.members.size());
  int d = int(out.sub_table.rows.size());
  Eigen::MatrixXcd A(hsize, d);
  Eigen::VectorXcd b(hsize);
  for (int t = 0; t < hsize; ++t) {
    b[t] = chi.values[H.members[t]];
    for (int i = 0; i < d; ++i) A(t, i) = out.sub_table.rows[i].values[t];
  }
  Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
  double resid = (A * x - b).cwiseAbs().maxCoeff();
  if (resid > kValueTol * std::max(1.0, double(S.n)))
    throw NonIntegralDecomposition(
        "restriction is not a combination of subscheme characters, residual " +
        std::to_string(resid));
  out.coefficients.resize(d);
  for (int i = 0; i < d; ++i) {
    if (std::abs(x[i].imag()) > kValueTol ||
        !detail::near_integer(x[i].real(), kValueTol) || x[i].real() < -kValueTol)
      throw NonIntegralDecomposition("coefficient " + std::to_string(x[i].real()) +
                                     " is not a nonnegative integer");
    out.coefficients[i] = int(std::round(x[i].real()));
  }
  return out;
}

// Product of chi with a linear character zeta of the quotient over a strongly
// normal subset: (chi zeta)(sigma_s) = chi(sigma_s) zeta(sigma_{s^H}).
// Returns the index of the product row in the table.
inline int char_product(const Scheme& S, const CharacterTable& tab, int chi_index,
                        const QuotientMap& Q, const CharacterRow& zeta) {
  if (std::abs(zeta.multiplicity - 1.0) > kValueTol)
    throw NotARow("character product needs a linear quotient character");
  const CharacterRow& chi = tab.rows[chi_index];
  std::vector<Cplx> w(S.rank);
  for (int s = 0; s < S.rank; ++s)
    w[s] = chi.values[s] * zeta.values[Q.rel_map[s]];
  return find_row(tab, w);
}

// Fusion classes of the relation: s ~ t iff chi(sigma_s)/n_s =
// chi(sigma_t)/n_t for every irreducible chi. Classes are ordered by least
// member; the class of relation 0 is always the singleton {0}.
struct FusionPartition {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
};

inline FusionPartition fusion_partition(const Scheme& S, const CharacterTable& tab) {
  int r = S.rank;
  int d = int(tab.rows.size());
  std::vector<std::vector<Cplx>> ratio(r, std::vector<Cplx>(d));
  for (int s = 0; s < r; ++s)
    for (int i = 0; i < d; ++i)
      ratio[s][i] = tab.rows[i].values[s] / double(S.valency[s]);
  FusionPartition F;
  F.class_of.assign(r, -1);
  for (int s = 0; s < r; ++s) {
    if (F.class_of[s] != -1) continue;
    int id = int(F.classes.size());
    std::vector<int> cls;
    for (int t = s; t < r; ++t) {
      if (F.class_of[t] != -1) continue;
      bool same = true;
      for (int i = 0; i < d && same; ++i)
        same = std::abs(ratio[s][i] - ratio[t][i]) < kValueTol;
      if (same) {
        F.class_of[t] = id;
        cls.push_back(t);
      }
    }
    F.classes.push_back(std::move(cls));
  }
  detail::check(F.classes[0] == std::vector<int>{0},
                "fusion class of the diagonal relation is not a singleton");
  return F;
}

// Group-likeness: the center of the adjacency algebra has dimension equal to
// the number of fusion classes. Cross-checked against the trace condition
// sum_k (lambda_shk - lambda_hsk) chi(sigma_k) psi(sigma_k) / n_k = 0.
struct GroupLikeness {
  bool group_like = false;
  int center_dim = 0;
  int fused_size = 0;
};

inline GroupLikeness is_group_like(const Scheme& S, const CharacterTable& tab,
                                   const FusionPartition& F) {
  GroupLikeness out;
  out.center_dim = int(tab.rows.size());
  out.fused_size = int(F.classes.size());
  out.group_like = out.center_dim == out.fused_size;

  bool trace_ok = true;
  int d = int(tab.rows.size());
  for (int i = 0; i < d && trace_ok; ++i)
    for (int j = i; j < d && trace_ok; ++j)
      for (int s = 0; s < S.rank && trace_ok; ++s)
        for (int h = s + 1; h < S.rank && trace_ok; ++h) {
          Cplx sum = 0;
          for (int k = 0; k < S.rank; ++k) {
            int diff = S.lam(s, h, k) - S.lam(h, s, k);
            if (diff == 0) continue;
            sum += double(diff) * tab.rows[i].values[k] * tab.rows[j].values[k] /
                   double(S.valency[k]);
          }
          trace_ok = std::abs(sum) < kValueTol * S.n;
        }
  detail::check(trace_ok == out.group_like,
                "trace condition disagrees with the fusion count");
  return out;
}

inline GroupLikeness is_group_like(const Scheme& S, const CharacterTable& tab) {
  return is_group_like(S, tab, fusion_partition(S, tab));
}

inline GroupLikeness is_group_like(const Scheme& S) {
  CharacterTable tab = character_table(S);
  return is_group_like(S, tab, fusion_partition(S, tab));
}

// Merges each fusion class into a single relation. Only defined for
// group-like schemes; the result is commutative with the fused adjacency
// algebra equal to the center.
struct FusionResult {
  FusionPartition partition;
  Scheme fused;
};

inline FusionResult fuse(const Scheme& S, const CharacterTable& tab) {
  FusionPartition F = fusion_partition(S, tab);
  GroupLikeness gl = is_group_like(S, tab, F);
  if (!gl.group_like)
    throw NotGroupLike("scheme is not group-like: center dimension " +
                       std::to_string(gl.center_dim) + ", fused size " +
                       std::to_string(gl.fused_size));
  std::vector<int> mat(std::size_t(S.n) * S.n);
  for (int i = 0; i < S.n; ++i)
    for (int j = 0; j < S.n; ++j)
      mat[std::size_t(i) * S.n + j] = F.class_of[S.at(i, j)];
  FusionResult out;
  out.partition = std::move(F);
  try {
    out.fused = validate_scheme(mat, S.n);
  } catch (const Error& e) {
    throw FusionNotAScheme(std::string("fused relation matrix is not a scheme: ") +
                           e.what());
  }
  detail::check(is_commutative(out.fused), "fused scheme is not commutative");
  return out;
}

}  // namespace ascheme
