#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ascheme/error.hpp"

namespace ascheme {

// A finite group given by its multiplication table. Element 0 is the
// identity. mul[a*order + b] = a*b.
struct GroupSpec {
  int order = 0;
  std::vector<int> mul;

  int at(int a, int b) const { return mul[std::size_t(a) * order + b]; }
};

// Checks identity, the Latin-square property, and associativity.
inline void validate_group(const GroupSpec& G) {
  int n = G.order;
  if (n <= 0) throw NotAGroup("empty element set");
  if (G.mul.size() != std::size_t(n) * n)
    throw NotAGroup("multiplication table is not " + std::to_string(n) + "x" +
                    std::to_string(n));
  for (int v : G.mul)
    if (v < 0 || v >= n)
      throw NotAGroup("table entry out of range: " + std::to_string(v));
  for (int g = 0; g < n; ++g) {
    if (G.at(0, g) != g)
      throw NotAGroup("element 0 is not a left identity at " + std::to_string(g));
    if (G.at(g, 0) != g)
      throw NotAGroup("element 0 is not a right identity at " + std::to_string(g));
  }
  std::vector<char> seen(n);
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      if (seen[G.at(g, h)])
        throw NotAGroup("row " + std::to_string(g) + " repeats element " +
                        std::to_string(G.at(g, h)));
      seen[G.at(g, h)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      if (seen[G.at(h, g)])
        throw NotAGroup("column " + std::to_string(g) + " repeats element " +
                        std::to_string(G.at(h, g)));
      seen[G.at(h, g)] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.at(G.at(a, b), c) != G.at(a, G.at(b, c)))
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
}

inline int group_inverse(const GroupSpec& G, int g) {
  for (int h = 0; h < G.order; ++h)
    if (G.at(g, h) == 0) return h;
  throw NotAGroup("element " + std::to_string(g) + " has no inverse");
}

inline std::vector<int> element_orders(const GroupSpec& G) {
  std::vector<int> ord(G.order);
  for (int g = 0; g < G.order; ++g) {
    int x = g, k = 1;
    while (x != 0) {
      x = G.at(x, g);
      ++k;
    }
    ord[g] = k;
  }
  return ord;
}

inline bool is_abelian(const GroupSpec& G) {
  for (int a = 0; a < G.order; ++a)
    for (int b = a + 1; b < G.order; ++b)
      if (G.at(a, b) != G.at(b, a)) return false;
  return true;
}

// Classes ordered by least member; the identity class {0} comes first.
inline std::vector<std::vector<int>> conjugacy_classes(const GroupSpec& G) {
  std::vector<int> inv(G.order);
  for (int g = 0; g < G.order; ++g) inv[g] = group_inverse(G, g);
  std::vector<int> cls(G.order, -1);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < G.order; ++g) {
    if (cls[g] != -1) continue;
    int id = int(classes.size());
    std::vector<int> c;
    for (int a = 0; a < G.order; ++a) {
      int x = G.at(G.at(a, g), inv[a]);
      if (cls[x] == -1) {
        cls[x] = id;
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

inline std::vector<int> center_of(const GroupSpec& G) {
  std::vector<int> z;
  for (int g = 0; g < G.order; ++g) {
    bool central = true;
    for (int a = 0; a < G.order && central; ++a) central = G.at(g, a) == G.at(a, g);
    if (central) z.push_back(g);
  }
  return z;
}

// Subgroup generated by all commutators a b a^-1 b^-1, sorted.
inline std::vector<int> derived_subgroup(const GroupSpec& G) {
  std::vector<int> inv(G.order);
  for (int g = 0; g < G.order; ++g) inv[g] = group_inverse(G, g);
  std::vector<char> in(G.order, 0);
  std::vector<int> work;
  auto add = [&](int g) {
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  };
  add(0);
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b)
      add(G.at(G.at(a, b), inv[G.at(b, a)]));
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) add(G.at(work[i], work[j]));
  std::vector<int> out;
  for (int g = 0; g < G.order; ++g)
    if (in[g]) out.push_back(g);
  return out;
}

inline GroupSpec cyclic_group(int n) {
  if (n <= 0) throw InvalidGroup("cyclic group needs positive order");
  GroupSpec G;
  G.order = n;
  G.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul[std::size_t(a) * n + b] = (a + b) % n;
  return G;
}

// (a1,b1)(a2,b2) = (a1 a2, b1 b2); element (a,b) has index a*|B| + b.
inline GroupSpec direct_product(const GroupSpec& A, const GroupSpec& B) {
  GroupSpec G;
  G.order = A.order * B.order;
  G.mul.resize(std::size_t(G.order) * G.order);
  for (int a1 = 0; a1 < A.order; ++a1)
    for (int b1 = 0; b1 < B.order; ++b1)
      for (int a2 = 0; a2 < A.order; ++a2)
        for (int b2 = 0; b2 < B.order; ++b2) {
          int x = a1 * B.order + b1, y = a2 * B.order + b2;
          G.mul[std::size_t(x) * G.order + y] =
              A.at(a1, a2) * B.order + B.at(b1, b2);
        }
  return G;
}

// Symmetries of the m-gon, order 2m. Element (i, r) has index i + m*r;
// r = 1 marks the reflections.
inline GroupSpec dihedral_group(int m) {
  if (m <= 0) throw InvalidGroup("dihedral group needs m >= 1");
  GroupSpec G;
  G.order = 2 * m;
  G.mul.resize(std::size_t(G.order) * G.order);
  auto idx = [m](int i, int r) { return ((i % m) + m) % m + m * r; };
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < m; ++j)
        for (int s = 0; s < 2; ++s) {
          int x = idx(i, r), y = idx(j, s);
          int k = r == 0 ? i + j : i - j;
          G.mul[std::size_t(x) * G.order + y] = idx(k, r ^ s);
        }
  return G;
}

// Order 4m with presentation a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1.
// Element (i, r) on Z_2m x {0,1} has index i + 2m*r. dicyclic(2) is the
// quaternion group.
inline GroupSpec dicyclic_group(int m) {
  if (m <= 1) throw InvalidGroup("dicyclic group needs m >= 2");
  int n2 = 2 * m;
  GroupSpec G;
  G.order = 4 * m;
  G.mul.resize(std::size_t(G.order) * G.order);
  auto idx = [n2](int i, int r) { return ((i % n2) + n2) % n2 + n2 * r; };
  for (int i = 0; i < n2; ++i)
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < n2; ++j)
        for (int s = 0; s < 2; ++s) {
          int x = idx(i, r), y = idx(j, s);
          int k = r == 0 ? i + j : i - j;
          if (r == 1 && s == 1) k += m;
          G.mul[std::size_t(x) * G.order + y] = idx(k, r ^ s);
        }
  return G;
}

// C_n semidirect C_m where the C_m generator acts by x -> k*x on C_n.
// Needs k^m = 1 mod n. Element (i, j) has index i + n*j.
inline GroupSpec semidirect_cyclic(int n, int m, int k) {
  if (n <= 0 || m <= 0) throw InvalidGroup("semidirect factors need positive order");
  long long kk = 1;
  for (int j = 0; j < m; ++j) kk = kk * k % n;
  if (kk != 1 % n)
    throw InvalidGroup("action constant " + std::to_string(k) +
                       " does not have order dividing " + std::to_string(m));
  std::vector<int> kpow(m);
  kpow[0] = 1 % n;
  for (int j = 1; j < m; ++j) kpow[j] = int((long long)kpow[j - 1] * k % n);
  GroupSpec G;
  G.order = n * m;
  G.mul.resize(std::size_t(G.order) * G.order);
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < m; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2) {
          int x = i1 + n * j1, y = i2 + n * j2;
          int i = int((i1 + (long long)i2 * kpow[j1]) % n);
          G.mul[std::size_t(x) * G.order + y] = i + n * ((j1 + j2) % m);
        }
  return G;
}

// Even permutations of four points, ordered lexicographically (identity
// first). Product pq applies q, then p.
inline GroupSpec alternating4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  GroupSpec G;
  G.order = int(perms.size());
  G.mul.resize(std::size_t(G.order) * G.order);
  auto find = [&](const std::array<int, 4>& q) {
    return int(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b) {
      std::array<int, 4> q;
      for (int x = 0; x < 4; ++x) q[x] = perms[a][perms[b][x]];
      G.mul[std::size_t(a) * G.order + b] = find(q);
    }
  return G;
}

// (C2 x C2) semidirect C4, where the C4 generator swaps the two C2
// coordinates. Element (v, j) with v in {0..3} (bits) has index v + 4*j.
inline GroupSpec c2c2_semidirect_c4() {
  GroupSpec G;
  G.order = 16;
  G.mul.resize(256);
  auto act = [](int v, int j) { return j % 2 == 0 ? v : ((v & 1) << 1) | (v >> 1); };
  for (int v1 = 0; v1 < 4; ++v1)
    for (int j1 = 0; j1 < 4; ++j1)
      for (int v2 = 0; v2 < 4; ++v2)
        for (int j2 = 0; j2 < 4; ++j2) {
          int x = v1 + 4 * j1, y = v2 + 4 * j2;
          G.mul[std::size_t(x) * 16 + y] = (v1 ^ act(v2, j1)) + 4 * ((j1 + j2) % 4);
        }
  return G;
}

// Central product of the dihedral group of order 8 with C4 over their common
// C2 center. Realized on Z4 x Z2 x Z2 with the cocycle 2*b1*a2:
// (k1,a1,b1)(k2,a2,b2) = (k1+k2+2 b1 a2, a1+a2, b1+b2).
// Element (k,a,b) has index k + 4*(a + 2*b).
inline GroupSpec pauli_group16() {
  GroupSpec G;
  G.order = 16;
  G.mul.resize(256);
  for (int k1 = 0; k1 < 4; ++k1)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int k2 = 0; k2 < 4; ++k2)
          for (int a2 = 0; a2 < 2; ++a2)
            for (int b2 = 0; b2 < 2; ++b2) {
              int x = k1 + 4 * (a1 + 2 * b1), y = k2 + 4 * (a2 + 2 * b2);
              int k = (k1 + k2 + 2 * b1 * a2) % 4;
              G.mul[std::size_t(x) * 16 + y] =
                  k + 4 * (((a1 + a2) % 2) + 2 * ((b1 + b2) % 2));
            }
  return G;
}

struct NamedGroup {
  std::string name;
  GroupSpec group;
};

// Every group of order <= max_order up to isomorphism, for max_order <= 16.
inline std::vector<NamedGroup> group_catalog(int max_order) {
  if (max_order > 16)
    throw InvalidGroup("catalog covers orders up to 16, asked for " +
                       std::to_string(max_order));
  auto C = [](int n) { return cyclic_group(n); };
  std::vector<NamedGroup> all = {
      {"C1", C(1)},
      {"C2", C(2)},
      {"C3", C(3)},
      {"C4", C(4)},
      {"C2^2", direct_product(C(2), C(2))},
      {"C5", C(5)},
      {"C6", C(6)},
      {"S3", dihedral_group(3)},
      {"C7", C(7)},
      {"C8", C(8)},
      {"C4xC2", direct_product(C(4), C(2))},
      {"C2^3", direct_product(direct_product(C(2), C(2)), C(2))},
      {"D4", dihedral_group(4)},
      {"Q8", dicyclic_group(2)},
      {"C9", C(9)},
      {"C3^2", direct_product(C(3), C(3))},
      {"C10", C(10)},
      {"D5", dihedral_group(5)},
      {"C11", C(11)},
      {"C12", C(12)},
      {"C6xC2", direct_product(C(6), C(2))},
      {"D6", dihedral_group(6)},
      {"A4", alternating4()},
      {"Dic3", dicyclic_group(3)},
      {"C13", C(13)},
      {"C14", C(14)},
      {"D7", dihedral_group(7)},
      {"C15", C(15)},
      {"C16", C(16)},
      {"C8xC2", direct_product(C(8), C(2))},
      {"C4xC4", direct_product(C(4), C(4))},
      {"C4xC2^2", direct_product(direct_product(C(4), C(2)), C(2))},
      {"C2^4", direct_product(direct_product(C(2), C(2)),
                              direct_product(C(2), C(2)))},
      {"D8", dihedral_group(8)},
      {"Q16", dicyclic_group(4)},
      {"SD16", semidirect_cyclic(8, 2, 3)},
      {"M16", semidirect_cyclic(8, 2, 5)},
      {"D4xC2", direct_product(dihedral_group(4), C(2))},
      {"Q8xC2", direct_product(dicyclic_group(2), C(2))},
      {"C4:C4", semidirect_cyclic(4, 4, 3)},
      {"C2^2:C4", c2c2_semidirect_c4()},
      {"Pauli16", pauli_group16()},
  };
  std::vector<NamedGroup> out;
  for (auto& g : all)
    if (g.group.order <= max_order) out.push_back(std::move(g));
  return out;
}

}  // namespace ascheme
