#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "ascheme/char_table.hpp"
#include "ascheme/error.hpp"
#include "ascheme/group.hpp"
#include "ascheme/scheme.hpp"

namespace ascheme {

namespace detail {

// Integer tokenizer over a text buffer; '#' starts a comment to end of line.
// Keeps the position of the last token for error reports.
struct Cursor {
  const std::string& text;
  std::size_t i = 0;
  int line = 1, col = 1;
  int tok_line = 1, tok_col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  void step() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip() {
    while (i < text.size()) {
      char c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
  }

  long next_int(const std::string& what) {
    skip();
    tok_line = line;
    tok_col = col;
    if (i >= text.size())
      throw SyntaxError(line, col, "expected " + what + ", found end of input");
    bool neg = false;
    if (text[i] == '-') {
      neg = true;
      step();
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw SyntaxError(tok_line, tok_col, "expected an integer for " + what);
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000000L)
        throw SyntaxError(tok_line, tok_col, what + " is out of range");
      step();
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
        text[i] != '#')
      throw SyntaxError(tok_line, tok_col, "malformed integer for " + what);
    return neg ? -v : v;
  }

  void expect_end() {
    skip();
    if (i < text.size())
      throw SyntaxError(line, col, "unexpected trailing input");
  }
};

}  // namespace detail

// Header "n rank", then n rows of n relation indices in [0, rank).
// The labeling is normalized so that the diagonal relation is 0.
inline Scheme parse_scheme(const std::string& text) {
  detail::Cursor cur(text);
  long n = cur.next_int("point count");
  if (n < 1 || n > kMaxPoints)
    throw SyntaxError(cur.tok_line, cur.tok_col,
                      "point count must be in [1, " + std::to_string(kMaxPoints) + "]");
  long rank = cur.next_int("rank");
  int rank_line = cur.tok_line, rank_col = cur.tok_col;
  if (rank < 1 || rank > kMaxRank)
    throw SyntaxError(rank_line, rank_col,
                      "rank must be in [1, " + std::to_string(kMaxRank) + "]");
  std::vector<int> rel(std::size_t(n) * n);
  for (auto& e : rel) {
    long v = cur.next_int("relation entry");
    if (v < 0 || v >= rank)
      throw SyntaxError(cur.tok_line, cur.tok_col,
                        "relation index " + std::to_string(v) +
                            " is outside [0, " + std::to_string(rank) + ")");
    e = int(v);
  }
  cur.expect_end();
  int d = rel[0];
  if (d != 0)
    for (auto& e : rel) e = e == d ? 0 : e == 0 ? d : e;
  Scheme S = validate_scheme(rel, int(n));
  if (S.rank != rank)
    throw SyntaxError(rank_line, rank_col,
                      "header declares rank " + std::to_string(rank) + " but " +
                          std::to_string(S.rank) + " relation labels are used");
  return S;
}

inline std::string serialize_scheme(const Scheme& S) {
  std::string out = std::to_string(S.n) + " " + std::to_string(S.rank) + "\n";
  for (int x = 0; x < S.n; ++x) {
    for (int y = 0; y < S.n; ++y) {
      if (y) out += ' ';
      out += std::to_string(S.at(x, y));
    }
    out += '\n';
  }
  return out;
}

// Header "order", then the Cayley table; element 0 is the identity.
inline GroupSpec parse_group(const std::string& text) {
  detail::Cursor cur(text);
  long order = cur.next_int("group order");
  if (order < 1 || order > kMaxPoints)
    throw SyntaxError(cur.tok_line, cur.tok_col,
                      "group order must be in [1, " + std::to_string(kMaxPoints) + "]");
  GroupSpec G;
  G.order = int(order);
  G.mul.resize(std::size_t(order) * order);
  for (auto& e : G.mul) {
    long v = cur.next_int("product entry");
    if (v < 0 || v >= order)
      throw SyntaxError(cur.tok_line, cur.tok_col,
                        "element index " + std::to_string(v) +
                            " is outside [0, " + std::to_string(order) + ")");
    e = int(v);
  }
  cur.expect_end();
  validate_group(G);
  return G;
}

inline std::string serialize_group(const GroupSpec& G) {
  std::string out = std::to_string(G.order) + "\n";
  for (int x = 0; x < G.order; ++x) {
    for (int y = 0; y < G.order; ++y) {
      if (y) out += ' ';
      out += std::to_string(G.at(x, y));
    }
    out += '\n';
  }
  return out;
}

namespace detail {

// Integer when within 1e-6 of one, small rational p/q (q <= 12) when within
// 1e-6 of one, otherwise 9 significant digits.
inline std::string real_to_string(double x) {
  double r = std::round(x);
  if (std::abs(x - r) <= 1e-6) return std::to_string(std::llround(x));
  for (int q = 2; q <= 12; ++q) {
    double p = std::round(x * q);
    if (std::abs(x * q - p) <= 1e-6 * q) {
      long long pi = std::llround(x * q);
      long long g = std::gcd(std::llabs(pi), (long long)q);
      return std::to_string(pi / g) + "/" + std::to_string(q / g);
    }
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

inline std::string value_to_string(const Cplx& v) {
  if (std::abs(v.imag()) <= 1e-6) return real_to_string(v.real());
  return real_to_string(v.real()) + (v.imag() < 0 ? "-" : "+") +
         real_to_string(std::abs(v.imag())) + "i";
}

inline std::string pad_left(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

}  // namespace detail

// Fixed-width table: one column per relation, a rule, then the multiplicity
// column. Row labels chi_1, chi_2, ... in table order.
inline std::string format_character_table(const CharacterTable& tab) {
  int r = tab.rank;
  std::size_t nrows = tab.rows.size();
  std::vector<std::string> labels(nrows);
  std::vector<std::vector<std::string>> cells(nrows,
                                              std::vector<std::string>(r));
  std::vector<std::string> mults(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    labels[i] = "chi_" + std::to_string(i + 1);
    for (int j = 0; j < r; ++j)
      cells[i][j] = detail::value_to_string(tab.rows[i].values[j]);
    mults[i] = std::to_string(std::llround(tab.rows[i].multiplicity));
  }
  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> col_w(r);
  for (int j = 0; j < r; ++j) {
    col_w[j] = std::string("s" + std::to_string(j)).size();
    for (std::size_t i = 0; i < nrows; ++i)
      col_w[j] = std::max(col_w[j], cells[i][j].size());
  }
  std::size_t m_w = 1;
  for (const auto& m : mults) m_w = std::max(m_w, m.size());

  std::string out(label_w, ' ');
  for (int j = 0; j < r; ++j)
    out += "  " + detail::pad_left("s" + std::to_string(j), col_w[j]);
  out += "  |  " + detail::pad_left("m", m_w) + "\n";
  for (std::size_t i = 0; i < nrows; ++i) {
    out += labels[i] + std::string(label_w - labels[i].size(), ' ');
    for (int j = 0; j < r; ++j)
      out += "  " + detail::pad_left(cells[i][j], col_w[j]);
    out += "  |  " + detail::pad_left(mults[i], m_w) + "\n";
  }
  return out;
}

}  // namespace ascheme
