#pragma once

#include <stdexcept>
#include <string>

namespace ascheme {

// Base of every failure this library reports. The subclass names the violated
// axiom or precondition; the message carries a concrete witness.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// validate_scheme: relation indices do not partition X x X with relation 0 as
// the diagonal (gap in the index range, broken diagonal, negative entry).
struct NotAPartition : Error { using Error::Error; };

// validate_scheme: the transpose of some relation is not a single relation.
struct NoTranspose : Error { using Error::Error; };

// validate_scheme: the path count lambda_{ghk} depends on the chosen pair of
// relation k; the message names (g,h,k) and two pairs with different counts.
struct IrregularIntersection : Error { using Error::Error; };

// A set argument that must be nonempty is empty.
struct EmptyInput : Error { using Error::Error; };

// Guarded size exceeded (closed-subset enumeration, parser caps).
struct RankTooLarge : Error { using Error::Error; };

// A verifier that needs rank > 3 was given a smaller scheme.
struct RankTooSmall : Error { using Error::Error; };

// A relation set required to be closed under the complex product is not.
struct NotClosed : Error { using Error::Error; };

// An operation defined only for commutative schemes got a noncommutative one.
struct NotCommutative : Error { using Error::Error; };

// Numerical splitting of the center failed after the reseed budget. Never
// silently accepted; the message reports the failing stage.
struct NumericalDegeneracy : Error { using Error::Error; };

// A quantity that must be a positive integer (multiplicity, degree) is not,
// beyond tolerance.
struct NonIntegralMultiplicity : Error { using Error::Error; };

// A restriction failed to decompose into nonnegative integer combinations of
// irreducible characters. Signals a bug or numerical failure, never accepted.
struct NonIntegralDecomposition : Error { using Error::Error; };

// A character product matched no row of the table (violated precondition or
// numerics).
struct NotARow : Error { using Error::Error; };

// fuse() requires a group-like scheme.
struct NotGroupLike : Error { using Error::Error; };

// fuse(): the merged relation matrix failed scheme validation. Hard error
// with the validation witness; never guessed around.
struct FusionNotAScheme : Error { using Error::Error; };

// A Cayley table is not a group (identity/permutation/associativity failure);
// the message carries a witness triple.
struct NotAGroup : Error { using Error::Error; };

// A GroupSpec precondition recheck failed inside a construction.
struct InvalidGroup : Error { using Error::Error; };

// Prime-index restriction dichotomy: a character satisfied neither case.
struct NeitherCaseHolds : Error { using Error::Error; };

// Text input could not be tokenized/shaped; carries line and column (1-based).
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(int line_, int column_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

namespace detail {
// Internal consistency assertion. Failures here mean a bug in this library,
// not bad input; they still throw so no wrong answer can escape.
inline void check(bool ok, const std::string& what) {
  if (!ok) throw Error("internal check failed: " + what);
}
}  // namespace detail

}  // namespace ascheme
