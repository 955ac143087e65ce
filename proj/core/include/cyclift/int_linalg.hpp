#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclift/word.hpp"  // Int

namespace cyclift {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<Int> entries);
  static IntMatrix identity(int k);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Int& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int rows_;
  int cols_;
  std::vector<Int> entries_;
};

std::string to_string(const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, nonnegative,
/// each entry dividing the next, zeros trailing. All four equalities are
/// re-checked on construction; a failure throws InvariantViolation.
struct SnfResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  /// Diagonal of D as a vector of length min(rows, cols).
  std::vector<Int> diagonal() const;
};

/// Smith normal form by elementary row/column operations, pivoting on the
/// smallest nonzero absolute value (row-major tie-break). Zero and
/// non-square inputs are fine.
SnfResult smith_normal_form(const IntMatrix& m);

/// Invariant factors of m: the nonzero diagonal of its Smith form followed
/// by zeros, padded to length pad_to. Throws PadTooShort if pad_to is less
/// than the number of nonzero factors.
std::vector<Int> invariant_factors(const IntMatrix& m, int pad_to);

/// The set of x in (Z_n)^g with H x = -b (mod n), described by one
/// particular solution and independent homogeneous generators with their
/// periods. Empty set <=> particular is absent.
struct CongruenceSolutionSet {
  struct BasisVector {
    std::vector<long long> vec;  // entries in [0, n)
    long long period;            // divides n, > 1
  };

  long long modulus = 0;
  std::optional<std::vector<long long>> particular;
  std::vector<BasisVector> basis;

  bool solvable() const noexcept { return particular.has_value(); }

  /// Product of the basis periods, or 0 when unsolvable.
  Int cardinality() const;

  /// All solutions, each entry in [0, n), in basis-odometer order
  /// (callers wanting lexicographic order sort afterwards). Throws
  /// CountExceedsLimit when the cardinality exceeds max_size.
  std::vector<std::vector<long long>> materialize(std::size_t max_size) const;
};

/// Structured solution of H x = -b (mod n) for square H via the Smith
/// form: with U H V = D the system splits into scalar congruences
/// D_ii y_i = (U(-b))_i whose solutions are transported back through V.
CongruenceSolutionSet solve_congruences(const IntMatrix& H, const std::vector<Int>& b,
                                        long long n);

}  // namespace cyclift
