#pragma once

#include <optional>
#include <vector>

#include "cyclift/presentation.hpp"

namespace cyclift {

/// A monodromy vector for an n-fold strongly-cyclic branched covering:
/// the meridian g maps to 1 and a<i> maps to x[i-1] in Z_n. Valid for a
/// presentation exactly when H x + b = 0 (mod n).
struct Monodromy {
  long long n = 0;
  std::vector<long long> x;  // entries in [0, n)

  friend bool operator==(const Monodromy&, const Monodromy&) = default;
};

/// Existence criterion: gcd(e_i, n) = gcd(e'_i, n) for every i, with
/// gcd(0, n) = n.
bool covering_exists(const HomologyData& h, long long n);

/// Number of non-equivalent n-fold strongly-cyclic branched coverings:
/// n^d * prod gcd(t_k, n), or 0 when none exists. Depends only on the
/// homology of the ambient manifold.
Int covering_count(const HomologyData& h, long long n);

/// Materialized monodromy list, lexicographically ordered.
struct MonodromyEnumeration {
  Int total = 0;  // exact solution count
  std::vector<Monodromy> monodromies;
  bool truncated = false;
};

/// Enumerates the solutions of H x = -b (mod n) through the congruence
/// solver. With a cap the list is truncated (flagged); without one the
/// whole set is materialized and CountExceedsLimit is thrown when it is
/// larger than an internal guard.
MonodromyEnumeration enumerate_monodromies(const HomologyData& h, long long n,
                                           std::optional<std::size_t> cap = std::nullopt);

/// Independent oracle: exhaustive scan of (Z_n)^g. Guarded by
/// SearchSpaceTooLarge for n^g > 10^7. Output is lexicographic.
std::vector<Monodromy> brute_force_monodromies(const HomologyData& h, long long n);

/// The full answer for one (presentation, n) query. exists <=> count > 0;
/// monodromies, when materialized, hold the first cap solutions and
/// truncated flags whether anything was cut (absent entirely when the set
/// is too large to materialize at all).
struct CoveringReport {
  long long n = 0;
  bool exists = false;
  Int count = 0;
  std::optional<std::vector<Monodromy>> monodromies;
  bool truncated = false;
};

CoveringReport covering_report(const HomologyData& h, long long n,
                               std::optional<std::size_t> cap = std::nullopt);

/// Uniqueness criterion: the ambient homology is finite (d = 0) and its
/// order is coprime to n. Implies covering_count == 1.
bool unique_covering(const HomologyData& h, long long n);

/// Monodromy equivalence x'' = u x' for a unit u with u * 1 = 1 (mod n).
/// With the meridian image pinned to 1 this forces u = 1, so the predicate
/// collapses to equality; kept as the documented definitional check.
bool equivalent_monodromies(const std::vector<long long>& x1,
                            const std::vector<long long>& x2, long long n);

}  // namespace cyclift
