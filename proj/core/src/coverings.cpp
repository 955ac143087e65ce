#include "cyclift/coverings.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

// Monodromy lists beyond this size are never materialized.
constexpr std::size_t kMaxMaterialize = 1'000'000;

void require_modulus(long long n) {
  if (n < 2) {
    throw InputError("covering order n must be >= 2");
  }
}

bool solves(const HomologyData& h, const std::vector<long long>& x, long long n) {
  for (int i = 0; i < h.genus; ++i) {
    Int acc = h.b[i];
    for (int j = 0; j < h.genus; ++j) {
      acc += h.H(i, j) * x[j];
    }
    if (acc % n != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool covering_exists(const HomologyData& h, long long n) {
  require_modulus(n);
  for (int i = 0; i < h.genus; ++i) {
    if (gcd(h.e[i], Int(n)) != gcd(h.eprime[i], Int(n))) {
      return false;
    }
  }
  return true;
}

Int covering_count(const HomologyData& h, long long n) {
  require_modulus(n);
  if (!covering_exists(h, n)) {
    return 0;
  }
  Int count = pow(Int(n), h.d);
  for (const Int& t : h.torsion) {
    count *= gcd(t, Int(n));
  }
  return count;
}

MonodromyEnumeration enumerate_monodromies(const HomologyData& h, long long n,
                                           std::optional<std::size_t> cap) {
  require_modulus(n);
  const CongruenceSolutionSet set = solve_congruences(h.H, h.b, n);
  MonodromyEnumeration out;
  out.total = set.cardinality();
  if (!set.solvable()) {
    return out;
  }
  if (out.total > kMaxMaterialize) {
    throw CountExceedsLimit(out.total.str());
  }
  std::vector<std::vector<long long>> vectors = set.materialize(kMaxMaterialize);
  std::sort(vectors.begin(), vectors.end());
  if (cap && vectors.size() > *cap) {
    vectors.resize(*cap);
    out.truncated = true;
  }
  out.monodromies.reserve(vectors.size());
  for (auto& v : vectors) {
    assert(solves(h, v, n));
    out.monodromies.push_back(Monodromy{n, std::move(v)});
  }
  return out;
}

std::vector<Monodromy> brute_force_monodromies(const HomologyData& h, long long n) {
  require_modulus(n);
  const int g = h.genus;
  Int space = pow(Int(n), g);
  if (space > 10'000'000) {
    throw SearchSpaceTooLarge("n^g = " + space.str() + " exceeds the scan guard");
  }
  std::vector<Monodromy> out;
  std::vector<long long> x(g, 0);
  while (true) {
    if (solves(h, x, n)) {
      out.push_back(Monodromy{n, x});
    }
    // lexicographic odometer, last coordinate fastest
    int k = g - 1;
    for (; k >= 0; --k) {
      if (++x[k] < n) {
        break;
      }
      x[k] = 0;
    }
    if (k < 0) {
      break;
    }
  }
  return out;
}

CoveringReport covering_report(const HomologyData& h, long long n,
                               std::optional<std::size_t> cap) {
  CoveringReport report;
  report.n = n;
  report.exists = covering_exists(h, n);
  report.count = covering_count(h, n);
  try {
    MonodromyEnumeration enumeration = enumerate_monodromies(h, n, cap);
    report.monodromies = std::move(enumeration.monodromies);
    report.truncated = enumeration.truncated;
  } catch (const CountExceedsLimit&) {
    report.truncated = true;  // count survives, the list does not
  }
  return report;
}

bool unique_covering(const HomologyData& h, long long n) {
  require_modulus(n);
  if (h.d != 0) {
    return false;
  }
  Int order = 1;
  for (const Int& t : h.torsion) {
    order *= t;
  }
  return gcd(order, Int(n)) == 1;
}

bool equivalent_monodromies(const std::vector<long long>& x1,
                            const std::vector<long long>& x2, long long n) {
  require_modulus(n);
  if (x1.size() != x2.size()) {
    return false;
  }
  for (long long u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1 || u % n != 1) {
      continue;  // u must also fix the meridian image 1
    }
    bool match = true;
    for (std::size_t i = 0; i < x1.size(); ++i) {
      if ((Int(u) * x1[i] - x2[i]) % n != 0) {
        match = false;
        break;
      }
    }
    if (match) {
      return true;
    }
  }
  return false;
}

}  // namespace cyclift
