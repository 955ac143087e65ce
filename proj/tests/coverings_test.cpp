#include "cyclift/coverings.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclift/errors.hpp"
#include "cyclift/selftest.hpp"
#include "oracles.hpp"

using namespace cyclift;

namespace {

HomologyData takahashi(long long r, long long p) {
  const std::string text = "genus 2\nrel a2 a1^-" + std::to_string(r) +
                           " g a2^-1 g^-1\nrel a1 g a2^" + std::to_string(p) +
                           " a1^-1 g^-1\n";
  return abelianize(parse_presentation(text));
}

HomologyData trivial_knot(int g) {
  return abelianize(KnotGroupPresentation(g, std::vector<Word>(g)));
}

HomologyData core_knot(int g) {
  std::vector<Word> relators(g);
  relators[0] = Word({Syllable{Generator::gamma(), 1}});
  return abelianize(KnotGroupPresentation(g, std::move(relators)));
}

// genus-1 knot whose ambient manifold is a homology sphere
HomologyData sphere_knot() {
  return abelianize(parse_presentation("genus 1\nrel a1 g^2\n"));
}

std::vector<long long> xs(const std::vector<Monodromy>& monos) {
  std::vector<long long> flat;
  for (const auto& m : monos) {
    flat.insert(flat.end(), m.x.begin(), m.x.end());
  }
  return flat;
}

}  // namespace

TEST_CASE("covering existence") {
  for (long long n = 2; n <= 10; ++n) {
    CHECK(covering_exists(trivial_knot(2), n));
    CHECK(covering_exists(trivial_knot(4), n));
    CHECK_FALSE(covering_exists(core_knot(1), n));
    CHECK_FALSE(covering_exists(core_knot(3), n));
  }
  CHECK(covering_exists(takahashi(2, 3), 5));
  CHECK_THROWS_AS(covering_exists(trivial_knot(1), 1), InputError);
}

TEST_CASE("covering counts") {
  for (int g = 1; g <= 4; ++g) {
    for (long long n = 2; n <= 10; ++n) {
      CHECK(covering_count(trivial_knot(g), n) == pow(Int(n), g));
      if (g <= 3) {
        CHECK(covering_count(core_knot(g), n) == 0);
      }
    }
  }
  CHECK(covering_count(takahashi(2, 3), 2) == 2);  // gcd(6, 2)
  CHECK(covering_count(takahashi(2, 3), 6) == 6);
  // knots in homology spheres admit exactly one covering for every n
  for (long long n = 2; n <= 12; ++n) {
    CHECK(covering_count(sphere_knot(), n) == 1);
    CHECK(unique_covering(sphere_knot(), n));
  }
}

TEST_CASE("unique coverings") {
  CHECK(unique_covering(takahashi(2, 3), 5));        // gcd(6, 5) = 1
  CHECK_FALSE(unique_covering(takahashi(2, 3), 2));  // 2 | 6
  CHECK_FALSE(unique_covering(trivial_knot(2), 7));  // infinite homology
  for (long long n = 2; n <= 8; ++n) {
    if (unique_covering(takahashi(2, 3), n)) {
      CHECK(covering_count(takahashi(2, 3), n) == 1);
    }
  }
}

TEST_CASE("enumerate_monodromies") {
  SUBCASE("Takahashi n=2") {
    const auto e = enumerate_monodromies(takahashi(2, 3), 2);
    CHECK(e.total == 2);
    CHECK_FALSE(e.truncated);
    REQUIRE(e.monodromies.size() == 2);
    CHECK(e.monodromies[0].x == std::vector<long long>{0, 0});
    CHECK(e.monodromies[1].x == std::vector<long long>{1, 0});
  }
  SUBCASE("core knot has none") {
    const auto e = enumerate_monodromies(core_knot(2), 3);
    CHECK(e.total == 0);
    CHECK(e.monodromies.empty());
  }
  SUBCASE("trivial knot g=1 n=3") {
    const auto e = enumerate_monodromies(trivial_knot(1), 3);
    CHECK(e.total == 3);
    CHECK(xs(e.monodromies) == std::vector<long long>{0, 1, 2});
  }
  SUBCASE("cap truncates with a flag") {
    const auto e = enumerate_monodromies(trivial_knot(2), 10, 5);
    CHECK(e.total == 100);
    CHECK(e.truncated);
    CHECK(e.monodromies.size() == 5);
    CHECK(e.monodromies[0].x == std::vector<long long>{0, 0});
    CHECK(e.monodromies[4].x == std::vector<long long>{0, 4});
  }
  SUBCASE("materialization guard carries the exact count") {
    // 101^3 = 1030301 > 10^6
    CHECK_THROWS_AS(enumerate_monodromies(trivial_knot(3), 101), CountExceedsLimit);
    try {
      enumerate_monodromies(trivial_knot(3), 101);
      FAIL("expected CountExceedsLimit");
    } catch (const CountExceedsLimit& e) {
      CHECK(e.count() == "1030301");
    }
  }
}

TEST_CASE("brute_force_monodromies") {
  CHECK(brute_force_monodromies(trivial_knot(2), 3).size() == 9);
  // Takahashi n=6: 2 x1 = 0 and 3 x2 = 0 mod 6
  const auto monos = brute_force_monodromies(takahashi(2, 3), 6);
  REQUIRE(monos.size() == 6);
  std::vector<std::vector<long long>> got;
  for (const auto& m : monos) {
    got.push_back(m.x);
  }
  CHECK(got == std::vector<std::vector<long long>>{
                   {0, 0}, {0, 2}, {0, 4}, {3, 0}, {3, 2}, {3, 4}});
  CHECK_THROWS_AS(brute_force_monodromies(trivial_knot(4), 100), SearchSpaceTooLarge);
}

TEST_CASE("covering_report") {
  const CoveringReport full = covering_report(takahashi(2, 3), 6);
  CHECK(full.exists);
  CHECK(full.count == 6);
  REQUIRE(full.monodromies.has_value());
  CHECK(full.monodromies->size() == 6);
  CHECK_FALSE(full.truncated);

  const CoveringReport none = covering_report(core_knot(2), 5);
  CHECK_FALSE(none.exists);
  CHECK(none.count == 0);
  CHECK(none.monodromies->empty());

  const CoveringReport capped = covering_report(trivial_knot(2), 7, 3);
  CHECK(capped.count == 49);
  CHECK(capped.monodromies->size() == 3);
  CHECK(capped.truncated);

  // 101^4 > 10^6: the count survives, the list does not
  const CoveringReport huge = covering_report(trivial_knot(4), 101);
  CHECK(huge.count == Int("104060401"));
  CHECK_FALSE(huge.monodromies.has_value());
  CHECK(huge.truncated);

  // exists <=> count > 0 across a random sample
  std::mt19937_64 rng(9000);
  for (int c = 0; c < 100; ++c) {
    const HomologyData h = abelianize(random_presentation(rng, 3, 10, 4));
    const long long n = rand_range(rng, 2, 9);
    const CoveringReport r = covering_report(h, n, 50);
    CHECK(r.exists == (r.count > 0));
    if (r.monodromies && !r.truncated) {
      CHECK(Int(r.monodromies->size()) == r.count);
    }
  }
}

TEST_CASE("equivalent monodromies collapse to equality under the normalization") {
  CHECK(equivalent_monodromies({1, 2}, {1, 2}, 5));
  CHECK_FALSE(equivalent_monodromies({1, 2}, {2, 4}, 5));  // u=2 does not fix 1
  CHECK_FALSE(equivalent_monodromies({1, 2}, {1, 3}, 5));
  CHECK_FALSE(equivalent_monodromies({1, 2}, {1}, 5));
}

TEST_CASE("theorem-style properties on random presentations") {
  std::mt19937_64 rng(271828);
  for (int c = 0; c < 500; ++c) {
    const KnotGroupPresentation p = random_presentation(rng, 3, 12, 5);
    const long long n = rand_range(rng, 2, 10);
    const HomologyData h = abelianize(p);
    const auto brute = brute_force_monodromies(h, n);

    CHECK(covering_exists(h, n) == !brute.empty());
    CHECK(covering_count(h, n) == Int(brute.size()));
    if (unique_covering(h, n)) {
      CHECK(covering_count(h, n) == 1);
    }
    const auto enumerated = enumerate_monodromies(h, n);
    CHECK(enumerated.monodromies == brute);

    // every monodromy solves H x + b = 0 mod n
    for (const auto& m : enumerated.monodromies) {
      for (int i = 0; i < h.genus; ++i) {
        Int acc = h.b[i];
        for (int j = 0; j < h.genus; ++j) {
          acc += h.H(i, j) * m.x[j];
        }
        CHECK(acc % n == 0);
      }
    }

    // the count only sees the homology: permuting relators changes nothing
    std::vector<Word> shuffled = p.relators();
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rand_range(rng, 0, i - 1)]);
    }
    const HomologyData hs =
        abelianize(KnotGroupPresentation(p.genus(), std::move(shuffled)));
    CHECK(covering_count(hs, n) == covering_count(h, n));
  }
}
