#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "merminsim/bounds.hpp"
#include "merminsim/lhv.hpp"
#include "merminsim/rng.hpp"

using namespace merminsim;

TEST_SUITE("lhv-bounds") {

TEST_CASE("bound values") {
  CHECK(lhv_bound(2) == 2.0);
  CHECK(lhv_bound(3) == 2.0);
  CHECK(lhv_bound(4) == 4.0);
  CHECK(lhv_bound(5) == 4.0);
  CHECK(lhv_bound(6) == 8.0);
  CHECK(lhv_bound(8) == 16.0);
  CHECK(npartite_bound(3) == 2.0);
  CHECK(npartite_bound(4) == 4.0);
  CHECK(npartite_bound(8) == 64.0);
  CHECK_THROWS_AS(lhv_bound(0), std::invalid_argument);
}

TEST_CASE("classification distinguishes strict violation from the boundary") {
  const BoundReport above = classify(3, 2.5);
  CHECK(above.violates_lhv);
  CHECK(above.certifies_npartite);
  CHECK_FALSE(above.on_lhv_boundary);

  const BoundReport at = classify(3, 2.0);
  CHECK(at.on_lhv_boundary);
  CHECK(at.on_npartite_boundary);
  CHECK_FALSE(at.violates_lhv);
  CHECK_FALSE(at.certifies_npartite);

  const BoundReport almost = classify(3, 2.0 + 1e-12);
  CHECK(almost.on_lhv_boundary);  // within the 1e-9 boundary band
  CHECK_FALSE(almost.violates_lhv);

  const BoundReport below = classify(4, 3.0);
  CHECK_FALSE(below.violates_lhv);
  CHECK_FALSE(below.certifies_npartite);

  // N = 4: lhv and npartite bounds coincide at 4
  const BoundReport both = classify(4, 5.0);
  CHECK(both.violates_lhv);
  CHECK(both.certifies_npartite);
}

TEST_CASE("classify_nmin evaluates at the smallest particle number") {
  const BoundReport r = classify_nmin(3, 4.0);
  CHECK(r.n_sites == 3);
  CHECK(r.lhv_bound == 2.0);
  CHECK(r.violates_lhv);
  CHECK(r.certifies_npartite);
}

TEST_CASE("verdict lines carry the flags and pulls") {
  const BoundReport r = classify(3, 4.0);
  const std::string plain = verdict_line(r);
  CHECK(plain.find("N=3") != std::string::npos);
  CHECK(plain.find("violates_lhv=yes") != std::string::npos);
  CHECK(plain.find("certifies_npartite=yes") != std::string::npos);
  CHECK(plain.find("lhv_pull") == std::string::npos);

  const std::string with_error = verdict_line(r, 0.5);
  CHECK(with_error.find("lhv_pull=4") != std::string::npos);
  CHECK(with_error.find("npartite_pull=4") != std::string::npos);
}

TEST_CASE("strategy outcome decoding") {
  DeterministicStrategy s{2, 0b0110};
  CHECK(s.mx(0) == +1);
  CHECK(s.my(0) == -1);
  CHECK(s.mx(1) == -1);
  CHECK(s.my(1) == +1);
}

TEST_CASE("the product identity reproduces the literal term sum") {
  RngStream rng(77, "lhv", 0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rep % 7;
    const std::uint64_t bits =
        rng.next_u64() & ((std::uint64_t(1) << (2 * n)) - 1);
    const DeterministicStrategy s{n, bits};
    for (MerminVariant v : {MerminVariant::odd_y, MerminVariant::even_y}) {
      // strategy_f sums the 2^{N-1} terms literally; cross-check against
      // the closed form used by the brute-force scan
      long long literal = strategy_f(s, v);
      long long re = 1, im = 0;
      for (int j = 0; j < n; ++j) {
        const long long mx = s.mx(j), my = s.my(j);
        const long long nre = re * mx - im * my;
        im = re * my + im * mx;
        re = nre;
      }
      CHECK(literal == (v == MerminVariant::odd_y ? im : re));
    }
  }
}

TEST_CASE("brute force maximum saturates the closed-form bound") {
  for (int n = 2; n <= 6; ++n)
    for (MerminVariant v : {MerminVariant::odd_y, MerminVariant::even_y}) {
      const BruteForceResult result = brute_force_max(n, v);
      CHECK(result.max_f == lhv_bound(n));
      CHECK(result.n_strategies == std::uint64_t(1) << (2 * n));
      CHECK_FALSE(result.argmax.empty());
      CHECK(std::is_sorted(result.argmax.begin(), result.argmax.end()));
      for (std::size_t k = 0; k + 1 < result.argmax.size(); ++k)
        CHECK(result.argmax[k] != result.argmax[k + 1]);
      // every reported strategy actually reaches the maximum
      for (std::uint64_t bits : result.argmax)
        CHECK(strategy_f(DeterministicStrategy{n, bits}, v) ==
              (long long)result.max_f);
    }
}

TEST_CASE("brute force is thread count independent") {
  const BruteForceResult one = brute_force_max(5, MerminVariant::odd_y, 1);
  const BruteForceResult four = brute_force_max(5, MerminVariant::odd_y, 4);
  CHECK(one.max_f == four.max_f);
  CHECK(one.argmax == four.argmax);
}

TEST_CASE("site counts beyond the enumeration limit are refused") {
  CHECK_THROWS_AS(brute_force_max(13, MerminVariant::odd_y),
                  std::invalid_argument);
}

TEST_CASE("mixtures cannot beat the deterministic maximum") {
  RngStream rng(78, "mix", 0);
  const int n = 4;
  const BruteForceResult best = brute_force_max(n, MerminVariant::odd_y);
  for (int rep = 0; rep < 20; ++rep) {
    StrategyMixture mix;
    mix.n_sites = n;
    double total = 0.0;
    std::vector<double> raw;
    for (int k = 0; k < 5; ++k) {
      mix.strategies.push_back(rng.next_u64() &
                               ((std::uint64_t(1) << (2 * n)) - 1));
      raw.push_back(rng.next_unit() + 1e-3);
      total += raw.back();
    }
    for (double w : raw) mix.weights.push_back(w / total);
    CHECK(mixture_f(mix, MerminVariant::odd_y) <= best.max_f + 1e-12);
  }
}

TEST_CASE("mixture validation") {
  StrategyMixture mix;
  mix.n_sites = 2;
  mix.strategies = {0, 1};
  mix.weights = {0.6, 0.6};
  CHECK_THROWS_AS(mixture_f(mix, MerminVariant::odd_y), std::invalid_argument);
  mix.weights = {0.5};
  CHECK_THROWS_AS(mixture_f(mix, MerminVariant::odd_y), std::invalid_argument);
  mix.weights = {1.5, -0.5};
  CHECK_THROWS_AS(mixture_f(mix, MerminVariant::odd_y), std::invalid_argument);
}

}  // TEST_SUITE
