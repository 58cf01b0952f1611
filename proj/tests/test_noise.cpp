#include <doctest.h>

#include <cmath>
#include <numbers>

#include "merminsim/noise.hpp"

using namespace merminsim;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_SUITE("noise") {

TEST_CASE("zero probability trajectories leave the state alone") {
  const QubitRegister g = ghz_register(3, pi / 2);
  RngStream rng(1, "traj", 0);
  const QubitRegister out = apply_depolarizing_trajectory(g, 0.0, rng);
  for (std::uint64_t k = 0; k < g.dim(); ++k)
    CHECK(out.amp(k) == g.amp(k));
}

TEST_CASE("trajectories are reproducible") {
  const QubitRegister g = ghz_register(3, pi / 2);
  RngStream a(9, "traj", 5);
  RngStream b(9, "traj", 5);
  const QubitRegister one = apply_depolarizing_trajectory(g, 0.6, a);
  const QubitRegister two = apply_depolarizing_trajectory(g, 0.6, b);
  for (std::uint64_t k = 0; k < g.dim(); ++k) CHECK(one.amp(k) == two.amp(k));
}

TEST_CASE("single site flip rate matches p/2") {
  // on |0>, X and Y errors flip the outcome, Z does not: P(flip) = p/2
  const QubitRegister zero = QubitRegister::basis_state(1, 0);
  const double p = 0.3;
  int flips = 0;
  const int shots = 20000;
  for (int s = 0; s < shots; ++s) {
    RngStream rng(4, "traj", s);
    const QubitRegister out = apply_depolarizing_trajectory(zero, p, rng);
    flips += std::norm(out.amp(1)) > 0.5 ? 1 : 0;
  }
  const double rate = double(flips) / shots;
  const double sd = std::sqrt(0.15 * 0.85 / shots);
  CHECK(std::abs(rate - p / 2) < 5 * sd);
}

TEST_CASE("depolarizing shrinks correlations by (1-p)^N") {
  const int n = 3;
  const QubitRegister g = ghz_register(n, pi / 2);
  const TermPattern term{n, 1, +1};  // exact value +1 on the canonical GHZ
  const double p = 0.12;
  NoiseSpec noise;
  noise.depolarizing_p = p;
  const NoisyTermEstimate est = noisy_measure_term(g, term, noise, 20000, 5);
  const double want = std::pow(1.0 - p, n);
  CHECK(est.retained == 20000);
  CHECK(est.std_error > 0.0);
  CHECK(std::abs(est.mean - want) < 5 * est.std_error);
}

TEST_CASE("readout flips shrink correlations by (1-2m)^N") {
  const int n = 3;
  const QubitRegister g = ghz_register(n, pi / 2);
  const TermPattern term{n, 2, +1};
  const double m = 0.08;
  NoiseSpec noise;
  noise.readout_flip_m = m;
  const NoisyTermEstimate est = noisy_measure_term(g, term, noise, 20000, 6);
  const double want = std::pow(1.0 - 2 * m, n);
  CHECK(std::abs(est.mean - want) < 5 * est.std_error);
}

TEST_CASE("detector losses discard shots without biasing the mean") {
  const int n = 3;
  const QubitRegister g = ghz_register(n, pi / 2);
  const TermPattern term{n, 4, +1};
  NoiseSpec noise;
  noise.detector_eta = 0.8;
  const std::size_t shots = 10000;
  const NoisyTermEstimate est = noisy_measure_term(g, term, noise, shots, 7);
  const double keep = std::pow(0.8, n);
  const double sd = std::sqrt(keep * (1 - keep) / double(shots));
  CHECK(std::abs(double(est.retained) / double(shots) - keep) < 5 * sd);
  CHECK(est.retained + est.discarded == shots);
  CHECK(est.mean == 1.0);  // eigenstate: every retained shot reads +1
}

TEST_CASE("fully lossy runs flag all_discarded and a NaN mean") {
  const QubitRegister g = ghz_register(2, pi / 2);
  NoiseSpec noise;
  noise.detector_eta = 1e-9;
  const NoisyTermEstimate est =
      noisy_measure_term(g, TermPattern{2, 1, +1}, noise, 50, 8);
  CHECK(est.all_discarded());
  CHECK(std::isnan(est.mean));

  const NoisyFEstimate f =
      noisy_estimate_f(g, MerminVariant::odd_y, noise, 50, 8);
  CHECK(std::isnan(f.f_hat));
  CHECK(f.retained_fraction == 0.0);
}

TEST_CASE("noisy F with no noise reproduces the ideal estimate") {
  const QubitRegister g = ghz_register(3, pi / 2);
  const NoisyFEstimate est =
      noisy_estimate_f(g, MerminVariant::odd_y, NoiseSpec{}, 500, 9);
  CHECK(est.f_hat == 4.0);
  CHECK(est.retained_fraction == 1.0);
}

TEST_CASE("noisy estimates are thread count independent") {
  const QubitRegister g = ghz_register(3, pi / 2);
  NoiseSpec noise;
  noise.depolarizing_p = 0.2;
  const NoisyFEstimate one =
      noisy_estimate_f(g, MerminVariant::odd_y, noise, 400, 10, 1);
  const NoisyFEstimate eight =
      noisy_estimate_f(g, MerminVariant::odd_y, noise, 400, 10, 8);
  CHECK(one.f_hat == eight.f_hat);
  CHECK(one.std_error == eight.std_error);
}

TEST_CASE("sweep rows come back sorted with sane flags") {
  const auto rows =
      threshold_sweep(3, MerminVariant::odd_y, NoiseAxis::readout_flip_m,
                      {0.15, 0.0, 0.05}, 3000, 11);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].noise_value == 0.0);
  CHECK(rows[1].noise_value == 0.05);
  CHECK(rows[2].noise_value == 0.15);
  CHECK(rows[0].f_hat == 4.0);
  CHECK(rows[0].report.violates_lhv);
  CHECK_FALSE(rows[2].report.violates_lhv);
}

TEST_CASE("noise specs are validated") {
  const QubitRegister g = ghz_register(2, 0.0);
  NoiseSpec bad;
  bad.depolarizing_p = 1.5;
  CHECK_THROWS_AS(noisy_measure_term(g, TermPattern{2, 0, +1}, bad, 10, 1),
                  std::invalid_argument);
  bad = NoiseSpec{};
  bad.readout_flip_m = 0.6;
  CHECK_THROWS_AS(noisy_measure_term(g, TermPattern{2, 0, +1}, bad, 10, 1),
                  std::invalid_argument);
  bad = NoiseSpec{};
  bad.detector_eta = 0.0;
  CHECK_THROWS_AS(noisy_measure_term(g, TermPattern{2, 0, +1}, bad, 10, 1),
                  std::invalid_argument);
  RngStream rng(1, "traj", 0);
  CHECK_THROWS_AS(apply_depolarizing_trajectory(g, -0.1, rng),
                  std::invalid_argument);
}

}  // TEST_SUITE
