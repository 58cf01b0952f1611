#include "merminsim/noise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "merminsim/parallel.hpp"

namespace merminsim {

namespace {

const SingleSiteUnitary& pauli_x() {
  static const SingleSiteUnitary u =
      SingleSiteUnitary::qubit({0.0, 1.0, 1.0, 0.0});
  return u;
}

const SingleSiteUnitary& pauli_y() {
  static const SingleSiteUnitary u = SingleSiteUnitary::qubit(
      {0.0, cdouble(0, -1), cdouble(0, 1), 0.0});
  return u;
}

const SingleSiteUnitary& pauli_z() {
  static const SingleSiteUnitary u =
      SingleSiteUnitary::qubit({1.0, 0.0, 0.0, -1.0});
  return u;
}

void check_noise(const NoiseSpec& noise) {
  if (noise.depolarizing_p < 0.0 || noise.depolarizing_p > 1.0)
    throw std::invalid_argument("noise: depolarizing_p must be in [0, 1]");
  if (noise.readout_flip_m < 0.0 || noise.readout_flip_m > 0.5)
    throw std::invalid_argument("noise: readout_flip_m must be in [0, 0.5]");
  if (noise.detector_eta <= 0.0 || noise.detector_eta > 1.0)
    throw std::invalid_argument("noise: detector_eta must be in (0, 1]");
}

}  // namespace

QubitRegister apply_depolarizing_trajectory(const QubitRegister& state,
                                            double p, RngStream& rng) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing: p must be in [0, 1]");
  QubitRegister out = state;
  for (int site = 0; site < state.n_sites(); ++site) {
    const double gate = rng.next_unit();
    const double which = rng.next_unit();
    if (gate >= 0.75 * p) continue;
    const SingleSiteUnitary& err = which < 1.0 / 3.0   ? pauli_x()
                                   : which < 2.0 / 3.0 ? pauli_y()
                                                       : pauli_z();
    out = apply_single_site(out, site, err);
  }
  return out;
}

NoisyTermEstimate noisy_measure_term(const QubitRegister& state,
                                     const TermPattern& term,
                                     const NoiseSpec& noise,
                                     std::size_t n_shots, std::uint64_t seed,
                                     Realization realization) {
  if (term.n_sites != state.n_sites())
    throw std::invalid_argument("noisy_measure_term: site counts differ");
  check_noise(noise);
  const int n = state.n_sites();

  // Single-site depolarizing commutes with any single-site rotation as a
  // channel, so the trajectory may be drawn in the measurement frame.
  const SingleSiteUnitary mx = measurement_unitary(MeasureBasis::x, realization);
  const SingleSiteUnitary my = measurement_unitary(MeasureBasis::y, realization);
  QubitRegister rotated = state;
  for (int site = 0; site < n; ++site)
    rotated = apply_single_site(rotated, site,
                                (term.y_mask >> site) & 1 ? my : mx);

  NoisyTermEstimate est;
  est.pattern = term;
  long long sum = 0;
  for (std::size_t shot = 0; shot < n_shots; ++shot) {
    RngStream rng(seed, "traj", shot);
    const QubitRegister corrupted =
        apply_depolarizing_trajectory(rotated, noise.depolarizing_p, rng);
    std::uint64_t bits = born_sample(corrupted, rng);
    for (int site = 0; site < n; ++site)
      if (rng.next_unit() < noise.readout_flip_m)
        bits ^= std::uint64_t(1) << site;
    bool kept = true;
    for (int site = 0; site < n; ++site)
      if (rng.next_unit() >= noise.detector_eta) kept = false;
    if (!kept) {
      ++est.discarded;
      continue;
    }
    sum += std::popcount(bits) & 1 ? -1 : +1;
    ++est.retained;
  }

  if (est.retained == 0) {
    est.mean = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  const double r = static_cast<double>(est.retained);
  est.mean = static_cast<double>(sum) / r;
  if (est.retained >= 2) {
    // outcomes are +/-1: sample variance reduces to r(1 - mean^2)/(r-1)
    const double var = r * (1.0 - est.mean * est.mean) / (r - 1.0);
    est.std_error = std::sqrt(std::max(var, 0.0) / r);
  }
  return est;
}

NoisyFEstimate noisy_estimate_f(const QubitRegister& state,
                                MerminVariant variant, const NoiseSpec& noise,
                                std::size_t shots_per_term, std::uint64_t seed,
                                int threads, Realization realization) {
  const std::vector<TermPattern> terms =
      enumerate_terms(state.n_sites(), variant);
  NoisyFEstimate out;
  out.terms.resize(terms.size());
  parallel_for_index(terms.size(), threads, [&](std::size_t t) {
    const std::uint64_t term_seed = derive_seed(seed, "term", terms[t].y_mask);
    out.terms[t] = noisy_measure_term(state, terms[t], noise, shots_per_term,
                                      term_seed, realization);
  });
  long double f = 0.0L, var = 0.0L;
  std::size_t retained = 0, total = 0;
  for (const NoisyTermEstimate& est : out.terms) {
    f += (long double)est.pattern.sign * est.mean;
    var += (long double)est.std_error * est.std_error;
    retained += est.retained;
    total += est.retained + est.discarded;
  }
  out.f_hat = static_cast<double>(f);
  out.std_error = std::sqrt(static_cast<double>(var));
  out.retained_fraction =
      total == 0 ? 0.0
                 : static_cast<double>(retained) / static_cast<double>(total);
  return out;
}

std::vector<SweepRow> threshold_sweep(int n_sites, MerminVariant variant,
                                      NoiseAxis axis, std::vector<double> grid,
                                      std::size_t shots_per_term,
                                      std::uint64_t seed, int threads) {
  std::sort(grid.begin(), grid.end());
  const double branch_phase =
      variant == MerminVariant::odd_y ? std::numbers::pi / 2 : 0.0;
  const QubitRegister state = ghz_register(n_sites, branch_phase);

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    NoiseSpec noise;
    if (axis == NoiseAxis::depolarizing_p)
      noise.depolarizing_p = grid[k];
    else
      noise.readout_flip_m = grid[k];
    const std::uint64_t point_seed = derive_seed(seed, "grid", k);
    const NoisyFEstimate est = noisy_estimate_f(
        state, variant, noise, shots_per_term, point_seed, threads);
    SweepRow row;
    row.noise_value = grid[k];
    row.f_hat = est.f_hat;
    row.std_error = est.std_error;
    row.retained_fraction = est.retained_fraction;
    row.report = classify(n_sites, est.f_hat);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace merminsim
