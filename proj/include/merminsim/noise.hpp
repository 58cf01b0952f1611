#pragma once

// Noise is simulated at the trajectory level: each shot draws its own error
// realization, so averages converge to the corresponding channels.
//   depolarizing p: per site apply I with prob 1-3p/4, else X, Y or Z (p/4
//     each) -> every x/y correlation scales by (1-p)^N on average
//   readout flip m: each recorded outcome sign flips with prob m
//     -> correlations scale by (1-2m)^N
//   detector efficiency eta: each site is registered with prob eta; a shot
//     missing any site is discarded (missing at random)

#include <cstdint>
#include <vector>

#include "merminsim/bounds.hpp"
#include "merminsim/measurement.hpp"
#include "merminsim/rng.hpp"

namespace merminsim {

struct NoiseSpec {
  double depolarizing_p = 0.0;
  double readout_flip_m = 0.0;
  double detector_eta = 1.0;
};

// One random Pauli-error realization (draws 2 values per site from rng).
QubitRegister apply_depolarizing_trajectory(const QubitRegister& state,
                                            double p, RngStream& rng);

struct NoisyTermEstimate {
  TermPattern pattern;
  double mean = 0.0;       // NaN when no shot was retained
  double std_error = 0.0;
  std::size_t retained = 0;
  std::size_t discarded = 0;

  bool all_discarded() const { return retained == 0; }
};

// Per-shot seeds derive from (seed, "traj", shot index): trajectories are
// independent and reproducible under any threading.
NoisyTermEstimate noisy_measure_term(const QubitRegister& state,
                                     const TermPattern& term,
                                     const NoiseSpec& noise,
                                     std::size_t n_shots, std::uint64_t seed,
                                     Realization realization = Realization::bec);

struct NoisyFEstimate {
  double f_hat = 0.0;
  double std_error = 0.0;
  double retained_fraction = 1.0;
  std::vector<NoisyTermEstimate> terms;
};

NoisyFEstimate noisy_estimate_f(const QubitRegister& state,
                                MerminVariant variant, const NoiseSpec& noise,
                                std::size_t shots_per_term, std::uint64_t seed,
                                int threads = 1,
                                Realization realization = Realization::bec);

enum class NoiseAxis { depolarizing_p, readout_flip_m };

struct SweepRow {
  double noise_value = 0.0;
  double f_hat = 0.0;
  double std_error = 0.0;
  double retained_fraction = 1.0;
  BoundReport report;
};

// Estimates F on the ideal N-site state of the variant at each grid value of
// the chosen axis (other noise parameters ideal). Rows come back sorted by
// noise value.
std::vector<SweepRow> threshold_sweep(int n_sites, MerminVariant variant,
                                      NoiseAxis axis,
                                      std::vector<double> grid,
                                      std::size_t shots_per_term,
                                      std::uint64_t seed, int threads = 1);

}  // namespace merminsim
