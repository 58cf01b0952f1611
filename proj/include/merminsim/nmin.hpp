#pragma once

// Correlation measurements when the particle number fluctuates shot to shot.
// Patterns are chosen over the first n_min sites (the smallest number that
// can occur); any extra sites present in a given run are measured in sigma_x
// and their outcomes multiply into the product. On the two-branch states used
// here the extended product reproduces the n_min-site correlation exactly, so
// the bound classification at n_min applies to the ensemble estimate.

#include <cstdint>
#include <vector>

#include "merminsim/bounds.hpp"
#include "merminsim/measurement.hpp"
#include "merminsim/rng.hpp"

namespace merminsim {

struct NumberDistribution {
  // (particle number >= 2, probability); probabilities sum to 1 within 1e-12.
  std::vector<std::pair<int, double>> support;

  static NumberDistribution uniform(const std::vector<int>& ns);

  void validate() const;
  int n_min() const;
  int n_max() const;
  int sample(RngStream& rng) const;
};

struct RunRecord {
  int drawn_n = 0;
  TermPattern extended;            // base pattern padded with sigma_x
  std::uint64_t outcome_bits = 0;  // over all drawn_n sites
  int product = +1;
  bool retained = true;
};

// One run in constructive mode: draw N, prepare the ideal N-site state of the
// variant, measure the extended pattern.
RunRecord simulate_run(const NumberDistribution& dist,
                       const TermPattern& base_pattern, MerminVariant variant,
                       RngStream& rng,
                       Realization realization = Realization::bec);

enum class NminMode {
  constructive,  // every run uses the requested pattern; nothing is discarded
  rejection,     // runs draw a uniform pattern over all N sites and are kept
                 // only when its y sites fall inside the first n_min
};

struct NminTermStat {
  TermPattern pattern;  // over n_min sites
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t runs = 0;
  std::size_t retained = 0;
};

struct NminEstimate {
  double f_hat = 0.0;
  double std_error = 0.0;
  std::vector<NminTermStat> terms;
  BoundReport report;  // classify_nmin at the distribution's n_min
  std::size_t total_runs = 0;
  std::size_t retained_runs = 0;
};

// Both modes estimate the same F (agreement within errors); rejection mode
// draws enough runs that each pattern is expected to retain ~runs_per_term.
NminEstimate estimate_f_nmin(const NumberDistribution& dist,
                             MerminVariant variant, NminMode mode,
                             std::size_t runs_per_term, std::uint64_t seed,
                             Realization realization = Realization::bec);

}  // namespace merminsim
