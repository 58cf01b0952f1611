#pragma once

// Shot-based estimation of correlation terms. A term is measured by rotating
// every site with the basis unitary (sigma_x or sigma_y per the pattern),
// sampling in the up/down basis, and recording the outcome product
// (-1)^{number of down outcomes}.

#include <cstdint>
#include <vector>

#include "merminsim/mermin.hpp"
#include "merminsim/state.hpp"

namespace merminsim {

enum class MeasureBasis { x, y };

// Physical realization of the basis change; both produce the same detection
// maps (|x,+> and |y,+> to up, |x,-> and |y,-> to down), they only differ in
// how the unitary is factored into hardware steps.
enum class Realization { bec, cavity };

//   M_X = 1/sqrt(2) [[1,  1], [1, -1]]
//   M_Y = 1/sqrt(2) [[1, -i], [1,  i]]
// assembled from the realization's native steps (splitter plus arm phase for
// bec, z- then y-rotations for cavity) and phase-aligned; realizations agree
// to 1e-12.
SingleSiteUnitary measurement_unitary(MeasureBasis basis,
                                      Realization realization);

struct ShotRecord {
  std::uint64_t outcome_bits = 0;  // bit j: site j detected down
  std::uint64_t y_mask = 0;
  int product = +1;                // (-1)^{popcount(outcome_bits)}
};

std::vector<ShotRecord> sample_shots(const QubitRegister& state,
                                     std::uint64_t y_mask,
                                     std::size_t n_shots, std::uint64_t seed,
                                     Realization realization = Realization::bec);

struct TermEstimate {
  TermPattern pattern;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n); 0 for n < 2
  std::size_t n_shots = 0;
};

// Deterministic for a fixed seed; shots are drawn in fixed-size blocks with
// per-block derived seeds, so estimates are independent of threading.
TermEstimate measure_term(const QubitRegister& state, const TermPattern& term,
                          std::size_t n_shots, std::uint64_t seed,
                          Realization realization = Realization::bec);

struct FEstimate {
  double f_hat = 0.0;
  double std_error = 0.0;  // per-term errors combined in quadrature
  std::vector<TermEstimate> terms;
};

// Per-term seeds derive from (seed, "term", y_mask); terms may be evaluated
// on any number of threads with bit-identical results.
FEstimate estimate_f(const QubitRegister& state, MerminVariant variant,
                     std::size_t shots_per_term, std::uint64_t seed,
                     int threads = 1,
                     Realization realization = Realization::bec);

}  // namespace merminsim
