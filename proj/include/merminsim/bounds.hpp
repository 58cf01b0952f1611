#pragma once

#include <optional>
#include <string>

namespace merminsim {

// Largest value any local deterministic (or mixed) model can reach:
// 2^{N/2} for even N, 2^{(N-1)/2} for odd N.
double lhv_bound(int n_sites);

// Threshold certifying genuinely N-partite entanglement: 2^{N-2}.
double npartite_bound(int n_sites);

struct BoundReport {
  int n_sites = 0;
  double f_value = 0.0;
  double lhv_bound = 0.0;
  double npartite_bound = 0.0;
  bool violates_lhv = false;       // strict inequality
  bool certifies_npartite = false; // strict inequality
  bool on_lhv_boundary = false;
  bool on_npartite_boundary = false;
};

BoundReport classify(int n_sites, double f_value);

// Same bounds evaluated at the smallest particle number of a run ensemble.
BoundReport classify_nmin(int n_min, double f_value);

// One-line machine-readable verdict; includes (F - bound)/std_error pulls
// when a standard error is supplied.
std::string verdict_line(const BoundReport& report,
                         std::optional<double> std_error = std::nullopt);

}  // namespace merminsim
