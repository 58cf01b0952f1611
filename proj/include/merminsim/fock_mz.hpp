#pragma once

// Two-mode Fock-space model of the nonlinear Mach-Zehnder preparation stage:
// all N atoms enter one arm, pass a 50:50 splitter, accumulate a Kerr phase
// in one arm, and recombine. The output is a two-branch superposition of
// "all atoms up" and "all atoms down", which a Mott transition maps onto an
// N-site register.

#include <cstdint>

#include "merminsim/state.hpp"

namespace merminsim {

// amps[k] is the amplitude for k atoms in the upper mode (N-k in the lower).
class TwoModeFock {
 public:
  TwoModeFock(int n_atoms, std::vector<cdouble> amplitudes);

  static TwoModeFock all_upper(int n_atoms);

  int n_atoms() const { return n_atoms_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amps() const { return amps_; }
  cdouble amp(int k) const { return amps_.at(k); }

 private:
  int n_atoms_;
  std::vector<cdouble> amps_;
};

// exp(+i theta (a†b + ab†)) with <k-1|a|k> = sqrt(k); the sign is fixed so a
// single atom in the upper mode maps to (|upper> + i|lower>)/sqrt(2) at
// theta = pi/4. Evaluated through an exact eigendecomposition of the
// tridiagonal coupling matrix.
TwoModeFock fock_beam_splitter(const TwoModeFock& state, double theta);

// Collisional phase in the upper arm: amps[k] *= exp(-i phase k(k-1)).
TwoModeFock kerr_evolution(const TwoModeFock& state, double phase);

// Linear phase between the arms: amps[k] *= exp(+i phi k).
TwoModeFock relative_mode_phase(const TwoModeFock& state, double phi);

struct MzSchedule {
  double splitter_angle = 0.7853981633974483;  // pi/4
  double kerr_phase = 1.5707963267948966;      // pi/2
  // Linear arm phase applied between the Kerr stage and the recombining
  // splitter. Without it the interferometer leaves the atoms in an x-basis
  // superposition instead of the two-branch up/down form; -pi/2 recombines
  // the two Kerr components onto the poles for every N.
  double arm_phase = -1.5707963267948966;
};

// splitter -> Kerr -> arm phase -> splitter, starting from all atoms upper.
// The result is supported on k = 0 and k = N with weight 1/2 each:
//   amps[N] = e^{+i pi/4} (-1)^N / sqrt(2),  amps[0] = e^{-i pi/4} i^N / sqrt(2).
TwoModeFock mz_prepare(int n_atoms, const MzSchedule& schedule = {});

// Mott transition onto a register: the k = N branch becomes |up..up>, the
// k = 0 branch becomes |down..down>. Rejects input with more than 1e-10
// probability outside those two components.
QubitRegister mott_map(const TwoModeFock& state);

// Rephase a two-branch register into (|up..up> + i|down..down>)/sqrt(2),
// recording the global and site-0 z-phase corrections.
CanonicalGhz canonicalize_phase(const QubitRegister& state);

struct BecPrepared {
  TwoModeFock interferometer_output;
  QubitRegister ghz;
  PhaseCorrection correction;
  double leakage;                // probability off the two Fock branches
  double fidelity_to_canonical;  // against ghz_register(n, pi/2)
};

// Full preparation chain: mz_prepare -> mott_map -> canonicalize_phase.
BecPrepared prepare_ghz_bec(int n_atoms, const MzSchedule& schedule = {});

}  // namespace merminsim
