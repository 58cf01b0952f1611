#pragma once

// Cavity-QED preparation chain for N three-level atoms (levels e, g and a
// shielded storage level i). Atoms cross microwave rotation zones and a
// dispersive cavity; the first atom is parked in i while it picks up
// conditional phases with each partner, and the final state projects onto an
// N-qubit register in the {e, g} subspace.

#include <cstdint>
#include <vector>

#include "merminsim/state.hpp"

namespace merminsim {

AtomChainState chain_all_excited(int n_atoms);

// Rabi rotation in the {g, e} subspace of one atom. With g/e amplitudes
// (a, b): a -> a cos(angle) - i b sin(angle), b -> b cos(angle) - i a sin(angle).
// The i level is untouched. angle = pi/4 sends |e> to (|e> - i|g>)/sqrt(2).
AtomChainState rotate_ge(const AtomChainState& state, int atom, double angle);

// Exchange the e and i amplitudes of one atom (an involution).
AtomChainState swap_ei(const AtomChainState& state, int atom);

struct CavityGateSpec {
  // Dispersive interaction phase gamma*t. The default pi makes the two-atom
  // truth table diagonal: g,g / g,e / i,g fixed and i,e -> -i,e.
  double gamma_t = 3.141592653589793;
};

// Two atoms coupled through the cavity. In the ordered pair basis
// (first slot, second slot):
//   |g,g> -> |g,g>
//   |g,e> -> e^{-i gt} [cos(gt)|g,e> - i sin(gt)|e,g>]   (|e,g> symmetric)
//   |i,g> -> |i,g>,   |i,e> -> e^{-i gt}|i,e>            (i decouples)
//   |e,e> -> e^{-2i gt}|e,e>   (never populated by the standard schedule)
AtomChainState collisional_gate(const AtomChainState& state, int first_atom,
                                int second_atom,
                                const CavityGateSpec& gate = {});

// Differential light shift: the e amplitude of one site gains e^{-i theta_t}.
QubitRegister stark_z(const QubitRegister& state, int site, double theta_t);
AtomChainState stark_z(const AtomChainState& state, int atom, double theta_t);

struct StarkSpec {
  double theta_t = 0.0;
  // theta_t = eps (alpha_g - alpha_e) E^2 t  for a static field E applied
  // for time t with polarizability difference alpha_g - alpha_e.
  static StarkSpec from_fields(double eps, double alpha_g, double alpha_e,
                               double field, double time);
};

enum class ZoneKind {
  rotate_all,   // Rabi pulse on every atom          (angle)
  rotate_one,   // Rabi pulse on a single atom       (atom, angle)
  swap_first,   // e <-> i on the first atom
  collision,    // cavity gate, first atom with atom (atom, gamma_t)
};

struct ZoneStep {
  ZoneKind kind;
  int atom = 0;
  double parameter = 0.0;
};

struct PipelineSchedule {
  int n_atoms = 0;
  std::vector<ZoneStep> steps;

  // The standard sequence: rotate all atoms by pi/4, park atom 0 in i, then
  // for each partner k >= 1 a collision followed by a pi/4 rotation on k,
  // and finally retrieve atom 0 from i.
  static PipelineSchedule standard(int n_atoms,
                                   const CavityGateSpec& gate = {});
};

// Runs the schedule from |e..e>. Rejects schedules whose atom indices are out
// of range or whose collisions do not pair atom 0 with each of 1..N-1 exactly
// once.
AtomChainState build_ghz_cavity(int n_atoms, const PipelineSchedule& schedule);
AtomChainState build_ghz_cavity(int n_atoms, const CavityGateSpec& gate = {});

double i_population(const AtomChainState& state);
double i_population(const AtomChainState& state, int atom);

// Reinterpret the {e, g} subspace as qubits (e -> bit 0, g -> bit 1) and
// renormalize. Rejects i population above 1e-10.
QubitRegister project_to_qubits(const AtomChainState& state);

struct CavityPrepared {
  AtomChainState chain;
  QubitRegister ghz;  // projected and rephased to (|e..e> + |g..g>)/sqrt(2)
  PhaseCorrection correction;
  double i_pop;
  double fidelity_to_canonical;  // against ghz_register(n, 0)
};

// Full chain: build_ghz_cavity -> project_to_qubits -> local-phase
// canonicalization. The raw branch phase cycles with N (ratio i^{N-2}), so
// the rephasing step is part of the preparation contract.
CavityPrepared prepare_ghz_cavity(int n_atoms, const CavityGateSpec& gate = {});

}  // namespace merminsim
