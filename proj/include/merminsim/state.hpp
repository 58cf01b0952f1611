#pragma once

// Dense state vectors for small chains of two- and three-level atoms.
//
// Conventions used throughout the library:
//   * site 0 is the least significant digit of a basis index
//   * for qubits, bit value 0 means "up" (equivalently the excited level e),
//     bit value 1 means "down" (the ground level g)
//   * states are immutable values; every operation returns a fresh state
//
// Sizes stay small (n <= ~14), so everything is a flat complex<double> array.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace merminsim {

using cdouble = std::complex<double>;

// Norm and unitarity checks use this; test-level value comparisons are looser.
inline constexpr double norm_tolerance = 1e-12;

class RngStream;

class QubitRegister {
 public:
  QubitRegister(int n_sites, std::vector<cdouble> amplitudes);

  static QubitRegister basis_state(int n_sites, std::uint64_t index);

  int n_sites() const { return n_sites_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amps() const { return amps_; }
  cdouble amp(std::uint64_t index) const { return amps_.at(index); }

 private:
  int n_sites_;
  std::vector<cdouble> amps_;
};

// Three-level chain over {e, g, i}; trit j of a base-3 index is atom j.
enum class AtomLevel : int { e = 0, g = 1, i = 2 };

class AtomChainState {
 public:
  AtomChainState(int n_atoms, std::vector<cdouble> amplitudes);

  static AtomChainState basis_state(int n_atoms, std::uint64_t index);
  static std::size_t dimension(int n_atoms);

  int n_atoms() const { return n_atoms_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amps() const { return amps_; }
  cdouble amp(std::uint64_t index) const { return amps_.at(index); }

  int level_of(std::uint64_t index, int atom) const;

 private:
  int n_atoms_;
  std::vector<cdouble> amps_;
};

// Unitary acting on one site; dim is 2 (qubit) or 3 (three-level atom).
// Entries are row-major; construction rejects non-unitary input.
class SingleSiteUnitary {
 public:
  static SingleSiteUnitary qubit(const std::array<cdouble, 4>& row_major);
  static SingleSiteUnitary qutrit(const std::array<cdouble, 9>& row_major);

  int dim() const { return dim_; }
  cdouble at(int row, int col) const { return m_[row * dim_ + col]; }

 private:
  SingleSiteUnitary(int dim, std::array<cdouble, 9> m) : dim_(dim), m_(m) {}
  int dim_;
  std::array<cdouble, 9> m_;
};

QubitRegister apply_single_site(const QubitRegister& state, int site,
                                const SingleSiteUnitary& u);
AtomChainState apply_single_site(const AtomChainState& state, int atom,
                                 const SingleSiteUnitary& u);

// |<a|b>|^2, clamped to [0, 1].
double fidelity(const QubitRegister& a, const QubitRegister& b);

// One Born-rule draw from |amps|^2; deterministic for a fixed seed.
std::uint64_t born_sample(const QubitRegister& state, std::uint64_t seed);
std::vector<std::uint64_t> born_sample_many(const QubitRegister& state,
                                            std::uint64_t seed,
                                            std::size_t count);
// Draw using an existing stream (advances it).
std::uint64_t born_sample(const QubitRegister& state, RngStream& rng);

// Result sites 0..a.n-1 come from a, the rest from b.
QubitRegister tensor_product(const QubitRegister& a, const QubitRegister& b);

// (|up..up> + e^{i branch_phase} |down..down>) / sqrt(2)
QubitRegister ghz_register(int n_sites, double branch_phase);

// Phase corrections applied during canonicalization: a global phase plus a
// z-phase on site 0 (which only the all-down branch picks up). Angles are
// reported in [0, 2*pi).
struct PhaseCorrection {
  double global = 0.0;
  double relative = 0.0;
};

struct CanonicalGhz {
  QubitRegister state;
  PhaseCorrection correction;
};

// Rephase a two-branch state a|up..up> + b|down..down> so that the first
// branch is real positive and the second has argument target_branch_phase.
// Rejects input with support off the two branches (> 1e-10) or branch
// weights away from 1/2 (> 1e-10).
CanonicalGhz canonicalize_ghz(const QubitRegister& state,
                              double target_branch_phase);

}  // namespace merminsim
