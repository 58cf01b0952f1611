#include "merminsim/fock_mz.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace merminsim {

namespace {

constexpr int max_interferometer_atoms = 16;

void check_atom_count(int n) {
  if (n < 1 || n > max_interferometer_atoms)
    throw std::invalid_argument("TwoModeFock: atom count out of range");
}

double squared_norm(const std::vector<cdouble>& amps) {
  long double acc = 0.0L;
  for (const cdouble& a : amps) acc += (long double)std::norm(a);
  return static_cast<double>(acc);
}

}  // namespace

TwoModeFock::TwoModeFock(int n_atoms, std::vector<cdouble> amplitudes)
    : n_atoms_(n_atoms), amps_(std::move(amplitudes)) {
  check_atom_count(n_atoms);
  if (amps_.size() != static_cast<std::size_t>(n_atoms) + 1)
    throw std::invalid_argument("TwoModeFock: amplitude count != n+1");
  if (std::abs(squared_norm(amps_) - 1.0) > norm_tolerance)
    throw std::invalid_argument("TwoModeFock: amplitudes are not normalized");
}

TwoModeFock TwoModeFock::all_upper(int n_atoms) {
  check_atom_count(n_atoms);
  std::vector<cdouble> amps(n_atoms + 1, 0.0);
  amps.back() = 1.0;
  return TwoModeFock(n_atoms, std::move(amps));
}

TwoModeFock fock_beam_splitter(const TwoModeFock& state, double theta) {
  const int n = state.n_atoms();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int k = 0; k < n; ++k) {
    const double c = std::sqrt(double(k + 1) * double(n - k));
    g(k + 1, k) = c;
    g(k, k + 1) = c;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  Eigen::VectorXcd v(n + 1);
  for (int k = 0; k <= n; ++k) v(k) = state.amp(k);
  Eigen::VectorXcd modal = es.eigenvectors().transpose() * v;
  for (int k = 0; k <= n; ++k)
    modal(k) *= std::polar(1.0, theta * es.eigenvalues()(k));
  Eigen::VectorXcd out = es.eigenvectors() * modal;
  std::vector<cdouble> amps(n + 1);
  for (int k = 0; k <= n; ++k) amps[k] = out(k);
  return TwoModeFock(n, std::move(amps));
}

TwoModeFock kerr_evolution(const TwoModeFock& state, double phase) {
  std::vector<cdouble> amps(state.amps());
  for (std::size_t k = 0; k < amps.size(); ++k)
    amps[k] *= std::polar(1.0, -phase * double(k) * double(k - 1.0));
  return TwoModeFock(state.n_atoms(), std::move(amps));
}

TwoModeFock relative_mode_phase(const TwoModeFock& state, double phi) {
  std::vector<cdouble> amps(state.amps());
  for (std::size_t k = 0; k < amps.size(); ++k)
    amps[k] *= std::polar(1.0, phi * double(k));
  return TwoModeFock(state.n_atoms(), std::move(amps));
}

TwoModeFock mz_prepare(int n_atoms, const MzSchedule& schedule) {
  TwoModeFock state = TwoModeFock::all_upper(n_atoms);
  state = fock_beam_splitter(state, schedule.splitter_angle);
  state = kerr_evolution(state, schedule.kerr_phase);
  state = relative_mode_phase(state, schedule.arm_phase);
  return fock_beam_splitter(state, schedule.splitter_angle);
}

QubitRegister mott_map(const TwoModeFock& state) {
  constexpr double tol = 1e-10;
  const int n = state.n_atoms();
  const cdouble upper = state.amps().back();   // all atoms up
  const cdouble lower = state.amps().front();  // all atoms down
  const double kept = std::norm(upper) + std::norm(lower);
  if (1.0 - kept > tol)
    throw std::invalid_argument(
        "mott_map: probability outside the two branches exceeds tolerance");
  const double scale = 1.0 / std::sqrt(kept);
  std::vector<cdouble> amps(std::size_t{1} << n, 0.0);
  amps.front() = upper * scale;
  amps.back() = lower * scale;
  return QubitRegister(n, std::move(amps));
}

CanonicalGhz canonicalize_phase(const QubitRegister& state) {
  return canonicalize_ghz(state, std::numbers::pi / 2);
}

BecPrepared prepare_ghz_bec(int n_atoms, const MzSchedule& schedule) {
  TwoModeFock out = mz_prepare(n_atoms, schedule);
  const double leakage = std::max(
      0.0,
      1.0 - std::norm(out.amps().front()) - std::norm(out.amps().back()));
  CanonicalGhz canon = canonicalize_phase(mott_map(out));
  const double fid =
      fidelity(canon.state, ghz_register(n_atoms, std::numbers::pi / 2));
  return BecPrepared{std::move(out), std::move(canon.state), canon.correction,
                     leakage, fid};
}

}  // namespace merminsim
