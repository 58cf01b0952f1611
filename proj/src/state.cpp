#include "merminsim/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "merminsim/rng.hpp"

namespace merminsim {

namespace {

constexpr int max_qubits = 20;
constexpr int max_atoms = 12;

double squared_norm(const std::vector<cdouble>& amps) {
  long double acc = 0.0L;
  for (const cdouble& a : amps) acc += (long double)std::norm(a);
  return static_cast<double>(acc);
}

void check_normalized(const std::vector<cdouble>& amps, const char* what) {
  if (std::abs(squared_norm(amps) - 1.0) > norm_tolerance)
    throw std::invalid_argument(std::string(what) +
                                ": amplitudes are not normalized");
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0) a += two_pi;
  return a;
}

}  // namespace

QubitRegister::QubitRegister(int n_sites, std::vector<cdouble> amplitudes)
    : n_sites_(n_sites), amps_(std::move(amplitudes)) {
  if (n_sites < 1 || n_sites > max_qubits)
    throw std::invalid_argument("QubitRegister: site count out of range");
  if (amps_.size() != (std::size_t{1} << n_sites))
    throw std::invalid_argument("QubitRegister: amplitude count != 2^n");
  check_normalized(amps_, "QubitRegister");
}

QubitRegister QubitRegister::basis_state(int n_sites, std::uint64_t index) {
  if (n_sites < 1 || n_sites > max_qubits)
    throw std::invalid_argument("QubitRegister: site count out of range");
  std::vector<cdouble> amps(std::size_t{1} << n_sites, 0.0);
  if (index >= amps.size())
    throw std::out_of_range("QubitRegister: basis index out of range");
  amps[index] = 1.0;
  return QubitRegister(n_sites, std::move(amps));
}

std::size_t AtomChainState::dimension(int n_atoms) {
  std::size_t d = 1;
  for (int k = 0; k < n_atoms; ++k) d *= 3;
  return d;
}

AtomChainState::AtomChainState(int n_atoms, std::vector<cdouble> amplitudes)
    : n_atoms_(n_atoms), amps_(std::move(amplitudes)) {
  if (n_atoms < 1 || n_atoms > max_atoms)
    throw std::invalid_argument("AtomChainState: atom count out of range");
  if (amps_.size() != dimension(n_atoms))
    throw std::invalid_argument("AtomChainState: amplitude count != 3^n");
  check_normalized(amps_, "AtomChainState");
}

AtomChainState AtomChainState::basis_state(int n_atoms, std::uint64_t index) {
  if (n_atoms < 1 || n_atoms > max_atoms)
    throw std::invalid_argument("AtomChainState: atom count out of range");
  std::vector<cdouble> amps(dimension(n_atoms), 0.0);
  if (index >= amps.size())
    throw std::out_of_range("AtomChainState: basis index out of range");
  amps[index] = 1.0;
  return AtomChainState(n_atoms, std::move(amps));
}

int AtomChainState::level_of(std::uint64_t index, int atom) const {
  if (atom < 0 || atom >= n_atoms_)
    throw std::out_of_range("AtomChainState: atom index out of range");
  std::uint64_t stride = 1;
  for (int k = 0; k < atom; ++k) stride *= 3;
  return static_cast<int>((index / stride) % 3);
}

namespace {

void check_unitary(const cdouble* m, int dim) {
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      cdouble dot = 0.0;
      for (int k = 0; k < dim; ++k)
        dot += std::conj(m[k * dim + r]) * m[k * dim + c];
      cdouble expect = (r == c) ? cdouble(1.0) : cdouble(0.0);
      if (std::abs(dot - expect) > norm_tolerance)
        throw std::invalid_argument("SingleSiteUnitary: matrix not unitary");
    }
  }
}

}  // namespace

SingleSiteUnitary SingleSiteUnitary::qubit(
    const std::array<cdouble, 4>& row_major) {
  check_unitary(row_major.data(), 2);
  std::array<cdouble, 9> m{};
  m[0] = row_major[0];
  m[1] = row_major[1];
  m[2] = row_major[2];
  m[3] = row_major[3];
  return SingleSiteUnitary(2, m);
}

SingleSiteUnitary SingleSiteUnitary::qutrit(
    const std::array<cdouble, 9>& row_major) {
  check_unitary(row_major.data(), 3);
  std::array<cdouble, 9> m = row_major;
  return SingleSiteUnitary(3, m);
}

QubitRegister apply_single_site(const QubitRegister& state, int site,
                                const SingleSiteUnitary& u) {
  if (u.dim() != 2)
    throw std::invalid_argument("apply_single_site: need a 2x2 unitary");
  if (site < 0 || site >= state.n_sites())
    throw std::out_of_range("apply_single_site: site out of range");
  const std::uint64_t stride = std::uint64_t{1} << site;
  std::vector<cdouble> out(state.amps());
  for (std::uint64_t base = 0; base < out.size(); base += 2 * stride) {
    for (std::uint64_t low = 0; low < stride; ++low) {
      const std::uint64_t i0 = base + low;
      const std::uint64_t i1 = i0 + stride;
      const cdouble a0 = out[i0], a1 = out[i1];
      out[i0] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
      out[i1] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
    }
  }
  return QubitRegister(state.n_sites(), std::move(out));
}

AtomChainState apply_single_site(const AtomChainState& state, int atom,
                                 const SingleSiteUnitary& u) {
  if (u.dim() != 3)
    throw std::invalid_argument("apply_single_site: need a 3x3 unitary");
  if (atom < 0 || atom >= state.n_atoms())
    throw std::out_of_range("apply_single_site: atom out of range");
  std::uint64_t stride = 1;
  for (int k = 0; k < atom; ++k) stride *= 3;
  std::vector<cdouble> out(state.amps());
  for (std::uint64_t base = 0; base < out.size(); base += 3 * stride) {
    for (std::uint64_t low = 0; low < stride; ++low) {
      const std::uint64_t i0 = base + low;
      const cdouble a0 = out[i0], a1 = out[i0 + stride],
                    a2 = out[i0 + 2 * stride];
      for (int r = 0; r < 3; ++r)
        out[i0 + r * stride] =
            u.at(r, 0) * a0 + u.at(r, 1) * a1 + u.at(r, 2) * a2;
    }
  }
  return AtomChainState(state.n_atoms(), std::move(out));
}

double fidelity(const QubitRegister& a, const QubitRegister& b) {
  if (a.n_sites() != b.n_sites())
    throw std::invalid_argument("fidelity: site counts differ");
  std::complex<long double> dot = 0.0L;
  for (std::size_t i = 0; i < a.dim(); ++i)
    dot += std::complex<long double>(std::conj(a.amps()[i])) *
           std::complex<long double>(b.amps()[i]);
  double f = static_cast<double>(std::norm(dot));
  if (f < 0.0) f = 0.0;
  if (f > 1.0) f = 1.0;
  return f;
}

std::uint64_t born_sample(const QubitRegister& state, RngStream& rng) {
  const double u = rng.next_unit();
  long double acc = 0.0L;
  const auto& amps = state.amps();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += (long double)std::norm(amps[i]);
    if (u < static_cast<double>(acc)) return i;
  }
  return amps.size() - 1;
}

std::uint64_t born_sample(const QubitRegister& state, std::uint64_t seed) {
  RngStream rng(seed);
  return born_sample(state, rng);
}

std::vector<std::uint64_t> born_sample_many(const QubitRegister& state,
                                            std::uint64_t seed,
                                            std::size_t count) {
  RngStream rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(born_sample(state, rng));
  return out;
}

QubitRegister tensor_product(const QubitRegister& a, const QubitRegister& b) {
  const int n = a.n_sites() + b.n_sites();
  if (n > max_qubits)
    throw std::invalid_argument("tensor_product: combined register too large");
  std::vector<cdouble> out(std::size_t{1} << n);
  for (std::size_t ib = 0; ib < b.dim(); ++ib)
    for (std::size_t ia = 0; ia < a.dim(); ++ia)
      out[(ib << a.n_sites()) | ia] = a.amps()[ia] * b.amps()[ib];
  return QubitRegister(n, std::move(out));
}

QubitRegister ghz_register(int n_sites, double branch_phase) {
  std::vector<cdouble> amps(std::size_t{1} << n_sites, 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  amps.front() = r;
  amps.back() = std::polar(r, branch_phase);
  return QubitRegister(n_sites, std::move(amps));
}

CanonicalGhz canonicalize_ghz(const QubitRegister& state,
                              double target_branch_phase) {
  constexpr double tol = 1e-10;
  const std::uint64_t full = state.dim() - 1;
  const cdouble a = state.amps().front();
  const cdouble b = state.amps().back();
  const double leak = 1.0 - std::norm(a) - std::norm(b);
  if (leak > tol)
    throw std::invalid_argument(
        "canonicalize_ghz: support off the two branches");
  if (std::abs(std::norm(a) - 0.5) > tol || std::abs(std::norm(b) - 0.5) > tol)
    throw std::invalid_argument(
        "canonicalize_ghz: branch weights are not 1/2 each");

  const double global = wrap_angle(-std::arg(a));
  const double relative =
      wrap_angle(target_branch_phase - std::arg(b) - global);
  const cdouble gphase = std::polar(1.0, global);
  const cdouble rphase = std::polar(1.0, relative);
  std::vector<cdouble> out(state.amps());
  for (std::uint64_t i = 0; i < out.size(); ++i) {
    out[i] *= gphase;
    if (i & 1) out[i] *= rphase;  // z-phase on site 0 hits the down branch
  }
  (void)full;
  return CanonicalGhz{QubitRegister(state.n_sites(), std::move(out)),
                      PhaseCorrection{global, relative}};
}

}  // namespace merminsim
