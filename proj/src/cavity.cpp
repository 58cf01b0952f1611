#include "merminsim/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace merminsim {

namespace {

constexpr int lvl_e = static_cast<int>(AtomLevel::e);
constexpr int lvl_g = static_cast<int>(AtomLevel::g);
constexpr int lvl_i = static_cast<int>(AtomLevel::i);

std::uint64_t stride_of(int atom) {
  std::uint64_t s = 1;
  for (int k = 0; k < atom; ++k) s *= 3;
  return s;
}

void check_atom(const AtomChainState& state, int atom, const char* what) {
  if (atom < 0 || atom >= state.n_atoms())
    throw std::out_of_range(std::string(what) + ": atom index out of range");
}

}  // namespace

AtomChainState chain_all_excited(int n_atoms) {
  return AtomChainState::basis_state(n_atoms, 0);
}

AtomChainState rotate_ge(const AtomChainState& state, int atom, double angle) {
  check_atom(state, atom, "rotate_ge");
  const cdouble c(std::cos(angle), 0.0);
  const cdouble ms(0.0, -std::sin(angle));
  // basis order (e, g, i)
  const SingleSiteUnitary u = SingleSiteUnitary::qutrit(
      {c, ms, 0.0, ms, c, 0.0, 0.0, 0.0, 1.0});
  return apply_single_site(state, atom, u);
}

AtomChainState swap_ei(const AtomChainState& state, int atom) {
  check_atom(state, atom, "swap_ei");
  const SingleSiteUnitary u = SingleSiteUnitary::qutrit(
      {0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0});
  return apply_single_site(state, atom, u);
}

AtomChainState collisional_gate(const AtomChainState& state, int first_atom,
                                int second_atom, const CavityGateSpec& gate) {
  check_atom(state, first_atom, "collisional_gate");
  check_atom(state, second_atom, "collisional_gate");
  if (first_atom == second_atom)
    throw std::invalid_argument("collisional_gate: atoms must differ");

  const double gt = gate.gamma_t;
  const cdouble ph = std::polar(1.0, -gt);
  const cdouble ph2 = std::polar(1.0, -2.0 * gt);
  const cdouble cos_t(std::cos(gt), 0.0);
  const cdouble misin_t(0.0, -std::sin(gt));

  const std::uint64_t sa = stride_of(first_atom);
  const std::uint64_t sb = stride_of(second_atom);
  const auto& in = state.amps();
  std::vector<cdouble> out(in.size(), 0.0);
  for (std::uint64_t idx = 0; idx < in.size(); ++idx) {
    const cdouble amp = in[idx];
    if (amp == cdouble(0.0)) continue;
    const int da = static_cast<int>((idx / sa) % 3);
    const int db = static_cast<int>((idx / sb) % 3);
    if (da == lvl_e && db == lvl_e) {
      out[idx] += ph2 * amp;
    } else if (da == lvl_g && db == lvl_e) {
      out[idx] += ph * cos_t * amp;
      out[idx - sa * (lvl_g - lvl_e) + sb * (lvl_g - lvl_e)] +=
          ph * misin_t * amp;  // exchange into |e,g>
    } else if (da == lvl_e && db == lvl_g) {
      out[idx] += ph * cos_t * amp;
      out[idx + sa * (lvl_g - lvl_e) - sb * (lvl_g - lvl_e)] +=
          ph * misin_t * amp;  // exchange into |g,e>
    } else if ((da == lvl_i && db == lvl_e) || (da == lvl_e && db == lvl_i)) {
      out[idx] += ph * amp;  // lone excitation, shielded partner
    } else {
      out[idx] += amp;  // no excitation in the cavity
    }
  }
  return AtomChainState(state.n_atoms(), std::move(out));
}

QubitRegister stark_z(const QubitRegister& state, int site, double theta_t) {
  const SingleSiteUnitary u = SingleSiteUnitary::qubit(
      {std::polar(1.0, -theta_t), 0.0, 0.0, 1.0});
  return apply_single_site(state, site, u);
}

AtomChainState stark_z(const AtomChainState& state, int atom, double theta_t) {
  const SingleSiteUnitary u = SingleSiteUnitary::qutrit(
      {std::polar(1.0, -theta_t), 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0});
  return apply_single_site(state, atom, u);
}

StarkSpec StarkSpec::from_fields(double eps, double alpha_g, double alpha_e,
                                 double field, double time) {
  return StarkSpec{eps * (alpha_g - alpha_e) * field * field * time};
}

PipelineSchedule PipelineSchedule::standard(int n_atoms,
                                            const CavityGateSpec& gate) {
  constexpr double quarter = std::numbers::pi / 4;
  PipelineSchedule s;
  s.n_atoms = n_atoms;
  s.steps.push_back({ZoneKind::rotate_all, 0, quarter});
  s.steps.push_back({ZoneKind::swap_first, 0, 0.0});
  for (int k = 1; k < n_atoms; ++k) {
    s.steps.push_back({ZoneKind::collision, k, gate.gamma_t});
    s.steps.push_back({ZoneKind::rotate_one, k, quarter});
  }
  s.steps.push_back({ZoneKind::swap_first, 0, 0.0});
  return s;
}

AtomChainState build_ghz_cavity(int n_atoms,
                                const PipelineSchedule& schedule) {
  if (schedule.n_atoms != n_atoms)
    throw std::invalid_argument("build_ghz_cavity: schedule is for another N");
  std::vector<int> collided;
  for (const ZoneStep& step : schedule.steps) {
    if (step.kind == ZoneKind::collision) {
      if (step.atom < 1 || step.atom >= n_atoms)
        throw std::invalid_argument(
            "build_ghz_cavity: collision partner out of range");
      collided.push_back(step.atom);
    } else if (step.kind == ZoneKind::rotate_one) {
      if (step.atom < 0 || step.atom >= n_atoms)
        throw std::invalid_argument(
            "build_ghz_cavity: rotation atom out of range");
    }
  }
  std::sort(collided.begin(), collided.end());
  std::vector<int> expected;
  for (int k = 1; k < n_atoms; ++k) expected.push_back(k);
  if (collided != expected)
    throw std::invalid_argument(
        "build_ghz_cavity: collisions must pair atom 0 with each partner "
        "exactly once");

  AtomChainState state = chain_all_excited(n_atoms);
  for (const ZoneStep& step : schedule.steps) {
    switch (step.kind) {
      case ZoneKind::rotate_all:
        for (int a = 0; a < n_atoms; ++a)
          state = rotate_ge(state, a, step.parameter);
        break;
      case ZoneKind::rotate_one:
        state = rotate_ge(state, step.atom, step.parameter);
        break;
      case ZoneKind::swap_first:
        state = swap_ei(state, 0);
        break;
      case ZoneKind::collision:
        state = collisional_gate(state, 0, step.atom,
                                 CavityGateSpec{step.parameter});
        break;
    }
  }
  return state;
}

AtomChainState build_ghz_cavity(int n_atoms, const CavityGateSpec& gate) {
  return build_ghz_cavity(n_atoms, PipelineSchedule::standard(n_atoms, gate));
}

double i_population(const AtomChainState& state) {
  long double acc = 0.0L;
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
    std::uint64_t rest = idx;
    bool has_i = false;
    for (int a = 0; a < state.n_atoms(); ++a, rest /= 3)
      if (rest % 3 == lvl_i) {
        has_i = true;
        break;
      }
    if (has_i) acc += (long double)std::norm(state.amps()[idx]);
  }
  return static_cast<double>(acc);
}

double i_population(const AtomChainState& state, int atom) {
  check_atom(state, atom, "i_population");
  const std::uint64_t s = stride_of(atom);
  long double acc = 0.0L;
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx)
    if ((idx / s) % 3 == lvl_i) acc += (long double)std::norm(state.amps()[idx]);
  return static_cast<double>(acc);
}

QubitRegister project_to_qubits(const AtomChainState& state) {
  constexpr double tol = 1e-10;
  const double ipop = i_population(state);
  if (ipop > tol)
    throw std::invalid_argument(
        "project_to_qubits: storage-level population exceeds tolerance");
  const int n = state.n_atoms();
  std::vector<cdouble> amps(std::size_t{1} << n, 0.0);
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t bits = 0;
    bool has_i = false;
    for (int a = 0; a < n; ++a, rest /= 3) {
      const std::uint64_t level = rest % 3;
      if (level == lvl_i) {
        has_i = true;
        break;
      }
      bits |= (level & 1) << a;  // e -> 0, g -> 1
    }
    if (!has_i) amps[bits] = state.amps()[idx];
  }
  const double scale = 1.0 / std::sqrt(1.0 - ipop);
  for (cdouble& a : amps) a *= scale;
  return QubitRegister(n, std::move(amps));
}

CavityPrepared prepare_ghz_cavity(int n_atoms, const CavityGateSpec& gate) {
  AtomChainState chain = build_ghz_cavity(n_atoms, gate);
  const double ipop = i_population(chain);
  CanonicalGhz canon = canonicalize_ghz(project_to_qubits(chain), 0.0);
  const double fid = fidelity(canon.state, ghz_register(n_atoms, 0.0));
  return CavityPrepared{std::move(chain), std::move(canon.state),
                        canon.correction, ipop, fid};
}

}  // namespace merminsim
