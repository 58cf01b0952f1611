#include "merminsim/measurement.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "merminsim/parallel.hpp"
#include "merminsim/rng.hpp"

namespace merminsim {

namespace {

constexpr std::size_t shot_block = 4096;

std::array<cdouble, 4> matmul2(const std::array<cdouble, 4>& a,
                               const std::array<cdouble, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Remove the global phase: rotate so the largest entry is real positive.
std::array<cdouble, 4> phase_align(std::array<cdouble, 4> m) {
  int lead = 0;
  for (int k = 1; k < 4; ++k)
    if (std::abs(m[k]) > std::abs(m[lead])) lead = k;
  const cdouble fix = std::abs(m[lead]) / m[lead];
  for (cdouble& e : m) e *= fix;
  return m;
}

std::array<cdouble, 4> bec_factorization(MeasureBasis basis) {
  const double r = 1.0 / std::sqrt(2.0);
  // Measurement splitter: routes the sigma_y eigenstates onto up/down.
  const std::array<cdouble, 4> splitter = {cdouble(r, 0), cdouble(0, -r),
                                           cdouble(r, 0), cdouble(0, r)};
  if (basis == MeasureBasis::y) return splitter;
  // A -pi/2 phase imprinted on the up component first turns the splitter
  // into the sigma_x analyzer.
  const std::array<cdouble, 4> imprint = {std::polar(1.0, -std::numbers::pi / 2),
                                          0.0, 0.0, 1.0};
  return matmul2(splitter, imprint);
}

std::array<cdouble, 4> cavity_factorization(MeasureBasis basis) {
  const double r = 1.0 / std::sqrt(2.0);
  // pi/2 rotation about y, preceded by a light-shift z rotation: pi for the
  // sigma_x analyzer, pi/2 for sigma_y.
  const std::array<cdouble, 4> ry = {cdouble(r, 0), cdouble(-r, 0),
                                     cdouble(r, 0), cdouble(r, 0)};
  const double zeta = basis == MeasureBasis::x ? std::numbers::pi
                                               : std::numbers::pi / 2;
  const std::array<cdouble, 4> rz = {std::polar(1.0, -zeta / 2), 0.0, 0.0,
                                     std::polar(1.0, zeta / 2)};
  return matmul2(ry, rz);
}

}  // namespace

SingleSiteUnitary measurement_unitary(MeasureBasis basis,
                                      Realization realization) {
  const std::array<cdouble, 4> raw = realization == Realization::bec
                                         ? bec_factorization(basis)
                                         : cavity_factorization(basis);
  return SingleSiteUnitary::qubit(phase_align(raw));
}

namespace {

QubitRegister rotate_for_pattern(const QubitRegister& state,
                                 std::uint64_t y_mask,
                                 Realization realization) {
  const SingleSiteUnitary mx = measurement_unitary(MeasureBasis::x, realization);
  const SingleSiteUnitary my = measurement_unitary(MeasureBasis::y, realization);
  QubitRegister rotated = state;
  for (int site = 0; site < state.n_sites(); ++site)
    rotated = apply_single_site(rotated, site,
                                (y_mask >> site) & 1 ? my : mx);
  return rotated;
}

int parity_product(std::uint64_t outcome_bits) {
  return std::popcount(outcome_bits) & 1 ? -1 : +1;
}

}  // namespace

std::vector<ShotRecord> sample_shots(const QubitRegister& state,
                                     std::uint64_t y_mask,
                                     std::size_t n_shots, std::uint64_t seed,
                                     Realization realization) {
  if (y_mask >= state.dim())
    throw std::invalid_argument("sample_shots: y_mask out of range");
  const QubitRegister rotated = rotate_for_pattern(state, y_mask, realization);
  std::vector<ShotRecord> shots;
  shots.reserve(n_shots);
  for (std::size_t block = 0; block * shot_block < n_shots; ++block) {
    RngStream rng(seed, "shots", block);
    const std::size_t end = std::min(n_shots, (block + 1) * shot_block);
    for (std::size_t s = block * shot_block; s < end; ++s) {
      const std::uint64_t bits = born_sample(rotated, rng);
      shots.push_back(ShotRecord{bits, y_mask, parity_product(bits)});
    }
  }
  return shots;
}

TermEstimate measure_term(const QubitRegister& state, const TermPattern& term,
                          std::size_t n_shots, std::uint64_t seed,
                          Realization realization) {
  if (term.n_sites != state.n_sites())
    throw std::invalid_argument("measure_term: site counts differ");
  const QubitRegister rotated =
      rotate_for_pattern(state, term.y_mask, realization);

  std::size_t plus = 0;
  for (std::size_t block = 0; block * shot_block < n_shots; ++block) {
    RngStream rng(seed, "shots", block);
    const std::size_t end = std::min(n_shots, (block + 1) * shot_block);
    for (std::size_t s = block * shot_block; s < end; ++s)
      if (parity_product(born_sample(rotated, rng)) > 0) ++plus;
  }

  TermEstimate est;
  est.pattern = term;
  est.n_shots = n_shots;
  if (n_shots == 0) return est;
  const double n = static_cast<double>(n_shots);
  est.mean = (2.0 * static_cast<double>(plus) - n) / n;
  if (n_shots >= 2) {
    // outcomes are +/-1, so the sample variance is n(1 - mean^2)/(n-1)
    const double var = n * (1.0 - est.mean * est.mean) / (n - 1.0);
    est.std_error = std::sqrt(std::max(var, 0.0) / n);
  }
  return est;
}

FEstimate estimate_f(const QubitRegister& state, MerminVariant variant,
                     std::size_t shots_per_term, std::uint64_t seed,
                     int threads, Realization realization) {
  const std::vector<TermPattern> terms =
      enumerate_terms(state.n_sites(), variant);
  FEstimate out;
  out.terms.resize(terms.size());
  parallel_for_index(terms.size(), threads, [&](std::size_t t) {
    const std::uint64_t term_seed = derive_seed(seed, "term", terms[t].y_mask);
    out.terms[t] =
        measure_term(state, terms[t], shots_per_term, term_seed, realization);
  });
  long double f = 0.0L, var = 0.0L;
  for (const TermEstimate& est : out.terms) {
    f += (long double)est.pattern.sign * est.mean;
    var += (long double)est.std_error * est.std_error;
  }
  out.f_hat = static_cast<double>(f);
  out.std_error = std::sqrt(static_cast<double>(var));
  return out;
}

}  // namespace merminsim
