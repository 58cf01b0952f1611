#include "merminsim/nmin.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace merminsim {

namespace {

double variant_phase(MerminVariant variant) {
  return variant == MerminVariant::odd_y ? std::numbers::pi / 2 : 0.0;
}

// Ascending bijection between [0, 2^{n-1}) and the y masks of a variant:
// the index fills bits 1..n-1, bit 0 fixes the popcount parity.
std::uint64_t mask_from_index(std::uint64_t index, MerminVariant variant) {
  std::uint64_t mask = index << 1;
  const bool want_odd = variant == MerminVariant::odd_y;
  if ((std::popcount(mask) & 1) != int(want_odd)) mask |= 1;
  return mask;
}

std::uint64_t index_from_mask(std::uint64_t mask) { return mask >> 1; }

// Measurement-rotated ideal states, keyed by (sites, y mask). Runs repeat the
// same few configurations thousands of times.
class RotatedCache {
 public:
  RotatedCache(MerminVariant variant, Realization realization)
      : phase_(variant_phase(variant)),
        mx_(measurement_unitary(MeasureBasis::x, realization)),
        my_(measurement_unitary(MeasureBasis::y, realization)) {}

  const QubitRegister& get(int n_sites, std::uint64_t y_mask) {
    const auto key = std::make_pair(n_sites, y_mask);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    QubitRegister state = ghz_register(n_sites, phase_);
    for (int site = 0; site < n_sites; ++site)
      state =
          apply_single_site(state, site, (y_mask >> site) & 1 ? my_ : mx_);
    return cache_.emplace(key, std::move(state)).first->second;
  }

 private:
  double phase_;
  SingleSiteUnitary mx_, my_;
  std::map<std::pair<int, std::uint64_t>, QubitRegister> cache_;
};

struct TermAccumulator {
  long long sum = 0;
  std::size_t runs = 0;
  std::size_t retained = 0;

  void finish(NminTermStat& stat) const {
    stat.runs = runs;
    stat.retained = retained;
    if (retained == 0) {
      stat.mean = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    const double r = static_cast<double>(retained);
    stat.mean = static_cast<double>(sum) / r;
    if (retained >= 2) {
      const double var = r * (1.0 - stat.mean * stat.mean) / (r - 1.0);
      stat.std_error = std::sqrt(std::max(var, 0.0) / r);
    }
  }
};

}  // namespace

NumberDistribution NumberDistribution::uniform(const std::vector<int>& ns) {
  if (ns.empty())
    throw std::invalid_argument("NumberDistribution: empty support");
  NumberDistribution dist;
  const double w = 1.0 / static_cast<double>(ns.size());
  for (int n : ns) dist.support.emplace_back(n, w);
  std::sort(dist.support.begin(), dist.support.end());
  dist.validate();
  return dist;
}

void NumberDistribution::validate() const {
  if (support.empty())
    throw std::invalid_argument("NumberDistribution: empty support");
  long double sum = 0.0L;
  int previous = 0;
  for (const auto& [n, p] : support) {
    if (n < 2 || n > 16)
      throw std::invalid_argument(
          "NumberDistribution: particle numbers must be in [2, 16]");
    if (n <= previous)
      throw std::invalid_argument(
          "NumberDistribution: support must be strictly increasing");
    if (p < 0.0)
      throw std::invalid_argument("NumberDistribution: negative probability");
    previous = n;
    sum += p;
  }
  if (std::abs(static_cast<double>(sum) - 1.0) > 1e-12)
    throw std::invalid_argument(
        "NumberDistribution: probabilities must sum to 1");
}

int NumberDistribution::n_min() const {
  validate();
  return support.front().first;
}

int NumberDistribution::n_max() const {
  validate();
  return support.back().first;
}

int NumberDistribution::sample(RngStream& rng) const {
  const double u = rng.next_unit();
  double cumulative = 0.0;
  for (const auto& [n, p] : support) {
    cumulative += p;
    if (u < cumulative) return n;
  }
  return support.back().first;
}

RunRecord simulate_run(const NumberDistribution& dist,
                       const TermPattern& base_pattern, MerminVariant variant,
                       RngStream& rng, Realization realization) {
  dist.validate();
  if (base_pattern.n_sites != dist.n_min())
    throw std::invalid_argument(
        "simulate_run: pattern must cover exactly n_min sites");

  RunRecord run;
  run.drawn_n = dist.sample(rng);
  run.extended = TermPattern{run.drawn_n, base_pattern.y_mask,
                             base_pattern.sign};

  QubitRegister state = ghz_register(run.drawn_n, variant_phase(variant));
  const SingleSiteUnitary mx = measurement_unitary(MeasureBasis::x, realization);
  const SingleSiteUnitary my = measurement_unitary(MeasureBasis::y, realization);
  for (int site = 0; site < run.drawn_n; ++site)
    state = apply_single_site(state, site,
                              (run.extended.y_mask >> site) & 1 ? my : mx);
  run.outcome_bits = born_sample(state, rng);
  run.product = std::popcount(run.outcome_bits) & 1 ? -1 : +1;
  run.retained = true;
  return run;
}

NminEstimate estimate_f_nmin(const NumberDistribution& dist,
                             MerminVariant variant, NminMode mode,
                             std::size_t runs_per_term, std::uint64_t seed,
                             Realization realization) {
  dist.validate();
  if (runs_per_term == 0)
    throw std::invalid_argument("estimate_f_nmin: runs_per_term must be >= 1");
  const int n_min = dist.n_min();
  const std::vector<TermPattern> terms = enumerate_terms(n_min, variant);
  std::vector<TermAccumulator> acc(terms.size());
  RotatedCache cache(variant, realization);

  NminEstimate out;
  if (mode == NminMode::constructive) {
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::uint64_t term_seed =
          derive_seed(seed, "term", terms[t].y_mask);
      for (std::size_t r = 0; r < runs_per_term; ++r) {
        RngStream rng(term_seed, "run", r);
        const int drawn_n = dist.sample(rng);
        const QubitRegister& state = cache.get(drawn_n, terms[t].y_mask);
        const std::uint64_t bits = born_sample(state, rng);
        acc[t].sum += std::popcount(bits) & 1 ? -1 : +1;
        ++acc[t].runs;
        ++acc[t].retained;
      }
    }
    out.total_runs = runs_per_term * terms.size();
    out.retained_runs = out.total_runs;
  } else {
    // Expected chance that one run lands on one specific base pattern.
    long double hit = 0.0L;
    for (const auto& [n, p] : dist.support)
      hit += (long double)p / (long double)(std::uint64_t(1) << (n - 1));
    const long double want =
        (long double)runs_per_term / hit;
    if (want > 1e8L)
      throw std::invalid_argument(
          "estimate_f_nmin: rejection mode would need more than 1e8 runs");
    const std::size_t draws = (std::size_t)std::ceil((double)want);

    for (std::size_t r = 0; r < draws; ++r) {
      RngStream rng(seed, "run", r);
      const int drawn_n = dist.sample(rng);
      const std::uint64_t patterns = std::uint64_t(1) << (drawn_n - 1);
      const std::uint64_t y_mask =
          mask_from_index(rng.next_u64() & (patterns - 1), variant);
      ++out.total_runs;
      if (y_mask >> n_min) continue;  // y support leaks past the first n_min
      const std::size_t t = index_from_mask(y_mask);
      ++acc[t].runs;
      const QubitRegister& state = cache.get(drawn_n, y_mask);
      const std::uint64_t bits = born_sample(state, rng);
      acc[t].sum += std::popcount(bits) & 1 ? -1 : +1;
      ++acc[t].retained;
      ++out.retained_runs;
    }
  }

  out.terms.resize(terms.size());
  long double f = 0.0L, var = 0.0L;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    out.terms[t].pattern = terms[t];
    acc[t].finish(out.terms[t]);
    f += (long double)terms[t].sign * out.terms[t].mean;
    var += (long double)out.terms[t].std_error * out.terms[t].std_error;
  }
  out.f_hat = static_cast<double>(f);
  out.std_error = std::sqrt(static_cast<double>(var));
  out.report = classify_nmin(n_min, out.f_hat);
  return out;
}

}  // namespace merminsim
