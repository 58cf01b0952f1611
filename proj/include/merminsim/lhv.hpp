#pragma once

// Local deterministic strategies and exhaustive search over them. A strategy
// fixes outcomes m_x(j), m_y(j) in {-1,+1} for every site; its correlator
// value is the same signed sum over terms as the quantum case, with each
// expectation replaced by the product of preassigned outcomes.

#include <cstdint>
#include <vector>

#include "merminsim/mermin.hpp"

namespace merminsim {

struct DeterministicStrategy {
  int n_sites = 0;
  // bit 2j set:   m_x(j) = -1 (else +1)
  // bit 2j+1 set: m_y(j) = -1 (else +1)
  std::uint64_t bits = 0;

  int mx(int site) const { return (bits >> (2 * site)) & 1 ? -1 : +1; }
  int my(int site) const { return (bits >> (2 * site + 1)) & 1 ? -1 : +1; }
};

// Literal signed term sum; always an integer with |value| <= 2^{N-1}.
long long strategy_f(const DeterministicStrategy& strategy,
                     MerminVariant variant);

struct BruteForceResult {
  double max_f = 0.0;
  std::vector<std::uint64_t> argmax;  // every maximizing encoding, ascending
  std::uint64_t n_strategies = 0;
};

// Scans all 4^N strategy encodings in ascending order. Refuses n_sites > 12.
// The per-strategy value is evaluated through the exact product identity
//   odd_y:  Im prod_j (m_x(j) + i m_y(j))
//   even_y: Re prod_j (m_x(j) + i m_y(j))
// which equals the literal term sum (property-tested) at O(N) per strategy.
BruteForceResult brute_force_max(int n_sites, MerminVariant variant,
                                 int threads = 1);

struct StrategyMixture {
  int n_sites = 0;
  std::vector<std::uint64_t> strategies;
  std::vector<double> weights;
};

// Convex combination of strategy values. Weights must be nonnegative and sum
// to 1 within 1e-12.
double mixture_f(const StrategyMixture& mixture, MerminVariant variant);

}  // namespace merminsim
