#include "merminsim/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "merminsim/parallel.hpp"

namespace merminsim {

namespace {

void check_sites(int n_sites, int max_sites, const char* who) {
  if (n_sites < 1 || n_sites > max_sites)
    throw std::invalid_argument(std::string(who) + ": n_sites out of range");
}

// Gaussian-integer product over sites; the term sum equals its Im (odd_y)
// or Re (even_y) part.
long long product_value(int n_sites, std::uint64_t bits,
                        MerminVariant variant) {
  long long re = 1, im = 0;
  for (int j = 0; j < n_sites; ++j) {
    const long long mx = (bits >> (2 * j)) & 1 ? -1 : +1;
    const long long my = (bits >> (2 * j + 1)) & 1 ? -1 : +1;
    const long long nre = re * mx - im * my;
    const long long nim = re * my + im * mx;
    re = nre;
    im = nim;
  }
  return variant == MerminVariant::odd_y ? im : re;
}

}  // namespace

long long strategy_f(const DeterministicStrategy& strategy,
                     MerminVariant variant) {
  check_sites(strategy.n_sites, 31, "strategy_f");
  long long total = 0;
  for (const TermPattern& term : enumerate_terms(strategy.n_sites, variant)) {
    long long prod = term.sign;
    for (int j = 0; j < strategy.n_sites; ++j)
      prod *= (term.y_mask >> j) & 1 ? strategy.my(j) : strategy.mx(j);
    total += prod;
  }
  return total;
}

BruteForceResult brute_force_max(int n_sites, MerminVariant variant,
                                 int threads) {
  check_sites(n_sites, 12, "brute_force_max");
  const std::uint64_t count = std::uint64_t(1) << (2 * n_sites);

  const int n_threads = resolve_thread_count(threads);
  std::vector<long long> best(n_threads, -(1LL << 62));
  std::vector<std::vector<std::uint64_t>> hits(n_threads);

  parallel_for_chunks(count, threads, [&](int tid, std::uint64_t lo,
                                          std::uint64_t hi) {
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      const long long v = product_value(n_sites, bits, variant);
      if (v > best[tid]) {
        best[tid] = v;
        hits[tid].assign(1, bits);
      } else if (v == best[tid]) {
        hits[tid].push_back(bits);
      }
    }
  });

  long long max_v = best[0];
  for (int t = 1; t < n_threads; ++t) max_v = std::max(max_v, best[t]);
  BruteForceResult out;
  out.max_f = static_cast<double>(max_v);
  out.n_strategies = count;
  for (int t = 0; t < n_threads; ++t)
    if (best[t] == max_v)
      out.argmax.insert(out.argmax.end(), hits[t].begin(), hits[t].end());
  std::sort(out.argmax.begin(), out.argmax.end());
  return out;
}

double mixture_f(const StrategyMixture& mixture, MerminVariant variant) {
  if (mixture.strategies.size() != mixture.weights.size())
    throw std::invalid_argument("mixture_f: strategies/weights size mismatch");
  double wsum = 0.0;
  for (double w : mixture.weights) {
    if (w < 0.0) throw std::invalid_argument("mixture_f: negative weight");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw std::invalid_argument("mixture_f: weights must sum to 1");
  double total = 0.0;
  for (std::size_t k = 0; k < mixture.strategies.size(); ++k)
    total += mixture.weights[k] *
             static_cast<double>(product_value(
                 mixture.n_sites, mixture.strategies[k], variant));
  return total;
}

}  // namespace merminsim
