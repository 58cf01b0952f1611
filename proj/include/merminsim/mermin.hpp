#pragma once

// N-site Mermin correlation polynomials.
//
// Both variants expand a product of (sigma_x +/- i sigma_y) factors into
// 2^{N-1} correlation terms, each a full product of sigma_x/sigma_y over all
// N sites, identified here by the bitmask of sites measuring sigma_y:
//
//   odd_y :  terms with an odd number k of sigma_y,  sign (-1)^{(k-1)/2}
//   even_y:  terms with an even number k of sigma_y, sign (-1)^{k/2};
//            k = 0 is the all-sigma_x correlation (a genuine expectation
//            value, not a constant)
//
// Every factor is off-diagonal, so a term couples each basis state s only to
// its full bit-flip. Per site the flip carries factor 1 for sigma_x, and for
// sigma_y a factor i (bit 0) or -i (bit 1); summing conj(psi[s^full]) *
// phase(s) * psi[s] over s gives the expectation in one O(2^N) pass.
//
// On a two-branch state a|up..up> + b|down..down> only s = 0 and s = full
// survive, which collapses the whole sum to
//   odd_y : F = 2^N Im(conj(a) b)      even_y: F = 2^N Re(conj(a) b)
// (the fast path below).

#include <cstdint>
#include <vector>

#include "merminsim/state.hpp"

namespace merminsim {

enum class MerminVariant { odd_y, even_y };

struct TermPattern {
  int n_sites = 0;
  std::uint64_t y_mask = 0;  // bit j set: site j measures sigma_y
  int sign = +1;
};

int term_sign(MerminVariant variant, int y_count);

// All terms of the variant in ascending y_mask order (2^{N-1} of them).
std::vector<TermPattern> enumerate_terms(int n_sites, MerminVariant variant);

// <state| product of sigma_x/sigma_y |state> for one pattern. The result of
// a Hermitian product is real; an imaginary residue above 1e-8 is an error.
double term_expectation(const QubitRegister& state, const TermPattern& term);

// Signed sum over all terms of the variant.
double f_exact_sum(const QubitRegister& state, MerminVariant variant);

// O(1) closed form from the two extreme amplitudes. The summed operator
// equals 2^{N-1} (|up..up><down..down| + h.c.) exactly (with an i factor in
// the odd case), so this agrees with f_exact_sum on every state, not just
// two-branch ones.
double f_fast(const QubitRegister& state, MerminVariant variant);

}  // namespace merminsim
