#pragma once

#include "tiltgrowth/series.hpp"

#include <vector>

namespace tiltgrowth {

// p = 0 marks characteristic zero ("p = infinity" in the data tables).
constexpr int P_INFINITY = 0;

enum class SeqKind { b, l, c, dimL, cantor };

struct BigSequence {
  int p = P_INFINITY;
  SeqKind kind = SeqKind::b;
  std::vector<Int> values;  // indexed from n = 0

  int n_max() const { return static_cast<int>(values.size()) - 1; }
};

enum class RatKind { d, psi, ratio_exact };

struct RationalSequence {
  int p = 2;
  RatKind kind = RatKind::psi;
  std::vector<Rat> values;
};

// Middle binomial coefficients C(n, floor(n/2)) — the p = infinity case.
BigSequence b_char_zero(int n_max);

// Fast p = 2 recursion b_{2n-1} = b_{2n} = sum_k C(n-1,k) 2^{n-1-k} b_k.
BigSequence b_fast_p2(int n_max);

// General p via the 2-Mahler functional equation
// H(z) = r_p(z) + (1 + r_p(z)) * H(P_p(z)), solved coefficient by coefficient.
BigSequence b_mahler(int p, int n_max);

// Dispatches to the fast path for p = 2, middle binomials for p = infinity,
// and the Mahler pipeline otherwise.
BigSequence b_seq(int p, int n_max);

// Lengths from the Mahler product h(w) = prod_j (1 + w^{p^j} + ... + w^{(2p-2)p^j}).
BigSequence l_product(int p, int n_max);

// psi(z) = -(1 - z^{-2}) f(z) with f(z) = sum (b_n/2^n) z^{-n-1}:
// c_n = b_{n-2}/2^{n-2} - b_n/2^n (b with negative index = 0).
RationalSequence psi_coeffs(int p, int n_max);

// p = 2 second differences c_n = b_{n+4} - 8 b_{n+2} + 16 b_n (all >= 0).
BigSequence second_difference_c(int n_max);

// d_n = 1 - b_{n+2}/(4 b_n), exact rationals in [0, 1).
RationalSequence gap_d(int p, int n_max);

// The z^{-1}-expansion of r_p, used by b_mahler and the asymptotics checks.
ZSeries rp_zseries(int p, int order);

}  // namespace tiltgrowth
