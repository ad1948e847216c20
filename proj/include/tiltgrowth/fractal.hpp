#pragma once

#include "tiltgrowth/numeric.hpp"
#include "tiltgrowth/sequences.hpp"

#include <vector>

namespace tiltgrowth {

// ca_n = 1 iff the base-p expansion of n contains no digit 1.
BigSequence cantor_seq(int p, long n_max);

// tau = log_p(p - 1); degenerate (zero sequence density) at p = 2.
Real cantor_tau(int p);

struct Staircase {
  std::vector<Real> values;  // C_n for n = 1..n_max (index 0 <-> n = 1)
  Real min, max;             // over the computed range
  long argmin = 0, argmax = 0;
};

// C_n = n^{-tau} * sum_{k=0}^{n} ca_k.
Staircase cesaro_staircase(int p, long n_max);

// dim L_n = prod (digit + 1) over base-p digits.
Int dim_simple(int p, long n);

struct GenfunResult {
  std::vector<Int> coeffs;  // dim L_n for n = 0..M
  Int residual;             // max abs residual of f(z) = (1+2z+...+pz^{p-1}) f(z^p)
};

GenfunResult simple_dim_genfun(int p, int M);

// log_p C(p+1, 2) = 1 + log_p((p+1)/2).
Real sierpinski_tau(int p);

// Eventually periodic base-p digit stream (least significant digit first).
struct DigitStream {
  std::vector<int> preperiod;
  std::vector<int> period;

  int digit(long j) const {
    if (j < static_cast<long>(preperiod.size())) return preperiod[j];
    if (period.empty()) return 0;
    return period[(j - preperiod.size()) % period.size()];
  }
};

struct TauLambda {
  long N = 0;                // minimal N with n | p^N - 1
  std::vector<int> r_digits; // base-p digits of r(lambda), least significant first
  Real tau;
};

// tau(lambda) for lambda = q - m/n: r(lambda) = m (p^N - 1)/n, digits averaged.
TauLambda tau_lambda(int p, long q, long m, long n);

// Truncated Hilbert series prod_j (1 + w^{2 p^j} + ... + w^{2 n_j p^j}).
WSeries hilbert_series_L(int p, const DigitStream& digits, int M);

// h_0(w) = ln(w^-1)^tau * prod_{|m| <= M} (1 + w^{2*3^m}) / 2^{theta(m)},
// theta(m) = 1 for m < 0 and 0 otherwise; p = 3 case.
Real cantor_oscillation(const Real& w, int M);

// Expected tau for a random p-adic weight: (1/p) log_p(p!).
Real random_lambda_tau(int p);

}  // namespace tiltgrowth
