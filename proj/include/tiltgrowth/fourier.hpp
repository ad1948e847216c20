#pragma once

#include "tiltgrowth/numeric.hpp"

#include <vector>

namespace tiltgrowth {

// Exact Bernoulli numbers B_0..B_m (B_1 = -1/2), cached across calls.
const std::vector<Rat>& bernoulli_numbers(int m);

// Hurwitz zeta zeta(s, x) = sum_{k>=0} (k+x)^{-s} by Euler-Maclaurin,
// analytically continued in s; accurate to roughly the working precision.
Complex hurwitz_zeta(const Complex& s, const Real& x);

// Gamma(z) for Re z > 0 (Stirling series after a recurrence shift).
Complex complex_gamma(const Complex& z);

// xi(beta, u) = 4^{-beta} zeta(beta, u/4).
Complex xi(const Complex& beta, const Real& u);

struct FourierResult {
  int p = 2;
  int n = 0;
  int N = 1;
  int nu = 4;           // Gamma-argument base for h_n (default 2p)
  Complex L;            // Fourier coefficient L_n
  Real S_magnitude;     // |inner digit sum|
  Complex h;            // h_n = L_n / Gamma(t_bar + 1 + 2 pi i n / ln nu)
};

// L_n = (2 Gamma(beta_n)/ln p) (p+1)^{-N} sum_{k in {-1,0,1}^N}
//       xi(beta_n, 2 + sum_j k_j p^{-j}),
// with beta_n = log_p((p+1)/2) + 1 + 2 pi i n / ln p. The 3^N-term sum is
// regrouped by the attainable values of sum_j k_j p^{N-j} (an integer grid)
// with multiplicities, which shrinks the number of zeta evaluations without
// changing the sum. Throws resource_error when 3^N exceeds the 3^13 budget.
FourierResult fourier_L(int p, int n, int N, int nu = 0 /* default 2p */);

// Partial Fourier synthesis sum_{|n| <= n_terms} L_n e^{-2 pi i n y} on the
// grid (real by conjugate symmetry L_{-n} = conj(L_n)).
std::vector<Real> oscillation_reconstruct(int p, const std::vector<Real>& y_grid,
                                          int n_terms, int N);

}  // namespace tiltgrowth
