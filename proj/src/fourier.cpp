#include "tiltgrowth/fourier.hpp"

#include <map>
#include <mutex>
#include <string>

namespace tiltgrowth {

using boost::multiprecision::acos;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {

std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_cache;  // B_0, B_1, ...

Real pi_value() { return acos(Real(-1)); }

}  // namespace

const std::vector<Rat>& bernoulli_numbers(int m) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  if (bernoulli_cache.empty()) bernoulli_cache.push_back(1);
  // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1.
  for (int k = static_cast<int>(bernoulli_cache.size()); k <= m; ++k) {
    Rat s = 0;
    Int binom = 1;  // C(k+1, j)
    for (int j = 0; j < k; ++j) {
      s += binom * bernoulli_cache[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    bernoulli_cache.push_back(-s / (k + 1));
  }
  return bernoulli_cache;
}

Complex hurwitz_zeta(const Complex& s, const Real& x) {
  if (!(x > 0)) throw std::invalid_argument("hurwitz_zeta: x > 0 required");
  if (s.im == 0 && s.re == 1)
    throw std::invalid_argument("hurwitz_zeta: pole at s = 1");
  const unsigned d = precision();
  // Direct terms K and Bernoulli pairs B chosen so the Euler-Maclaurin
  // remainder ((|s| + 2B)/(2 pi (K + x)))^{2B} is far below 10^{-d}.
  const int B = static_cast<int>(d) + 10;
  const int K = static_cast<int>(d) + 10 + abs(s).convert_to<int>();
  const auto& bern = bernoulli_numbers(2 * B);

  Complex sum{Real(0), Real(0)};
  for (int k = 0; k < K; ++k) sum += pow(x + k, -s);
  Real KX = x + K;
  // tail integral + midpoint correction
  Complex one{Real(1), Real(0)};
  sum += pow(KX, one - s) / (s - one);
  sum += pow(KX, -s) / Real(2);
  // Bernoulli corrections: sum_j B_{2j}/(2j)! * (s)_{2j-1} * KX^{-s-2j+1}
  Complex rising = s;               // (s)(s+1)...(s+2j-2), start j=1: just s
  Real fact = 2;                    // (2j)!
  Complex kxp = pow(KX, -s - one);  // KX^{-s-2j+1} at j=1
  Real kx2 = KX * KX;
  for (int j = 1; j <= B; ++j) {
    sum += (Real(numerator(bern[2 * j])) / Real(denominator(bern[2 * j]))) /
           fact * rising * kxp;
    // advance to j+1
    rising = rising * (s + Complex{Real(2 * j - 1), Real(0)}) *
             (s + Complex{Real(2 * j), Real(0)});
    fact *= (2 * j + 1) * (2 * j + 2);
    kxp = kxp / kx2;
  }
  return sum;
}

Complex complex_gamma(const Complex& z) {
  if (z.im == 0 && z.re <= 0 && floor(z.re) == z.re)
    throw std::invalid_argument("complex_gamma: pole at nonpositive integer");
  if (z.re <= 0)
    throw std::invalid_argument(
        "complex_gamma: only Re z > 0 is supported here");
  const unsigned d = precision();
  // Shift until Re Z is large enough for the Stirling series to reach the
  // working precision (error ~ e^{-2 pi |Z|}).
  Real target = Real(d) * Real("0.37") + 25;  // d*ln(10)/(2 pi) plus margin
  Complex Z = z;
  Complex shift_prod{Real(1), Real(0)};
  while (Z.re < target) {
    shift_prod = shift_prod * Z;
    Z.re += 1;
  }
  // ln Gamma(Z) = (Z - 1/2) ln Z - Z + ln(2 pi)/2 + sum B_{2j}/(2j(2j-1) Z^{2j-1})
  const int B = static_cast<int>(d) / 2 + 12;
  const auto& bern = bernoulli_numbers(2 * B);
  Complex half{Real(1) / 2, Real(0)};
  Complex lg = (Z - half) * log(Z) - Z;
  lg += Complex{log(2 * pi_value()) / 2, Real(0)};
  Complex zpow = Complex{Real(1), Real(0)} / Z;  // Z^{-(2j-1)} at j=1
  Complex z2 = Z * Z;
  for (int j = 1; j <= B; ++j) {
    Real bj = Real(numerator(bern[2 * j])) / Real(denominator(bern[2 * j]));
    lg += (bj / Real(2 * j * (2 * j - 1))) * zpow;
    zpow = zpow / z2;
  }
  return exp(lg) / shift_prod;
}

Complex xi(const Complex& beta, const Real& u) {
  if (!(u > 0)) throw std::invalid_argument("xi: u > 0 required");
  return pow(Real(4), -beta) * hurwitz_zeta(beta, u / 4);
}

FourierResult fourier_L(int p, int n, int N, int nu) {
  require_prime(p, "fourier_L");
  if (N < 1) throw std::invalid_argument("fourier_L: N >= 1 required");
  if (N > 13)
    throw resource_error("fourier_L: 3^N term budget exceeded (max N = 13)");
  if (nu == 0) nu = 2 * p;

  FourierResult res;
  res.p = p;
  res.n = n;
  res.N = N;
  res.nu = nu;

  Real lp = log(Real(p));
  Real tbar = log(Real(p + 1) / 2) / lp;  // log_p((p+1)/2)
  Real two_pi = 2 * pi_value();
  Complex beta{tbar + 1, two_pi * n / lp};

  // Group the 3^N digit vectors by S = sum_j k_j p^{N-j} (integer grid):
  // the zeta argument 2 + S p^{-N} depends only on S.
  std::map<long long, Int> counts;
  counts[0] = 1;
  long long scale = 1;
  for (int j = N; j >= 1; --j) {
    // digit k_j contributes k_j * p^{N-j}
    std::map<long long, Int> next;
    for (const auto& [s, c] : counts)
      for (int k = -1; k <= 1; ++k) next[s + k * scale] += c;
    counts = std::move(next);
    scale *= p;
  }

  Real pN = pow(Real(p), N);
  Complex inner{Real(0), Real(0)};
  for (const auto& [s, c] : counts) {
    Real u = 2 + Real(s) / pN;
    inner += Real(c) * xi(beta, u);
  }
  res.S_magnitude = abs(inner);
  res.L = (Real(2) / lp) * complex_gamma(beta) * pow(Real(p + 1), -N) * inner;
  Complex gamma_arg{tbar + 1, two_pi * n / log(Real(nu))};
  res.h = res.L / complex_gamma(gamma_arg);
  return res;
}

std::vector<Real> oscillation_reconstruct(int p, const std::vector<Real>& y_grid,
                                          int n_terms, int N) {
  if (n_terms < 0)
    throw std::invalid_argument("oscillation_reconstruct: n_terms >= 0");
  std::vector<Complex> L;
  for (int n = 0; n <= n_terms; ++n) L.push_back(fourier_L(p, n, N).L);
  Real two_pi = 2 * pi_value();
  std::vector<Real> out;
  out.reserve(y_grid.size());
  for (const Real& y : y_grid) {
    // sum_{|n| <= n_terms} L_n e^{-2 pi i n y}, real by conjugate symmetry
    Real v = L[0].re;
    for (int n = 1; n <= n_terms; ++n) {
      Real ang = two_pi * n * y;
      v += 2 * (L[n].re * cos(ang) + L[n].im * sin(ang));
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace tiltgrowth
