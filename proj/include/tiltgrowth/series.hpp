#pragma once

#include "tiltgrowth/numeric.hpp"

#include <map>
#include <vector>

namespace tiltgrowth {

// Truncated series sum_{n=0}^{M} coeffs[n] * z^{-n-1} with exact rational
// coefficients. The truncation order M is explicit and never inferred.
struct ZSeries {
  std::vector<Rat> coeffs;

  ZSeries() = default;
  explicit ZSeries(int order) : coeffs(order + 1, Rat(0)) {}
  explicit ZSeries(std::vector<Rat> c) : coeffs(std::move(c)) {}

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const ZSeries&, const ZSeries&) = default;
};

// Truncated power series sum_{m=0}^{M} coeffs[m] * w^m, exact rational.
struct WSeries {
  std::vector<Rat> coeffs;

  WSeries() = default;
  explicit WSeries(int order) : coeffs(order + 1, Rat(0)) {}
  explicit WSeries(std::vector<Rat> c) : coeffs(std::move(c)) {}

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const WSeries&, const WSeries&) = default;
};

// Integer Laurent polynomial in u invariant under u <-> u^-1. Only the
// nonnegative half is stored, so the symmetry cannot be violated.
struct SymLaurent {
  std::map<long, Int> half;  // degree >= 0 -> coefficient

  // Coefficient of u^d for any d (uses symmetry).
  Int coeff(long d) const {
    auto it = half.find(d < 0 ? -d : d);
    return it == half.end() ? Int(0) : it->second;
  }
  void set(long d, Int v) {
    if (d < 0) d = -d;
    if (v == 0)
      half.erase(d);
    else
      half[d] = std::move(v);
  }
  bool is_zero() const { return half.empty(); }
  // Largest degree with nonzero coefficient; requires nonzero.
  long top_degree() const { return half.rbegin()->first; }
  // Evaluation at u = 1, i.e. the dimension for characters.
  Int eval_at_one() const {
    Int s = 0;
    for (const auto& [d, c] : half) s += (d == 0) ? c : 2 * c;
    return s;
  }

  friend bool operator==(const SymLaurent&, const SymLaurent&) = default;
};

SymLaurent sym_add(const SymLaurent& a, const SymLaurent& b);
SymLaurent sym_sub_scaled(const SymLaurent& a, const Int& m, const SymLaurent& b);  // a - m*b
SymLaurent sym_mul(const SymLaurent& a, const SymLaurent& b);
// Substitute u -> u^p.
SymLaurent sym_stretch(const SymLaurent& a, int p);

// Monic polynomial in z with integer coefficients, lowest degree first.
struct MonicIntPoly {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// P_p(z) = 2 T_p(z/2): the monic polynomial with P_p(w + 1/w) = w^p + w^-p.
MonicIntPoly chebyshev_P(int p);

// Change of basis along z = w + 1/w.
// w_to_z inverts the expansion z^{-n-1} = w^{n+1} (1+w^2)^{-n-1} by a
// triangular solve on the lowest w-degree; output order is g.order()-1.
ZSeries w_to_z(const WSeries& g);
WSeries z_to_w(const ZSeries& c, int order);

// Table of expansions of P(z)^{-n-1} in powers of z^{-1}, for n = 0..count-1,
// each truncated at z^{-(max_power)}. Entry [n][k] is the coefficient of
// z^{-k}. Shared by compose_inverse_powers and the Mahler solvers.
std::vector<std::vector<Rat>> inverse_power_table(const MonicIntPoly& P,
                                                  int count, int max_power);

// z^{-1}-expansion of sum_n c.coeffs[n] * P(z)^{-n-1}, truncated at c.order().
ZSeries compose_inverse_powers(const ZSeries& c, const MonicIntPoly& P);

// Keeps exactly the coefficients whose exponent is divisible by p
// (the averaging operator over p-th roots of unity).
WSeries roots_of_unity_average(const WSeries& g, int p);

// Truncated product, result order = min of operand orders.
WSeries w_mul(const WSeries& a, const WSeries& b);
WSeries w_add(const WSeries& a, const WSeries& b);

}  // namespace tiltgrowth
