#pragma once

#include "tiltgrowth/series.hpp"

#include <map>

namespace tiltgrowth {

struct Character {
  SymLaurent poly;
  int p = 0;
};

enum class Basis { tilting, simple };

struct Decomposition {
  std::map<long, Int> mults;  // highest weight -> multiplicity
  Basis basis = Basis::tilting;

  Int total() const {
    Int s = 0;
    for (const auto& [w, m] : mults) s += m;
    return s;
  }
};

// Character of the Weyl / simple module of highest weight n in char 0:
// u^n + u^{n-2} + ... + u^{-n}.
Character weyl_char(long n);

// u -> u^p.
Character frobenius_twist(const Character& c, int p);

// Indecomposable tilting character via Donkin's tensor product formula;
// memoized per (p, i).
Character tilting_char(int p, long i);

// Simple character via Steinberg's tensor product theorem; memoized.
Character simple_char(int p, long n);

// Triangular subtraction from the top weight down. The top weight of the
// remainder is always unique (SymLaurent top degree), so no tie-breaking is
// needed. Throws not_in_cone_error on a negative intermediate coefficient.
Decomposition greedy_decompose(const Character& c, Basis basis, int p);

// Character of V^{otimes n} (V two-dimensional): (u + u^{-1})^n as SymLaurent.
Character tensor_power_char(int n);

Int oracle_b(int p, int n);
Int oracle_l(int p, int n);

}  // namespace tiltgrowth
