#pragma once

// Exact integer scalar used everywhere in morphz: GMP's mpz_class, wired into
// Eigen via a NumTraits specialization so dense matrices of big integers work
// with the usual expression templates.

#include <gmpxx.h>

#include <Eigen/Core>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

}  // namespace Eigen

namespace morphz {

using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Euclidean remainder in [0, m), m > 0.  mpz's built-in % truncates toward
// zero, which is the wrong reduction for residues of negative values.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + v.get_str());
  return v.get_si();
}

inline int valuation(Int n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Prime factorization by trial division, returned in ascending prime order.
// Everything in this library works at desk scale, where this is plenty.
inline std::map<Int, int> factorize(Int n) {
  if (n <= 0) throw std::domain_error("factorize expects a positive integer");
  std::map<Int, int> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline bool is_squarefree(const Int& n) {
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

}  // namespace morphz
