#pragma once

// Multiplication maps a: M -> M on f.g. abelian groups, their image / kernel
// / cokernel in closed form, and the morphicity predicates built from them.
// M is a-morphic when M/aM and the annihilator of a in M are isomorphic.

#include "morphz/abelian.hpp"

#include <optional>

namespace morphz {

struct MorphicVerdict {
  bool holds = true;
  std::optional<Int> witness;  // a failing scalar when holds is false

  friend bool operator==(const MorphicVerdict&, const MorphicVerdict&) = default;
};

FgAbGroup image_mul(const FgAbGroup& m, const Int& a);
FgAbGroup ann_mul(const FgAbGroup& m, const Int& a);
FgAbGroup coker_mul(const FgAbGroup& m, const Int& a);

bool is_a_morphic(const FgAbGroup& m, const Int& a);

// Weakly morphic: a-morphic for every integer a.  Decidable by scanning
// 0 <= a < exponent in the finite case; infinite groups fail with an
// explicit witness scalar.
MorphicVerdict is_weakly_morphic(const FgAbGroup& m);

// Morphic as a module over Z: finite with every primary component
// homogeneous, i.e. of shape (Z/p^k)^n.
bool is_morphic_fg(const FgAbGroup& m);

// Multiplication by a is a regular element of End(M): equivalent to
// M = aM + Ann(a) as a direct sum.
bool is_mul_regular(const FgAbGroup& m, const Int& a);

// Value-style wrapper for a single multiplication map.
struct MulMap {
  FgAbGroup domain;
  Int scalar;

  FgAbGroup image() const { return image_mul(domain, scalar); }
  FgAbGroup kernel() const { return ann_mul(domain, scalar); }
  FgAbGroup cokernel() const { return coker_mul(domain, scalar); }
  bool morphic() const { return is_a_morphic(domain, scalar); }
};

struct SummandScanReport {
  long max_order = 0;
  long classes = 0;          // finite classes with order <= max_order
  long pairs = 0;            // unordered summand pairs (h, k), |h||k| <= max_order
  long counterexamples = 0;  // pairs with h + k weakly morphic but a summand not
};

// Checks that weak morphicity passes to direct summands on every splitting
// h + k of bounded order.  counterexamples stays 0.
SummandScanReport weakly_morphic_summand_scan(long max_order);

}  // namespace morphz
