#pragma once

// Base rings other than Z: quotients Z/n and finite products of quotients.
// A module over Z/n is a finite abelian group whose exponent divides n, and
// the morphicity predicates relativize to scalars drawn from the ring.

#include "morphz/errors.hpp"
#include "morphz/morphic.hpp"

#include <string>
#include <variant>
#include <vector>

namespace morphz {

struct IntegerRing {
  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct ModularRing {
  Int modulus;  // n >= 1
  friend bool operator==(const ModularRing&, const ModularRing&) = default;
};

struct ProductRing {
  std::vector<ModularRing> components;
  friend bool operator==(const ProductRing&, const ProductRing&) = default;
};

using BaseRing = std::variant<IntegerRing, ModularRing, ProductRing>;

std::string ring_str(const BaseRing& r);

// A module over a base ring.  Over Z and Z/n the module is a single group;
// over a product ring it is one group per component.
struct RingModule {
  BaseRing ring;
  std::vector<FgAbGroup> components;
};

// Validates the pairing: Z/n requires a finite group with exponent dividing
// n; a product ring requires one such group per component.  Throws
// std::invalid_argument on mismatch.
RingModule make_ring_module(BaseRing ring, std::vector<FgAbGroup> components);

// The annihilator ideal of M in Z, as its nonnegative generator
// (0 for a module with free part, the exponent otherwise).
Int ann_generator(const FgAbGroup& m);

// The smallest quotient of Z over which M is faithfully a module:
// Z itself when M has free part, Z/exponent otherwise.
BaseRing multiplication_ring(const FgAbGroup& m);

// Von Neumann regularity, decided by exhaustive witness search in the finite
// cases; Z is not regular.
bool is_regular_ring(const BaseRing& r);

// Weak morphicity with scalars drawn from the base ring.
bool is_weakly_morphic_over(const RingModule& m);

inline const Int kDefaultTupleBudget = 10000;

// For a module over a product ring: evaluates weak morphicity directly
// (scalar tuples, componentwise a-morphicity of the tuple action) and
// componentwise, asserts the two answers agree (DisagreementError otherwise),
// and returns the common verdict.  Throws BudgetError when the scalar-tuple
// space exceeds the budget.
bool product_module_check(const RingModule& m, const Int& budget = kDefaultTupleBudget);

// Fuse a list of modules over pairwise coprime Z/n_i into one module over
// Z/(n_1 ... n_k) via the ring isomorphism.
RingModule crt_combine(const std::vector<RingModule>& mods);

}  // namespace morphz
