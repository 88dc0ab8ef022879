#pragma once

// Brute-force endomorphism oracle for finite abelian groups.  A group is held
// as an explicit presentation Z/n1 + ... + Z/nk (orders need not be in
// canonical form); an endomorphism is an integer matrix whose column j gives
// the image of the j-th generator.  Everything here is slow and literal on
// purpose: it cross-validates the closed-form predicates in morphic.hpp.

#include "morphz/errors.hpp"
#include "morphz/morphic.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace morphz {

struct FinitePresentation {
  std::vector<Int> orders;  // each >= 1

  explicit FinitePresentation(std::vector<Int> orders_in);
  FinitePresentation() = default;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(orders.size()); }
  Int group_size() const;
  Int exponent() const;  // lcm of the orders (1 for the empty presentation)

  // The isomorphism class presented.
  FgAbGroup group_class() const;
};

// Presentation of a group already in invariant-factor form (must be finite).
FinitePresentation presentation_of(const FgAbGroup& g);

struct Endo {
  FinitePresentation domain;
  IntMatrix matrix;  // rank x rank, entries reduced into [0, orders[i])
};

// Validates well-definedness: column j must satisfy
// orders[j] * m(i, j) == 0 (mod orders[i]) for all i.  Entries are reduced
// mod orders[i] row-wise.  Throws std::invalid_argument otherwise.
Endo make_endo(const FinitePresentation& p, const IntMatrix& m);

Endo mul_endo(const FinitePresentation& p, const Int& a);

Endo compose(const Endo& f, const Endo& g);  // f after g

// |Hom(P, Q)| = product of gcd(n_i, m_j) over all generator pairs.
Int hom_count(const FinitePresentation& p, const FinitePresentation& q);
Int endo_count(const FinitePresentation& p);

inline const Int kDefaultEndoBudget = Int(1) << 20;

// Enumerates every endomorphism of p in a fixed deterministic order; fn
// returns false to stop early.  Throws BudgetError (carrying the full count)
// before enumerating anything when the count exceeds the budget.
void for_each_endo(const FinitePresentation& p, const std::function<bool(const Endo&)>& fn,
                   const Int& budget = kDefaultEndoBudget);

// Isomorphism class of the subgroup generated by the columns of gens
// (entries taken mod the presentation orders).
FgAbGroup subgroup_class(const FinitePresentation& p, const IntMatrix& gens);

FgAbGroup endo_image(const Endo& f);
FgAbGroup endo_kernel(const Endo& f);
FgAbGroup endo_coker(const Endo& f);

inline bool is_endo_morphic(const Endo& f) { return endo_coker(f) == endo_kernel(f); }

// Ground-truth predicates by exhaustive enumeration.
bool brute_is_morphic(const FinitePresentation& p, const Int& budget = kDefaultEndoBudget);
bool brute_is_weakly_morphic(const FinitePresentation& p);

// Least x in [0, exponent) with a == a*x*a on every element, if any.
std::optional<Int> regular_witness_search(const FinitePresentation& p, const Int& a);

// A witness endomorphism psi with kernel(psi) = aM and image(psi) equal to
// the annihilator of a, certifying that M is a-morphic.  Checked element-wise
// before being returned.
std::optional<Endo> morphic_witness(const FinitePresentation& p, const Int& a);

// Element-level utilities (used to verify witnesses and in tests).
std::vector<std::vector<Int>> all_elements(const FinitePresentation& p);
std::vector<Int> apply_endo(const Endo& f, const std::vector<Int>& x);
std::set<std::vector<Int>> image_set(const Endo& f);
std::set<std::vector<Int>> kernel_set(const Endo& f);

}  // namespace morphz
