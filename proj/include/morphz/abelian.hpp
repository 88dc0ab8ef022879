#pragma once

// Finitely generated abelian groups in invariant-factor form: one object per
// isomorphism class, plus the classification toolkit (canonicalization,
// presentation quotients, primary decomposition, enumeration by order).

#include "morphz/linalg.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace morphz {

class GroupOrder {
 public:
  static GroupOrder finite(Int v) { return GroupOrder(std::move(v)); }
  static GroupOrder infinite() { return GroupOrder(); }

  bool is_finite() const { return value_.has_value(); }
  const Int& value() const {
    if (!value_) throw std::domain_error("order is infinite");
    return *value_;
  }
  std::string str() const { return value_ ? value_->get_str() : "infinite"; }

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  GroupOrder() = default;
  explicit GroupOrder(Int v) : value_(std::move(v)) {}
  std::optional<Int> value_;
};

// Z^r + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.  The representation
// is unique per isomorphism class, so operator== decides isomorphism.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // the trivial group
  // Validating constructor: the arguments must already be in canonical form
  // (rank >= 0, factors >= 2 in a divisibility chain); use canonicalize() to
  // normalize arbitrary cyclic decompositions.
  FgAbGroup(long free_rank, std::vector<Int> invariant_factors);

  long free_rank() const { return free_rank_; }
  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
  friend bool operator<(const FgAbGroup& a, const FgAbGroup& b) {
    if (a.free_rank_ != b.free_rank_) return a.free_rank_ < b.free_rank_;
    return a.factors_ < b.factors_;
  }

 private:
  long free_rank_ = 0;
  std::vector<Int> factors_;
};

// prime -> exponent partition (descending); entry t belongs to the t-th
// largest invariant factor.
struct PrimaryDecomposition {
  long free_rank = 0;
  std::map<Int, std::vector<int>> components;

  friend bool operator==(const PrimaryDecomposition&, const PrimaryDecomposition&) = default;

  FgAbGroup recombine() const;
};

// Normalize an arbitrary direct sum of cyclic groups (orders >= 1, order 1
// summands vanish) plus a free part into invariant-factor form.  Nonpositive
// orders throw std::domain_error.
FgAbGroup canonicalize(const std::vector<Int>& cyclic_orders, long free_rank = 0);

// The quotient Z^n / (column span of rel), n = rel.rows().
FgAbGroup from_relations(const IntMatrix& rel);

inline bool iso_eq(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

GroupOrder order(const FgAbGroup& g);
GroupOrder exponent(const FgAbGroup& g);

// Exponent of the torsion part alone (1 for free or trivial groups).
Int torsion_exponent(const FgAbGroup& g);

PrimaryDecomposition primary_decomposition(const FgAbGroup& g);

// All finite classes with order <= max_order, sorted by order and then by
// ascending-lex invariant factor list.
std::vector<FgAbGroup> enumerate_groups(long max_order);

}  // namespace morphz
