#include "morphz/abelian.hpp"

#include <algorithm>
#include <functional>

namespace morphz {

FgAbGroup::FgAbGroup(long free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  if (free_rank_ < 0) throw std::invalid_argument("free rank must be nonnegative");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw std::invalid_argument("invariant factors must be >= 2, got " + factors_[i].get_str());
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FgAbGroup canonicalize(const std::vector<Int>& cyclic_orders, long free_rank) {
  if (free_rank < 0) throw std::domain_error("free rank must be nonnegative");
  std::vector<Int> kept;
  for (const Int& d : cyclic_orders) {
    if (d <= 0) throw std::domain_error("cyclic order must be positive, got " + d.get_str());
    if (d >= 2) kept.push_back(d);
  }
  if (kept.empty()) return FgAbGroup(free_rank, {});
  // The invariant factors of a direct sum of cyclics are the Smith diagonal
  // of the diagonal relation matrix.
  auto res = snf(diagonal_matrix(kept));
  std::vector<Int> factors;
  for (const Int& d : res.diagonal())
    if (d >= 2) factors.push_back(d);
  return FgAbGroup(free_rank, std::move(factors));
}

FgAbGroup from_relations(const IntMatrix& rel) {
  auto res = snf(rel);
  std::vector<Int> torsion;
  for (const Int& d : res.diagonal())
    if (d >= 2) torsion.push_back(d);
  return FgAbGroup(static_cast<long>(rel.rows() - res.rank()), std::move(torsion));
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  std::vector<Int> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return canonicalize(orders, a.free_rank() + b.free_rank());
}

GroupOrder order(const FgAbGroup& g) {
  if (!g.is_finite()) return GroupOrder::infinite();
  Int n = 1;
  for (const Int& d : g.invariant_factors()) n *= d;
  return GroupOrder::finite(n);
}

GroupOrder exponent(const FgAbGroup& g) {
  if (!g.is_finite()) return GroupOrder::infinite();
  return GroupOrder::finite(torsion_exponent(g));
}

Int torsion_exponent(const FgAbGroup& g) {
  // The largest invariant factor absorbs all the others.
  return g.invariant_factors().empty() ? Int(1) : g.invariant_factors().back();
}

PrimaryDecomposition primary_decomposition(const FgAbGroup& g) {
  PrimaryDecomposition pd;
  pd.free_rank = g.free_rank();
  const auto& f = g.invariant_factors();
  // Walk from the largest factor down so each partition comes out descending.
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    for (const auto& [p, e] : factorize(*it)) pd.components[p].push_back(e);
  return pd;
}

FgAbGroup PrimaryDecomposition::recombine() const {
  std::size_t len = 0;
  for (const auto& [p, part] : components) len = std::max(len, part.size());
  std::vector<Int> desc(len, Int(1));
  for (const auto& [p, part] : components)
    for (std::size_t t = 0; t < part.size(); ++t) {
      if (part[t] <= 0) throw std::domain_error("primary exponents must be positive");
      desc[t] *= int_pow(p, static_cast<unsigned long>(part[t]));
    }
  return canonicalize(desc, free_rank);
}

namespace {

std::vector<std::vector<int>> partitions_desc(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace

std::vector<FgAbGroup> enumerate_groups(long max_order) {
  if (max_order < 1) throw std::domain_error("max_order must be >= 1");
  std::vector<FgAbGroup> out;
  for (long n = 1; n <= max_order; ++n) {
    std::vector<Int> primes;
    std::vector<std::vector<std::vector<int>>> parts;
    for (const auto& [p, e] : factorize(Int(n))) {
      primes.push_back(p);
      parts.push_back(partitions_desc(e));
    }

    std::vector<FgAbGroup> at_n;
    std::vector<std::size_t> idx(primes.size(), 0);
    for (;;) {
      PrimaryDecomposition pd;
      for (std::size_t i = 0; i < primes.size(); ++i) pd.components[primes[i]] = parts[i][idx[i]];
      at_n.push_back(pd.recombine());
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == parts[i].size()) {
        idx[i] = 0;
        ++i;
      }
      if (i == idx.size()) break;
    }

    std::sort(at_n.begin(), at_n.end(), [](const FgAbGroup& a, const FgAbGroup& b) {
      return a.invariant_factors() < b.invariant_factors();
    });
    out.insert(out.end(), at_n.begin(), at_n.end());
  }
  return out;
}

}  // namespace morphz
