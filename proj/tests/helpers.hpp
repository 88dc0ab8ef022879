#pragma once

// Test-side helpers shared across suites: matrix/group literals plus the
// element-walking order-multiset oracle used to cross-check closed forms.

#include "morphz/abelian.hpp"

#include <initializer_list>
#include <set>
#include <vector>

namespace testutil {

using morphz::FgAbGroup;
using morphz::Int;
using morphz::IntMatrix;

inline IntMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(r ? rows.begin()->size() : 0);
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline FgAbGroup grp(std::vector<long> factors, long rank = 0) {
  std::vector<Int> f(factors.begin(), factors.end());
  return FgAbGroup(rank, std::move(f));
}

// Every tuple x with 0 <= x[i] < orders[i]; the empty product has exactly one.
inline std::vector<std::vector<Int>> all_tuples(const std::vector<Int>& orders) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> x(orders.size(), 0);
  for (;;) {
    out.push_back(x);
    std::size_t d = orders.size();
    while (d > 0) {
      --d;
      if (++x[d] < orders[d]) break;
      x[d] = 0;
      if (d == 0) return out;
    }
    if (orders.empty()) return out;
  }
}

inline Int tuple_order(const std::vector<Int>& orders, const std::vector<Int>& x) {
  Int o = 1;
  for (std::size_t i = 0; i < orders.size(); ++i)
    o = lcm(o, Int(orders[i] / gcd(orders[i], x[i])));
  return o;
}

// Multiset of element orders of Z/orders[0] + ... — a complete isomorphism
// invariant for the small groups exercised in the tests.
inline std::multiset<Int> order_multiset(const std::vector<Int>& orders) {
  std::multiset<Int> out;
  for (const auto& x : all_tuples(orders)) out.insert(tuple_order(orders, x));
  return out;
}

inline std::multiset<Int> class_multiset(const FgAbGroup& g) {
  return order_multiset(g.invariant_factors());
}

}  // namespace testutil
