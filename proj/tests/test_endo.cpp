#include "morphz/endo.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "helpers.hpp"

using namespace morphz;
using testutil::all_tuples;
using testutil::class_multiset;
using testutil::grp;
using testutil::make;
using testutil::tuple_order;

namespace {

using Tuple = std::vector<Int>;

// Raw matrix action, written independently of apply_endo.
Tuple raw_apply(const std::vector<Int>& orders, const IntMatrix& m, const Tuple& x) {
  Tuple y(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      acc += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * x[j];
    y[i] = mod_floor(acc, orders[i]);
  }
  return y;
}

Tuple add(const std::vector<Int>& orders, const Tuple& x, const Tuple& y) {
  Tuple z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mod_floor(x[i] + y[i], orders[i]);
  return z;
}

// A matrix defines an endomorphism exactly when the raw action is additive on
// the group, i.e. compatible with generator wrap-around.
bool additive_on_group(const std::vector<Int>& orders, const IntMatrix& m) {
  const auto xs = all_tuples(orders);
  for (const auto& x : xs)
    for (std::size_t j = 0; j < orders.size(); ++j) {
      Tuple ej(orders.size(), 0);
      ej[j] = 1;
      const Tuple lhs = raw_apply(orders, m, add(orders, x, ej));
      const Tuple rhs = add(orders, raw_apply(orders, m, x), raw_apply(orders, m, ej));
      if (lhs != rhs) return false;
    }
  return true;
}

// All k x k matrices with entry (i, j) in [0, orders[i]).
std::vector<IntMatrix> all_matrices(const std::vector<Int>& p_orders,
                                    const std::vector<Int>& q_orders) {
  const auto k = static_cast<Eigen::Index>(q_orders.size());
  const auto c = static_cast<Eigen::Index>(p_orders.size());
  std::vector<IntMatrix> out;
  IntMatrix m = IntMatrix::Zero(k, c);
  const std::size_t cells = static_cast<std::size_t>(k * c);
  for (;;) {
    out.push_back(m);
    std::size_t d = cells;
    while (d > 0) {
      --d;
      const auto i = static_cast<Eigen::Index>(d) / c;
      const auto j = static_cast<Eigen::Index>(d) % c;
      if (++m(i, j) < q_orders[static_cast<std::size_t>(i)]) break;
      m(i, j) = 0;
      if (d == 0) return out;
    }
    if (cells == 0) return out;
  }
}

// Valid hom matrices p -> q counted the slow way.
long brute_hom_count(const std::vector<Int>& p, const std::vector<Int>& q) {
  long n = 0;
  for (const auto& m : all_matrices(p, q)) {
    bool ok = true;
    for (std::size_t j = 0; j < p.size() && ok; ++j)
      for (std::size_t i = 0; i < q.size() && ok; ++i)
        ok = Int(p[j] * m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) % q[i] == 0;
    if (ok) ++n;
  }
  return n;
}

std::multiset<Int> subgroup_multiset(const std::vector<Int>& orders, const std::set<Tuple>& sub) {
  std::multiset<Int> out;
  for (const auto& x : sub) out.insert(tuple_order(orders, x));
  return out;
}

std::multiset<Int> quotient_multiset(const std::vector<Int>& orders, const std::set<Tuple>& sub) {
  std::set<Tuple> seen;
  std::multiset<Int> out;
  for (const auto& x : all_tuples(orders)) {
    Tuple rep = x;
    for (const auto& s : sub) rep = std::min(rep, add(orders, x, s));
    if (!seen.insert(rep).second) continue;
    Int k = 1;
    auto scaled = [&](const Int& t) {
      Tuple y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = mod_floor(t * x[i], orders[i]);
      return y;
    };
    while (!sub.count(scaled(k))) ++k;
    out.insert(k);
  }
  return out;
}

std::vector<Int> ords(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("presentations") {
  const FinitePresentation p(ords({4, 6}));
  CHECK(p.rank() == 2);
  CHECK(p.group_size() == 24);
  CHECK(p.exponent() == 12);
  CHECK(p.group_class() == grp({2, 12}));  // classes come out canonical
  CHECK(FinitePresentation(ords({1, 4})).group_class() == grp({4}));
  CHECK(FinitePresentation().group_size() == 1);
  CHECK(FinitePresentation().exponent() == 1);
  CHECK_THROWS_AS(FinitePresentation(ords({0})), std::invalid_argument);
  CHECK_THROWS_AS(presentation_of(grp({2}, 1)), std::invalid_argument);
  for (const auto& g : enumerate_groups(30)) CHECK(presentation_of(g).group_class() == g);
}

TEST_CASE("make_endo accepts exactly the additive matrices") {
  const std::vector<std::vector<long>> presentations = {
      {2}, {3}, {4}, {2, 2}, {6}, {2, 3}, {8}, {2, 4}, {2, 2, 2}, {12}, {2, 6}, {3, 4}, {2, 2, 3}};
  for (const auto& raw : presentations) {
    const auto n = ords(raw);
    const FinitePresentation p{n};
    std::string tag;
    for (long v : raw) tag += std::to_string(v) + " ";
    CAPTURE(tag);
    long valid = 0;
    for (const auto& m : all_matrices(n, n)) {
      const bool additive = additive_on_group(n, m);
      bool accepted = true;
      try {
        const Endo f = make_endo(p, m);
        CHECK(f.matrix == m);  // entries were already reduced
      } catch (const std::invalid_argument&) {
        accepted = false;
      }
      CHECK(accepted == additive);
      if (additive) ++valid;
    }
    CHECK(Int(valid) == endo_count(p));
  }
}

TEST_CASE("make_endo reduces entries and rejects bad shapes") {
  const FinitePresentation p(ords({2, 4}));
  const Endo f = make_endo(p, make({{3, 1}, {6, 7}}));
  CHECK(f.matrix == make({{1, 1}, {2, 3}}));
  CHECK_THROWS_AS(make_endo(p, make({{1}})), std::invalid_argument);
  CHECK_THROWS_AS(make_endo(p, make({{0, 0}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("hom_count matches brute enumeration") {
  const std::vector<std::pair<std::vector<long>, std::vector<long>>> pairs = {
      {{2}, {4}},      {{4}, {2}},    {{2, 4}, {6}}, {{6}, {2, 4}},
      {{2, 2}, {2, 2}}, {{3}, {4}},   {{12}, {8}},   {{2, 4}, {2, 4}},
  };
  for (const auto& [pv, qv] : pairs) {
    const FinitePresentation p{ords(pv)}, q{ords(qv)};
    CHECK(hom_count(p, q) == brute_hom_count(ords(pv), ords(qv)));
  }
  CHECK(hom_count(FinitePresentation(ords({2, 4})), FinitePresentation(ords({6}))) == 4);
  CHECK(endo_count(FinitePresentation(ords({2, 4}))) == 32);
  CHECK(endo_count(FinitePresentation()) == 1);
}

TEST_CASE("for_each_endo enumerates exactly the valid matrices, once each") {
  for (const auto& raw : {std::vector<long>{2, 4}, {6}, {2, 2}, {3}, {}}) {
    const auto n = ords(raw);
    const FinitePresentation p{n};
    std::set<std::vector<Int>> expected;
    for (const auto& m : all_matrices(n, n))
      if (additive_on_group(n, m))
        expected.insert(std::vector<Int>(m.data(), m.data() + m.size()));
    std::set<std::vector<Int>> seen;
    long calls = 0;
    for_each_endo(p, [&](const Endo& f) {
      ++calls;
      CHECK(seen.insert(std::vector<Int>(f.matrix.data(), f.matrix.data() + f.matrix.size()))
                .second);
      return true;
    });
    CHECK(Int(calls) == endo_count(p));
    CHECK(seen == expected);
  }
  SUBCASE("early exit stops the walk") {
    long calls = 0;
    for_each_endo(FinitePresentation(ords({2, 4})), [&](const Endo&) { return ++calls < 5; });
    CHECK(calls == 5);
  }
  SUBCASE("over-budget walks throw before visiting anything") {
    long calls = 0;
    try {
      for_each_endo(FinitePresentation(ords({2, 4})), [&](const Endo&) {
        ++calls;
        return true;
      }, Int(10));
      FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
      CHECK(e.count() == 32);
    }
    CHECK(calls == 0);
  }
}

TEST_CASE("scalar endomorphisms and composition") {
  const FinitePresentation p(ords({2, 4}));
  CHECK(mul_endo(p, 3).matrix == make({{1, 0}, {0, 3}}));
  CHECK(mul_endo(p, 0).matrix == IntMatrix::Zero(2, 2));

  // End(Z/2 + Z/4) is closed under composition, and compose really is
  // function composition.
  std::vector<Endo> endos;
  for_each_endo(p, [&](const Endo& f) {
    endos.push_back(f);
    return true;
  });
  REQUIRE(endos.size() == 32);
  const auto elems = all_tuples(p.orders);
  for (const auto& f : endos)
    for (const auto& g : endos) {
      const Endo fg = compose(f, g);
      for (const auto& x : elems) CHECK(apply_endo(fg, x) == apply_endo(f, apply_endo(g, x)));
    }
  CHECK_THROWS_AS(compose(endos[0], mul_endo(FinitePresentation(ords({6})), 1)),
                  std::invalid_argument);
}

TEST_CASE("subgroup_class") {
  const FinitePresentation p(ords({2, 4}));
  CHECK(subgroup_class(p, make({{1}, {0}})) == grp({2}));
  CHECK(subgroup_class(p, make({{0}, {1}})) == grp({4}));
  CHECK(subgroup_class(p, make({{1, 0}, {0, 1}})) == grp({2, 4}));
  CHECK(subgroup_class(p, make({{0}, {2}})) == grp({2}));
  CHECK(subgroup_class(p, make({{3}, {5}})) == grp({4}));  // entries reduce mod orders
  CHECK(subgroup_class(p, IntMatrix(2, 0)) == FgAbGroup());
  CHECK(subgroup_class(p, IntMatrix::Zero(2, 3)) == FgAbGroup());
  CHECK_THROWS_AS(subgroup_class(p, make({{1}})), std::invalid_argument);
}

TEST_CASE("image, kernel, and cokernel agree with element-level computation") {
  for (const auto& g : enumerate_groups(12)) {
    const FinitePresentation p = presentation_of(g);
    const auto& n = p.orders;
    for_each_endo(p, [&](const Endo& f) {
      std::set<Tuple> im, ker;
      const Tuple zero(n.size(), 0);
      for (const auto& x : all_tuples(n)) {
        const Tuple y = raw_apply(n, f.matrix, x);
        im.insert(y);
        if (y == zero) ker.insert(x);
      }
      CHECK(class_multiset(endo_image(f)) == subgroup_multiset(n, im));
      CHECK(class_multiset(endo_kernel(f)) == subgroup_multiset(n, ker));
      CHECK(class_multiset(endo_coker(f)) == quotient_multiset(n, im));
      CHECK(Int(im.size()) * Int(ker.size()) == p.group_size());
      CHECK(is_endo_morphic(f) == (quotient_multiset(n, im) == subgroup_multiset(n, ker)));
      return true;
    });
  }
}

TEST_CASE("the four non-morphic endomorphisms of Z/2 + Z/4") {
  const FinitePresentation p(ords({2, 4}));
  const Endo f = make_endo(p, make({{0, 0}, {2, 0}}));
  CHECK(endo_kernel(f) == grp({4}));
  CHECK(endo_image(f) == grp({2}));
  CHECK(endo_coker(f) == grp({2, 2}));
  CHECK_FALSE(is_endo_morphic(f));

  long bad = 0;
  for_each_endo(p, [&](const Endo& e) {
    if (!is_endo_morphic(e)) ++bad;
    return true;
  });
  CHECK(bad == 4);
}

TEST_CASE("brute-force morphicity") {
  CHECK_FALSE(brute_is_morphic(FinitePresentation(ords({2, 4}))));
  CHECK(brute_is_morphic(FinitePresentation(ords({4}))));
  CHECK(brute_is_morphic(FinitePresentation(ords({2, 2}))));
  CHECK(brute_is_morphic(FinitePresentation(ords({8}))));
  CHECK(brute_is_morphic(FinitePresentation()));
  CHECK(brute_is_weakly_morphic(FinitePresentation(ords({2, 4}))));
  CHECK(brute_is_weakly_morphic(FinitePresentation(ords({12}))));
  SUBCASE("agreement with the closed form on every class up to order 12") {
    for (const auto& g : enumerate_groups(12))
      CHECK(brute_is_morphic(presentation_of(g)) == is_morphic_fg(g));
  }
  SUBCASE("budget propagates") {
    CHECK_THROWS_AS(brute_is_morphic(FinitePresentation(ords({2, 4})), Int(10)), BudgetError);
  }
}

TEST_CASE("regular_witness_search") {
  CHECK_FALSE(regular_witness_search(FinitePresentation(ords({4})), 2).has_value());
  CHECK(regular_witness_search(FinitePresentation(ords({4})), 3) == Int(3));
  CHECK(regular_witness_search(FinitePresentation(ords({6})), 2) == Int(2));
  CHECK(regular_witness_search(FinitePresentation(ords({12})), 8) == Int(2));
  SUBCASE("found exactly when multiplication is regular") {
    for (const auto& g : enumerate_groups(24)) {
      const FinitePresentation p = presentation_of(g);
      const Int e = p.exponent();
      for (Int a = 0; a <= e; ++a) {
        const auto x = regular_witness_search(p, a);
        CAPTURE(a);
        CHECK(x.has_value() == is_mul_regular(g, a));
        if (x) {
          const Endo fa = mul_endo(p, a);
          CHECK(compose(compose(fa, mul_endo(p, *x)), fa).matrix == fa.matrix);
        }
      }
    }
  }
}

TEST_CASE("morphic_witness") {
  CHECK(morphic_witness(FinitePresentation(ords({4})), 2)->matrix == make({{2}}));
  CHECK(morphic_witness(FinitePresentation(ords({2, 4})), 2)->matrix == make({{1, 0}, {0, 2}}));
  CHECK(morphic_witness(FinitePresentation(ords({4})), 0)->matrix == make({{1}}));  // identity
  CHECK(morphic_witness(FinitePresentation(ords({4})), 1)->matrix == make({{0}}));  // zero map
  SUBCASE("witnesses exist and certify on every class up to order 12") {
    for (const auto& g : enumerate_groups(12)) {
      const FinitePresentation p = presentation_of(g);
      const Int e = p.exponent();
      for (Int a = 0; a <= e; ++a) {
        const auto psi = morphic_witness(p, a);
        CAPTURE(a);
        REQUIRE(psi.has_value());
        const Endo fa = mul_endo(p, a);
        CHECK(kernel_set(*psi) == image_set(fa));
        CHECK(image_set(*psi) == kernel_set(fa));
      }
    }
  }
}

TEST_CASE("element utilities") {
  const FinitePresentation p(ords({2, 4}));
  const auto xs = all_elements(p);
  CHECK(xs.size() == 8);
  CHECK(std::set<Tuple>(xs.begin(), xs.end()).size() == 8);
  CHECK(all_elements(FinitePresentation()).size() == 1);
  const Endo f = mul_endo(p, 2);
  CHECK(apply_endo(f, {Int(1), Int(3)}) == Tuple{Int(0), Int(2)});
  CHECK_THROWS_AS(apply_endo(f, {Int(1)}), std::invalid_argument);
  CHECK(image_set(f).size() == 2);
  CHECK(kernel_set(f).size() == 4);
}
