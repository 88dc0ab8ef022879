#include "morphz/rings.hpp"

namespace morphz {

std::string ring_str(const BaseRing& r) {
  if (std::holds_alternative<IntegerRing>(r)) return "Z";
  if (const auto* m = std::get_if<ModularRing>(&r)) return "Z/" + m->modulus.get_str();
  const auto& pr = std::get<ProductRing>(r);
  std::string s;
  for (std::size_t i = 0; i < pr.components.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + pr.components[i].modulus.get_str();
  }
  return s;
}

namespace {

void check_modular_pair(const ModularRing& r, const FgAbGroup& g) {
  if (r.modulus < 1) throw std::invalid_argument("ring modulus must be >= 1");
  if (!g.is_finite())
    throw std::invalid_argument("a module over Z/" + r.modulus.get_str() + " must be finite");
  if (r.modulus % torsion_exponent(g) != 0)
    throw std::invalid_argument("group exponent " + torsion_exponent(g).get_str() +
                                " does not divide the ring modulus " + r.modulus.get_str());
}

}  // namespace

RingModule make_ring_module(BaseRing ring, std::vector<FgAbGroup> components) {
  if (std::holds_alternative<IntegerRing>(ring)) {
    if (components.size() != 1)
      throw std::invalid_argument("a module over Z is a single group");
  } else if (const auto* m = std::get_if<ModularRing>(&ring)) {
    if (components.size() != 1)
      throw std::invalid_argument("a module over Z/n is a single group");
    check_modular_pair(*m, components[0]);
  } else {
    const auto& pr = std::get<ProductRing>(ring);
    if (pr.components.empty()) throw std::invalid_argument("product ring needs a component");
    if (pr.components.size() != components.size())
      throw std::invalid_argument("product module needs one group per ring component");
    for (std::size_t i = 0; i < components.size(); ++i)
      check_modular_pair(pr.components[i], components[i]);
  }
  return RingModule{std::move(ring), std::move(components)};
}

Int ann_generator(const FgAbGroup& m) {
  return m.free_rank() > 0 ? Int(0) : torsion_exponent(m);
}

BaseRing multiplication_ring(const FgAbGroup& m) {
  if (m.free_rank() > 0) return IntegerRing{};
  return ModularRing{torsion_exponent(m)};
}

namespace {

bool modulus_is_regular(const Int& n) {
  // a is regular in Z/n iff some x solves a = a*x*a; search exhaustively.
  for (Int a = 0; a < n; ++a) {
    bool found = false;
    for (Int x = 0; x < n && !found; ++x)
      if ((a * x * a - a) % n == 0) found = true;
    if (!found) return false;
  }
  return n >= 1;
}

}  // namespace

bool is_regular_ring(const BaseRing& r) {
  if (std::holds_alternative<IntegerRing>(r)) return false;  // 2 has no quasi-inverse
  if (const auto* m = std::get_if<ModularRing>(&r)) return modulus_is_regular(m->modulus);
  const auto& pr = std::get<ProductRing>(r);
  for (const auto& c : pr.components)
    if (!modulus_is_regular(c.modulus)) return false;
  return true;
}

bool is_weakly_morphic_over(const RingModule& m) {
  if (std::holds_alternative<IntegerRing>(m.ring)) return is_weakly_morphic(m.components[0]).holds;
  if (const auto* r = std::get_if<ModularRing>(&m.ring)) {
    for (Int a = 0; a < r->modulus; ++a)
      if (!is_a_morphic(m.components[0], a)) return false;
    return true;
  }
  const auto& pr = std::get<ProductRing>(m.ring);
  for (std::size_t i = 0; i < pr.components.size(); ++i) {
    RingModule comp{pr.components[i], {m.components[i]}};
    if (!is_weakly_morphic_over(comp)) return false;
  }
  return true;
}

bool product_module_check(const RingModule& m, const Int& budget) {
  const auto* pr = std::get_if<ProductRing>(&m.ring);
  if (!pr) throw std::invalid_argument("product_module_check requires a product ring");
  const std::size_t k = pr->components.size();

  Int tuples = 1;
  for (const auto& c : pr->components) tuples *= c.modulus;
  if (tuples > budget)
    throw BudgetError("scalar-tuple scan needs " + tuples.get_str() + " tuples but the budget is " +
                          budget.get_str(),
                      tuples);

  // Direct evaluation: a scalar of the product ring is a tuple (a_1..a_k)
  // acting componentwise, and the module is tuple-morphic iff each component
  // is a_i-morphic.
  bool direct = true;
  std::vector<Int> a(k, 0);
  for (;;) {
    for (std::size_t i = 0; i < k && direct; ++i)
      if (!is_a_morphic(m.components[i], a[i])) direct = false;
    if (!direct) break;
    std::size_t d = k;
    bool done = true;
    while (d > 0) {
      --d;
      if (++a[d] < pr->components[d].modulus) {
        done = false;
        break;
      }
      a[d] = 0;
    }
    if (done) break;
  }

  bool componentwise = is_weakly_morphic_over(m);

  if (direct != componentwise)
    throw DisagreementError("product module " + ring_str(m.ring) +
                            ": direct scalar-tuple scan says " + (direct ? "true" : "false") +
                            " but the componentwise test says " +
                            (componentwise ? "true" : "false"));
  return direct;
}

RingModule crt_combine(const std::vector<RingModule>& mods) {
  if (mods.empty()) throw std::invalid_argument("crt_combine needs at least one module");
  Int n = 1;
  FgAbGroup g;
  for (const auto& m : mods) {
    const auto* r = std::get_if<ModularRing>(&m.ring);
    if (!r) throw std::invalid_argument("crt_combine takes modules over Z/n components");
    if (gcd(n, r->modulus) != 1)
      throw std::invalid_argument("crt_combine requires pairwise coprime moduli");
    n *= r->modulus;
    g = direct_sum(g, m.components[0]);
  }
  return make_ring_module(ModularRing{n}, {g});
}

}  // namespace morphz
