#include "morphz/morphic.hpp"

namespace morphz {

// Multiplication by a acts factor-wise, and on one cyclic factor Z/d the
// image is the subgroup of index gcd(a, d).  On the free part it is injective
// unless a = 0.

FgAbGroup image_mul(const FgAbGroup& m, const Int& a) {
  std::vector<Int> parts;
  for (const Int& d : m.invariant_factors()) parts.push_back(d / gcd(a, d));
  return canonicalize(parts, a != 0 ? m.free_rank() : 0);
}

FgAbGroup ann_mul(const FgAbGroup& m, const Int& a) {
  std::vector<Int> parts;
  for (const Int& d : m.invariant_factors()) parts.push_back(gcd(a, d));
  return canonicalize(parts, a == 0 ? m.free_rank() : 0);
}

FgAbGroup coker_mul(const FgAbGroup& m, const Int& a) {
  std::vector<Int> parts;
  for (const Int& d : m.invariant_factors()) parts.push_back(gcd(a, d));
  long rank = 0;
  if (a == 0) {
    rank = m.free_rank();
  } else {
    // Z / aZ for each free generator.
    Int aa = abs(a);
    if (aa >= 2)
      for (long i = 0; i < m.free_rank(); ++i) parts.push_back(aa);
  }
  return canonicalize(parts, rank);
}

bool is_a_morphic(const FgAbGroup& m, const Int& a) {
  return coker_mul(m, a) == ann_mul(m, a);
}

MorphicVerdict is_weakly_morphic(const FgAbGroup& m) {
  if (m.free_rank() > 0) {
    // One more than the torsion exponent is coprime to all torsion, so its
    // annihilator vanishes while the cokernel keeps a free-part quotient.
    Int witness = torsion_exponent(m) + 1;
    return {false, witness};
  }
  const Int e = torsion_exponent(m);
  for (Int a = 0; a < e; ++a)
    if (!is_a_morphic(m, a)) return {false, a};
  return {true, std::nullopt};
}

bool is_morphic_fg(const FgAbGroup& m) {
  if (!m.is_finite()) return false;
  for (const auto& [p, part] : primary_decomposition(m).components)
    for (int e : part)
      if (e != part.front()) return false;  // p-component not homogeneous
  return true;
}

bool is_mul_regular(const FgAbGroup& m, const Int& a) {
  // M = aM + Ann(a) splits iff the free part survives (|a| <= 1 or no free
  // part) and, on torsion, every prime hits a fully or not at all:
  // gcd(a, e) == gcd(a^2, e) says exactly that.
  if (m.free_rank() > 0 && abs(a) > 1) return false;
  const Int e = torsion_exponent(m);
  return gcd(a, e) == gcd(Int(a * a), e);
}

SummandScanReport weakly_morphic_summand_scan(long max_order) {
  SummandScanReport rep;
  rep.max_order = max_order;
  const auto classes = enumerate_groups(max_order);
  rep.classes = static_cast<long>(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i; j < classes.size(); ++j) {
      if (order(classes[i]).value() * order(classes[j]).value() > max_order) continue;
      ++rep.pairs;
      if (!is_weakly_morphic(direct_sum(classes[i], classes[j])).holds) continue;
      if (!is_weakly_morphic(classes[i]).holds || !is_weakly_morphic(classes[j]).holds)
        ++rep.counterexamples;
    }
  }
  return rep;
}

}  // namespace morphz
