#include "morphz/endo.hpp"

namespace morphz {

FinitePresentation::FinitePresentation(std::vector<Int> orders_in) : orders(std::move(orders_in)) {
  for (const Int& n : orders)
    if (n < 1) throw std::invalid_argument("presentation orders must be >= 1");
}

Int FinitePresentation::group_size() const {
  Int s = 1;
  for (const Int& n : orders) s *= n;
  return s;
}

Int FinitePresentation::exponent() const {
  Int e = 1;
  for (const Int& n : orders) e = lcm(e, n);
  return e;
}

FgAbGroup FinitePresentation::group_class() const { return canonicalize(orders, 0); }

FinitePresentation presentation_of(const FgAbGroup& g) {
  if (!g.is_finite()) throw std::invalid_argument("presentation_of requires a finite group");
  return FinitePresentation(g.invariant_factors());
}

Endo make_endo(const FinitePresentation& p, const IntMatrix& m) {
  const Eigen::Index k = p.rank();
  if (m.rows() != k || m.cols() != k)
    throw std::invalid_argument("endomorphism matrix must be " + std::to_string(k) + "x" +
                                std::to_string(k));
  IntMatrix red(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      red(i, j) = mod_floor(m(i, j), p.orders[static_cast<std::size_t>(i)]);
      // Sending generator j to column j is well defined iff the column kills
      // the order of generator j.
      if (Int(p.orders[static_cast<std::size_t>(j)] * red(i, j)) %
              p.orders[static_cast<std::size_t>(i)] !=
          0)
        throw std::invalid_argument("matrix does not define an endomorphism at entry (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return Endo{p, std::move(red)};
}

Endo mul_endo(const FinitePresentation& p, const Int& a) {
  const Eigen::Index k = p.rank();
  IntMatrix m = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) m(i, i) = mod_floor(a, p.orders[static_cast<std::size_t>(i)]);
  return Endo{p, std::move(m)};  // diagonal scalar action is always well defined
}

Endo compose(const Endo& f, const Endo& g) {
  if (f.domain.orders != g.domain.orders)
    throw std::invalid_argument("compose requires endomorphisms of the same presentation");
  return make_endo(f.domain, mat_mul(f.matrix, g.matrix));
}

Int hom_count(const FinitePresentation& p, const FinitePresentation& q) {
  // Generator j of p can land on any element of the gcd(m_i, n_j)-torsion of
  // the i-th cyclic factor of q, independently per entry.
  Int c = 1;
  for (const Int& mi : q.orders)
    for (const Int& nj : p.orders) c *= gcd(mi, nj);
  return c;
}

Int endo_count(const FinitePresentation& p) { return hom_count(p, p); }

void for_each_endo(const FinitePresentation& p, const std::function<bool(const Endo&)>& fn,
                   const Int& budget) {
  const Int total = endo_count(p);
  if (total > budget)
    throw BudgetError("endomorphism enumeration needs " + total.get_str() +
                          " maps but the budget is " + budget.get_str(),
                      total);
  const Eigen::Index k = p.rank();
  const std::size_t cells = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);

  // Entry (i, j) ranges over the multiples of n_i / gcd(n_i, n_j); drive the
  // whole matrix as an odometer with the last cell fastest.
  std::vector<Int> step(cells), radix(cells), digit(cells, 0);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      const Int g = gcd(p.orders[static_cast<std::size_t>(i)], p.orders[static_cast<std::size_t>(j)]);
      radix[static_cast<std::size_t>(i * k + j)] = g;
      step[static_cast<std::size_t>(i * k + j)] = p.orders[static_cast<std::size_t>(i)] / g;
    }

  Endo e{p, IntMatrix::Zero(k, k)};
  for (;;) {
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        e.matrix(i, j) = digit[static_cast<std::size_t>(i * k + j)] *
                         step[static_cast<std::size_t>(i * k + j)];
    if (!fn(e)) return;
    std::size_t d = cells;
    while (d > 0) {
      --d;
      if (++digit[d] < radix[d]) break;
      digit[d] = 0;
      if (d == 0) return;
    }
    if (cells == 0) return;  // trivial group: exactly one endomorphism
  }
}

FgAbGroup subgroup_class(const FinitePresentation& p, const IntMatrix& gens) {
  const Eigen::Index k = p.rank();
  if (gens.rows() != k)
    throw std::invalid_argument("generator matrix rows must match the presentation rank");
  const Eigen::Index m = gens.cols();
  if (m == 0) return FgAbGroup();
  // Coefficient vectors c with gens * c = 0 in the group are the x-block of
  // the kernel of [gens | diag(orders)]; that lattice has full rank m and is
  // a complete relation matrix for the m generators.
  std::vector<Int> orders = p.orders;
  IntMatrix stacked = hcat(gens, diagonal_matrix(orders));
  IntMatrix rel = integer_kernel(stacked).topRows(m);
  return from_relations(rel);
}

FgAbGroup endo_image(const Endo& f) { return subgroup_class(f.domain, f.matrix); }

FgAbGroup endo_kernel(const Endo& f) {
  const Eigen::Index k = f.domain.rank();
  if (k == 0) return FgAbGroup();
  // Solutions of A x = 0 (mod orders) are the x-block of the kernel of
  // [A | diag(orders)]; those columns generate the kernel subgroup.
  IntMatrix stacked = hcat(f.matrix, diagonal_matrix(f.domain.orders));
  IntMatrix xs = integer_kernel(stacked).topRows(k);
  return subgroup_class(f.domain, xs);
}

FgAbGroup endo_coker(const Endo& f) {
  // Z^k / (relation columns + image columns).
  return from_relations(hcat(diagonal_matrix(f.domain.orders), f.matrix));
}

bool brute_is_morphic(const FinitePresentation& p, const Int& budget) {
  bool ok = true;
  for_each_endo(
      p,
      [&](const Endo& f) {
        if (!is_endo_morphic(f)) ok = false;
        return ok;
      },
      budget);
  return ok;
}

bool brute_is_weakly_morphic(const FinitePresentation& p) {
  const Int e = p.exponent();
  for (Int a = 0; a < e; ++a)
    if (!is_endo_morphic(mul_endo(p, a))) return false;
  return true;
}

std::optional<Int> regular_witness_search(const FinitePresentation& p, const Int& a) {
  const Endo fa = mul_endo(p, a);
  const Int e = p.exponent();
  for (Int x = 0; x < e; ++x)
    if (compose(compose(fa, mul_endo(p, x)), fa).matrix == fa.matrix) return x;
  return std::nullopt;
}

std::optional<Endo> morphic_witness(const FinitePresentation& p, const Int& a) {
  if (!is_a_morphic(p.group_class(), a)) return std::nullopt;
  if (p.group_size() > kDefaultEndoBudget)
    throw BudgetError("witness certification would enumerate " + p.group_size().get_str() +
                          " elements",
                      p.group_size());
  const Eigen::Index k = p.rank();
  IntMatrix m = IntMatrix::Zero(k, k);
  // On Z/n_i the subgroup a(Z/n_i) is generated by gcd(a, n_i), and scaling
  // by n_i/gcd(a, n_i) kills exactly that subgroup while landing in the
  // a-torsion.  Diagonal assembly inherits both properties.
  for (Eigen::Index i = 0; i < k; ++i) {
    const Int& ni = p.orders[static_cast<std::size_t>(i)];
    m(i, i) = mod_floor(ni / gcd(a, ni), ni);
  }
  Endo psi = make_endo(p, m);

  // Certify element-wise against the multiplication map before returning.
  const Endo fa = mul_endo(p, a);
  if (kernel_set(psi) != image_set(fa)) return std::nullopt;
  if (image_set(psi) != kernel_set(fa)) return std::nullopt;
  return psi;
}

std::vector<std::vector<Int>> all_elements(const FinitePresentation& p) {
  const std::size_t k = p.orders.size();
  std::vector<std::vector<Int>> out;
  std::vector<Int> x(k, 0);
  for (;;) {
    out.push_back(x);
    std::size_t d = k;
    bool done = true;
    while (d > 0) {
      --d;
      if (++x[d] < p.orders[d]) {
        done = false;
        break;
      }
      x[d] = 0;
    }
    if (done) return out;
  }
}

std::vector<Int> apply_endo(const Endo& f, const std::vector<Int>& x) {
  const Eigen::Index k = f.domain.rank();
  if (static_cast<Eigen::Index>(x.size()) != k)
    throw std::invalid_argument("element size mismatch");
  std::vector<Int> y(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < k; ++i) {
    Int acc = 0;
    for (Eigen::Index j = 0; j < k; ++j) acc += f.matrix(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = mod_floor(acc, f.domain.orders[static_cast<std::size_t>(i)]);
  }
  return y;
}

std::set<std::vector<Int>> image_set(const Endo& f) {
  std::set<std::vector<Int>> out;
  for (const auto& x : all_elements(f.domain)) out.insert(apply_endo(f, x));
  return out;
}

std::set<std::vector<Int>> kernel_set(const Endo& f) {
  const std::vector<Int> zero(f.domain.orders.size(), 0);
  std::set<std::vector<Int>> out;
  for (const auto& x : all_elements(f.domain))
    if (apply_endo(f, x) == zero) out.insert(x);
  return out;
}

}  // namespace morphz
