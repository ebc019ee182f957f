#include <algorithm>
#include <map>

#include "swb/arrangement.hpp"

namespace swb {

namespace {

// x_j -> x_i + x_j, y_j -> y_i + y_j: afterwards x_j, y_j play u, v.
MultiPoly shear(const MultiPoly& f, int n, int i, int j) {
  const auto& vars = f.vars();
  const std::size_t xi = static_cast<std::size_t>(i), xj = static_cast<std::size_t>(j);
  const std::size_t yi = static_cast<std::size_t>(n + i), yj = static_cast<std::size_t>(n + j);
  MultiPoly g = f.substitute(xj, MultiPoly::variable(vars, xi) + MultiPoly::variable(vars, xj));
  return g.substitute(yj, MultiPoly::variable(vars, yi) + MultiPoly::variable(vars, yj));
}

MultiPoly clear_negative_exponents(const MultiPoly& f) {
  Exponent m = monomial_content(f);
  bool any = false;
  for (auto& v : m) {
    v = v < 0 ? -v : 0;
    any = any || v != 0;
  }
  if (!any) return f;
  // Same names, polynomial variables: the shifted element has no negative exponents.
  auto poly_vars = make_vars(f.vars()->names);
  MultiPoly out(poly_vars);
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += m[k];
    out.add_term(g, c);
  }
  return out;
}

}  // namespace

bool symbolic_power_oracle(int n, int d, const MultiPoly& f) {
  if (f.vars()->size() < static_cast<std::size_t>(2 * n)) throw Error("oracle needs variables x_1..x_n, y_1..y_n");
  if (d <= 0 || f.is_zero()) return true;
  const MultiPoly g = clear_negative_exponents(f);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const MultiPoly h = shear(g, n, i, j);
      for (const auto& [e, c] : h.terms())
        if (e[static_cast<std::size_t>(j)] + e[static_cast<std::size_t>(n + j)] < d) return false;
    }
  return true;
}

GradedSlice oracle_slice(const PolyRing& ring, int d, int a, int b) {
  const int n = ring.rank;
  auto basis = make_basis(ring, Bidegree::algebraic(a, b));
  // One linear condition per (pair, surviving low-order monomial).
  std::map<std::pair<int, Exponent>, SparseVector> conditions;
  for (std::size_t col = 0; col < basis->size(); ++col) {
    const MultiPoly m = MultiPoly::monomial(ring.vars, basis->at(col));
    int pair = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++pair) {
        const MultiPoly h = shear(m, n, i, j);
        for (const auto& [e, c] : h.terms())
          if (e[static_cast<std::size_t>(j)] + e[static_cast<std::size_t>(n + j)] < d)
            conditions[{pair, e}].emplace_back(col, c);
      }
  }
  std::vector<SparseVector> rows;
  rows.reserve(conditions.size());
  for (auto& [key, row] : conditions) rows.push_back(std::move(row));
  return GradedSlice::span(basis, GradedSlice::span(basis, rows).annihilator());
}

}  // namespace swb
