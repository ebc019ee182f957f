#include "swb/arrangement.hpp"

#include <algorithm>
#include <unordered_map>

#include "swb/parallel.hpp"

namespace swb {

PolyRing type_a_ring(int n) { return PolyRing::make(n, false); }

namespace {

GradedSlice pair_power_on(const PolyRing& ring, const BasisPtr& basis, int i, int j, int d, int a, int b) {
  const MultiPoly dx = ring.xvar(i) - ring.xvar(j);
  const MultiPoly dy = ring.yvar(i) - ring.yvar(j);
  RowReducer red(basis->size());
  for (int e1 = 0; e1 <= d; ++e1) {
    const int e2 = d - e1;
    if (e1 > a || e2 > b) continue;
    const MultiPoly p = dx.pow(static_cast<unsigned>(e1)) * dy.pow(static_cast<unsigned>(e2));
    for (const auto& m : slice_monomials(ring, Bidegree::algebraic(a - e1, b - e2))) {
      red.insert(to_vector(*basis, p.shifted(m)));
      if (red.rank() == basis->size()) break;
    }
  }
  return GradedSlice::span(basis, std::move(red).finish());
}

}  // namespace

GradedSlice pair_power_slice(const PolyRing& ring, int i, int j, int d, int a, int b) {
  if (i == j || i < 0 || j < 0 || i >= ring.rank || j >= ring.rank) throw Error("invalid index pair");
  return pair_power_on(ring, make_basis(ring, Bidegree::algebraic(a, b)), i, j, d, a, b);
}

GradedSlice jd_slice(const PolyRing& ring, int d, int a, int b) {
  if (d < 0) throw Error("d must be nonnegative");
  auto basis = make_basis(ring, Bidegree::algebraic(a, b));
  if (d == 0 || ring.rank < 2) return GradedSlice::full(basis);
  std::vector<GradedSlice> parts;
  for (int i = 0; i < ring.rank; ++i)
    for (int j = i + 1; j < ring.rank; ++j) parts.push_back(pair_power_on(ring, basis, i, j, d, a, b));
  return subspace_intersect(parts);
}

std::vector<SparseVector> shifted_rows(const GradedSlice& s, const MonomialBasis& target, std::size_t var) {
  std::vector<SparseVector> out;
  out.reserve(s.rank());
  Exponent e;
  for (const auto& row : s.rows()) {
    SparseVector v;
    v.reserve(row.size());
    for (const auto& [i, c] : row) {
      e = s.basis()->at(i);
      e[var] += 1;
      auto idx = target.index_of(e);
      if (!idx) throw Error("shifted monomial is outside the target slice");
      v.emplace_back(*idx, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Laurent slices

PolyRing laurent_ring(const RootDatum& rd, bool ktheory) { return PolyRing::make(rd.rank, true, false, ktheory); }

namespace {

struct ExpHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : e) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(v))) * 1099511628211ull;
    return h;
  }
};

// Spans `polys` in a basis that extends `target`, then restricts to it.
GradedSlice span_and_restrict(const BasisPtr& target, const std::vector<MultiPoly>& polys) {
  std::vector<Exponent> monos = target->monomials();
  std::unordered_map<Exponent, std::size_t, ExpHash> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  std::vector<SparseVector> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    SparseVector v;
    for (const auto& [e, c] : p.terms()) {
      auto [it, inserted] = index.try_emplace(e, monos.size());
      if (inserted) monos.push_back(e);
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.push_back(std::move(v));
  }
  auto big = make_basis(target->vars(), std::move(monos));
  return GradedSlice::span(big, rows).restrict_to(target);
}

MultiPoly x_power(const PolyRing& ring, const IntVector& lambda) {
  Exponent e(ring.size(), 0);
  for (int i = 0; i < ring.rank; ++i) e[ring.x(i)] = lambda[i];
  return MultiPoly::monomial(ring.vars, e);
}

MultiPoly y_power(const PolyRing& ring, const IntVector& mu) {
  Exponent e(ring.size(), 0);
  for (int i = 0; i < ring.rank; ++i) e[ring.y(i)] = mu[i];
  return MultiPoly::monomial(ring.vars, e);
}

int y_degree_of(const PolyRing& ring, const MultiPoly& p) {
  // Homogeneous by construction; read it off any term.
  if (p.is_zero()) return 0;
  return ring.degree_of(p.terms().begin()->first, Grading::Homological).second;
}

std::vector<Exponent> multipliers(const PolyRing& ring, const Bidegree& deg, int y_deg_of_product,
                                  const WindowPolicy& policy, int margin) {
  const auto xs = policy.x_window.enlarged(margin).points();
  std::vector<std::vector<int>> ys;
  if (ring.y_laurent) {
    if (!policy.y_window) throw Error("doubly Laurent slices need a y-window");
    ys = policy.y_window->enlarged(margin).points();
  } else {
    if (deg.grading != Grading::Homological) throw Error("Laurent x slices are graded by y-degree");
    const int need = deg.second - y_deg_of_product;
    if (need < 0) return {};
    PolyRing yring = PolyRing::make(ring.rank, false);
    for (const auto& e : slice_monomials(yring, Bidegree::algebraic(0, need)))
      ys.emplace_back(e.begin() + ring.rank, e.end());
  }
  std::vector<Exponent> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Exponent e(ring.size(), 0);
      for (int i = 0; i < ring.rank; ++i) {
        e[ring.x(i)] = x[i];
        e[ring.y(i)] = y[i];
      }
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace

GradedSlice root_power_slice(const RootDatum& rd, const PolyRing& ring, std::size_t root, int d, const Bidegree& deg,
                             const WindowPolicy& policy, int margin, GeneratorFamily family) {
  const auto& a = rd.roots.at(root);
  MultiPoly g1(ring.vars);
  if (family == GeneratorFamily::Root) {
    g1 = root_form(ring, a.form);
  } else if (family == GeneratorFamily::KTheory) {
    g1 = ring.one() - y_power(ring, a.form);
  } else {
    throw Error("root_power_slice supports the ROOT and KTHEORY families");
  }
  const MultiPoly g2 = ring.one() - x_power(ring, a.coroot);
  auto target = make_basis(ring, deg, policy.x_window, policy.y_window);
  std::vector<MultiPoly> polys;
  for (int e1 = 0; e1 <= d; ++e1) {
    const MultiPoly p = g1.pow(static_cast<unsigned>(e1)) * g2.pow(static_cast<unsigned>(d - e1));
    for (const auto& m : multipliers(ring, deg, ring.y_laurent ? 0 : y_degree_of(ring, p), policy, margin))
      polys.push_back(p.shifted(m));
  }
  return span_and_restrict(target, polys);
}

WindowedSlice jd_slice(const RootDatum& rd, int d, const Bidegree& deg, const WindowPolicy& policy,
                       GeneratorFamily family) {
  if (d < 1) throw Error("jd_slice needs d >= 1");
  if (policy.margin < d) throw Error("window margin must be at least d");
  const PolyRing ring = laurent_ring(rd, family == GeneratorFamily::KTheory);
  auto at = [&](int margin) {
    std::vector<GradedSlice> parts;
    for (std::size_t r = 0; r < rd.roots.size(); ++r)
      parts.push_back(root_power_slice(rd, ring, r, d, deg, policy, margin, family));
    return subspace_intersect(parts);
  };
  GradedSlice cur = at(policy.margin);
  for (int m = policy.margin; m < policy.max_margin; ++m) {
    GradedSlice next = at(m + 1);
    if (next.rank() == cur.rank()) return {std::move(cur), m, true};
    cur = std::move(next);
  }
  return {std::move(cur), policy.max_margin, false};
}

}  // namespace swb
