#include "swb/curves.hpp"
#include "swb/parallel.hpp"

namespace swb {

QuotientDim quotient_hilbert_slice(int n, int d, int points, int degree) {
  if (n < 2 || d < 1) throw Error("quotient module needs n >= 2 and d >= 1");
  QuotientDim out;
  if (degree < 0 || degree % 2 != 0 || points < 0) return out;
  const int b = degree / 2;
  const int a = points - b;
  if (a < 0) return out;
  const PolyRing ring = type_a_ring(n);
  auto basis = make_basis(ring, Bidegree::algebraic(a, b));
  RowReducer red(basis->size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const MultiPoly dx = ring.xvar(i) - ring.xvar(j);
      for (int k = 1; k <= d && k <= a; ++k) {
        auto src = make_basis(ring, Bidegree::algebraic(a - k, b));
        std::vector<MultiPoly> ker;
        if (b < k) {
          for (const auto& m : src->monomials()) ker.push_back(MultiPoly::monomial(ring.vars, m));
        } else {
          auto tgt = make_basis(ring, Bidegree::algebraic(a - k, b - k));
          ker = kernel_of(src, *tgt, [&](MultiPoly f) {
                  for (int s = 0; s < k; ++s) f = f.derivative(ring.y(i)) - f.derivative(ring.y(j));
                  return f;
                }).row_polys();
        }
        const MultiPoly g = dx.pow(static_cast<unsigned>(k));
        for (const auto& kappa : ker) red.insert(to_vector(*basis, g * kappa));
      }
    }
  out.slice_dimension = basis->size();
  out.relation_rank = red.rank();
  out.quotient = out.slice_dimension - out.relation_rank;
  return out;
}

std::vector<std::vector<std::size_t>> quotient_series_table(int n, int d, int q_order) {
  std::vector<std::pair<int, int>> cells;
  for (int N = 0; N <= q_order; ++N)
    for (int b = 0; b <= N; ++b) cells.emplace_back(N, b);
  auto dims = parallel_map<std::size_t>(cells.size(), [&](std::size_t i) {
    return quotient_hilbert_slice(n, d, cells[i].first, 2 * cells[i].second).quotient;
  });
  std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(q_order) + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) table[cells[i].first].push_back(dims[i]);
  return table;
}

namespace {

// U_i = (x_j - x_k) Q[x_1, x_2, x_3, y_j + y_k, y_i] in degree (a, b).
GradedSlice u_slice(const PolyRing& ring, const BasisPtr& basis, int i, int a, int b) {
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  if (a < 1) return GradedSlice::zero(basis);
  const MultiPoly g = ring.xvar(j) - ring.xvar(k);
  const MultiPoly s = ring.yvar(j) + ring.yvar(k);
  const MultiPoly yi = ring.yvar(i);
  std::vector<SparseVector> rows;
  for (const auto& m : slice_monomials(ring, Bidegree::algebraic(a - 1, 0))) {
    const MultiPoly gx = g.shifted(m);
    for (int p = 0; p <= b; ++p) rows.push_back(to_vector(*basis, gx * s.pow(static_cast<unsigned>(p)) * yi.pow(static_cast<unsigned>(b - p))));
  }
  return GradedSlice::span(basis, rows);
}

}  // namespace

std::map<std::pair<int, int>, SubspaceDims> grdim_subspace_family(int q_order) {
  const PolyRing ring = type_a_ring(3);
  std::vector<std::pair<int, int>> degs;
  for (int N = 0; N <= q_order; ++N)
    for (int b = 0; b <= N; ++b) degs.emplace_back(N - b, b);
  auto dims = parallel_map<SubspaceDims>(degs.size(), [&](std::size_t idx) {
    const auto [a, b] = degs[idx];
    auto basis = make_basis(ring, Bidegree::algebraic(a, b));
    const GradedSlice u1 = u_slice(ring, basis, 0, a, b);
    const GradedSlice u2 = u_slice(ring, basis, 1, a, b);
    const GradedSlice u3 = u_slice(ring, basis, 2, a, b);
    const GradedSlice u12 = subspace_sum(u1, u2);
    SubspaceDims s;
    s.u1 = u1.rank();
    s.u2 = u2.rank();
    s.u3 = u3.rank();
    s.u12_cap = subspace_intersect(u1, u2).rank();
    s.u12_sum = u12.rank();
    s.u12_sum_cap3 = subspace_intersect(u12, u3).rank();
    s.total_sum = subspace_sum(u12, u3).rank();
    return s;
  });
  std::map<std::pair<int, int>, SubspaceDims> out;
  for (std::size_t i = 0; i < degs.size(); ++i) out.emplace(degs[i], dims[i]);
  return out;
}

namespace {

RationalSeries qt(long c, int qe, int te) {
  Exponent e{qe, te};
  return RationalSeries(MultiPoly::monomial(poincare_vars(), e, Rational(c)));
}

RationalSeries common_den(int a, int b) {
  const RationalSeries one = qt(1, 0, 0);
  return (one - qt(1, 1, 0)).pow(a) * (one - qt(1, 1, 2)).pow(b);
}

}  // namespace

RationalSeries grdim_u1_closed_form() { return qt(1, 1, 0) / common_den(3, 2); }
RationalSeries grdim_u12_cap_closed_form() { return qt(1, 2, 0) / common_den(3, 1); }
RationalSeries grdim_u12_sum_cap3_closed_form() { return (qt(1, 1, 0) + qt(1, 4, 2)) / common_den(3, 1); }

}  // namespace swb
