#include <algorithm>
#include <numeric>

#include "swb/arrangement.hpp"
#include "swb/parallel.hpp"

namespace swb {

MultiPoly antisymmetrize(const PolyRing& ring, const MultiPoly& f) {
  const int n = ring.rank;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly out = ring.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    const Rational sign = inversions % 2 ? -1 : 1;
    for (const auto& [e, c] : f.terms()) {
      Exponent g = e;
      for (int i = 0; i < n; ++i) {
        g[ring.x(perm[i])] = e[ring.x(i)];
        g[ring.y(perm[i])] = e[ring.y(i)];
      }
      out.add_term(g, c * sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

AlternantIdeal::AlternantIdeal(PolyRing ring) : ring_(std::move(ring)) {
  if (ring_.x_laurent || ring_.has_t) throw Error("alternant ideal lives in the polynomial ring Q[x,y]");
}

const GradedSlice& AlternantIdeal::alternants(int a, int b) {
  auto key = std::make_pair(a, b);
  if (auto it = alt_.find(key); it != alt_.end()) return it->second;
  auto basis = make_basis(ring_, Bidegree::algebraic(a, b));
  std::vector<SparseVector> rows;
  for (const auto& m : basis->monomials()) {
    MultiPoly alt = antisymmetrize(ring_, MultiPoly::monomial(ring_.vars, m));
    if (!alt.is_zero()) rows.push_back(to_vector(*basis, alt));
  }
  return alt_.emplace(key, GradedSlice::span(basis, rows)).first->second;
}

const std::vector<MultiPoly>& AlternantIdeal::generators(int a, int b) {
  auto key = std::make_pair(a, b);
  if (auto it = gens_.find(key); it != gens_.end()) return it->second;
  power(1, a, b);
  return gens_.at(key);
}

GradedSlice AlternantIdeal::products(int d, int a, int b) {
  // Span of all products of d minimal generators in degree (a,b).
  auto basis = make_basis(ring_, Bidegree::algebraic(a, b));
  std::vector<SparseVector> rows;
  if (d == 1) {
    for (const auto& g : generators(a, b)) rows.push_back(to_vector(*basis, g));
    return GradedSlice::span(basis, rows);
  }
  for (int a1 = 0; a1 <= a; ++a1)
    for (int b1 = 0; b1 <= b; ++b1) {
      if (a1 + b1 == 0) continue;
      const auto& gs = generators(a1, b1);
      if (gs.empty()) continue;
      GradedSlice rest = products(d - 1, a - a1, b - b1);
      for (const auto& g : gs)
        for (const auto& r : rest.row_polys()) rows.push_back(to_vector(*basis, g * r));
    }
  return GradedSlice::span(basis, rows);
}

const GradedSlice& AlternantIdeal::power(int d, int a, int b) {
  if (d < 0 || a < 0 || b < 0) throw Error("invalid alternant slice request");
  auto key = std::make_tuple(d, a, b);
  if (auto it = pow_.find(key); it != pow_.end()) return it->second;
  auto basis = make_basis(ring_, Bidegree::algebraic(a, b));
  if (d == 0) return pow_.emplace(key, GradedSlice::full(basis)).first->second;

  // Everything generated from lower degrees.
  RowReducer red(basis->size());
  for (int i = 0; i < ring_.rank; ++i) {
    if (a > 0)
      for (const auto& v : shifted_rows(power(d, a - 1, b), *basis, ring_.x(i))) red.insert(v);
    if (b > 0)
      for (const auto& v : shifted_rows(power(d, a, b - 1), *basis, ring_.y(i))) red.insert(v);
  }
  if (d == 1) {
    std::vector<MultiPoly> fresh;
    const GradedSlice& alt = alternants(a, b);
    for (std::size_t r = 0; r < alt.rank(); ++r)
      if (red.insert(alt.rows()[r])) fresh.push_back(to_poly(*basis, alt.rows()[r]));
    gens_[{a, b}] = std::move(fresh);
  } else {
    const GradedSlice prod = products(d, a, b);
    for (const auto& v : prod.rows()) red.insert(v);
  }
  return pow_.emplace(key, GradedSlice::span(basis, std::move(red).finish())).first->second;
}

GradedSlice alternant_slice(int n, int d, int a, int b) {
  AlternantIdeal ideal(type_a_ring(n));
  return ideal.power(d, a, b);
}

// ---------------------------------------------------------------------------

namespace {

using SliceMap = std::map<std::pair<int, int>, GradedSlice>;

SliceMap compute_slices(int truncation, const std::function<GradedSlice(int, int)>& f) {
  std::vector<std::pair<int, int>> degs;
  for (int s = 0; s <= truncation; ++s)
    for (int b = 0; b <= s; ++b) degs.emplace_back(s - b, b);
  auto slices = parallel_map<std::optional<GradedSlice>>(degs.size(), [&](std::size_t i) {
    return std::optional<GradedSlice>(f(degs[i].first, degs[i].second));
  });
  SliceMap out;
  for (std::size_t i = 0; i < degs.size(); ++i) out.emplace(degs[i], std::move(*slices[i]));
  return out;
}

}  // namespace

CatalanTable catalan_quotient(int n, std::optional<int> truncation) {
  if (n < 1 || n > 4) throw Error("catalan_quotient supports 1 <= n <= 4");
  const int top = n * (n - 1) / 2;
  CatalanTable table;
  table.truncation = truncation.value_or(top + 1);
  const PolyRing ring = type_a_ring(n);
  SliceMap j = compute_slices(table.truncation, [&](int a, int b) { return jd_slice(ring, 1, a, b); });

  std::vector<std::pair<int, int>> degs;
  for (const auto& [deg, s] : j) degs.push_back(deg);
  auto dims = parallel_map<long>(degs.size(), [&](std::size_t k) {
    const auto [a, b] = degs[k];
    const GradedSlice& s = j.at({a, b});
    if (s.rank() == 0) return 0L;
    RowReducer red(s.dimension());
    for (int i = 0; i < n; ++i) {
      if (a > 0)
        for (const auto& v : shifted_rows(j.at({a - 1, b}), *s.basis(), ring.x(i))) red.insert(v);
      if (b > 0)
        for (const auto& v : shifted_rows(j.at({a, b - 1}), *s.basis(), ring.y(i))) red.insert(v);
    }
    return static_cast<long>(s.rank() - red.rank());
  });
  table.certified = true;
  for (std::size_t k = 0; k < degs.size(); ++k) {
    if (dims[k] == 0) continue;
    table.dims[degs[k]] = dims[k];
    table.total += dims[k];
    if (degs[k].first + degs[k].second > top) table.certified = false;
  }
  if (table.truncation <= top) table.certified = false;
  return table;
}

FreenessReport freeness_check(const SliceModule& m, int truncation) {
  const PolyRing& ring = m.ring;
  SliceMap f = compute_slices(truncation, m.free_part);
  SliceMap r = compute_slices(truncation, m.relations);

  FreenessReport report;
  for (int k = 0; k < ring.rank; ++k) {
    // N_k = R + sum_{i<k} y_i F, slicewise.
    SliceMap n = compute_slices(truncation, [&](int a, int b) {
      const GradedSlice& fr = f.at({a, b});
      RowReducer red(fr.dimension());
      for (const auto& v : r.at({a, b}).rows()) red.insert(v);
      if (b > 0)
        for (int i = 0; i < k; ++i)
          for (const auto& v : shifted_rows(f.at({a, b - 1}), *fr.basis(), ring.y(i))) red.insert(v);
      return GradedSlice::span(fr.basis(), std::move(red).finish());
    });
    std::vector<std::pair<int, int>> degs;
    for (const auto& [deg, s] : n)
      if (deg.second > 0) degs.push_back(deg);
    auto ok = parallel_map<char>(degs.size(), [&](std::size_t idx) {
      const auto [a, b] = degs[idx];
      const GradedSlice& nk = n.at({a, b});
      const GradedSlice& src = f.at({a, b - 1});
      RowReducer red(nk.dimension());
      for (const auto& v : nk.rows()) red.insert(v);
      for (const auto& v : shifted_rows(src, *nk.basis(), ring.y(k))) red.insert(v);
      const std::size_t preimage = src.rank() + nk.rank() - red.rank();
      return static_cast<char>(preimage == n.at({a, b - 1}).rank());
    });
    FreenessStage stage;
    stage.variable = k;
    for (std::size_t idx = 0; idx < degs.size(); ++idx)
      if (!ok[idx]) {
        stage.pass = false;
        stage.failing_degree = std::make_pair(degs[idx].first, degs[idx].second - 1);
        break;
      }
    report.pass = report.pass && stage.pass;
    report.stages.push_back(stage);
  }
  return report;
}

FreenessReport freeness_check(int n, int d, int truncation) {
  const PolyRing ring = type_a_ring(n);
  SliceModule m{ring, [ring, d](int a, int b) { return jd_slice(ring, d, a, b); },
                [ring](int a, int b) { return GradedSlice::zero(make_basis(ring, Bidegree::algebraic(a, b))); }};
  return freeness_check(m, truncation);
}

}  // namespace swb
