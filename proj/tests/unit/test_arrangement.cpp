#include <doctest.h>

#include <random>

#include "swb/arrangement.hpp"

using namespace swb;

namespace {

// Ranks of J^(d) by total degree s, listed over b = 0..s; computed with an
// independent sympy script (shear-and-filter membership).
struct Frozen {
  int n, d, s;
  std::vector<std::size_t> ranks;
};

const std::vector<Frozen> kFrozen = {
    {2, 1, 1, {1, 1}},       {2, 1, 2, {2, 3, 2}},          {2, 1, 3, {3, 5, 5, 3}},     {2, 1, 4, {4, 7, 8, 7, 4}},
    {2, 2, 2, {1, 1, 1}},    {2, 2, 3, {2, 3, 3, 2}},       {2, 2, 4, {3, 5, 6, 5, 3}},  {2, 2, 5, {4, 7, 9, 9, 7, 4}},
    {3, 1, 2, {0, 1, 0}},    {3, 1, 3, {1, 4, 4, 1}},       {3, 1, 4, {3, 10, 13, 10, 3}},
};

}  // namespace

TEST_CASE("J^(d) slice ranks match the frozen table") {
  for (const auto& f : kFrozen) {
    const PolyRing ring = type_a_ring(f.n);
    for (int b = 0; b <= f.s; ++b) {
      CAPTURE(f.n);
      CAPTURE(f.d);
      CAPTURE(f.s);
      CAPTURE(b);
      CHECK(jd_slice(ring, f.d, f.s - b, b).rank() == f.ranks[static_cast<std::size_t>(b)]);
    }
  }
}

TEST_CASE("pair ideal powers contain their generators") {
  const PolyRing ring = type_a_ring(3);
  const GradedSlice s = pair_power_slice(ring, 0, 2, 2, 1, 1);
  CHECK(s.contains((ring.xvar(0) - ring.xvar(2)) * (ring.yvar(0) - ring.yvar(2))));
  CHECK_FALSE(s.contains((ring.xvar(0) - ring.xvar(1)) * (ring.yvar(0) - ring.yvar(2))));
}

TEST_CASE("membership oracle agrees with the spanning-set slices on random elements") {
  std::mt19937 rng(424242);
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 2; ++d) {
      const PolyRing ring = type_a_ring(n);
      for (auto [a, b] : {std::pair{2, 1}, {2, 2}, {3, 1}, {1, 3}}) {
        const GradedSlice j = jd_slice(ring, d, a, b);
        CHECK(j == oracle_slice(ring, d, a, b));
        std::uniform_int_distribution<int> c(-2, 2);
        // random members pass, random non-members fail
        for (int trial = 0; trial < 4; ++trial) {
          MultiPoly f = ring.zero();
          for (const auto& row : j.row_polys()) f += Rational(c(rng)) * row;
          CHECK(symbolic_power_oracle(n, d, f));
        }
        if (j.codimension() > 0) {
          for (const auto& w : j.annihilator()) {
            CHECK_FALSE(symbolic_power_oracle(n, d, to_poly(*j.basis(), w)));
            break;
          }
        }
      }
    }
}

TEST_CASE("alternant ideal powers equal J^(d) through degree 5") {
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 2; ++d) {
      const PolyRing ring = type_a_ring(n);
      AlternantIdeal ideal(ring);
      for (int s = 0; s <= 5; ++s)
        for (int b = 0; b <= s; ++b) CHECK(ideal.power(d, s - b, b) == jd_slice(ring, d, s - b, b));
    }
}

TEST_CASE("minimal alternant generators for n = 2") {
  AlternantIdeal ideal(type_a_ring(2));
  CHECK(ideal.generators(1, 0).size() == 1);
  CHECK(ideal.generators(0, 1).size() == 1);
  CHECK(ideal.generators(1, 1).empty());
  CHECK(ideal.generators(3, 0).empty());
}

TEST_CASE("antisymmetrization") {
  const PolyRing ring = type_a_ring(3);
  CHECK(antisymmetrize(ring, ring.xvar(0) * ring.xvar(0)).is_zero());
  CHECK_FALSE(antisymmetrize(ring, ring.xvar(0) * ring.xvar(0) * ring.xvar(1)).is_zero());
}

TEST_CASE("catalan tables") {
  const CatalanTable t2 = catalan_quotient(2);
  CHECK(t2.total == 2);
  CHECK(t2.certified);
  const CatalanTable t3 = catalan_quotient(3);
  CHECK(t3.total == 5);
  CHECK(t3.truncation == 4);
  std::map<std::pair<int, int>, long> expected{{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}, {{1, 1}, 1}};
  CHECK(t3.dims == expected);
}

TEST_CASE("freeness of y_1..y_n") {
  for (auto [n, d] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    const FreenessReport r = freeness_check(n, d, 6);
    CHECK(r.pass);
    CHECK(r.stages.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("freeness fails for Q[x,y]/(y1)") {
  const PolyRing ring = type_a_ring(2);
  SliceModule m{ring, [&](int a, int b) { return GradedSlice::full(make_basis(ring, Bidegree::algebraic(a, b))); },
                [&](int a, int b) {
                  auto basis = make_basis(ring, Bidegree::algebraic(a, b));
                  if (b == 0) return GradedSlice::zero(basis);
                  std::vector<MultiPoly> g;
                  for (const auto& e : slice_monomials(ring, Bidegree::algebraic(a, b - 1)))
                    g.push_back(MultiPoly::monomial(ring.vars, e) * ring.yvar(0));
                  return GradedSlice::span_polys(basis, g);
                }};
  const FreenessReport r = freeness_check(m, 3);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.stages.empty());
  CHECK_FALSE(r.stages.front().pass);
  CHECK(r.stages.front().failing_degree.has_value());
}

TEST_CASE("laurent SL2: J^(d) has codimension max(d - b, 0) in y-degree b") {
  const RootDatum rd = build_root_datum("SL", 2);
  for (int d = 1; d <= 2; ++d) {
    WindowPolicy p{Window::cube(1, -2, 2), std::nullopt, d, d + 4};
    for (int b = 0; b <= 3; ++b) {
      const WindowedSlice w = jd_slice(rd, d, Bidegree::homological(b), p);
      CHECK(w.stabilized);
      CHECK(w.slice.dimension() == 5);
      CHECK(w.slice.codimension() == static_cast<std::size_t>(std::max(d - b, 0)));
    }
  }
}

TEST_CASE("SL2 root ideal on the window [0,1], y-degree at most 1") {
  const RootDatum rd = build_root_datum("SL", 2);
  const PolyRing ring = laurent_ring(rd);
  WindowPolicy p{Window::cube(1, 0, 1), std::nullopt, 1, 5};
  const WindowedSlice w0 = jd_slice(rd, 1, Bidegree::homological(0), p);
  const WindowedSlice w1 = jd_slice(rd, 1, Bidegree::homological(1), p);
  CHECK(w0.slice.rank() == 1);
  CHECK(w0.slice.contains(ring.one() - ring.xvar(0)));
  CHECK(w1.slice.rank() == 2);
  CHECK(w1.slice.contains(ring.yvar(0)));
  CHECK(w1.slice.contains(ring.yvar(0) * ring.xvar(0)));
  CHECK(w0.slice.rank() + w1.slice.rank() == 3);
}

TEST_CASE("K-theory SL2: vanishing to order d at the identity") {
  const RootDatum rd = build_root_datum("SL", 2);
  for (int d = 1; d <= 2; ++d) {
    WindowPolicy p{Window::cube(1, 0, 2), Window::cube(1, 0, 2), d, d + 4};
    const WindowedSlice w = jd_slice(rd, d, Bidegree::ungraded(), p, GeneratorFamily::KTheory);
    CHECK(w.stabilized);
    CHECK(w.slice.dimension() == 9);
    CHECK(w.slice.codimension() == static_cast<std::size_t>(d * (d + 1) / 2));
  }
}

TEST_CASE("margin below d is refused") {
  const RootDatum rd = build_root_datum("SL", 2);
  WindowPolicy p{Window::cube(1, 0, 1), std::nullopt, 1, 4};
  CHECK_THROWS_AS(jd_slice(rd, 2, Bidegree::homological(0), p), Error);
}

TEST_CASE("GL2 ordinary homology quotient") {
  const RootDatum rd = build_root_datum("GL", 2);
  WindowPolicy p{Window::cube(2, 0, 1), std::nullopt, 2, 6};
  const QuotientSlice q = ordinary_homology_quotient_slice(rd, 1, 0, p);
  CHECK(q.slice_dimension == 4);
  CHECK(q.quotient_dimension == 3);
  CHECK(q.submodule.stabilized);
  const PolyRing ring = laurent_ring(rd);
  // x2 (1 - x1 x2^-1) = x2 - x1
  CHECK(q.submodule.slice.contains(ring.xvar(1) - ring.xvar(0)));
}

TEST_CASE("rank-1 flag module contains y times the flag classes") {
  const WindowedSlice w0 = flag_rank1_module_slice(0, -2, 2);
  CHECK(w0.stabilized);
  for (int k = -1; k <= 2; ++k) {
    CHECK(w0.slice.contains(flag_class_times_y(flag_rank1_class(FlagClass::B, k))));
    CHECK(w0.slice.contains(flag_class_times_y(flag_rank1_class(FlagClass::BPrime, k))));
  }
  const WindowedSlice w1 = flag_rank1_module_slice(1, -2, 2);
  CHECK(w1.slice.contains(flag_class_times_y(flag_rank1_class(FlagClass::A0, 0))));
  CHECK(w1.slice.codimension() == 0);
}

TEST_CASE("anti-invariants lie in J^(d)") {
  for (const char* label : {"A1", "A2", "B2"}) {
    const RootDatum rd = build_root_datum(label);
    WindowPolicy p{Window::cube(static_cast<std::size_t>(rd.rank), -1, 1), std::nullopt, 2, 6};
    for (int d = 1; d <= 2; ++d) {
      const int top = d * static_cast<int>(rd.roots.size());
      const InclusionReport r = anti_invariant_inclusion_check(rd, d, top, p);
      CAPTURE(label);
      CHECK(r.pass);
      CHECK(r.stabilized);
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("J^(d1) J^(d2) lies in J^(d1+d2)") {
  CHECK(graded_product_check(2, 1, 1, 3).pass);
  CHECK(graded_product_check(3, 1, 1, 3).pass);
  const RootDatum rd = build_root_datum("SL", 2);
  WindowPolicy p{Window::cube(1, 0, 1), std::nullopt, 2, 6};
  const ProductReport r = graded_product_check(rd, 1, 1, 2, p);
  CHECK(r.pass);
  CHECK(r.checked > 0);
}
