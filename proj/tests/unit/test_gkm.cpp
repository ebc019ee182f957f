#include <doctest.h>

#include "swb/gkm.hpp"

using namespace swb;

namespace {

MultiPoly expected_t0(int d, int k) {
  auto vars = make_vars({"x", "y"}, {true, true});
  MultiPoly x = MultiPoly::variable(vars, "x"), one = MultiPoly::constant(vars, 1);
  return MultiPoly::variable(vars, "x", k) * (one - x).pow(static_cast<unsigned>(d)) *
         MultiPoly::variable(vars, "y", -d);
}

GkmGraph sl2_graph(int d, int k) {
  return build_gkm_graph(build_root_datum("SL", 2), d, Window::cube(1, k - d - 2, k + 2 * d + 2));
}

}  // namespace

TEST_CASE("GKM graph edges join points differing by a small coroot multiple") {
  const RootDatum rd = build_root_datum("A2");
  for (int d = 1; d <= 2; ++d) {
    const Window w = Window::cube(2, -1, 1);
    const GkmGraph g = build_gkm_graph(rd, d, w);
    CHECK(g.vertices.size() == 9);
    std::size_t expected = 0;
    for (const auto& a : w.points())
      for (const auto& root : rd.roots)
        for (int k = 1; k <= d; ++k) {
          IntVector b = a;
          for (std::size_t i = 0; i < b.size(); ++i) b[i] += k * root.coroot[i];
          expected += w.contains(b);
        }
    CHECK(g.edges.size() == expected);
    for (const auto& e : g.edges) CHECK_FALSE(e.weight.is_zero());
  }
}

TEST_CASE("f polynomials are products of their linear factors") {
  auto vars = gkm_vars(1);
  for (int d = 1; d <= 3; ++d)
    for (int j = 0; j <= d; ++j) {
      MultiPoly p = MultiPoly::constant(vars, 1);
      for (const auto& c : f_factors(d, 0, j)) p *= c.to_poly(vars);
      CHECK(p == f_poly(d, 0, j));
      CHECK(f_factors(d, 0, j).size() == static_cast<std::size_t>(d));
    }
}

TEST_CASE("sl2 classes satisfy the residue conditions and perturbations fail") {
  for (int d = 1; d <= 3; ++d)
    for (int k = -3; k <= 3; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      const GkmGraph g = sl2_graph(d, k);
      const FormTuple t = sl2_classes(d, k);
      CHECK(verify_residue_conditions(t, g).ok);
      CHECK(verify_residue_conditions(scaled(t, 3), g).ok);
      for (const auto& [p, f] : t) {
        FormTuple bad = t;
        bad[p].num += MultiPoly::constant(f.num.vars(), 1);
        CHECK_FALSE(verify_residue_conditions(bad, g).ok);
      }
    }
}

TEST_CASE("a pole that is not an edge character is reported") {
  const GkmGraph g = sl2_graph(1, 0);
  FormTuple t;
  t[{0}] = RationalForm{MultiPoly::constant(g.vars, 1), {AffineChar{{Rational(1)}, Rational(7)}}};
  const ResidueReport r = verify_residue_conditions(t, g);
  CHECK_FALSE(r.ok);
  CHECK(r.vertex.has_value());
}

TEST_CASE("flag classes") {
  const GkmGraph g = build_flag_graph(-5, 5);
  CHECK(verify_residue_conditions(flag_rank1_class(FlagClass::A0, 0), g).ok);
  for (int k = -3; k <= 3; ++k)
    for (auto kind : {FlagClass::B, FlagClass::BPrime}) {
      const FormTuple t = flag_rank1_class(kind, k);
      CHECK(verify_residue_conditions(t, g).ok);
      for (const auto& [p, f] : t) {
        FormTuple bad = t;
        bad[p].num += MultiPoly::constant(f.num.vars(), 1);
        CHECK_FALSE(verify_residue_conditions(bad, g).ok);
      }
    }
}

TEST_CASE("flag graph weights") {
  const GkmGraph g = build_flag_graph(0, 1);
  bool saw_vertical = false, saw_diagonal = false;
  for (const auto& e : g.edges) {
    CHECK(e.weight.y[0] == 1);
    if (e.from[0] == e.to[0]) {
      CHECK(e.weight.t == 2 * e.from[0]);
      saw_vertical = true;
    } else {
      const int k = std::max(e.from[0], e.to[0]);
      CHECK(e.weight.t == 2 * k - 1);
      saw_diagonal = true;
    }
  }
  CHECK(saw_vertical);
  CHECK(saw_diagonal);
}

TEST_CASE("residue antisymmetry for all d <= 4") {
  for (int d = 1; d <= 4; ++d)
    for (int k = -2; k <= 2; ++k)
      for (int j = 0; j <= d; ++j)
        for (int jp = j + 1; jp <= d; ++jp) CHECK(residue_antisymmetry_check(d, k, j, jp));
}

TEST_CASE("t = 0 specialization of sl2 classes") {
  for (int d = 1; d <= 3; ++d)
    for (int k = -3; k <= 3; ++k) CHECK(specialize_t0(sl2_classes(d, k), 1) == expected_t0(d, k));
}

TEST_CASE("residue of 1/(y(y+t)) along y = 0") {
  auto vars = gkm_vars(1);
  RationalForm f{MultiPoly::constant(vars, 1), {AffineChar{{Rational(1)}, Rational(0)}, AffineChar{{Rational(1)}, Rational(1)}}};
  RationalSeries r = residue_along(f, AffineChar{{Rational(1)}, Rational(0)}, vars);
  CHECK(r == RationalSeries::constant(vars, 1) / RationalSeries::variable(vars, "t"));
}

TEST_CASE("tuple json round trip and DOT output") {
  const FormTuple t = sl2_classes(2, 1);
  const FormTuple back = form_tuple_from_json(to_json(t), gkm_vars(1));
  REQUIRE(back.size() == t.size());
  for (const auto& [p, f] : t) {
    CHECK(back.at(p).num == f.num);
    CHECK(back.at(p).den == f.den);
  }
  const std::string dot = to_dot(build_flag_graph(0, 1));
  CHECK(dot.find("graph gkm {") == 0);
  CHECK(dot.find("--") != std::string::npos);
}
