#include <doctest.h>

#include "swb/rootdata.hpp"

using namespace swb;

namespace {

struct Case {
  const char* label;
  int n;
  std::size_t roots;
  std::size_t weyl;
  int coxeter;
};

}  // namespace

TEST_CASE("root data sizes, Weyl group orders and Coxeter numbers") {
  const Case cases[] = {{"A1", 0, 1, 2, 2},  {"A1xA1", 0, 2, 4, 2}, {"A2", 0, 3, 6, 3}, {"B2", 0, 4, 8, 4},
                        {"G2", 0, 6, 12, 6}, {"GL", 2, 1, 2, 2},    {"GL", 3, 3, 6, 3}, {"SL", 2, 1, 2, 2},
                        {"SL", 3, 3, 6, 3},  {"GL", 4, 6, 24, 4}};
  for (const auto& c : cases) {
    CAPTURE(c.label);
    CAPTURE(c.n);
    const RootDatum rd = build_root_datum(c.label, c.n);
    CHECK(rd.roots.size() == c.roots);
    CHECK(weyl_group(rd).size() == c.weyl);
    CHECK(rd.coxeter_number == c.coxeter);
  }
}

TEST_CASE("every root pairs to 2 with its coroot and reflections are involutions") {
  for (const char* label : {"A2", "B2", "G2", "A1xA1"}) {
    const RootDatum rd = build_root_datum(label);
    for (std::size_t r = 0; r < rd.roots.size(); ++r) {
      CHECK(rd.pair(rd.roots[r].form, rd.roots[r].coroot) == 2);
      IntVector lam(static_cast<std::size_t>(rd.rank));
      for (int i = 0; i < rd.rank; ++i) lam[static_cast<std::size_t>(i)] = 3 * i - 1;
      CHECK(rd.reflect_lattice(r, rd.reflect_lattice(r, lam)) == lam);
      IntVector s = rd.reflect_lattice(r, rd.roots[r].coroot);
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == -rd.roots[r].coroot[i]);
      CHECK(rd.reflect_form(r, rd.roots[r].form) == [&] {
        IntVector m = rd.roots[r].form;
        for (auto& x : m) x = -x;
        return m;
      }());
    }
  }
}

TEST_CASE("Weyl signs are determinants: half the group is odd") {
  for (const char* label : {"A2", "B2", "G2"}) {
    const auto w = weyl_group(build_root_datum(label));
    long odd = 0;
    for (const auto& e : w) odd += e.sign < 0;
    CHECK(2 * odd == static_cast<long>(w.size()));
  }
}

TEST_CASE("GL_n roots are e_i - e_j with equal coroots") {
  const RootDatum rd = build_root_datum("GL", 3);
  for (const auto& r : rd.roots) CHECK(r.form == r.coroot);
  CHECK(rd.roots.front().form == IntVector{1, -1, 0});
}

TEST_CASE("the Vandermonde polynomial is Weyl anti-invariant for GL3") {
  const RootDatum rd = build_root_datum("GL", 3);
  const PolyRing ring = PolyRing::make(3, true);
  MultiPoly v = vandermonde(rd, ring, 1);
  CHECK(v.total_degree() == 3);
  // swapping y1, y2 negates it
  auto vars = ring.vars;
  std::vector<Exponent> images;
  for (std::size_t i = 0; i < vars->size(); ++i) {
    Exponent e(vars->size(), 0);
    std::size_t j = i == ring.y(0) ? ring.y(1) : i == ring.y(1) ? ring.y(0) : i;
    e[j] = 1;
    images.push_back(e);
  }
  CHECK(v.map_monomials(vars, images) == -v);
}

TEST_CASE("unknown labels are rejected") {
  CHECK_THROWS_AS(build_root_datum("E8"), Error);
  CHECK_THROWS_AS(build_root_datum("GL", 0), Error);
}
