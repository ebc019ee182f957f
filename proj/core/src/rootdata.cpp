#include "swb/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace swb {

int RootDatum::pair(const IntVector& form, const IntVector& lambda) const {
  int s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += form[i] * pairing[i][j] * lambda[j];
  return s;
}

IntVector RootDatum::reflect_lattice(std::size_t root, const IntVector& lambda) const {
  const auto& a = roots.at(root);
  const int c = pair(a.form, lambda);
  IntVector out = lambda;
  for (int i = 0; i < rank; ++i) out[i] -= c * a.coroot[i];
  return out;
}

IntVector RootDatum::reflect_form(std::size_t root, const IntVector& chi) const {
  const auto& a = roots.at(root);
  const int c = pair(chi, a.coroot);
  IntVector out = chi;
  for (int i = 0; i < rank; ++i) out[i] -= c * a.form[i];
  return out;
}

IntVector RootDatum::derivative_direction(std::size_t root) const {
  const auto& a = roots.at(root);
  IntVector out(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out[i] += pairing[i][j] * a.coroot[j];
  return out;
}

namespace {

IntVector unit(int r, int i) {
  IntVector v(r, 0);
  v[i] = 1;
  return v;
}

bool lex_positive(const IntVector& v) {
  for (int c : v)
    if (c != 0) return c > 0;
  return false;
}

IntVector negate(IntVector v) {
  for (auto& c : v) c = -c;
  return v;
}

// Fills roots by closing the simple (root, coroot) pairs under the simple
// reflections; keeps the lexicographically positive half.
void close_roots(RootDatum& rd, const std::vector<PositiveRoot>& simple) {
  std::set<std::pair<IntVector, IntVector>> seen;
  std::vector<std::pair<IntVector, IntVector>> queue;
  for (const auto& s : simple) {
    queue.emplace_back(s.form, s.coroot);
    seen.emplace(s.form, s.coroot);
  }
  RootDatum tmp = rd;
  tmp.roots = simple;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t i = 0; i < simple.size(); ++i) {
      std::pair<IntVector, IntVector> next{tmp.reflect_form(i, queue[q].first), tmp.reflect_lattice(i, queue[q].second)};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<PositiveRoot> pos;
  for (const auto& [f, c] : seen)
    if (lex_positive(f)) pos.push_back({f, c});
  // Simple roots first: order by height, then lexicographically descending.
  auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const PositiveRoot& a, const PositiveRoot& b) {
    if (height(a.form) != height(b.form)) return height(a.form) < height(b.form);
    return std::make_pair(negate(a.form), a.coroot) < std::make_pair(negate(b.form), b.coroot);
  });
  rd.roots = std::move(pos);
}

void fill_reflections(RootDatum& rd) {
  rd.reflections.clear();
  for (std::size_t a = 0; a < rd.roots.size(); ++a) {
    IntMatrix m(rd.rank, IntVector(rd.rank, 0));
    for (int j = 0; j < rd.rank; ++j) {
      IntVector col = rd.reflect_lattice(a, unit(rd.rank, j));
      for (int i = 0; i < rd.rank; ++i) m[i][j] = col[i];
    }
    rd.reflections.push_back(std::move(m));
  }
}

RootDatum from_cartan(std::string label, const IntMatrix& p, int coxeter) {
  RootDatum rd;
  rd.label = std::move(label);
  rd.rank = static_cast<int>(p.size());
  rd.pairing = p;
  rd.coxeter_number = coxeter;
  std::vector<PositiveRoot> simple;
  for (int i = 0; i < rd.rank; ++i) simple.push_back({unit(rd.rank, i), unit(rd.rank, i)});
  close_roots(rd, simple);
  fill_reflections(rd);
  return rd;
}

IntMatrix type_a_cartan(int r) {
  IntMatrix p(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i) {
    p[i][i] = 2;
    if (i > 0) p[i][i - 1] = -1;
    if (i + 1 < r) p[i][i + 1] = -1;
  }
  return p;
}

}  // namespace

RootDatum build_root_datum(const std::string& label, int n) {
  if (label == "GL") {
    if (n < 2) throw Error("GL_n needs n >= 2");
    RootDatum rd;
    rd.label = "GL" + std::to_string(n);
    rd.rank = n;
    rd.pairing.assign(n, IntVector(n, 0));
    for (int i = 0; i < n; ++i) rd.pairing[i][i] = 1;
    rd.coxeter_number = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        IntVector v(n, 0);
        v[i] = 1;
        v[j] = -1;
        rd.roots.push_back({v, v});
      }
    fill_reflections(rd);
    return rd;
  }
  if (label == "SL") {
    if (n < 2) throw Error("SL_n needs n >= 2");
    return from_cartan("SL" + std::to_string(n), type_a_cartan(n - 1), n);
  }
  if (label == "A1") return from_cartan("A1", {{2}}, 2);
  if (label == "A1xA1") return from_cartan("A1xA1", {{2, 0}, {0, 2}}, 2);
  if (label == "A2") return from_cartan("A2", type_a_cartan(2), 3);
  if (label == "B2") return from_cartan("B2", {{2, -2}, {-1, 2}}, 4);
  if (label == "G2") return from_cartan("G2", {{2, -1}, {-3, 2}}, 6);
  throw Error("unsupported root datum label '" + label + "'");
}

namespace {

IntMatrix identity(int r) {
  IntMatrix m(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t r = a.size();
  IntMatrix m(r, IntVector(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < r; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

IntMatrix form_matrix(const RootDatum& rd, std::size_t root) {
  IntMatrix m(rd.rank, IntVector(rd.rank, 0));
  for (int j = 0; j < rd.rank; ++j) {
    IntVector col = rd.reflect_form(root, unit(rd.rank, j));
    for (int i = 0; i < rd.rank; ++i) m[i][j] = col[i];
  }
  return m;
}

}  // namespace

std::vector<WeylElement> weyl_group(const RootDatum& rd) {
  std::vector<WeylElement> gens;
  for (std::size_t a = 0; a < rd.roots.size(); ++a) gens.push_back({rd.reflections[a], form_matrix(rd, a), -1});
  std::vector<WeylElement> group{{identity(rd.rank), identity(rd.rank), 1}};
  std::set<IntMatrix> seen{group.front().on_lattice};
  for (std::size_t q = 0; q < group.size(); ++q) {
    for (const auto& g : gens) {
      WeylElement h{multiply(g.on_lattice, group[q].on_lattice), multiply(g.on_forms, group[q].on_forms),
                    g.sign * group[q].sign};
      if (seen.insert(h.on_lattice).second) group.push_back(std::move(h));
    }
    if (group.size() > 10000) throw Error("Weyl group closure did not terminate");
  }
  return group;
}

MultiPoly root_form(const PolyRing& ring, const IntVector& form) {
  MultiPoly p = ring.zero();
  for (int i = 0; i < ring.rank; ++i)
    if (form[i] != 0) p += ring.yvar(i) * Rational(form[i]);
  return p;
}

MultiPoly vandermonde(const RootDatum& rd, const PolyRing& ring, int d) {
  if (d < 0) throw Error("vandermonde power must be nonnegative");
  if (ring.rank != rd.rank) throw Error("ring rank does not match the root datum");
  MultiPoly p = ring.one();
  for (const auto& a : rd.roots) p *= root_form(ring, a.form).pow(static_cast<unsigned>(d));
  return p;
}

MultiPoly ktheory_vandermonde(const RootDatum& rd, const PolyRing& ring) {
  if (!ring.y_laurent) throw Error("K-theory Vandermonde needs Laurent y-variables");
  MultiPoly p = ring.one();
  for (const auto& a : rd.roots) {
    Exponent e(ring.size(), 0);
    for (int i = 0; i < rd.rank; ++i) e[ring.y(i)] = a.form[i];
    p *= ring.one() - MultiPoly::monomial(ring.vars, e);
  }
  return p;
}

Json to_json(const RootDatum& rd) {
  Json j;
  j["label"] = rd.label;
  j["rank"] = rd.rank;
  j["pairing"] = rd.pairing;
  Json roots = Json::array(), coroots = Json::array();
  for (const auto& a : rd.roots) {
    roots.push_back(a.form);
    coroots.push_back(a.coroot);
  }
  j["roots"] = roots;
  j["coroots"] = coroots;
  j["reflections"] = rd.reflections;
  j["coxeter_number"] = rd.coxeter_number;
  return j;
}

}  // namespace swb
