#include <algorithm>
#include <numeric>

#include "swb/gkm.hpp"

namespace swb {

namespace {

// Index of the variable eliminated on chi = 0: the first with nonzero
// coefficient, y-variables before t.
std::size_t eliminated_variable(const AffineChar& chi) {
  for (std::size_t i = 0; i < chi.y.size(); ++i)
    if (!is_zero(chi.y[i])) return i;
  if (!is_zero(chi.t)) return chi.y.size();
  throw Error("zero character has no hyperplane");
}

Rational coefficient_of(const AffineChar& chi, std::size_t v) { return v < chi.y.size() ? chi.y[v] : chi.t; }

}  // namespace

MultiPoly restrict_to_hyperplane(const MultiPoly& p, const AffineChar& chi) {
  const std::size_t v = eliminated_variable(chi);
  const Rational cv = coefficient_of(chi, v);
  // v = -(chi - cv v) / cv
  MultiPoly rest = chi.to_poly(p.vars()) - MultiPoly::variable(p.vars(), v) * cv;
  return p.substitute(v, rest * Rational(-1 / cv));
}

RationalSeries residue_along(const RationalForm& form, const AffineChar& chi, const VarSetPtr& vars) {
  std::optional<Rational> scale;
  MultiPoly den = MultiPoly::constant(vars, 1);
  for (const auto& f : form.den) {
    if (f.proportional_to(chi)) {
      if (scale) throw Error("pole of order greater than one along " + chi.to_string());
      // f = c * chi
      const std::size_t v = eliminated_variable(chi);
      scale = coefficient_of(f, v) / coefficient_of(chi, v);
    } else {
      den *= restrict_to_hyperplane(f.to_poly(vars), chi);
    }
  }
  if (!scale) return RationalSeries::constant(vars, 0);
  MultiPoly num = restrict_to_hyperplane(form.num, chi) * Rational(1 / *scale);
  if (den.is_zero()) throw Error("denominator vanishes identically on the hyperplane");
  return RationalSeries(std::move(num), std::move(den));
}

ResidueReport verify_residue_conditions(const FormTuple& tuple, const GkmGraph& graph) {
  const VarSetPtr& vars = graph.vars;
  for (const auto& [p, f] : tuple) {
    if (!graph.has_vertex(p)) throw Error("tuple references a fixed point outside the graph window");
    if (!(*f.num.vars() == *vars)) throw Error("tuple entry lives in a different ring than the graph");
  }

  // (1) poles: incident edge characters, order at most one.
  for (const auto& [p, f] : tuple) {
    for (std::size_t a = 0; a < f.den.size(); ++a) {
      const AffineChar& c = f.den[a];
      if (c.y.size() + 1 != vars->size()) throw Error("denominator factor has the wrong arity");
      if (c.is_zero()) return {false, "zero denominator factor", std::nullopt, p};
      bool incident = false;
      for (const auto& e : graph.edges)
        if ((e.from == p || e.to == p) && e.weight.proportional_to(c)) {
          incident = true;
          break;
        }
      if (!incident) return {false, "pole along " + c.to_string() + " is not an incident edge character", std::nullopt, p};
      for (std::size_t b = a + 1; b < f.den.size(); ++b)
        if (f.den[b].proportional_to(c))
          return {false, "pole of order greater than one along " + c.to_string(), std::nullopt, p};
    }
  }

  // (2) residues sum to zero on each connected component of each character class.
  std::map<AffineChar, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    if (graph.edges[i].weight.is_zero()) continue;
    classes[graph.edges[i].weight.normalized()].push_back(i);
  }
  std::map<FixedPoint, std::size_t> index;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) index[graph.vertices[i]] = i;

  // Edges in graph order, so the certificate is the first failing edge.
  std::vector<std::pair<std::size_t, AffineChar>> order;
  for (const auto& [chi, edges] : classes) order.emplace_back(edges.front(), chi);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [first_edge, chi] : order) {
    const auto& edges = classes.at(chi);
    std::vector<std::size_t> parent(graph.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e : edges) parent[find(index.at(graph.edges[e].from))] = find(index.at(graph.edges[e].to));

    std::map<std::size_t, RationalSeries> sums;
    for (std::size_t e : edges) sums.try_emplace(find(index.at(graph.edges[e].from)), RationalSeries::constant(vars, 0));
    for (const auto& [p, f] : tuple) {
      auto it = sums.find(find(index.at(p)));
      if (it == sums.end()) continue;
      it->second += residue_along(f, chi, vars);
    }
    for (std::size_t e : edges) {
      const auto& s = sums.at(find(index.at(graph.edges[e].from)));
      if (!s.is_zero())
        return {false, "residues along " + chi.to_string() + " sum to " + s.to_string(), graph.edges[e], std::nullopt};
    }
  }
  return {};
}

bool residue_antisymmetry_check(int d, int k, int j, int jprime) {
  if (!(0 <= j && j < jprime && jprime <= d && jprime - j <= d)) throw Error("invalid index pair for antisymmetry check");
  const FormTuple b = sl2_classes(d, k);
  const AffineChar chi{{Rational(1)}, Rational(2 * k + j + jprime)};
  const auto vars = gkm_vars(1);
  RationalSeries s = residue_along(b.at({k + j}), chi, vars) + residue_along(b.at({k + jprime}), chi, vars);
  return s.is_zero();
}

MultiPoly specialize_t0(const FormTuple& tuple, int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i) names.push_back(rank == 1 ? "x" : "x" + std::to_string(i));
  for (int i = 1; i <= rank; ++i) names.push_back(rank == 1 ? "y" : "y" + std::to_string(i));
  auto out_vars = make_vars(names, std::vector<bool>(names.size(), true));
  MultiPoly out(out_vars);
  for (const auto& [p, f] : tuple) {
    if (static_cast<int>(p.size()) != rank) throw Error("t = 0 specialization needs lattice fixed points");
    const std::size_t tv = static_cast<std::size_t>(rank);
    MultiPoly num = f.num.evaluate(tv, 0);
    Exponent shift(out_vars->size(), 0);
    Rational scale = 1;
    for (int i = 0; i < rank; ++i) shift[i] = p[i];
    for (const auto& c : f.den) {
      int which = -1;
      for (int i = 0; i < rank; ++i) {
        if (is_zero(c.y[i])) continue;
        if (which >= 0) throw Error("denominator " + c.to_string() + " is not a pure power of y at t = 0");
        which = i;
      }
      if (which < 0) throw Error("residual t-pole in " + c.to_string());
      shift[rank + which] -= 1;
      scale /= c.y[which];
    }
    // Embed (y, t) -> (x, y), dropping t.
    std::vector<Exponent> images;
    for (int i = 0; i < rank; ++i) {
      Exponent e(out_vars->size(), 0);
      e[rank + i] = 1;
      images.push_back(std::move(e));
    }
    images.push_back(Exponent(out_vars->size(), 0));
    out += num.map_monomials(out_vars, images).shifted(shift) * scale;
  }
  return out;
}

}  // namespace swb
