#include "swb/gkm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace swb {

MultiPoly AffineChar::to_poly(const VarSetPtr& vars) const {
  MultiPoly p(vars);
  const std::size_t r = y.size();
  if (vars->size() != r + 1) throw Error("affine character arity does not match the ring");
  for (std::size_t i = 0; i < r; ++i) p += MultiPoly::variable(vars, i) * y[i];
  p += MultiPoly::variable(vars, r) * t;
  return p;
}

bool AffineChar::is_zero() const {
  return swb::is_zero(t) && std::all_of(y.begin(), y.end(), [](const Rational& c) { return swb::is_zero(c); });
}

AffineChar AffineChar::normalized() const {
  AffineChar out = *this;
  Rational lead = 0;
  for (const auto& c : y)
    if (!swb::is_zero(c)) {
      lead = c;
      break;
    }
  if (swb::is_zero(lead)) lead = t;
  if (swb::is_zero(lead)) return out;
  for (auto& c : out.y) c /= lead;
  out.t /= lead;
  return out;
}

bool AffineChar::proportional_to(const AffineChar& o) const {
  if (y.size() != o.y.size() || is_zero() || o.is_zero()) return false;
  return normalized() == o.normalized();
}

bool AffineChar::operator<(const AffineChar& o) const {
  if (y != o.y) return y < o.y;
  return t < o.t;
}

std::string AffineChar::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& name) {
    if (swb::is_zero(c)) return;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (abs(c) != 1) os << swb::to_string(Rational(abs(c))) << "*";
    os << name;
  };
  for (std::size_t i = 0; i < y.size(); ++i) emit(y[i], y.size() == 1 ? "y" : "y" + std::to_string(i + 1));
  emit(t, "t");
  if (first) os << "0";
  return os.str();
}

bool GkmGraph::has_vertex(const FixedPoint& p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

VarSetPtr gkm_vars(int rank) {
  std::vector<std::string> names;
  if (rank == 1) {
    names.push_back("y");
  } else {
    for (int i = 1; i <= rank; ++i) names.push_back("y" + std::to_string(i));
  }
  names.push_back("t");
  return make_vars(std::move(names));
}

GkmGraph build_gkm_graph(const RootDatum& rd, int d, const Window& window) {
  if (d < 0) throw Error("d must be nonnegative");
  if (window.dim() != static_cast<std::size_t>(rd.rank)) throw Error("window dimension does not match the rank");
  GkmGraph g;
  g.rank = rd.rank;
  g.vars = gkm_vars(rd.rank);
  g.vertices = window.points();
  if (g.vertices.empty()) throw Error("empty window");
  std::sort(g.vertices.begin(), g.vertices.end());
  for (const auto& lambda : g.vertices) {
    for (const auto& a : rd.roots) {
      for (int k = 1; k <= d; ++k) {
        FixedPoint mu = lambda;
        for (int i = 0; i < rd.rank; ++i) mu[i] += k * a.coroot[i];
        if (!window.contains(mu)) continue;
        IntVector sum(rd.rank);
        for (int i = 0; i < rd.rank; ++i) sum[i] = lambda[i] + mu[i];
        AffineChar w;
        for (int c : a.form) w.y.emplace_back(c);
        w.t = make_rational(rd.pair(a.form, sum), 2);
        g.edges.push_back({lambda, mu, std::move(w)});
      }
    }
  }
  return g;
}

GkmGraph build_flag_graph(int lo, int hi) {
  if (lo > hi) throw Error("empty window");
  GkmGraph g;
  g.rank = 1;
  g.flag = true;
  g.vars = gkm_vars(1);
  for (int k = lo; k <= hi; ++k) {
    g.vertices.push_back({k, 0});
    g.vertices.push_back({k, 1});
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  for (int k = lo; k <= hi; ++k) {
    g.edges.push_back({{k, 0}, {k, 1}, AffineChar{{Rational(1)}, Rational(2 * k)}});
    if (k - 1 >= lo) g.edges.push_back({{k, 0}, {k - 1, 1}, AffineChar{{Rational(1)}, Rational(2 * k - 1)}});
  }
  return g;
}

std::vector<AffineChar> f_factors(int d, int k, int j) {
  if (d < 0 || j < 0 || j > d) throw Error("f_poly index j out of range");
  std::vector<AffineChar> out;
  for (int i = 0; i <= d; ++i)
    if (i != j) out.push_back(AffineChar{{Rational(1)}, Rational(2 * k + i + j)});
  return out;
}

MultiPoly f_poly(int d, int k, int j) {
  auto vars = gkm_vars(1);
  MultiPoly p = MultiPoly::constant(vars, 1);
  for (const auto& f : f_factors(d, k, j)) p *= f.to_poly(vars);
  return p;
}

FormTuple sl2_classes(int d, int k) {
  if (d < 1) throw Error("sl2 classes need d >= 1");
  auto vars = gkm_vars(1);
  FormTuple out;
  for (int j = 0; j <= d; ++j) {
    Rational c(binomial(d, j));
    if (j % 2) c = -c;
    out[{k + j}] = RationalForm{MultiPoly::constant(vars, c), f_factors(d, k, j)};
  }
  return out;
}

FormTuple flag_rank1_class(FlagClass kind, int k) {
  auto vars = gkm_vars(1);
  const MultiPoly one = MultiPoly::constant(vars, 1);
  FormTuple out;
  switch (kind) {
    case FlagClass::A0:
      out[{0, 0}] = RationalForm{one, {}};
      break;
    case FlagClass::B: {
      AffineChar w{{Rational(1)}, Rational(2 * k)};
      out[{k, 0}] = RationalForm{one, {w}};
      out[{k, 1}] = RationalForm{-one, {w}};
      break;
    }
    case FlagClass::BPrime: {
      AffineChar w{{Rational(1)}, Rational(2 * k - 1)};
      out[{k, 0}] = RationalForm{one, {w}};
      out[{k - 1, 1}] = RationalForm{-one, {w}};
      break;
    }
  }
  return out;
}

FormTuple scaled(const FormTuple& tuple, const Rational& c) {
  FormTuple out = tuple;
  for (auto& [p, f] : out) f.num *= c;
  return out;
}

namespace {

Json point_json(const FixedPoint& p, bool flag) {
  if (!flag) return p;
  return Json::array({p[0], p[1] == 0 ? "1" : "s"});
}

std::string point_label(const FixedPoint& p, bool flag) {
  if (flag) return "(" + std::to_string(p[0]) + "," + (p[1] == 0 ? "1" : "s") + ")";
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

Json char_json(const AffineChar& c) {
  Json j;
  Json y = Json::array();
  for (const auto& v : c.y) y.push_back(to_json(v));
  j["y"] = y;
  j["t"] = to_json(c.t);
  return j;
}

AffineChar char_from_json(const Json& j) {
  AffineChar c;
  for (const auto& v : j.at("y")) c.y.push_back(rational_from_json(v));
  c.t = rational_from_json(j.at("t"));
  return c;
}

FixedPoint point_from_json(const Json& j) {
  FixedPoint p;
  for (const auto& v : j) {
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s == "1") p.push_back(0);
      else if (s == "s") p.push_back(1);
      else throw Error("unknown Weyl component '" + s + "'");
    } else {
      p.push_back(v.get<int>());
    }
  }
  return p;
}

}  // namespace

Json to_json(const GkmGraph& g) {
  Json j;
  j["rank"] = g.rank;
  j["flag"] = g.flag;
  Json vs = Json::array();
  for (const auto& v : g.vertices) vs.push_back(point_json(v, g.flag));
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : g.edges) {
    Json ej;
    ej["from"] = point_json(e.from, g.flag);
    ej["to"] = point_json(e.to, g.flag);
    ej["weight"] = char_json(e.weight);
    ej["label"] = e.weight.to_string();
    es.push_back(std::move(ej));
  }
  j["edges"] = es;
  return j;
}

std::string to_dot(const GkmGraph& g) {
  std::ostringstream os;
  os << "graph gkm {\n";
  for (const auto& v : g.vertices) os << "  \"" << point_label(v, g.flag) << "\";\n";
  for (const auto& e : g.edges)
    os << "  \"" << point_label(e.from, g.flag) << "\" -- \"" << point_label(e.to, g.flag) << "\" [label=\""
       << e.weight.to_string() << "\"];\n";
  os << "}\n";
  return os.str();
}

Json to_json(const FormTuple& tuple) {
  Json entries = Json::array();
  for (const auto& [p, f] : tuple) {
    Json e;
    e["point"] = p;
    e["num"] = to_json(f.num);
    Json den = Json::array();
    for (const auto& c : f.den) den.push_back(char_json(c));
    e["den"] = den;
    entries.push_back(std::move(e));
  }
  return entries;
}

FormTuple form_tuple_from_json(const Json& j, const VarSetPtr& vars) {
  if (!j.is_array()) throw Error("tuple JSON must be an array of entries");
  FormTuple out;
  for (const auto& e : j) {
    FixedPoint p = point_from_json(e.at("point"));
    RationalForm f;
    if (e.at("num").is_object()) {
      f.num = poly_from_json(e.at("num"), vars);
    } else {
      f.num = MultiPoly::constant(vars, rational_from_json(e.at("num")));
    }
    for (const auto& c : e.value("den", Json::array())) {
      AffineChar ch = char_from_json(c);
      if (ch.y.size() + 1 != vars->size()) throw Error("denominator factor has the wrong arity");
      f.den.push_back(std::move(ch));
    }
    if (!out.emplace(p, std::move(f)).second) throw Error("duplicate fixed point in tuple");
  }
  return out;
}

}  // namespace swb
