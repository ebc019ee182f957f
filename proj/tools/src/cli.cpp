#include "swb/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "swb/arrangement.hpp"
#include "swb/curves.hpp"
#include "swb/gkm.hpp"
#include "swb/serialize.hpp"

namespace swb::cli {

namespace {

struct Usage : Error {
  using Error::Error;
};

struct Report {
  Json body;
  int status = kPass;
  std::string text;  ///< non-JSON payload (DOT)
};

std::string status_word(int status) {
  switch (status) {
    case kPass: return "PASS";
    case kMismatch: return "FAIL";
    case kInconclusive: return "INCONCLUSIVE";
    default: return "ERROR";
  }
}

int worst(int a, int b) {
  // inconclusive outranks a plain pass, a mismatch outranks both
  if (a == kMismatch || b == kMismatch) return kMismatch;
  return std::max(a, b);
}

struct Group {
  std::string label;
  int n = 0;
};

// "SL2" and "--group SL --n 2" name the same datum.
Group parse_group(const RunConfig& c) {
  std::string g = c.group;
  std::size_t cut = g.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(g[cut - 1]))) --cut;
  if (cut < g.size() && (g.substr(0, cut) == "GL" || g.substr(0, cut) == "SL"))
    return {g.substr(0, cut), std::stoi(g.substr(cut))};
  return {g, c.n};
}

RootDatum datum(const RunConfig& c) {
  const Group g = parse_group(c);
  try {
    return build_root_datum(g.label, g.n);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

int margin_of(const RunConfig& c) { return c.margin.value_or(2 * c.d); }

WindowPolicy policy_of(const RunConfig& c, int rank) {
  if (c.window_lo > c.window_hi) throw Usage("empty window");
  WindowPolicy p;
  p.x_window = Window::cube(static_cast<std::size_t>(rank), c.window_lo, c.window_hi);
  if (c.ywindow_lo || c.ywindow_hi) {
    if (!c.ywindow_lo || !c.ywindow_hi || *c.ywindow_lo > *c.ywindow_hi) throw Usage("--ywindow needs lo,hi");
    p.y_window = Window::cube(static_cast<std::size_t>(rank), *c.ywindow_lo, *c.ywindow_hi);
  }
  p.margin = margin_of(c);
  p.max_margin = c.max_margin > 0 ? c.max_margin : p.margin + 4;
  if (p.margin < c.d || p.max_margin < p.margin) throw Usage("margin must satisfy d <= margin <= max-margin");
  return p;
}

Json window_json(const RunConfig& c, const WindowPolicy& p) {
  Json j;
  j["x"] = {c.window_lo, c.window_hi};
  if (p.y_window) j["y"] = {*c.ywindow_lo, *c.ywindow_hi};
  j["margin"] = p.margin;
  j["max_margin"] = p.max_margin;
  return j;
}

void require(bool ok, const char* what) {
  if (!ok) throw Usage(what);
}

// ---- subcommands ----------------------------------------------------------

Report jd_series(const RunConfig& c) {
  require(c.d >= 1 && c.maxdeg >= 0, "need d >= 1 and maxdeg >= 0");
  const Group g = parse_group(c);
  std::string ring = c.ring;
  if (ring == "auto") ring = g.label == "GL" ? "poly" : "laurent";
  Report r;
  Json table = Json::array();
  r.body["group"] = g.label;
  r.body["n"] = g.n;
  r.body["d"] = c.d;
  r.body["ring"] = ring;
  if (ring == "poly") {
    require(g.label == "GL", "the polynomial ring is only available for GL");
    require(g.n >= 2 && g.n <= 4, "polynomial type A needs 2 <= n <= 4");
    const PolyRing pr = type_a_ring(g.n);
    r.body["maxdeg"] = c.maxdeg;
    for (int s = 0; s <= c.maxdeg; ++s)
      for (int b = 0; b <= s; ++b) {
        const GradedSlice j = jd_slice(pr, c.d, s - b, b);
        table.push_back({{"a", s - b}, {"b", b}, {"dimension", j.dimension()}, {"rank", j.rank()}});
      }
  } else if (ring == "laurent" || ring == "ktheory") {
    const RootDatum rd = datum(c);
    const WindowPolicy p = policy_of(c, rd.rank);
    r.body["n"] = rd.rank;
    r.body["window"] = window_json(c, p);
    auto one = [&](const Bidegree& deg, GeneratorFamily fam) {
      const WindowedSlice w = jd_slice(rd, c.d, deg, p, fam);
      if (!w.stabilized) r.status = kInconclusive;
      return Json{{"dimension", w.slice.dimension()},
                  {"margin", w.margin},
                  {"rank", w.slice.rank()},
                  {"stabilized", w.stabilized}};
    };
    if (ring == "ktheory") {
      require(p.y_window.has_value(), "the K-theory ring needs --ywindow");
      table.push_back(one(Bidegree::ungraded(), GeneratorFamily::KTheory));
    } else {
      r.body["maxdeg"] = c.maxdeg;
      for (int b = 0; b <= c.maxdeg; ++b) {
        Json e = one(Bidegree::homological(b), GeneratorFamily::Root);
        e["y_degree"] = b;
        table.push_back(std::move(e));
      }
    }
  } else {
    throw Usage("--ring must be poly, laurent or ktheory");
  }
  r.body["table"] = std::move(table);
  return r;
}

Report catalan(const RunConfig& c) {
  require(c.n >= 2 && c.n <= 4, "catalan needs 2 <= n <= 4");
  const CatalanTable t = catalan_quotient(c.n);
  Report r;
  Json table = Json::array();
  for (const auto& [deg, dim] : t.dims) table.push_back({{"a", deg.first}, {"b", deg.second}, {"dimension", dim}});
  r.body["n"] = c.n;
  r.body["total"] = t.total;
  r.body["truncation"] = t.truncation;
  r.body["certified"] = t.certified;
  r.body["table"] = std::move(table);
  if (!t.certified) r.status = kInconclusive;
  return r;
}

Report freeness(const RunConfig& c) {
  require(c.n >= 2 && c.n <= 3 && c.d >= 1 && c.d <= 2, "freeness needs 2 <= n <= 3 and 1 <= d <= 2");
  const FreenessReport f = freeness_check(c.n, c.d, c.maxdeg);
  Report r;
  Json stages = Json::array();
  for (const auto& s : f.stages) {
    Json e{{"status", s.pass ? "PASS" : "FAIL"}, {"variable", "y" + std::to_string(s.variable + 1)}};
    if (s.failing_degree) e["failing_degree"] = {s.failing_degree->first, s.failing_degree->second};
    stages.push_back(std::move(e));
  }
  r.body["n"] = c.n;
  r.body["d"] = c.d;
  r.body["maxdeg"] = c.maxdeg;
  r.body["stages"] = std::move(stages);
  if (!f.pass) r.status = kMismatch;
  return r;
}

GkmGraph graph_for(const RunConfig& c, int default_span) {
  if (c.group == "flag") return build_flag_graph(c.window_lo, c.window_hi);
  const RootDatum rd = datum(c);
  int lo = c.window_lo, hi = c.window_hi;
  if (lo > hi) throw Usage("empty window");
  if (default_span > 0 && lo == 0 && hi == 1) {
    lo = -default_span;
    hi = default_span;
  }
  return build_gkm_graph(rd, c.d, Window::cube(static_cast<std::size_t>(rd.rank), lo, hi));
}

Report gkm_graph(const RunConfig& c) {
  require(c.d >= 1, "need d >= 1");
  const GkmGraph g = graph_for(c, 0);
  Report r;
  if (c.graph_format == "dot") {
    r.text = to_dot(g);
  } else if (c.graph_format == "json") {
    r.body["graph"] = to_json(g);
  } else {
    throw Usage("--graph-format must be json or dot");
  }
  return r;
}

// b<k>, bprime<k>, a0
std::pair<std::string, int> parse_class(const std::string& s) {
  std::size_t cut = 0;
  while (cut < s.size() && std::isalpha(static_cast<unsigned char>(s[cut]))) ++cut;
  const std::string kind = s.substr(0, cut);
  if (kind.empty() || cut == s.size()) throw Usage("class must look like b0, bprime-1 or a0");
  try {
    std::size_t used = 0;
    const int k = std::stoi(s.substr(cut), &used);
    if (cut + used != s.size()) throw Usage("trailing characters in class name");
    return {kind, k};
  } catch (const std::logic_error&) {
    throw Usage("class must look like b0, bprime-1 or a0");
  }
}

Report gkm_verify(const RunConfig& c) {
  FormTuple tuple;
  GkmGraph graph;
  Report r;
  const bool flag = c.group == "flag";
  if (!c.input.empty()) {
    std::ifstream in(c.input);
    if (!in) throw Usage("cannot read " + c.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Usage(std::string("malformed tuple JSON: ") + e.what());
    }
    graph = graph_for(c, flag ? 0 : 4);
    tuple = form_tuple_from_json(j.contains("entries") ? j.at("entries") : j, graph.vars);
    r.body["input"] = c.input;
  } else {
    require(!c.klass.empty(), "gkm-verify needs --class or --input");
    const auto [kind, k] = parse_class(c.klass);
    if (flag) {
      if (kind == "a" && k == 0) tuple = flag_rank1_class(FlagClass::A0, 0);
      else if (kind == "b") tuple = flag_rank1_class(FlagClass::B, k);
      else if (kind == "bprime") tuple = flag_rank1_class(FlagClass::BPrime, k);
      else throw Usage("flag classes are a0, b<k>, bprime<k>");
      const int lo = std::min(c.window_lo, k - 2), hi = std::max(c.window_hi, k + 2);
      graph = build_flag_graph(lo, hi);
    } else {
      const Group g = parse_group(c);
      require(g.n == 2 && (g.label == "SL" || g.label == "A1"), "sl2 classes live on SL2");
      require(kind == "b", "SL2 classes are b<k>");
      require(c.d >= 1, "need d >= 1");
      tuple = sl2_classes(c.d, k);
      graph = build_gkm_graph(datum(c), c.d, Window::cube(1, k - c.d - 2, k + 2 * c.d + 2));
    }
    r.body["class"] = c.klass;
  }
  const ResidueReport rep = verify_residue_conditions(tuple, graph);
  r.body["group"] = flag ? "flag" : parse_group(c).label;
  r.body["d"] = c.d;
  r.body["tuple"] = to_json(tuple);
  if (!rep.ok) {
    r.status = kMismatch;
    r.body["reason"] = rep.reason;
    if (rep.edge) r.body["edge"] = {{"from", rep.edge->from}, {"to", rep.edge->to}, {"weight", rep.edge->weight.to_string()}};
    if (rep.vertex) r.body["vertex"] = *rep.vertex;
  }
  return r;
}

Report msv(const RunConfig& c) {
  CurveSpec spec;
  try {
    spec = parse_curve(c.curve);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  const RationalSeries s = msv_assemble(spec);
  Report r;
  r.body["curve"] = c.curve;
  r.body["genus"] = spec.genus;
  r.body["series"] = s.to_string();
  r.body["normal_form"] = to_json(s);
  r.body["poincare"] = poincare_specialize(s).to_string();
  std::optional<RationalSeries> ref;
  if (spec.n == 3 && spec.d == 1) ref = three_lines_reference();
  if (spec.n == 2 && spec.d == 2) ref = tacnode_reference();
  if (spec.n == 2 && spec.d == 1) ref = node_reference();
  if (ref) {
    r.body["reference"] = ref->to_string();
    r.body["equal"] = *ref == s;
    if (!(*ref == s)) r.status = kMismatch;
  }
  return r;
}

Json mismatch_json(const std::optional<SeriesMismatch>& m) {
  if (!m) return nullptr;
  return {{"actual", to_json(m->actual)},
          {"expected", to_json(m->expected)},
          {"q_order", m->q_order},
          {"t_degree", m->t_degree}};
}

Report conjecture_check(const RunConfig& c) {
  require(c.q_order >= 0, "need order >= 0");
  const bool known = (c.n == 2 && c.d == 1) || (c.n == 3 && c.d == 1) || (c.n == 2 && c.d == 2);
  require(known, "conjecture-check supports (n,d) in {(2,1), (3,1), (2,2)}");
  const ConjectureReport rep = conjecture_vs_msv(c.n, c.d, c.q_order);
  Report r;
  r.body["n"] = c.n;
  r.body["d"] = c.d;
  r.body["order"] = c.q_order;
  r.body["match"] = rep.match;
  r.body["first_mismatch"] = mismatch_json(rep.first_mismatch);
  r.body["table"] = rep.table;
  if (!rep.match) r.status = kMismatch;
  return r;
}

Report compare_knot(const RunConfig& c) {
  Link link;
  if (c.link == "T33") link = Link::T33;
  else if (c.link == "T24") link = Link::T24;
  else throw Usage("--link must be T33 or T24");
  const KnotReport k = knot_compare(link);
  Report r;
  r.body["link"] = c.link;
  r.body["equal"] = k.equal;
  r.body["normalization"] = k.normalization ? Json("T^" + std::to_string(*k.normalization)) : Json(nullptr);
  r.body["substituted"] = k.substituted.to_string();
  r.body["reference"] = k.reference.to_string();
  if (k.printed_factor_equal) r.body["printed_factor_equal"] = *k.printed_factor_equal;
  r.body["first_mismatch"] = nullptr;
  if (!k.equal) r.status = kMismatch;
  return r;
}

Report ordinary_quotient(const RunConfig& c) {
  require(c.d >= 1 && c.y_degree >= 0, "need d >= 1 and ydeg >= 0");
  const RootDatum rd = datum(c);
  const WindowPolicy p = policy_of(c, rd.rank);
  const QuotientSlice q = ordinary_homology_quotient_slice(rd, c.d, c.y_degree, p);
  Report r;
  Json gens = Json::array();
  for (const auto& g : q.submodule.slice.row_polys()) gens.push_back(g.to_string());
  r.body["group"] = rd.label;
  r.body["n"] = rd.rank;
  r.body["d"] = c.d;
  r.body["y_degree"] = c.y_degree;
  r.body["window"] = window_json(c, p);
  r.body["slice_dimension"] = q.slice_dimension;
  r.body["submodule_rank"] = q.submodule.slice.rank();
  r.body["quotient_dimension"] = q.quotient_dimension;
  r.body["stabilized"] = q.submodule.stabilized;
  r.body["stable_margin"] = q.submodule.margin;
  r.body["generators"] = std::move(gens);
  if (!q.submodule.stabilized) r.status = kInconclusive;
  return r;
}

Report flag_rank1(const RunConfig& c) {
  require(c.y_degree >= 0 && c.window_lo <= c.window_hi, "need ydeg >= 0 and a nonempty window");
  const int margin = c.margin.value_or(2);
  const int max_margin = c.max_margin > 0 ? c.max_margin : margin + 4;
  const WindowedSlice w = flag_rank1_module_slice(c.y_degree, c.window_lo, c.window_hi, margin, max_margin);
  Report r;
  r.body["y_degree"] = c.y_degree;
  r.body["window"] = {c.window_lo, c.window_hi};
  r.body["dimension"] = w.slice.dimension();
  r.body["rank"] = w.slice.rank();
  r.body["stabilized"] = w.stabilized;
  r.body["stable_margin"] = w.margin;
  // y times each class whose support sits in the window must lie in the module
  Json classes = Json::array();
  auto check = [&](const std::string& name, const FormTuple& t) {
    const MultiPoly p = flag_class_times_y(t);
    bool inside = true;
    for (const auto& [e, coef] : p.terms()) inside = inside && e[0] >= c.window_lo && e[0] <= c.window_hi;
    if (!inside || p.is_zero() || p.terms().begin()->first[2] != c.y_degree) return;
    const bool member = w.slice.contains(p);
    if (!member) r.status = worst(r.status, kMismatch);
    classes.push_back({{"class", name}, {"in_module", member}});
  };
  check("a0", flag_rank1_class(FlagClass::A0, 0));
  for (int k = c.window_lo; k <= c.window_hi + 1; ++k) {
    check("b" + std::to_string(k), flag_rank1_class(FlagClass::B, k));
    check("bprime" + std::to_string(k), flag_rank1_class(FlagClass::BPrime, k));
  }
  r.body["classes"] = std::move(classes);
  if (!w.stabilized) r.status = worst(r.status, kInconclusive);
  return r;
}

// ---- rendering --------------------------------------------------------------

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_csv(const Json& body) {
  if (!body.contains("table") || !body["table"].is_array() || body["table"].empty() || !body["table"][0].is_object())
    throw Usage("this report has no table to emit as CSV");
  const Json table = canonical(body["table"]);
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : table[0].items()) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << "\n";
  for (const auto& row : table) {
    first = true;
    for (const auto& [k, v] : row.items()) {
      os << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_human(const Json& body) {
  std::ostringstream os;
  const Json sorted = canonical(body);
  for (const auto& [k, v] : sorted.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      os << k << ":\n";
      for (const auto& row : v) os << "  " << row.dump() << "\n";
    } else {
      os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return os.str();
}

Report dispatch(const RunConfig& c) {
  const std::string& s = c.subcommand;
  if (s == "jd-series") return jd_series(c);
  if (s == "catalan") return catalan(c);
  if (s == "freeness") return freeness(c);
  if (s == "gkm-graph") return gkm_graph(c);
  if (s == "gkm-verify") return gkm_verify(c);
  if (s == "msv") return msv(c);
  if (s == "conjecture-check") return conjecture_check(c);
  if (s == "compare-knot") return compare_knot(c);
  if (s == "ordinary-quotient") return ordinary_quotient(c);
  if (s == "flag-rank1") return flag_rank1(c);
  throw Usage("unknown subcommand '" + s + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report r;
  std::string payload;
  try {
    r = dispatch(config);
    if (r.text.empty()) {
      r.body["command"] = config.subcommand;
      r.body["status"] = status_word(r.status);
      switch (config.format) {
        case Format::Json: payload = dump_canonical(r.body) + "\n"; break;
        case Format::Csv: payload = render_csv(r.body); break;
        case Format::Human: payload = render_human(r.body); break;
      }
    } else {
      payload = r.text;
    }
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // bad arithmetic input (unsupported label, malformed tuple) is still a config problem
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (config.output.empty()) {
    out << payload;
  } else {
    std::ofstream f(config.output, std::ios::binary);
    if (!f) {
      err << "cannot write " << config.output << "\n";
      return kUsage;
    }
    f << payload;
  }
  return r.status;
}

}  // namespace swb::cli
