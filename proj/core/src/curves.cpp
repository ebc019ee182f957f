#include "swb/curves.hpp"

#include <sstream>

namespace swb {

namespace {

struct Term {
  long c;
  std::vector<int> e;
};

MultiPoly build(const VarSetPtr& vars, std::initializer_list<Term> terms) {
  MultiPoly p(vars);
  for (const auto& t : terms) p.add_term(t.e, Rational(t.c));
  return p;
}

RationalSeries line_factor(const VarSetPtr& v) {
  // 1 / ((1-q)(1-qL))
  return RationalSeries(build(v, {{1, {0, 0}}}), build(v, {{1, {0, 0}}, {-1, {1, 0}}}) * build(v, {{1, {0, 0}}, {-1, {1, 1}}}));
}

}  // namespace

VarSetPtr msv_vars() {
  static const VarSetPtr v = make_vars({"q", "L"});
  return v;
}

VarSetPtr poincare_vars() {
  static const VarSetPtr v = make_vars({"q", "t"});
  return v;
}

VarSetPtr knot_vars() {
  static const VarSetPtr v = make_vars({"Q", "T"}, {true, true});
  return v;
}

CurveSpec curve_preset(int n, int dn) {
  const auto v = msv_vars();
  const MultiPoly one = MultiPoly::constant(v, 1);
  const CurvePiece line{"line", 0, one};
  const CurvePiece node{"node", 0, one};
  const CurvePiece parabola{"parabola", 0, one};
  CurveSpec s;
  if (n == 2 && dn == 2) {
    s = {2, 1, 0, {{1, {line, line}}, {1, {node}}}};
  } else if (n == 3 && dn == 3) {
    const CurvePiece central{"central", 1, build(v, {{1, {0, 0}}, {2, {1, 1}}, {1, {2, 1}}})};
    s = {3, 1, 1, {{1, {line, line, line}}, {3, {node, line}}, {1, {central}}}};
  } else if (n == 2 && dn == 4) {
    const CurvePiece central{"central", 1, build(v, {{1, {0, 0}}, {1, {1, 1}}, {1, {2, 1}}})};
    s = {2, 2, 1, {{1, {parabola, parabola}}, {1, {central}}}};
  } else {
    throw Error("no curve data for {x^" + std::to_string(n) + " = y^" + std::to_string(dn) + "}");
  }
  return s;
}

CurveSpec parse_curve(const std::string& text) {
  std::istringstream in(text);
  int n = 0, dn = 0;
  char comma = 0;
  if (!(in >> n >> comma >> dn) || comma != ',' || !in.eof()) throw Error("curve must be given as n,dn (e.g. 3,3)");
  return curve_preset(n, dn);
}

RationalSeries msv_assemble(const CurveSpec& spec) {
  const auto v = msv_vars();
  const RationalSeries ql = RationalSeries::variable(v, "q") * RationalSeries::variable(v, "L");
  const RationalSeries base = line_factor(v);
  RationalSeries total = RationalSeries::constant(v, 0);
  for (const auto& dec : spec.decompositions) {
    RationalSeries prod = RationalSeries::constant(v, dec.multiplicity);
    for (const auto& piece : dec.pieces) {
      if (piece.numerator.constant_term() != 1) throw Error("piece numerator must have constant term 1");
      prod *= ql.pow(1 - piece.genus) * RationalSeries(piece.numerator) * base;
    }
    total += prod;
  }
  return total * ql.pow(spec.genus - 1);
}

RationalSeries three_lines_reference() {
  const auto v = msv_vars();
  MultiPoly num = build(v, {{1, {6, 3}}, {-2, {5, 2}}, {1, {4, 2}}, {1, {3, 2}}, {1, {4, 1}}, {-2, {3, 1}}, {1, {2, 1}},
                            {1, {2, 0}}, {-2, {1, 0}}, {1, {0, 0}}});
  MultiPoly den = (build(v, {{1, {0, 0}}, {-1, {1, 0}}}) * build(v, {{1, {0, 0}}, {-1, {1, 1}}})).pow(3);
  return RationalSeries(num, den);
}

RationalSeries tacnode_reference() {
  const auto v = msv_vars();
  MultiPoly num = build(v, {{1, {4, 2}}, {-1, {3, 1}}, {1, {2, 1}}, {-1, {1, 0}}, {1, {0, 0}}});
  MultiPoly den = (build(v, {{1, {0, 0}}, {-1, {1, 0}}}) * build(v, {{1, {0, 0}}, {-1, {1, 1}}})).pow(2);
  return RationalSeries(num, den);
}

RationalSeries node_reference() {
  const auto v = msv_vars();
  MultiPoly num = build(v, {{1, {0, 0}}, {-1, {1, 0}}, {1, {2, 1}}});
  MultiPoly den = (build(v, {{1, {0, 0}}, {-1, {1, 0}}}) * build(v, {{1, {0, 0}}, {-1, {1, 1}}})).pow(2);
  return RationalSeries(num, den);
}

RationalSeries poincare_specialize(const RationalSeries& s) {
  return s.substitute(poincare_vars(), {{"q", {{"q", 1}}}, {"L", {{"t", 2}}}});
}

RationalSeries punctual_series(const RationalSeries& global, int r) {
  if (r < 0) throw Error("component count must be nonnegative");
  const auto v = global.vars();
  return global * RationalSeries(build(v, {{1, {0, 0}}, {-1, {1, 1}}})).pow(r);
}

RationalSeries punctual_series_printed_factor(const RationalSeries& global, int r) {
  const auto v = global.vars();
  return global * RationalSeries(build(v, {{1, {0, 0}}, {-1, {0, 2}}})).pow(r);
}

RationalSeries knot_substitute(const RationalSeries& s) {
  return s.substitute(knot_vars(), {{"q", {{"Q", 1}}}, {"L", {{"Q", -1}, {"T", -1}}}});
}

RationalSeries knot_reference(Link link) {
  const auto v = knot_vars();
  if (link == Link::T33) {
    // Triply graded series of T(3,3) at A = 0.
    MultiPoly num = build(v, {{1, {2, 3}}, {1, {3, 2}}, {-2, {2, 2}}, {-2, {3, 1}}, {-2, {1, 3}}, {1, {0, 3}},
                              {1, {3, 0}}, {1, {2, 1}}, {1, {1, 2}}, {1, {1, 1}}});
    return RationalSeries(num, build(v, {{1, {0, 0}}, {-1, {1, 0}}}).pow(3));
  }
  // (Q^2 + (1-Q)(T^2 + QT)) / ((1-Q)^2 T^2)
  MultiPoly one_minus_q = build(v, {{1, {0, 0}}, {-1, {1, 0}}});
  MultiPoly num = build(v, {{1, {2, 0}}}) + one_minus_q * build(v, {{1, {0, 2}}, {1, {1, 1}}});
  return RationalSeries(num, one_minus_q.pow(2) * build(v, {{1, {0, 2}}}));
}

std::optional<int> monomial_normalization(const RationalSeries& reference, const RationalSeries& candidate) {
  if (candidate.is_zero()) return std::nullopt;
  const RationalSeries ratio = reference / candidate;
  if (ratio.num().size() != 1 || ratio.den().size() != 1) return std::nullopt;
  const auto& [en, cn] = *ratio.num().terms().begin();
  const auto& [ed, cd] = *ratio.den().terms().begin();
  if (cn != cd) return std::nullopt;
  const auto t = ratio.vars()->index_of("T");
  if (!t) return std::nullopt;
  for (std::size_t i = 0; i < en.size(); ++i)
    if (i != *t && (en[i] != 0 || ed[i] != 0)) return std::nullopt;
  return en[*t] - ed[*t];
}

KnotReport knot_compare(Link link, const RationalSeries& reference) {
  const int r = link == Link::T33 ? 3 : 2;
  const RationalSeries global = msv_assemble(link == Link::T33 ? curve_preset(3, 3) : curve_preset(2, 4));
  KnotReport rep;
  rep.substituted = knot_substitute(punctual_series(global, r));
  rep.reference = reference;
  rep.normalization = monomial_normalization(reference, rep.substituted);
  rep.equal = rep.normalization.has_value();
  if (link == Link::T24)
    rep.printed_factor_equal =
        monomial_normalization(reference, knot_substitute(punctual_series_printed_factor(global, r))).has_value();
  return rep;
}

KnotReport knot_compare(Link link) { return knot_compare(link, knot_reference(link)); }

std::vector<std::vector<Rational>> curve_coefficients(const RationalSeries& s, int q_order) {
  const auto coeffs = s.expand_in("q", q_order);
  const auto t = s.vars()->index_of("t");
  if (!t) throw Error("series has no variable t");
  std::vector<std::vector<Rational>> out;
  for (int n = 0; n <= q_order; ++n) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
    for (const auto& [e, c] : coeffs[n].terms()) {
      const int te = e[*t];
      if (te % 2 != 0 || te / 2 > n || te < 0) {
        // Outside the expected support: keep it visible by extending the row.
        if (te < 0 || te % 2 != 0) throw Error("series has odd or negative t-degree at q^" + std::to_string(n));
        row.resize(static_cast<std::size_t>(te / 2) + 1, Rational(0));
      }
      row[static_cast<std::size_t>(te / 2)] += c;
    }
    out.push_back(std::move(row));
  }
  return out;
}

ConjectureReport conjecture_vs_msv(int n, int d, int q_order) {
  int dn = n * d;
  if (!((n == 2 && d == 1) || (n == 3 && d == 1) || (n == 2 && d == 2)))
    throw Error("conjecture check supports (n,d) in {(2,1), (3,1), (2,2)}");
  const auto expected = curve_coefficients(poincare_specialize(msv_assemble(curve_preset(n, dn))), q_order);
  ConjectureReport rep;
  rep.q_order = q_order;
  rep.table = quotient_series_table(n, d, q_order);
  for (int N = 0; N <= q_order && rep.match; ++N) {
    const auto& row = expected[N];
    const std::size_t width = std::max(row.size(), rep.table[N].size());
    for (std::size_t b = 0; b < width; ++b) {
      const Rational e = b < row.size() ? row[b] : Rational(0);
      const Rational a = b < rep.table[N].size() ? Rational(static_cast<long>(rep.table[N][b])) : Rational(0);
      if (e != a) {
        rep.match = false;
        rep.first_mismatch = SeriesMismatch{N, static_cast<int>(2 * b), e, a};
        break;
      }
    }
  }
  return rep;
}

}  // namespace swb
