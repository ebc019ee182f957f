#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swb/arrangement.hpp"
#include "swb/series.hpp"

namespace swb {

/// Variables (q, L).
VarSetPtr msv_vars();
/// Variables (q, t) for Poincare series after L -> t^2.
VarSetPtr poincare_vars();
/// Laurent variables (Q, T) for link homology series.
VarSetPtr knot_vars();

/// One subcurve of a decomposition: contributes
/// (qL)^(1-genus) * numerator / ((1-q)(1-qL)).
struct CurvePiece {
  std::string name;
  int genus = 0;
  MultiPoly numerator;  ///< in msv_vars(), constant term 1
};

struct Decomposition {
  long multiplicity = 1;
  std::vector<CurvePiece> pieces;
};

/// Curve {x^n = y^(dn)} with arithmetic genus g, described by its subcurve
/// decompositions. The series is (qL)^(g-1) * sum of decomposition products.
struct CurveSpec {
  int n = 2;
  int d = 1;
  int genus = 0;
  std::vector<Decomposition> decompositions;
};

/// Presets keyed like the equation exponents: (2,2) node, (3,3) three
/// lines, (2,4) tacnode.
CurveSpec curve_preset(int n, int dn);
CurveSpec parse_curve(const std::string& text);

RationalSeries msv_assemble(const CurveSpec& spec);

/// Closed forms quoted for the worked examples, in msv_vars().
RationalSeries three_lines_reference();
RationalSeries tacnode_reference();
RationalSeries node_reference();

/// L -> t^2.
RationalSeries poincare_specialize(const RationalSeries& s);

/// global * (1 - qL)^r.
RationalSeries punctual_series(const RationalSeries& global, int r);
/// global * (1 - L^2)^r, the factor printed for the tacnode.
RationalSeries punctual_series_printed_factor(const RationalSeries& global, int r);
/// q -> Q, qL -> T^(-1).
RationalSeries knot_substitute(const RationalSeries& s);

enum class Link { T33, T24 };
RationalSeries knot_reference(Link link);

struct KnotReport {
  bool equal = false;
  std::optional<int> normalization;  ///< g with reference = T^g * substituted
  RationalSeries substituted;
  RationalSeries reference;
  /// The same comparison with the printed (1 - L^2)^r factor (T(2,4) only).
  std::optional<bool> printed_factor_equal;
};

/// Monomial T^g with reference = T^g * candidate, if one exists.
std::optional<int> monomial_normalization(const RationalSeries& reference, const RationalSeries& candidate);
KnotReport knot_compare(Link link);
KnotReport knot_compare(Link link, const RationalSeries& reference);

// ---- conjectural quotient module ----------------------------------------

struct QuotientDim {
  std::size_t slice_dimension = 0;
  std::size_t relation_rank = 0;
  std::size_t quotient = 0;
};

/// Q[x,y] / sum_{i<j} sum_{k<=d} (x_i-x_j)^k ker(d_{y_i}-d_{y_j})^k at the
/// CURVE bidegree (points, homological degree).
QuotientDim quotient_hilbert_slice(int n, int d, int points, int degree);

/// dims[N][b] = quotient dimension at N points, homological degree 2b.
std::vector<std::vector<std::size_t>> quotient_series_table(int n, int d, int q_order);

struct SeriesMismatch {
  int q_order = 0;
  int t_degree = 0;
  Rational expected;  ///< from the MSV side
  Rational actual;    ///< from the quotient module
};

struct ConjectureReport {
  bool match = true;
  int q_order = 0;
  std::optional<SeriesMismatch> first_mismatch;
  std::vector<std::vector<std::size_t>> table;
};

ConjectureReport conjecture_vs_msv(int n, int d, int q_order);

/// Coefficient table [N][b] of q^N t^(2b) in a (q, t) series.
std::vector<std::vector<Rational>> curve_coefficients(const RationalSeries& s, int q_order);

// ---- U_i subspace family (n = 3) ---------------------------------------

struct SubspaceDims {
  std::size_t u1 = 0, u2 = 0, u3 = 0;
  std::size_t u12_cap = 0;        ///< U_1 ∩ U_2
  std::size_t u12_sum = 0;        ///< U_1 + U_2
  std::size_t u12_sum_cap3 = 0;   ///< (U_1 + U_2) ∩ U_3
  std::size_t total_sum = 0;      ///< U_1 + U_2 + U_3
};

/// Keyed by ALGEBRAIC (a, b) = (points - b, b).
std::map<std::pair<int, int>, SubspaceDims> grdim_subspace_family(int q_order);

/// Closed forms in poincare_vars().
RationalSeries grdim_u1_closed_form();
RationalSeries grdim_u12_cap_closed_form();
RationalSeries grdim_u12_sum_cap3_closed_form();

}  // namespace swb
