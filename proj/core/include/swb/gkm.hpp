#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swb/rootdata.hpp"
#include "swb/series.hpp"

namespace swb {

/// A torus fixed point: a lattice point, or (k, w) with w in {0 = 1, 1 = s}
/// for the rank-1 affine flag graph.
using FixedPoint = std::vector<int>;

/// Affine character sum_i y[i] * y_i + t * t.
struct AffineChar {
  std::vector<Rational> y;
  Rational t;

  MultiPoly to_poly(const VarSetPtr& vars) const;
  bool is_zero() const;
  bool proportional_to(const AffineChar& o) const;
  /// Scaled so that the first nonzero coefficient is 1.
  AffineChar normalized() const;
  std::string to_string() const;
  bool operator==(const AffineChar&) const = default;
  bool operator<(const AffineChar& o) const;
};

struct GkmEdge {
  FixedPoint from;
  FixedPoint to;
  AffineChar weight;
};

struct GkmGraph {
  int rank = 1;
  bool flag = false;
  std::vector<FixedPoint> vertices;
  std::vector<GkmEdge> edges;
  VarSetPtr vars;  ///< (y_1..y_r, t)

  bool has_vertex(const FixedPoint& p) const;
};

/// Variables y1..yr, t.
VarSetPtr gkm_vars(int rank);

/// Edge lambda - mu = k alpha^vee (alpha positive, 1 <= k <= d) with weight
/// (y_alpha, <alpha, lambda + mu> / 2).
GkmGraph build_gkm_graph(const RootDatum& rd, int d, const Window& window);
/// Rank-1 affine flag graph on (k, w), lo <= k <= hi: edges (k,1)-(k,s) of
/// weight y + 2kt and (k,1)-(k-1,s) of weight y + (2k-1)t.
GkmGraph build_flag_graph(int lo, int hi);

/// Rational form N / prod(den). Every denominator factor is affine linear.
struct RationalForm {
  MultiPoly num;
  std::vector<AffineChar> den;
};

using FormTuple = std::map<FixedPoint, RationalForm>;

/// Linear factors of f_k^(j) = prod_{i in 0..d, i != j} (y + (2k+i+j)t).
std::vector<AffineChar> f_factors(int d, int k, int j);
MultiPoly f_poly(int d, int k, int j);

/// Entries (-1)^j binom(d,j) / f_k^(j) at position k+j, j = 0..d.
FormTuple sl2_classes(int d, int k);

enum class FlagClass { A0, B, BPrime };
/// a_0 = 1 at (0,1); b_k = (1, -1)/(y+2kt) at (k,1),(k,s);
/// b_k' = (1, -1)/(y+(2k-1)t) at (k,1),(k-1,s).
FormTuple flag_rank1_class(FlagClass kind, int k);

struct ResidueReport {
  bool ok = true;
  std::string reason;
  std::optional<GkmEdge> edge;
  std::optional<FixedPoint> vertex;
};

/// Checks (1) every pole is an incident edge character of order at most
/// one and (2) on every connected component of the edges with weight
/// proportional to chi, the residues along chi = 0 sum to zero.
ResidueReport verify_residue_conditions(const FormTuple& tuple, const GkmGraph& graph);

/// Res_{chi=0} of one form, as a rational function with the
/// lexicographically-first variable of chi eliminated.
RationalSeries residue_along(const RationalForm& form, const AffineChar& chi, const VarSetPtr& vars);
/// Restriction of a polynomial to chi = 0 (same elimination rule).
MultiPoly restrict_to_hyperplane(const MultiPoly& p, const AffineChar& chi);

/// Res at y = -(2k+j+j')t of the sum of the j-th and j'-th entries of
/// sl2_classes(d, k) vanishes.
bool residue_antisymmetry_check(int d, int k, int j, int jprime);

/// Sum over lattice points lambda of (entry at lambda)|_{t=0} x^lambda, over
/// Laurent variables (x_1..x_r, y_1..y_r). Every denominator factor must
/// become a multiple of a single y_i at t = 0.
MultiPoly specialize_t0(const FormTuple& tuple, int rank);

FormTuple scaled(const FormTuple& tuple, const Rational& c);

Json to_json(const GkmGraph& g);
std::string to_dot(const GkmGraph& g);
Json to_json(const FormTuple& tuple);
FormTuple form_tuple_from_json(const Json& j, const VarSetPtr& vars);

}  // namespace swb
