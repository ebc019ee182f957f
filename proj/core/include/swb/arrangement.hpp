#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

#include "swb/gkm.hpp"
#include "swb/rootdata.hpp"
#include "swb/slice.hpp"

namespace swb {

enum class GeneratorFamily { PairDiagonal, Root, KTheory, Alternant, FlagRank1 };

/// Target window plus the margin by which generator supports are enlarged
/// before restricting back. Margins are tried from `margin` up to
/// `max_margin`; a result is stable when one more step leaves the rank fixed.
struct WindowPolicy {
  Window x_window;
  std::optional<Window> y_window;  ///< K-theory only
  int margin = 2;
  int max_margin = 6;
};

struct WindowedSlice {
  GradedSlice slice;
  int margin = 0;          ///< margin at which the rank stabilised (or the last one tried)
  bool stabilized = false;
};

// ---- polynomial type A: Q[x_1..x_n, y_1..y_n], ALGEBRAIC bigrading -----

PolyRing type_a_ring(int n);

/// Degree-(a,b) piece of <x_i - x_j, y_i - y_j>^d.
GradedSlice pair_power_slice(const PolyRing& ring, int i, int j, int d, int a, int b);
/// Degree-(a,b) piece of J^(d) = intersection of all pair ideal powers.
GradedSlice jd_slice(const PolyRing& ring, int d, int a, int b);

/// Independent membership test for the intersection of <x_i-x_j, y_i-y_j>^d:
/// after x_j = x_i + u, y_j = y_i + v no term of (u,v)-degree < d survives.
bool symbolic_power_oracle(int n, int d, const MultiPoly& f);
/// The subspace of the (a,b) slice cut out by the same vanishing conditions,
/// computed as a kernel.
GradedSlice oracle_slice(const PolyRing& ring, int d, int a, int b);

/// Degree-(a,b) pieces of I^d, I the ideal generated by diagonal alternants.
/// Cached by (d, a, b); one instance per ring.
class AlternantIdeal {
 public:
  explicit AlternantIdeal(PolyRing ring);
  const PolyRing& ring() const { return ring_; }

  /// Antisymmetric polynomials of degree (a,b).
  const GradedSlice& alternants(int a, int b);
  /// Minimal generators of I in degree (a,b).
  const std::vector<MultiPoly>& generators(int a, int b);
  const GradedSlice& power(int d, int a, int b);

 private:
  GradedSlice products(int d, int a, int b);
  PolyRing ring_;
  std::map<std::pair<int, int>, GradedSlice> alt_;
  std::map<std::pair<int, int>, std::vector<MultiPoly>> gens_;
  std::map<std::tuple<int, int, int>, GradedSlice> pow_;
};

GradedSlice alternant_slice(int n, int d, int a, int b);
MultiPoly antisymmetrize(const PolyRing& ring, const MultiPoly& f);

/// Multiply every row by x_i (or y_i) and return the images in `target`.
std::vector<SparseVector> shifted_rows(const GradedSlice& s, const MonomialBasis& target, std::size_t var);

struct CatalanTable {
  std::map<std::pair<int, int>, long> dims;  ///< nonzero entries only
  long total = 0;
  int truncation = 0;
  bool certified = false;  ///< every slice with top < a+b <= truncation vanished
};

/// dim J_(a,b) - dim (sum x_i J + sum y_i J)_(a,b) for a + b <= truncation
/// (default n(n-1)/2 + 1).
CatalanTable catalan_quotient(int n, std::optional<int> truncation = std::nullopt);

/// Module F/R with F, R given slicewise (R subset of F) in an ALGEBRAIC
/// bigraded polynomial ring.
struct SliceModule {
  PolyRing ring;
  std::function<GradedSlice(int, int)> free_part;
  std::function<GradedSlice(int, int)> relations;
};

struct FreenessStage {
  int variable = 0;  ///< y_{variable+1}
  bool pass = true;
  std::optional<std::pair<int, int>> failing_degree;  ///< source bidegree
};

struct FreenessReport {
  bool pass = true;
  std::vector<FreenessStage> stages;
};

/// y_1, ..., y_n is a regular sequence on the module through total degree
/// `truncation`: y_k injective on M / (y_1..y_{k-1}) M slicewise.
FreenessReport freeness_check(const SliceModule& m, int truncation);
FreenessReport freeness_check(int n, int d, int truncation);

// ---- Laurent: Q[Lambda] (x) Q[y], y-degree grading, windows ------------

PolyRing laurent_ring(const RootDatum& rd, bool ktheory = false);

/// Slice of <g_1, g_2>^d restricted to the window, for
/// ROOT (y_alpha, 1 - x^alpha^vee) and KTHEORY (1 - y^alpha, 1 - x^alpha^vee).
GradedSlice root_power_slice(const RootDatum& rd, const PolyRing& ring, std::size_t root, int d, const Bidegree& deg,
                             const WindowPolicy& policy, int margin, GeneratorFamily family = GeneratorFamily::Root);

/// Intersection over positive roots, with stabilisation in the margin.
WindowedSlice jd_slice(const RootDatum& rd, int d, const Bidegree& deg, const WindowPolicy& policy,
                       GeneratorFamily family = GeneratorFamily::Root);

/// Slice of Q[Lambda] (x) Q[y] modulo sum_alpha sum_{k<=d} (1-x^alpha^vee)^k ker(d_alpha^k).
struct QuotientSlice {
  WindowedSlice submodule;
  std::size_t slice_dimension = 0;
  std::size_t quotient_dimension = 0;
};
QuotientSlice ordinary_homology_quotient_slice(const RootDatum& rd, int d, int y_degree, const WindowPolicy& policy);

/// Rank-1 affine flag module {1-s, 1-x, y} Q[Lambda] (x) Q[y] on basis
/// (lambda, w) y^b with variables (lam, w, y); w exponent 0 = 1, 1 = s.
VarSetPtr flag_vars();
WindowedSlice flag_rank1_module_slice(int y_degree, int lo, int hi, int margin = 2, int max_margin = 6);
/// y * (class at t = 0) as an element of the flag basis.
MultiPoly flag_class_times_y(const FormTuple& tuple);

/// Every product of d Weyl alternants x^lambda y^m of total y-degree
/// `y_degree` with support inside the window lies in jd_slice.
struct InclusionReport {
  bool pass = true;
  std::size_t checked = 0;
  bool stabilized = true;
};
InclusionReport anti_invariant_inclusion_check(const RootDatum& rd, int d, int y_degree, const WindowPolicy& policy);

/// Products of J^(d1) and J^(d2) slice vectors lie in J^(d1+d2).
struct ProductReport {
  bool pass = true;
  std::size_t checked = 0;
};
/// Polynomial type A, all bidegrees of each factor with a+b <= max_degree.
ProductReport graded_product_check(int n, int d1, int d2, int max_degree);
/// Laurent, factor windows `policy.x_window`, product window their sum.
ProductReport graded_product_check(const RootDatum& rd, int d1, int d2, int max_y_degree, const WindowPolicy& policy);

}  // namespace swb
