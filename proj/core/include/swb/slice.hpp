#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "swb/poly.hpp"

namespace swb {

/// How a monomial's degree is computed.
///   Algebraic:   deg x_i = (1,0), deg y_i = (0,1), deg t = (0,1)
///   Curve:       deg x_i = (1,0), deg y_i = (1,2)   (points, homological degree)
///   Homological: deg x_i = (0,0), deg y_i = (0,1), deg t = (0,1)
///   Ungraded:    every monomial has degree (0,0); windows bound the slice
enum class Grading { Algebraic, Curve, Homological, Ungraded };

struct Bidegree {
  Grading grading = Grading::Algebraic;
  int first = 0;
  int second = 0;

  static Bidegree algebraic(int a, int b) { return {Grading::Algebraic, a, b}; }
  static Bidegree curve(int points, int degree) { return {Grading::Curve, points, degree}; }
  static Bidegree homological(int y_degree) { return {Grading::Homological, 0, y_degree}; }
  static Bidegree ungraded() { return {Grading::Ungraded, 0, 0}; }

  bool operator==(const Bidegree&) const = default;
};

/// Axis-aligned box of exponents, inclusive on both ends.
struct Window {
  std::vector<int> lower;
  std::vector<int> upper;

  static Window cube(std::size_t dim, int lo, int hi);
  std::size_t dim() const { return lower.size(); }
  bool contains(std::span<const int> point) const;
  Window enlarged(int by) const;
  std::vector<std::vector<int>> points() const;
  bool operator==(const Window&) const = default;
};

/// Ring Q[x_1^(±1)..x_r^(±1), y_1^(±1)..y_r^(±1), t] with variable order
/// (x..., y..., t).
struct PolyRing {
  int rank = 0;
  bool x_laurent = false;
  bool y_laurent = false;
  bool has_t = false;
  VarSetPtr vars;

  static PolyRing make(int rank, bool x_laurent, bool has_t = false, bool y_laurent = false);

  std::size_t x(int i) const { return static_cast<std::size_t>(i); }
  std::size_t y(int i) const { return static_cast<std::size_t>(rank + i); }
  std::size_t t() const { return static_cast<std::size_t>(2 * rank); }
  std::size_t size() const { return vars->size(); }

  MultiPoly zero() const { return MultiPoly(vars); }
  MultiPoly one() const { return MultiPoly::constant(vars, 1); }
  MultiPoly xvar(int i, int power = 1) const { return MultiPoly::variable(vars, x(i), power); }
  MultiPoly yvar(int i, int power = 1) const { return MultiPoly::variable(vars, y(i), power); }
  MultiPoly x_monomial(std::span<const int> lambda) const;

  std::pair<int, int> degree_of(const Exponent& e, Grading g) const;
};

/// Every monomial of the given degree, restricted to the windows, in the
/// canonical order. A window is mandatory for each Laurent block.
std::vector<Exponent> slice_monomials(const PolyRing& ring, const Bidegree& deg,
                                      const std::optional<Window>& x_window = std::nullopt,
                                      const std::optional<Window>& y_window = std::nullopt);

/// Ordered monomial basis of one slice.
class MonomialBasis {
 public:
  MonomialBasis(VarSetPtr vars, std::vector<Exponent> monomials);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& at(std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::optional<std::size_t> index_of(const Exponent& e) const;

 private:
  struct Hash {
    std::size_t operator()(const Exponent& e) const noexcept;
  };
  VarSetPtr vars_;
  std::vector<Exponent> monomials_;
  std::unordered_map<Exponent, std::size_t, Hash> index_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

BasisPtr make_basis(const PolyRing& ring, const Bidegree& deg, const std::optional<Window>& x_window = std::nullopt,
                    const std::optional<Window>& y_window = std::nullopt);
BasisPtr make_basis(VarSetPtr vars, std::vector<Exponent> monomials);

/// Sparse coordinate vector, sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_vector(const MonomialBasis& basis, const MultiPoly& p);
/// Like to_vector, but returns nullopt when p has support outside the basis.
std::optional<SparseVector> try_to_vector(const MonomialBasis& basis, const MultiPoly& p);
MultiPoly to_poly(const MonomialBasis& basis, const SparseVector& v);

/// Incremental Gaussian elimination over Q. Rows are kept normalised
/// (pivot 1) and reduced against every pivot known at insertion time;
/// finish() back-substitutes to reduced row-echelon form. Dimensions up to
/// kDenseThreshold use a dense scratch accumulator, larger ones a sparse one.
class RowReducer {
 public:
  static constexpr std::size_t kDenseThreshold = 4096;

  explicit RowReducer(std::size_t dimension);

  /// Returns true when v was independent of the rows inserted so far.
  bool insert(const SparseVector& v);
  /// Reduce v against the current rows without storing it.
  SparseVector reduce(const SparseVector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }

  std::vector<SparseVector> finish() &&;

 private:
  SparseVector reduce_dense(const SparseVector& v) const;
  SparseVector reduce_sparse(const SparseVector& v) const;

  std::size_t dimension_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index, or -1
  mutable std::vector<Rational> scratch_;
};

/// A subspace of one slice, stored as a matrix in reduced row-echelon form
/// over the slice's monomial basis. Immutable once built.
class GradedSlice {
 public:
  GradedSlice() = default;
  static GradedSlice zero(BasisPtr basis);
  static GradedSlice full(BasisPtr basis);
  static GradedSlice span(BasisPtr basis, std::span<const SparseVector> vectors);
  static GradedSlice span_polys(BasisPtr basis, std::span<const MultiPoly> polys);

  const BasisPtr& basis() const { return basis_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return basis_->size(); }
  std::size_t codimension() const { return dimension() - rank(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  std::vector<std::size_t> pivots() const;

  bool contains(const SparseVector& v) const;
  bool contains(const MultiPoly& p) const;
  std::vector<MultiPoly> row_polys() const;

  /// Basis of {w : <w, r> = 0 for every row r} under the standard pairing.
  std::vector<SparseVector> annihilator() const;

  /// Intersection with the coordinate subspace spanned by `sub`'s monomials,
  /// expressed in `sub`'s basis. Every monomial of `sub` must be in ours.
  GradedSlice restrict_to(BasisPtr sub) const;

  bool operator==(const GradedSlice& o) const;

 private:
  GradedSlice(BasisPtr basis, std::vector<SparseVector> rows) : basis_(std::move(basis)), rows_(std::move(rows)) {}

  BasisPtr basis_;
  std::vector<SparseVector> rows_;
};

GradedSlice subspace_sum(const GradedSlice& a, const GradedSlice& b);
GradedSlice subspace_intersect(const GradedSlice& a, const GradedSlice& b);
GradedSlice subspace_intersect(std::span<const GradedSlice> slices);

/// Kernel of the linear map sending source basis element i to images[i]
/// (a vector over `target`).
GradedSlice kernel(BasisPtr source, const MonomialBasis& target, std::span<const SparseVector> images);
/// Kernel of a linear operator given on polynomials.
template <class Map>
GradedSlice kernel_of(BasisPtr source, const MonomialBasis& target, Map&& apply) {
  std::vector<SparseVector> images;
  images.reserve(source->size());
  for (const auto& m : source->monomials()) images.push_back(to_vector(target, apply(MultiPoly::monomial(source->vars(), m))));
  return kernel(std::move(source), target, images);
}

}  // namespace swb
