#include "swb/slice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace swb {

Window Window::cube(std::size_t dim, int lo, int hi) {
  return Window{std::vector<int>(dim, lo), std::vector<int>(dim, hi)};
}

bool Window::contains(std::span<const int> point) const {
  if (point.size() != lower.size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (point[i] < lower[i] || point[i] > upper[i]) return false;
  return true;
}

Window Window::enlarged(int by) const {
  Window w = *this;
  for (auto& v : w.lower) v -= by;
  for (auto& v : w.upper) v += by;
  return w;
}

std::vector<std::vector<int>> Window::points() const {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) return out;
  std::vector<int> p = lower;
  while (true) {
    out.push_back(p);
    std::size_t i = p.size();
    while (i > 0) {
      --i;
      if (p[i] < upper[i]) {
        ++p[i];
        for (std::size_t j = i + 1; j < p.size(); ++j) p[j] = lower[j];
        break;
      }
      if (i == 0) return out;
    }
    if (p.empty()) return out;
  }
}

PolyRing PolyRing::make(int rank, bool x_laurent, bool has_t, bool y_laurent) {
  if (rank < 1) throw Error("ring rank must be positive");
  std::vector<std::string> names;
  std::vector<bool> laurent;
  for (int i = 1; i <= rank; ++i) {
    names.push_back("x" + std::to_string(i));
    laurent.push_back(x_laurent);
  }
  for (int i = 1; i <= rank; ++i) {
    names.push_back("y" + std::to_string(i));
    laurent.push_back(y_laurent);
  }
  if (has_t) {
    names.push_back("t");
    laurent.push_back(false);
  }
  PolyRing r;
  r.rank = rank;
  r.x_laurent = x_laurent;
  r.y_laurent = y_laurent;
  r.has_t = has_t;
  r.vars = make_vars(std::move(names), std::move(laurent));
  return r;
}

MultiPoly PolyRing::x_monomial(std::span<const int> lambda) const {
  Exponent e(size(), 0);
  for (int i = 0; i < rank; ++i) e[x(i)] = lambda[i];
  return MultiPoly::monomial(vars, std::move(e));
}

std::pair<int, int> PolyRing::degree_of(const Exponent& e, Grading g) const {
  int xs = 0, ys = 0;
  for (int i = 0; i < rank; ++i) {
    xs += e[x(i)];
    ys += e[y(i)];
  }
  const int ts = has_t ? e[t()] : 0;
  switch (g) {
    case Grading::Algebraic: return {xs, ys + ts};
    case Grading::Curve: return {xs + ys, 2 * ys};
    case Grading::Homological: return {0, ys + ts};
    case Grading::Ungraded: return {0, 0};
  }
  return {0, 0};
}

namespace {

// All nonnegative integer vectors of length `len` summing to `total`.
void compositions(int len, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (len == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (len == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur.push_back(e);
    compositions(len - 1, total - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int len, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur;
  compositions(len, total, cur, out);
  return out;
}

std::vector<std::vector<int>> windowed(const Window& w, std::optional<int> sum) {
  auto pts = w.points();
  if (!sum) return pts;
  std::vector<std::vector<int>> out;
  for (auto& p : pts)
    if (total_degree(p) == *sum) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<Exponent> slice_monomials(const PolyRing& ring, const Bidegree& deg, const std::optional<Window>& x_window,
                                      const std::optional<Window>& y_window) {
  const int r = ring.rank;
  if (x_window && x_window->dim() != static_cast<std::size_t>(r)) throw Error("x-window dimension mismatch");
  if (y_window && y_window->dim() != static_cast<std::size_t>(r)) throw Error("y-window dimension mismatch");
  if (ring.x_laurent && !x_window) throw Error("Laurent x-variables need an explicit window");
  if (ring.y_laurent && !y_window) throw Error("Laurent y-variables need an explicit window");
  if (deg.grading == Grading::Curve && ring.has_t) throw Error("curve grading is not defined with t");

  // Required x-degree and y-degree (y-degree includes t).
  std::optional<int> xdeg, ydeg;
  switch (deg.grading) {
    case Grading::Algebraic:
      xdeg = deg.first;
      ydeg = deg.second;
      break;
    case Grading::Curve:
      if (deg.second % 2 != 0) return {};
      ydeg = deg.second / 2;
      xdeg = deg.first - *ydeg;
      break;
    case Grading::Homological:
      ydeg = deg.second;
      break;
    case Grading::Ungraded:
      break;
  }
  if (!x_window && !xdeg) throw Error("unbounded slice: polynomial x-block needs a degree or a window");
  if (!y_window && !ydeg) throw Error("unbounded slice: y-block needs a degree or a window");

  std::vector<std::vector<int>> xparts;
  if (x_window) {
    Window w = *x_window;
    if (!ring.x_laurent)
      for (auto& lo : w.lower) lo = std::max(lo, 0);
    xparts = windowed(w, xdeg);
  } else {
    xparts = compositions(r, *xdeg);
  }

  // y-block together with t.
  std::vector<std::vector<int>> yparts;
  const int ylen = r + (ring.has_t ? 1 : 0);
  if (y_window) {
    Window w = *y_window;
    if (!ring.y_laurent)
      for (auto& lo : w.lower) lo = std::max(lo, 0);
    if (ring.has_t) throw Error("y-windows are not supported together with t");
    yparts = windowed(w, ydeg);
  } else {
    yparts = compositions(ylen, *ydeg);
  }

  std::vector<Exponent> out;
  out.reserve(xparts.size() * yparts.size());
  for (const auto& xp : xparts) {
    for (const auto& yp : yparts) {
      Exponent e;
      e.reserve(ring.size());
      e.insert(e.end(), xp.begin(), xp.end());
      e.insert(e.end(), yp.begin(), yp.end());
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

std::size_t MonomialBasis::Hash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : e) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(v))) * 1099511628211ull;
  return h;
}

MonomialBasis::MonomialBasis(VarSetPtr vars, std::vector<Exponent> monomials)
    : vars_(std::move(vars)), monomials_(std::move(monomials)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].size() != vars_->size()) throw Error("basis monomial arity mismatch");
    if (!index_.emplace(monomials_[i], i).second) throw Error("duplicate monomial in basis");
  }
}

std::optional<std::size_t> MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisPtr make_basis(const PolyRing& ring, const Bidegree& deg, const std::optional<Window>& x_window,
                    const std::optional<Window>& y_window) {
  return std::make_shared<const MonomialBasis>(ring.vars, slice_monomials(ring, deg, x_window, y_window));
}

BasisPtr make_basis(VarSetPtr vars, std::vector<Exponent> monomials) {
  return std::make_shared<const MonomialBasis>(std::move(vars), std::move(monomials));
}

std::optional<SparseVector> try_to_vector(const MonomialBasis& basis, const MultiPoly& p) {
  SparseVector v;
  v.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    auto idx = basis.index_of(e);
    if (!idx) return std::nullopt;
    v.emplace_back(*idx, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

SparseVector to_vector(const MonomialBasis& basis, const MultiPoly& p) {
  auto v = try_to_vector(basis, p);
  if (!v) throw Error("polynomial " + p.to_string() + " has support outside the slice basis");
  return *std::move(v);
}

MultiPoly to_poly(const MonomialBasis& basis, const SparseVector& v) {
  MultiPoly p(basis.vars());
  for (const auto& [i, c] : v) p.add_term(basis.at(i), c);
  return p;
}

// ---------------------------------------------------------------------------
// RowReducer

RowReducer::RowReducer(std::size_t dimension) : dimension_(dimension), pivot_row_(dimension, -1) {
  if (dimension_ <= kDenseThreshold) scratch_.assign(dimension_, Rational(0));
}

SparseVector RowReducer::reduce_dense(const SparseVector& v) const {
  if (v.empty()) return {};
  std::size_t lo = dimension_, hi = 0;
  for (const auto& [i, c] : v) {
    scratch_[i] = c;
    lo = std::min(lo, i);
    hi = std::max(hi, i);
  }
  for (std::size_t col = lo; col < dimension_; ++col) {
    if (col > hi) break;
    if (sgn(scratch_[col]) == 0) continue;
    const auto r = pivot_row_[col];
    if (r < 0) continue;
    const Rational f = scratch_[col];
    for (const auto& [j, c] : rows_[static_cast<std::size_t>(r)]) {
      scratch_[j] -= f * c;
      hi = std::max(hi, j);
    }
  }
  SparseVector out;
  for (std::size_t col = lo; col <= hi && col < dimension_; ++col) {
    if (sgn(scratch_[col]) != 0) {
      out.emplace_back(col, std::move(scratch_[col]));
      scratch_[col] = 0;
    }
  }
  return out;
}

SparseVector RowReducer::reduce_sparse(const SparseVector& v) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, c] : v) acc.emplace(i, c);
  auto it = acc.begin();
  while (it != acc.end()) {
    const std::size_t col = it->first;
    const auto r = pivot_row_[col];
    if (r < 0 || sgn(it->second) == 0) {
      ++it;
      continue;
    }
    const Rational f = it->second;
    for (const auto& [j, c] : rows_[static_cast<std::size_t>(r)]) {
      auto [jt, inserted] = acc.try_emplace(j, 0);
      jt->second -= f * c;
    }
    it = acc.upper_bound(col);
  }
  SparseVector out;
  for (auto& [i, c] : acc)
    if (sgn(c) != 0) out.emplace_back(i, std::move(c));
  return out;
}

SparseVector RowReducer::reduce(const SparseVector& v) const {
  for (const auto& [i, c] : v)
    if (i >= dimension_) throw Error("vector index outside the slice");
  return dimension_ <= kDenseThreshold ? reduce_dense(v) : reduce_sparse(v);
}

bool RowReducer::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const Rational inv = 1 / r.front().second;
  for (auto& [i, c] : r) c *= inv;
  pivot_row_[r.front().first] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVector> RowReducer::finish() && {
  // Order by pivot, then clear entries above each pivot from the bottom up.
  std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  std::vector<std::ptrdiff_t> where(dimension_, -1);
  for (std::size_t r = 0; r < rows_.size(); ++r) where[rows_[r].front().first] = static_cast<std::ptrdiff_t>(r);
  for (std::size_t r = rows_.size(); r-- > 0;) {
    SparseVector& row = rows_[r];
    bool dirty = false;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (where[row[k].first] >= 0) {
        dirty = true;
        break;
      }
    if (!dirty) continue;
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, c] : row) acc.emplace(i, c);
    for (auto it = std::next(acc.begin()); it != acc.end();) {
      const auto p = where[it->first];
      if (p < 0 || sgn(it->second) == 0) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Rational f = it->second;
      for (const auto& [j, c] : rows_[static_cast<std::size_t>(p)]) {
        auto [jt, inserted] = acc.try_emplace(j, 0);
        jt->second -= f * c;
      }
      it = acc.upper_bound(col);
    }
    SparseVector cleaned;
    for (auto& [i, c] : acc)
      if (sgn(c) != 0) cleaned.emplace_back(i, std::move(c));
    row = std::move(cleaned);
  }
  return std::move(rows_);
}

// ---------------------------------------------------------------------------
// GradedSlice

GradedSlice GradedSlice::zero(BasisPtr basis) { return GradedSlice(std::move(basis), {}); }

GradedSlice GradedSlice::full(BasisPtr basis) {
  std::vector<SparseVector> rows;
  rows.reserve(basis->size());
  for (std::size_t i = 0; i < basis->size(); ++i) rows.push_back({{i, Rational(1)}});
  return GradedSlice(std::move(basis), std::move(rows));
}

GradedSlice GradedSlice::span(BasisPtr basis, std::span<const SparseVector> vectors) {
  RowReducer red(basis->size());
  for (const auto& v : vectors) {
    red.insert(v);
    if (red.rank() == basis->size()) break;
  }
  return GradedSlice(std::move(basis), std::move(red).finish());
}

GradedSlice GradedSlice::span_polys(BasisPtr basis, std::span<const MultiPoly> polys) {
  std::vector<SparseVector> vs;
  vs.reserve(polys.size());
  for (const auto& p : polys) vs.push_back(to_vector(*basis, p));
  return span(std::move(basis), vs);
}

std::vector<std::size_t> GradedSlice::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.front().first);
  return out;
}

bool GradedSlice::contains(const SparseVector& v) const {
  // Rows are in RREF: subtract v[pivot] * row for every pivot column.
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, c] : v) {
    if (i >= dimension()) throw Error("vector index outside the slice");
    acc.emplace(i, c);
  }
  for (const auto& row : rows_) {
    auto it = acc.find(row.front().first);
    if (it == acc.end() || sgn(it->second) == 0) continue;
    const Rational f = it->second;
    for (const auto& [j, c] : row) {
      auto [jt, inserted] = acc.try_emplace(j, 0);
      jt->second -= f * c;
    }
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return sgn(kv.second) == 0; });
}

bool GradedSlice::contains(const MultiPoly& p) const {
  auto v = try_to_vector(*basis_, p);
  return v && contains(*v);
}

std::vector<MultiPoly> GradedSlice::row_polys() const {
  std::vector<MultiPoly> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(to_poly(*basis_, r));
  return out;
}

std::vector<SparseVector> GradedSlice::annihilator() const {
  const std::size_t n = dimension();
  std::vector<bool> is_pivot(n, false);
  for (const auto& r : rows_) is_pivot[r.front().first] = true;
  // Column f of the RREF, as (pivot column, entry) pairs.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> column(n);
  for (const auto& r : rows_)
    for (std::size_t k = 1; k < r.size(); ++k) column[r[k].first].emplace_back(r.front().first, r[k].second);
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVector w;
    for (const auto& [p, c] : column[f]) w.emplace_back(p, -c);
    w.emplace_back(f, Rational(1));
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(w));
  }
  return out;
}

GradedSlice GradedSlice::restrict_to(BasisPtr sub) const {
  // Reorder columns so the monomials outside `sub` come first; rows whose
  // pivot falls among `sub`'s columns then vanish outside `sub`.
  const std::size_t n = dimension();
  std::vector<std::ptrdiff_t> sub_index(n, -1);
  for (std::size_t i = 0; i < sub->size(); ++i) {
    auto idx = basis_->index_of(sub->at(i));
    if (!idx) throw Error("restriction basis is not contained in the slice basis");
    sub_index[*idx] = static_cast<std::ptrdiff_t>(i);
  }
  const std::size_t outside = n - sub->size();
  std::vector<std::size_t> perm(n);
  std::size_t next_out = 0;
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = sub_index[i] >= 0 ? outside + static_cast<std::size_t>(sub_index[i]) : next_out++;

  RowReducer red(n);
  for (const auto& r : rows_) {
    SparseVector v;
    v.reserve(r.size());
    for (const auto& [i, c] : r) v.emplace_back(perm[i], c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    red.insert(v);
  }
  std::vector<SparseVector> kept;
  for (auto& r : std::move(red).finish()) {
    if (r.front().first < outside) continue;
    for (auto& [i, c] : r) i -= outside;
    kept.push_back(std::move(r));
  }
  return GradedSlice(std::move(sub), std::move(kept));
}

bool GradedSlice::operator==(const GradedSlice& o) const {
  return basis_->monomials() == o.basis_->monomials() && rows_ == o.rows_;
}

static void require_same_basis(const GradedSlice& a, const GradedSlice& b) {
  if (a.basis() != b.basis() && a.basis()->monomials() != b.basis()->monomials())
    throw Error("slices have different bases");
}

GradedSlice subspace_sum(const GradedSlice& a, const GradedSlice& b) {
  require_same_basis(a, b);
  std::vector<SparseVector> all = a.rows();
  all.insert(all.end(), b.rows().begin(), b.rows().end());
  return GradedSlice::span(a.basis(), all);
}

GradedSlice subspace_intersect(const GradedSlice& a, const GradedSlice& b) {
  std::array<GradedSlice, 2> pair{a, b};
  return subspace_intersect(pair);
}

GradedSlice subspace_intersect(std::span<const GradedSlice> slices) {
  if (slices.empty()) throw Error("intersection of no subspaces");
  for (const auto& s : slices) require_same_basis(slices.front(), s);
  // A ∩ B = ann(ann A + ann B).
  const BasisPtr& basis = slices.front().basis();
  RowReducer red(basis->size());
  for (const auto& s : slices)
    for (const auto& w : s.annihilator()) red.insert(w);
  GradedSlice dual = GradedSlice::span(basis, std::move(red).finish());
  return GradedSlice::span(basis, dual.annihilator());
}

GradedSlice kernel(BasisPtr source, const MonomialBasis& target, std::span<const SparseVector> images) {
  if (images.size() != source->size()) throw Error("kernel: one image per source basis element required");
  // Rows of the matrix are indexed by target coordinates; the kernel is
  // the annihilator of the row space.
  std::vector<SparseVector> rows(target.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [i, c] : images[j]) {
      if (i >= target.size()) throw Error("kernel: image index outside the target basis");
      rows[i].emplace_back(j, c);
    }
  GradedSlice row_space = GradedSlice::span(source, rows);
  return GradedSlice::span(source, row_space.annihilator());
}

}  // namespace swb
