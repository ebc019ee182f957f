#include <algorithm>
#include <set>

#include "swb/arrangement.hpp"

namespace swb {

namespace {

MultiPoly x_power(const PolyRing& ring, const IntVector& lambda) {
  Exponent e(ring.size(), 0);
  for (int i = 0; i < ring.rank; ++i) e[ring.x(i)] = lambda[i];
  return MultiPoly::monomial(ring.vars, e);
}

// Directional derivative along alpha^vee on the y-variables.
MultiPoly derivative_along(const RootDatum& rd, const PolyRing& ring, std::size_t root, const MultiPoly& f) {
  const IntVector dir = rd.derivative_direction(root);
  MultiPoly out = ring.zero();
  for (int i = 0; i < ring.rank; ++i)
    if (dir[i] != 0) out += f.derivative(ring.y(i)) * Rational(dir[i]);
  return out;
}

Window origin(int rank) { return Window::cube(static_cast<std::size_t>(rank), 0, 0); }

bool support_inside(const PolyRing& ring, const MultiPoly& p, const Window& w) {
  std::vector<int> lam(ring.rank);
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < ring.rank; ++i) lam[i] = e[ring.x(i)];
    if (!w.contains(lam)) return false;
  }
  return true;
}

GradedSlice span_restricted(const BasisPtr& target, const std::vector<MultiPoly>& polys) {
  std::vector<Exponent> monos = target->monomials();
  std::set<Exponent> seen(monos.begin(), monos.end());
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms())
      if (seen.insert(e).second) monos.push_back(e);
  auto big = make_basis(target->vars(), std::move(monos));
  return GradedSlice::span_polys(big, polys).restrict_to(target);
}

template <class At>
WindowedSlice stabilise(int margin, int max_margin, At&& at) {
  GradedSlice cur = at(margin);
  for (int m = margin; m < max_margin; ++m) {
    GradedSlice next = at(m + 1);
    if (next.rank() == cur.rank()) return {std::move(cur), m, true};
    cur = std::move(next);
  }
  return {std::move(cur), max_margin, false};
}

}  // namespace

QuotientSlice ordinary_homology_quotient_slice(const RootDatum& rd, int d, int y_degree, const WindowPolicy& policy) {
  if (d < 0 || y_degree < 0) throw Error("invalid quotient slice request");
  const PolyRing ring = laurent_ring(rd);
  auto target = make_basis(ring, Bidegree::homological(y_degree), policy.x_window);

  // Kernels of d_alpha^k on the pure y-slice.
  std::vector<std::pair<MultiPoly, std::vector<MultiPoly>>> pieces;  // ((1-x^a)^k, kernel basis)
  auto ybasis = make_basis(ring, Bidegree::homological(y_degree), origin(rd.rank));
  for (std::size_t r = 0; r < rd.roots.size(); ++r) {
    const MultiPoly g = ring.one() - x_power(ring, rd.roots[r].coroot);
    for (int k = 1; k <= d; ++k) {
      std::vector<MultiPoly> ker;
      if (y_degree < k) {
        for (const auto& m : ybasis->monomials()) ker.push_back(MultiPoly::monomial(ring.vars, m));
      } else {
        auto tbasis = make_basis(ring, Bidegree::homological(y_degree - k), origin(rd.rank));
        ker = kernel_of(ybasis, *tbasis, [&](MultiPoly f) {
                for (int s = 0; s < k; ++s) f = derivative_along(rd, ring, r, f);
                return f;
              }).row_polys();
      }
      pieces.emplace_back(g.pow(static_cast<unsigned>(k)), std::move(ker));
    }
  }

  auto at = [&](int margin) {
    std::vector<MultiPoly> polys;
    for (const auto& lam : policy.x_window.enlarged(margin).points()) {
      const MultiPoly xl = x_power(ring, lam);
      for (const auto& [g, ker] : pieces) {
        const MultiPoly gx = g * xl;
        for (const auto& kappa : ker) polys.push_back(gx * kappa);
      }
    }
    return span_restricted(target, polys);
  };
  QuotientSlice q;
  q.submodule = d == 0 ? WindowedSlice{GradedSlice::zero(target), policy.margin, true}
                       : stabilise(policy.margin, policy.max_margin, at);
  q.slice_dimension = target->size();
  q.quotient_dimension = target->size() - q.submodule.slice.rank();
  return q;
}

VarSetPtr flag_vars() { return make_vars({"lam", "w", "y"}, {true, false, false}); }

WindowedSlice flag_rank1_module_slice(int y_degree, int lo, int hi, int margin, int max_margin) {
  if (lo > hi || y_degree < 0) throw Error("invalid flag module slice request");
  auto vars = flag_vars();
  std::vector<Exponent> monos;
  for (int k = lo; k <= hi; ++k)
    for (int w = 0; w <= 1; ++w) monos.push_back({k, w, y_degree});
  std::sort(monos.begin(), monos.end(), MonomialLess{});
  auto target = make_basis(vars, monos);
  auto elt = [&](int k, int w) { return MultiPoly::monomial(vars, {k, w, y_degree}); };
  auto at = [&](int m) {
    std::vector<MultiPoly> polys;
    for (int k = lo - m; k <= hi + m; ++k) {
      polys.push_back(elt(k, 0) - elt(k, 1));      // (1 - s) (k, 1)
      polys.push_back(elt(k, 0) - elt(k + 1, 0));  // (1 - x) (k, 1)
      if (y_degree >= 1) polys.push_back(elt(k, 0));  // y (k, 1)
    }
    return span_restricted(target, polys);
  };
  return stabilise(margin, max_margin, at);
}

MultiPoly flag_class_times_y(const FormTuple& tuple) {
  auto vars = flag_vars();
  MultiPoly out(vars);
  for (const auto& [p, f] : tuple) {
    if (p.size() != 2) throw Error("flag classes live on (k, w) fixed points");
    // num(y, t=0) * y / prod(c y)
    MultiPoly num = f.num.evaluate(1, 0);
    Rational scale = 1;
    for (const auto& c : f.den) {
      if (is_zero(c.y[0])) throw Error("residual t-pole in " + c.to_string());
      scale /= c.y[0];
    }
    const int shift = 1 - static_cast<int>(f.den.size());
    for (const auto& [e, c] : num.terms()) {
      if (e[0] + shift < 0) throw Error("y times the class is not polynomial at t = 0");
      out.add_term({p[0], p[1], e[0] + shift}, c * scale);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

MultiPoly weyl_alternant(const PolyRing& ring, const std::vector<WeylElement>& group, const IntVector& lambda,
                         const IntVector& m) {
  MultiPoly out = ring.zero();
  for (const auto& w : group) {
    IntVector wl(ring.rank, 0);
    for (int i = 0; i < ring.rank; ++i)
      for (int j = 0; j < ring.rank; ++j) wl[i] += w.on_lattice[i][j] * lambda[j];
    MultiPoly term = x_power(ring, wl);
    for (int i = 0; i < ring.rank; ++i) {
      if (m[i] == 0) continue;
      MultiPoly wy = ring.zero();
      for (int j = 0; j < ring.rank; ++j)
        if (w.on_forms[j][i] != 0) wy += ring.yvar(j) * Rational(w.on_forms[j][i]);
      term *= wy.pow(static_cast<unsigned>(m[i]));
    }
    out += term * Rational(w.sign);
  }
  return out;
}

std::vector<IntVector> y_exponents(int rank, int degree) {
  PolyRing yring = PolyRing::make(rank, false);
  std::vector<IntVector> out;
  for (const auto& e : slice_monomials(yring, Bidegree::algebraic(0, degree))) out.emplace_back(e.begin() + rank, e.end());
  return out;
}

}  // namespace

InclusionReport anti_invariant_inclusion_check(const RootDatum& rd, int d, int y_degree, const WindowPolicy& policy) {
  if (rd.rank > 2) throw Error("anti-invariant inclusion check supports rank <= 2");
  if (d < 1) throw Error("d must be positive");
  const PolyRing ring = laurent_ring(rd);
  const auto group = weyl_group(rd);
  const auto points = policy.x_window.points();

  // Alternants by y-degree, deduplicated up to scalars through a span.
  std::vector<std::vector<MultiPoly>> alts(static_cast<std::size_t>(y_degree) + 1);
  for (int b = 0; b <= y_degree; ++b) {
    auto basis = make_basis(ring, Bidegree::homological(b), policy.x_window);
    std::vector<MultiPoly> found;
    for (const auto& lam : points)
      for (const auto& m : y_exponents(rd.rank, b)) {
        MultiPoly a = weyl_alternant(ring, group, lam, m);
        if (!a.is_zero() && support_inside(ring, a, policy.x_window)) found.push_back(std::move(a));
      }
    alts[b] = GradedSlice::span_polys(basis, found).row_polys();
  }

  // Products of d alternants with total y-degree y_degree.
  std::vector<MultiPoly> products;
  std::function<void(int, int, MultiPoly)> rec = [&](int left, int deg_left, MultiPoly acc) {
    if (left == 0) {
      if (deg_left == 0 && support_inside(ring, acc, policy.x_window)) products.push_back(std::move(acc));
      return;
    }
    for (int b = 0; b <= deg_left; ++b)
      for (const auto& a : alts[b]) rec(left - 1, deg_left - b, acc * a);
  };
  rec(d, y_degree, ring.one());

  InclusionReport report;
  if (products.empty()) return report;
  WindowedSlice j = jd_slice(rd, d, Bidegree::homological(y_degree), policy);
  report.stabilized = j.stabilized;
  for (const auto& p : products) {
    ++report.checked;
    if (!j.slice.contains(p)) {
      report.pass = false;
      break;
    }
  }
  return report;
}

ProductReport graded_product_check(int n, int d1, int d2, int max_degree) {
  const PolyRing ring = type_a_ring(n);
  std::map<std::tuple<int, int, int>, GradedSlice> cache;
  auto j = [&](int d, int a, int b) -> const GradedSlice& {
    auto key = std::make_tuple(d, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, jd_slice(ring, d, a, b)).first;
    return it->second;
  };
  ProductReport report;
  for (int s1 = 0; s1 <= max_degree; ++s1)
    for (int b1 = 0; b1 <= s1; ++b1)
      for (int s2 = 0; s1 + s2 <= max_degree; ++s2)
        for (int b2 = 0; b2 <= s2; ++b2) {
          const int a1 = s1 - b1, a2 = s2 - b2;
          const auto lhs = j(d1, a1, b1).row_polys();
          const auto rhs = j(d2, a2, b2).row_polys();
          if (lhs.empty() || rhs.empty()) continue;
          const GradedSlice& target = j(d1 + d2, a1 + a2, b1 + b2);
          for (const auto& f : lhs)
            for (const auto& g : rhs) {
              ++report.checked;
              if (!target.contains(f * g)) {
                report.pass = false;
                return report;
              }
            }
        }
  return report;
}

ProductReport graded_product_check(const RootDatum& rd, int d1, int d2, int max_y_degree, const WindowPolicy& policy) {
  const PolyRing ring = laurent_ring(rd);
  WindowPolicy doubled = policy;
  doubled.margin = std::max(policy.margin, d1 + d2);
  doubled.max_margin = std::max(policy.max_margin, doubled.margin + 1);
  for (std::size_t i = 0; i < doubled.x_window.dim(); ++i) {
    doubled.x_window.lower[i] *= 2;
    doubled.x_window.upper[i] *= 2;
  }
  auto factor = [&](int d, int b) {
    if (d == 0) return GradedSlice::full(make_basis(ring, Bidegree::homological(b), policy.x_window)).row_polys();
    return jd_slice(rd, d, Bidegree::homological(b), policy).slice.row_polys();
  };
  ProductReport report;
  for (int b = 0; b <= max_y_degree; ++b) {
    const GradedSlice target = jd_slice(rd, d1 + d2, Bidegree::homological(b), doubled).slice;
    for (int b1 = 0; b1 <= b; ++b1) {
      const auto lhs = factor(d1, b1);
      const auto rhs = factor(d2, b - b1);
      for (const auto& f : lhs)
        for (const auto& g : rhs) {
          ++report.checked;
          if (!target.contains(f * g)) {
            report.pass = false;
            return report;
          }
        }
    }
  }
  return report;
}

}  // namespace swb
