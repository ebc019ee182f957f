#include "swb/series.hpp"

#include <algorithm>

namespace swb {

RationalSeries::RationalSeries(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational series with zero denominator");
  if (!(*num_.vars() == *den_.vars())) throw Error("numerator and denominator live in different rings");
  normalize();
}

RationalSeries::RationalSeries(MultiPoly num)
    : RationalSeries(num, MultiPoly::constant(num.vars(), 1)) {}

RationalSeries RationalSeries::constant(VarSetPtr vars, const Rational& c) {
  return RationalSeries(MultiPoly::constant(vars, c), MultiPoly::constant(vars, 1));
}

RationalSeries RationalSeries::variable(VarSetPtr vars, std::string_view name, int power) {
  return RationalSeries(MultiPoly::variable(vars, name, power), MultiPoly::constant(vars, 1));
}

void RationalSeries::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(den_.vars(), 1);
    return;
  }
  // Clear negative exponents with one monomial applied to both sides.
  Exponent a = monomial_content(num_);
  Exponent b = monomial_content(den_);
  Exponent shift(a.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    shift[i] = std::max(0, -std::min(a[i], b[i]));
    any = any || shift[i] != 0;
  }
  if (any) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  MultiPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const Rational lead = den_.trailing_term().second;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  if (den_ == o.den_) {
    *this = RationalSeries(num_ + o.num_, den_);
  } else {
    *this = RationalSeries(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) { return *this += -o; }

RationalSeries& RationalSeries::operator*=(const RationalSeries& o) {
  *this = RationalSeries(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalSeries& RationalSeries::operator/=(const RationalSeries& o) {
  if (o.is_zero()) throw Error("division by the zero series");
  *this = RationalSeries(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalSeries RationalSeries::pow(int k) const {
  if (k < 0) return RationalSeries(den_.pow(static_cast<unsigned>(-k)), num_.pow(static_cast<unsigned>(-k)));
  return RationalSeries(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RationalSeries RationalSeries::map_variables(VarSetPtr target, std::span<const Exponent> images) const {
  return RationalSeries(num_.map_monomials(target, images), den_.map_monomials(target, images));
}

RationalSeries RationalSeries::substitute(VarSetPtr target,
                                          const std::map<std::string, std::map<std::string, int>>& images) const {
  std::vector<Exponent> img;
  for (const auto& name : vars()->names) {
    Exponent e(target->size(), 0);
    auto it = images.find(name);
    if (it == images.end()) {
      auto idx = target->index_of(name);
      if (!idx) throw Error("variable '" + name + "' has no image in the target ring");
      e[*idx] = 1;
    } else {
      for (const auto& [tname, power] : it->second) {
        auto idx = target->index_of(tname);
        if (!idx) throw Error("unknown target variable '" + tname + "'");
        e[*idx] += power;
      }
    }
    img.push_back(std::move(e));
  }
  return map_variables(std::move(target), img);
}

namespace {

std::map<int, MultiPoly> slices_in(const MultiPoly& p, std::size_t var) {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    out.try_emplace(e[var], MultiPoly(p.vars())).first->second.add_term(rest, c);
  }
  return out;
}

}  // namespace

std::vector<MultiPoly> RationalSeries::expand_in(std::size_t var, int order) const {
  if (var >= vars()->size()) throw Error("expansion variable out of range");
  auto n = slices_in(num_, var);
  auto d = slices_in(den_, var);
  auto d0 = d.find(0);
  if (d0 == d.end() || !d0->second.is_constant() || d0->second.is_zero())
    throw Error("series expansion needs a denominator with nonzero constant term in " + vars()->names[var]);
  const Rational inv = 1 / d0->second.terms().begin()->second;
  std::vector<MultiPoly> s;
  s.reserve(static_cast<std::size_t>(std::max(order + 1, 0)));
  for (int k = 0; k <= order; ++k) {
    MultiPoly acc(vars());
    if (auto it = n.find(k); it != n.end()) acc = it->second;
    for (const auto& [i, di] : d) {
      if (i == 0 || i > k) continue;
      acc -= di * s[static_cast<std::size_t>(k - i)];
    }
    s.push_back(acc * inv);
  }
  return s;
}

std::vector<MultiPoly> RationalSeries::expand_in(std::string_view var, int order) const {
  auto idx = vars()->index_of(var);
  if (!idx) throw Error("unknown variable '" + std::string(var) + "'");
  return expand_in(*idx, order);
}

MultiPoly truncate(const MultiPoly& p, const std::vector<int>& orders) {
  if (orders.size() != p.vars()->size()) throw Error("truncation orders do not match the variable count");
  MultiPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (std::size_t i = 0; i < e.size() && keep; ++i) keep = e[i] <= orders[i];
    if (keep) out.add_term(e, c);
  }
  return out;
}

MultiPoly RationalSeries::expand(const std::vector<int>& orders) const {
  const std::size_t nv = vars()->size();
  if (orders.size() != nv) throw Error("truncation orders do not match the variable count");
  const Rational d0 = den_.coefficient(Exponent(nv, 0));
  if (swb::is_zero(d0)) throw Error("series expansion needs a denominator with nonzero constant term");
  const MultiPoly n = truncate(num_, orders);
  const MultiPoly d = truncate(den_, orders);

  // Walk the box in the canonical order; every shift by a nonconstant
  // denominator term lands on an earlier monomial.
  std::vector<Exponent> box{Exponent(nv, 0)};
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<Exponent> next;
    for (const auto& e : box)
      for (int k = 0; k <= orders[v]; ++k) {
        Exponent f = e;
        f[v] = k;
        next.push_back(std::move(f));
      }
    box = std::move(next);
  }
  std::sort(box.begin(), box.end(), MonomialLess{});

  std::map<Exponent, Rational, MonomialLess> s;
  Exponent m(nv);
  for (const auto& e : box) {
    Rational acc = n.coefficient(e);
    for (const auto& [de, dc] : d.terms()) {
      bool ok = total_degree(de) > 0;
      for (std::size_t i = 0; i < nv && ok; ++i) {
        m[i] = e[i] - de[i];
        ok = m[i] >= 0;
      }
      if (!ok) continue;
      auto it = s.find(m);
      if (it != s.end()) acc -= dc * it->second;
    }
    if (!swb::is_zero(acc)) s.emplace(e, acc / d0);
  }
  MultiPoly out(vars());
  for (const auto& [e, c] : s) out.add_term(e, c);
  return out;
}

std::string RationalSeries::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace swb
