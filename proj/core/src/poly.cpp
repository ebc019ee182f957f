#include "swb/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace swb {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool MonomialLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

VarSetPtr make_vars(std::vector<std::string> names, std::vector<bool> laurent) {
  if (laurent.empty()) laurent.assign(names.size(), false);
  if (laurent.size() != names.size()) throw Error("laurent flags do not match variable count");
  auto v = std::make_shared<VarSet>();
  v->names = std::move(names);
  v->laurent = std::move(laurent);
  return v;
}

MultiPoly::MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error("polynomial without a variable set");
}

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponent(p.vars_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index, int power) {
  if (index >= vars->size()) throw Error("variable index out of range");
  Exponent e(vars->size(), 0);
  e[index] = power;
  return monomial(std::move(vars), std::move(e));
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::string_view name, int power) {
  auto idx = vars->index_of(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *idx, power);
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, Exponent exp, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(exp, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

void MultiPoly::check_exponent(const Exponent& e) const {
  if (e.size() != vars_->size()) throw Error("exponent arity does not match the variable set");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && !vars_->laurent[i])
      throw Error("negative exponent for polynomial variable '" + vars_->names[i] + "'");
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw Error("polynomials live in different rings");
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (swb::is_zero(c)) return;
  check_exponent(e);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (swb::is_zero(it->second)) terms_.erase(it);
  }
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return *terms_.rbegin();
}

const MultiPoly::TermMap::value_type& MultiPoly::trailing_term() const {
  if (terms_.empty()) throw Error("trailing term of zero polynomial");
  return *terms_.begin();
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    d = first ? e[var] : std::max(d, e[var]);
    first = false;
  }
  return d;
}

int MultiPoly::min_degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    d = first ? e[var] : std::min(d, e[var]);
    first = false;
  }
  return d;
}

int MultiPoly::total_degree() const { return terms_.empty() ? 0 : swb::total_degree(terms_.rbegin()->first); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  MultiPoly out(a.vars_);
  Exponent e(a.vars_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (is_zero(it->second)) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (swb::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  require_same_ring(o);
  return terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::shifted(const Exponent& by) const {
  if (by.size() != vars_->size()) throw Error("shift arity mismatch");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += by[i];
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  require_same_ring(value);
  const bool monomial_value = value.size() == 1;
  std::map<int, MultiPoly> powers;
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[var];
    if (k < 0 && !monomial_value) throw Error("cannot substitute a non-monomial into a negative power");
    auto it = powers.find(k);
    if (it == powers.end()) {
      MultiPoly pk(vars_);
      if (k >= 0) {
        pk = value.pow(static_cast<unsigned>(k));
      } else {
        const auto& [ve, vc] = *value.terms_.begin();
        Exponent inv(ve.size());
        for (std::size_t i = 0; i < ve.size(); ++i) inv[i] = ve[i] * k;
        Rational scale = 1;
        for (int j = 0; j < -k; ++j) scale /= vc;
        pk = monomial(vars_, inv, scale);
      }
      it = powers.emplace(k, std::move(pk)).first;
    }
    Exponent rest = e;
    rest[var] = 0;
    out += it->second.shifted(rest) * c;
  }
  return out;
}

MultiPoly MultiPoly::evaluate(std::size_t var, const Rational& value) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[var];
    if (k < 0 && swb::is_zero(value)) throw Error("evaluating a negative power at zero");
    Rational f = 1;
    Rational base = k >= 0 ? value : 1 / value;
    for (int j = 0; j < std::abs(k); ++j) f *= base;
    Exponent rest = e;
    rest[var] = 0;
    out.add_term(rest, c * f);
  }
  return out;
}

MultiPoly MultiPoly::map_monomials(VarSetPtr target, std::span<const Exponent> images) const {
  if (images.size() != vars_->size()) throw Error("monomial map arity mismatch");
  for (const auto& img : images)
    if (img.size() != target->size()) throw Error("monomial image arity mismatch");
  MultiPoly out(target);
  Exponent f(target->size());
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        for (std::size_t j = 0; j < f.size(); ++j) f[j] += e[i] * images[i][j];
    out.add_term(f, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      os << swb::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_->names[i];
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Exponent monomial_content(const MultiPoly& p) {
  Exponent m(p.vars()->size(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

}  // namespace swb
