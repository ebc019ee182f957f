#include <algorithm>

#include "swb/poly.hpp"

namespace swb {
namespace {

bool has_negative_exponent(const MultiPoly& p) {
  for (const auto& [e, c] : p.terms())
    for (int v : e)
      if (v < 0) return true;
  return false;
}

MultiPoly normalized(MultiPoly p) {
  if (p.is_zero()) return p;
  Rational lead = p.trailing_term().second;
  p *= 1 / lead;
  return p;
}

// Coefficients of p viewed as a univariate polynomial in `var`.
std::map<int, MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    auto it = out.try_emplace(e[var], MultiPoly(p.vars())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly leading_coefficient_in(const MultiPoly& p, std::size_t var) {
  const int d = p.degree_in(var);
  MultiPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != d) continue;
    Exponent rest = e;
    rest[var] = 0;
    out.add_term(rest, c);
  }
  return out;
}

std::optional<std::size_t> first_active_variable(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = a.vars()->size();
  for (std::size_t v = 0; v < n; ++v)
    if ((!a.is_zero() && a.degree_in(v) > 0) || (!b.is_zero() && b.degree_in(v) > 0)) return v;
  return std::nullopt;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.vars());
  for (const auto& [k, coeff] : coefficients_in(p, var)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Scale to integer coefficients with no common factor; keeps the
// pseudo-remainder sequence from growing its coefficients without bound.
MultiPoly integer_primitive(MultiPoly p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  p *= make_rational(den, num);
  return p;
}

MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  auto q = divide_exact(p, content_in(p, var));
  if (!q) throw Error("internal: content does not divide polynomial");
  return integer_primitive(std::move(*q));
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const MultiPoly lb = leading_coefficient_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    MultiPoly la = leading_coefficient_in(a, var);
    Exponent shift(a.vars()->size(), 0);
    shift[var] = da - db;
    a = lb * a - la * b.shifted(shift);
  }
  return a;
}

}  // namespace

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (has_negative_exponent(a) || has_negative_exponent(b))
    throw Error("exact division needs nonnegative exponents");
  MultiPoly quotient(a.vars());
  MultiPoly rem = a;
  const auto& [eb, cb] = b.leading_term();
  Exponent diff(eb.size());
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading_term();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = er[i] - eb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    Rational c = cr / cb;
    quotient.add_term(diff, c);
    rem -= b.shifted(diff) * c;
  }
  return quotient;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  auto var = first_active_variable(a, b);
  if (!var) return MultiPoly::constant(a.vars(), 1);

  MultiPoly ca = content_in(a, *var);
  MultiPoly cb = content_in(b, *var);
  MultiPoly c = gcd(ca, cb);

  MultiPoly pa = integer_primitive(*divide_exact(a, ca));
  MultiPoly pb = integer_primitive(*divide_exact(b, cb));
  if (pa.degree_in(*var) < pb.degree_in(*var)) std::swap(pa, pb);

  while (!pb.is_zero() && pb.degree_in(*var) > 0) {
    MultiPoly r = pseudo_remainder(pa, pb, *var);
    pa = std::move(pb);
    pb = primitive_part_in(r, *var);
  }
  MultiPoly g = pb.is_zero() ? primitive_part_in(pa, *var) : MultiPoly::constant(a.vars(), 1);
  return normalized(c * g);
}

}  // namespace swb
