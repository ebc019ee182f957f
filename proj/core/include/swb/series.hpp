#pragma once

#include <map>
#include <string>
#include <vector>

#include "swb/poly.hpp"

namespace swb {

/// Ratio N/D of polynomials in one variable set, kept in normal form:
/// no negative exponents, gcd(N, D) = 1, and the smallest term of D (in the
/// canonical order) has coefficient 1. Two series are equal iff their
/// normal forms coincide.
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(MultiPoly num, MultiPoly den);
  explicit RationalSeries(MultiPoly num);

  static RationalSeries constant(VarSetPtr vars, const Rational& c);
  static RationalSeries variable(VarSetPtr vars, std::string_view name, int power = 1);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarSetPtr& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries& operator-=(const RationalSeries& o);
  RationalSeries& operator*=(const RationalSeries& o);
  RationalSeries& operator/=(const RationalSeries& o);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const RationalSeries& b) { return a *= b; }
  friend RationalSeries operator/(RationalSeries a, const RationalSeries& b) { return a /= b; }
  RationalSeries operator-() const;
  RationalSeries pow(int k) const;

  bool operator==(const RationalSeries& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalSeries& o) const { return !(*this == o); }

  /// Monomial change of variables; see MultiPoly::map_monomials.
  RationalSeries map_variables(VarSetPtr target, std::span<const Exponent> images) const;
  /// Convenience: substitute each named source variable by a monomial given
  /// as {target variable name -> exponent}. Unlisted variables keep their
  /// name in the target.
  RationalSeries substitute(VarSetPtr target, const std::map<std::string, std::map<std::string, int>>& images) const;

  /// Expansion as a power series in `var` through `order`: entry k is the
  /// coefficient of var^k (a polynomial in the other variables). Requires
  /// D|_{var=0} to be a nonzero constant.
  std::vector<MultiPoly> expand_in(std::size_t var, int order) const;
  std::vector<MultiPoly> expand_in(std::string_view var, int order) const;

  /// Expansion truncated to the box 0 <= e_i <= orders[i]. Requires D to
  /// have a nonzero constant term.
  MultiPoly expand(const std::vector<int>& orders) const;

  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_;
};

/// Drop every term with e_i > orders[i] for some i.
MultiPoly truncate(const MultiPoly& p, const std::vector<int>& orders);

}  // namespace swb
