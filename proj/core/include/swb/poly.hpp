#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swb/rational.hpp"

namespace swb {

using Exponent = std::vector<int>;

/// Canonical monomial order: ascending total degree, ties broken by
/// descending lexicographic order of the exponent vector. For variables
/// (x1, x2, y1, y2) the degree-(1,1) monomials come out as
/// x1y1, x1y2, x2y1, x2y2.
struct MonomialLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

/// Named variables of a polynomial ring. Laurent variables may carry
/// negative exponents; all others must stay nonnegative.
struct VarSet {
  std::vector<std::string> names;
  std::vector<bool> laurent;

  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool operator==(const VarSet& other) const { return names == other.names && laurent == other.laurent; }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names, std::vector<bool> laurent = {});

/// Multivariate (Laurent) polynomial with exact coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, MonomialLess>;

  MultiPoly() = default;
  explicit MultiPoly(VarSetPtr vars);

  static MultiPoly constant(VarSetPtr vars, const Rational& c);
  static MultiPoly variable(VarSetPtr vars, std::size_t index, int power = 1);
  static MultiPoly variable(VarSetPtr vars, std::string_view name, int power = 1);
  static MultiPoly monomial(VarSetPtr vars, Exponent exp, const Rational& c = 1);

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const { return coefficient(Exponent(vars_->size(), 0)); }
  void add_term(const Exponent& e, const Rational& c);

  /// Largest / smallest term in the canonical order. Precondition: nonzero.
  const TermMap::value_type& leading_term() const;
  const TermMap::value_type& trailing_term() const;

  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(unsigned k) const;
  MultiPoly shifted(const Exponent& by) const;  ///< multiply by the monomial x^by
  MultiPoly derivative(std::size_t var) const;

  /// Replace variable `var` by `value` (same variable set). Negative powers
  /// of `var` are only allowed when `value` is a single monomial.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly evaluate(std::size_t var, const Rational& value) const;

  /// Monomial change of variables into `target`: source variable i becomes
  /// the (Laurent) monomial images[i]. Covers renaming and embedding.
  MultiPoly map_monomials(VarSetPtr target, std::span<const Exponent> images) const;

  std::string to_string() const;

 private:
  void check_exponent(const Exponent& e) const;
  void require_same_ring(const MultiPoly& o) const;

  VarSetPtr vars_;
  TermMap terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
/// Both operands must have nonnegative exponents.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor over Q, normalised so that its trailing term
/// (smallest in the canonical order) has coefficient 1. gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Largest monomial dividing every term (componentwise minimum exponent).
Exponent monomial_content(const MultiPoly& p);

}  // namespace swb
