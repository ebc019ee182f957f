#pragma once

#include <string>
#include <vector>

#include "swb/serialize.hpp"
#include "swb/slice.hpp"

namespace swb {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

struct PositiveRoot {
  IntVector form;    ///< y_alpha as an integer vector over the y-basis
  IntVector coroot;  ///< alpha^vee in the lattice basis
};

/// Root datum of rank r. The pairing between characters (y-basis) and
/// cocharacters (lattice basis) is <chi, lambda> = chi^T P lambda.
struct RootDatum {
  std::string label;
  int rank = 0;
  IntMatrix pairing;
  std::vector<PositiveRoot> roots;
  std::vector<IntMatrix> reflections;  ///< s_alpha acting on the lattice, one per positive root
  int coxeter_number = 0;

  int pair(const IntVector& form, const IntVector& lambda) const;
  /// s_alpha(lambda) = lambda - <alpha, lambda> alpha^vee
  IntVector reflect_lattice(std::size_t root, const IntVector& lambda) const;
  /// Dual action on characters: chi - <chi, alpha^vee> alpha
  IntVector reflect_form(std::size_t root, const IntVector& chi) const;
  /// Coefficient vector of the derivative along alpha^vee: d/dalpha y_i.
  IntVector derivative_direction(std::size_t root) const;
};

/// Supported labels: GL, SL (with n >= 2), A1, A1xA1, A2, B2, G2.
RootDatum build_root_datum(const std::string& label, int n = 0);

/// Element of the Weyl group as its matrices on the lattice and on forms.
struct WeylElement {
  IntMatrix on_lattice;
  IntMatrix on_forms;
  int sign = 1;
};

/// Closure of the simple-root reflections under multiplication.
std::vector<WeylElement> weyl_group(const RootDatum& rd);

/// y_alpha as a polynomial in the y-variables of `ring`.
MultiPoly root_form(const PolyRing& ring, const IntVector& form);
/// Delta^d = prod over positive roots of y_alpha^d.
MultiPoly vandermonde(const RootDatum& rd, const PolyRing& ring, int d);
/// prod over positive roots of (1 - y^alpha); `ring` must have Laurent y.
MultiPoly ktheory_vandermonde(const RootDatum& rd, const PolyRing& ring);

Json to_json(const RootDatum& rd);

}  // namespace swb
