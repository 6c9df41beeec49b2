#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mld/hilbert.hpp"
#include "mld/ideal_ops.hpp"
#include "mld/matrix.hpp"

namespace mld {

using RationalMatrix = std::vector<std::vector<Scalar>>;

/// Homogenize every generator with the new variable `t` (appended to the
/// ring), then saturate by t. Throws InvalidArgument if `t` is taken.
Ideal projective_closure(const Ideal& affine, const std::string& t);

struct DualVarietyResult {
  /// Eliminant in the dual coordinates. Dual coordinates reuse the names of
  /// the primal ones (P^m is identified with its dual).
  Ideal eliminant_ideal;
  bool is_hypersurface = false;
  /// Squarefree generator with a positive leading coefficient and integer
  /// coefficients with gcd 1.
  std::optional<Polynomial> defining_polynomial;
  std::optional<unsigned> degree;
  /// Multiplicity at [0 : ... : 0 : 1].
  std::optional<unsigned> multiplicity_at_p;
};

/// Dual of the projective variety V(I) by conormal elimination. I must be
/// homogeneous; irreducibility is trusted.
DualVarietyResult dual_variety(const Ideal& ideal);

/// Lowest total degree of g after moving p to [0 : ... : 0 : 1] and
/// dehomogenizing there. g must be homogeneous; p must be nonzero.
unsigned multiplicity_at(const Polynomial& g, std::span<const Scalar> p);

/// f with integer coefficients of content 1 and a positive leading term.
Polynomial primitive_normalized(const Polynomial& f);

struct SingularityReport {
  /// Charts z != 0; z = 0, y != 0; z = y = 0.
  std::array<mpz_class, 3> chart_contributions;
  mpz_class total = 0;
};

/// Sum of the Milnor numbers of the reduced plane curve V(F). F must be a
/// homogeneous polynomial in a ring of three variables (x, y, z in ring
/// order). Throws UnsupportedInput for non-isolated singularities.
SingularityReport milnor_sum_plane_curve(const Polynomial& f);

/// Names x11, x12, ..., xnn (i <= j) of the coordinates on symmetric n x n
/// matrices.
std::vector<std::string> symmetric_names(std::size_t n);
RingPtr symmetric_ring(std::size_t n);
/// The generic symmetric matrix in the coordinates of `ring`, whose first
/// n(n+1)/2 variables must follow symmetric_names(n).
PolyMatrix symbolic_symmetric(const RingPtr& ring, std::size_t n);

/// Checks that every matrix is n x n and symmetric. Returns n.
std::size_t validate_symmetric_basis(const std::vector<RationalMatrix>& basis);

/// sum_i v_i * basis[i] as a polynomial matrix in `ring`.
PolyMatrix linear_combination(const RingPtr& ring, const std::vector<RationalMatrix>& basis,
                              std::span<const Polynomial> coefficients);

/// Ideal of the closure of the inverses of the invertible matrices in the
/// span of `basis`, in the coordinates of symmetric_ring(n). Throws
/// InvalidArgument if the determinant vanishes on the span.
Ideal inverse_variety(const std::vector<RationalMatrix>& basis);
/// Same for an ideal of X in the coordinates of symmetric_ring(n).
Ideal inverse_variety(const Ideal& x, std::size_t n);

/// True iff the singular locus of X = V(I) lies inside V(F).
bool smoothness_check(const Ideal& ideal, const Polynomial& f);

/// Codimension of V(I) in its ambient projective space, from Hilbert data.
int codimension(const Ideal& ideal);

}  // namespace mld
