#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "mld/groebner.hpp"

namespace mld {

struct HilbertData {
  /// Projective dimension for homogeneous ideals, affine Krull dimension
  /// otherwise; -1 for the unit ideal.
  int dimension = -1;
  /// Degree of the leading-term ideal (0 for the unit ideal).
  mpz_class degree = 0;
  /// Numerator N(t) of the Hilbert series N(t) / (1 - t)^nvars of the
  /// leading-term ideal, lowest degree first.
  std::vector<mpz_class> series_numerator;
  /// Krull dimension of the quotient ring.
  int krull_dimension = -1;
};

HilbertData hilbert_data(const Ideal& ideal);
HilbertData hilbert_data(const GroebnerBasis& basis);

/// Hilbert series numerator of the quotient by a monomial ideal in `nvars`
/// variables, over (1 - t)^nvars.
std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars);

/// Krull dimension of k[x]/M via a maximal set of variables containing the
/// support of no generator. -1 if M is the unit ideal.
int monomial_krull_dimension(std::span<const Monomial> generators, std::size_t nvars);

/// Number of monomials outside the ideal generated by `leading`. Throws
/// DimensionError naming a variable without a pure power among them.
mpz_class count_standard_monomials(std::span<const Monomial> leading,
                                   const std::vector<std::string>& names);

/// Basis of k[x]/I by standard monomials (empty for the unit ideal). Throws
/// DimensionError unless I is zero-dimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis);

/// Length of k[x]/I for zero-dimensional I (0 for the unit ideal).
mpz_class zero_dim_count(const Ideal& ideal);
mpz_class zero_dim_count(const GroebnerBasis& basis);

}  // namespace mld
