#pragma once

#include <cstdint>
#include <vector>

#include "mld/ideal.hpp"

namespace mld {

/// Reduced Groebner basis of an ideal for a fixed monomial order.
///
/// Elements are monic, auto-reduced and sorted by increasing leading
/// monomial. They live in a copy of the source ring carrying `order()`.
class GroebnerBasis {
 public:
  GroebnerBasis(Ideal source, MonomialOrder order, std::vector<Polynomial> elements);

  const MonomialOrder& order() const noexcept { return order_; }
  /// Ring of the elements (source variables, basis order).
  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const& noexcept { return elements_; }
  std::vector<Polynomial> elements() && { return std::move(elements_); }
  const Ideal& source() const noexcept { return source_; }

  bool is_unit() const noexcept;
  std::vector<Monomial> leading_monomials() const;

  /// Remainder of f modulo the basis, returned in the source ring.
  /// Throws RingMismatch if f uses different variables.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;

  /// The basis as an ideal of the source ring.
  Ideal ideal() const;

 private:
  Ideal source_;
  MonomialOrder order_;
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and sugar
/// selection. Output is deterministic for a fixed input.
GroebnerBasis groebner_basis(const Ideal& ideal,
                             const MonomialOrder& order = MonomialOrder::degrevlex());

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Leading monomials of the reduced Groebner basis of the ideal's image over
/// GF(prime). Throws InvalidArgument if a coefficient denominator vanishes
/// modulo the prime.
std::vector<Monomial> leading_monomials_mod_p(const Ideal& ideal, const MonomialOrder& order,
                                              std::uint32_t prime);

/// Deterministic word-size primes in [2^30, 2^31) drawn from `seed`.
std::vector<std::uint32_t> random_primes(std::uint64_t seed, std::size_t count);

}  // namespace mld
