#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mld/monomial.hpp"

namespace mld {

/// Exact rational coefficient. gmpxx keeps results canonical (lowest terms,
/// positive denominator).
using Scalar = mpq_class;

std::string to_string(const Scalar& q);

/// Variable names plus the monomial order polynomials of the ring are kept in.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool same_variables(const Ring& other) const noexcept { return names_ == other.names_; }
  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::degrevlex());
/// Same variables, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Sparse distributed polynomial over the rationals. Terms are stored in
/// strictly decreasing order for the ring's monomial order and never carry a
/// zero coefficient, so the leading term is `terms().front()`.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges equal monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);
  /// Trusted constructor: `terms` must already satisfy the class invariant.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const& noexcept { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }

  /// -1 for the zero polynomial.
  int total_degree() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept;

  Polynomial derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  /// Ring homomorphism sending variable i to images[i] (all in one ring).
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Throws RingMismatch if a used variable is missing there.
  Polynomial in_ring(const RingPtr& target) const;
  /// Pads every term with a power of `var` up to the total degree of the
  /// polynomial. `var` must not occur in it.
  Polynomial homogenize(std::size_t var) const;

  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text: terms in the ring order, e.g. `x*z^2 - y^2*z + 1/2`.
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  Polynomial aligned(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Formal partial derivatives with respect to every ring variable.
std::vector<Polynomial> gradient(const Polynomial& f);

/// deg f when every term has the same total degree; empty otherwise and for 0.
std::optional<unsigned> homogeneity_degree(const Polynomial& f);

/// Merge of two sorted term lists computing a + c*b. Shared with the
/// Groebner engine.
std::vector<Term> add_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                             const Scalar& c, const MonomialOrder& order);

}  // namespace mld
