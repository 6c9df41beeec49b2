#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mld {

/// Hard limit on ring size. Desk-scale problems stay well below it.
inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with cached total degree and a support bitmask used as a
/// cheap divisibility prefilter.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const unsigned> exponents);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  std::uint32_t support() const noexcept { return mask_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);
  std::vector<unsigned> exponents() const;

  /// Sum of exponents over the variables with index < `count`.
  unsigned prefix_degree(std::size_t count) const noexcept;

  bool divides(const Monomial& other) const noexcept;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.mask_ & b.mask_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

/// A total order on monomials compatible with multiplication.
///
/// Block orders split the variables into a front block made of the first
/// `block_size` ring variables and a back block with the rest; each block is
/// compared by degree reverse lexicographic order and the front block takes
/// precedence, so a polynomial whose leading monomial avoids the front block
/// lies in the subring of the back variables.
struct MonomialOrder {
  enum class Kind { lex, degrevlex, block };

  Kind kind = Kind::degrevlex;
  std::size_t block_size = 0;

  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
  static MonomialOrder block(std::size_t front) { return {Kind::block, front}; }

  /// Negative, zero or positive as a is smaller, equal or bigger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) > 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace mld

template <>
struct std::hash<mld::Monomial> {
  std::size_t operator()(const mld::Monomial& m) const noexcept { return m.hash(); }
};
