#pragma once

#include <initializer_list>
#include <vector>

#include "mld/polynomial.hpp"

namespace mld {

/// A finite generating set. Zero generators are dropped on construction and
/// every generator is re-expressed in `ring`.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const& noexcept { return gens_; }
  std::vector<Polynomial> generators() && { return std::move(gens_); }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  /// True iff every generator is homogeneous (vacuously for no generators).
  bool is_homogeneous() const noexcept { return homogeneous_; }

  Ideal& add(const Polynomial& g);
  friend Ideal operator+(Ideal a, const Ideal& b);
  /// Same generators in another ring, matched by variable name.
  Ideal in_ring(const RingPtr& target) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
};

}  // namespace mld
