#include "mld/ideal.hpp"

#include "mld/errors.hpp"

namespace mld {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) add(g);
}

Ideal& Ideal::add(const Polynomial& g) {
  if (g.is_zero()) return *this;
  if (!g.ring() || !g.ring()->same_variables(*ring_)) {
    throw RingMismatch("generator does not belong to the ideal's ring");
  }
  gens_.push_back(g.in_ring(ring_));
  if (!homogeneity_degree(gens_.back())) homogeneous_ = false;
  return *this;
}

Ideal operator+(Ideal a, const Ideal& b) {
  for (const auto& g : b.gens_) a.add(g);
  return a;
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.in_ring(target));
  return Ideal(target, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ">";
}

}  // namespace mld
