#include "mld/ideal_ops.hpp"

#include <algorithm>

#include "mld/errors.hpp"
#include "mld/gcd.hpp"

namespace mld {
namespace {

// Ring with `front` first (in the given order) followed by the remaining
// variables of `ring`, under the block order eliminating `front`.
RingPtr elimination_ring(const Ring& ring, const std::vector<std::string>& front) {
  std::vector<std::string> names = front;
  for (const auto& n : ring.names()) {
    if (std::find(front.begin(), front.end(), n) == front.end()) names.push_back(n);
  }
  return make_ring(std::move(names), MonomialOrder::block(front.size()));
}

RingPtr extended_ring(const Ring& ring, const std::string& extra) {
  std::vector<std::string> names = ring.names();
  names.push_back(extra);
  return make_ring(std::move(names));
}

Ideal basis_ideal(const GroebnerBasis& gb, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements()) gens.push_back(g.in_ring(ring));
  return Ideal(ring, std::move(gens));
}

}  // namespace

std::string fresh_name(const Ring& ring, const std::string& base) {
  if (!ring.index_of(base)) return base;
  for (int k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!ring.index_of(candidate)) return candidate;
  }
}

Ideal eliminate_into(const Ideal& ideal, const std::vector<std::string>& front_vars,
                     const RingPtr& target) {
  if (front_vars.empty()) {
    return basis_ideal(groebner_basis(ideal), target);
  }
  for (const auto& v : front_vars) {
    if (!ideal.ring()->index_of(v)) throw InvalidArgument("eliminate: unknown variable '" + v + "'");
  }
  const RingPtr ring = elimination_ring(*ideal.ring(), front_vars);
  const GroebnerBasis gb = groebner_basis(ideal.in_ring(ring), ring->order());
  const std::uint32_t front_mask =
      front_vars.size() >= 32 ? ~0u : ((1u << front_vars.size()) - 1u);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if ((g.leading_monomial().support() & front_mask) == 0) kept.push_back(g.in_ring(target));
  }
  return Ideal(target, std::move(kept));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& front_vars) {
  return eliminate_into(ideal, front_vars, ideal.ring());
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_variables(*b.ring())) throw RingMismatch("intersect: different rings");
  const std::string s = fresh_name(*a.ring(), "_s");
  const RingPtr ring = extended_ring(*a.ring(), s);
  const Polynomial sv = Polynomial::variable(ring, ring->size() - 1);
  const Polynomial one_minus = Polynomial::constant(ring, 1) - sv;
  Ideal both(ring, {});
  for (const auto& g : a.generators()) both.add(sv * g.in_ring(ring));
  for (const auto& g : b.generators()) both.add(one_minus * g.in_ring(ring));
  return eliminate_into(both, {s}, a.ring());
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("ideal quotient by the zero polynomial");
  const Polynomial fr = f.in_ring(ideal.ring());
  const Ideal meet = intersect(ideal, Ideal(ideal.ring(), {fr}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto q = divide_exact(g, fr);
    if (!q) throw InconsistencyError("ideal quotient: intersection element not divisible");
    gens.push_back(std::move(*q));
  }
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by) {
  Ideal acc(ideal.ring(), {Polynomial::constant(ideal.ring(), 1)});
  for (const auto& g : by.generators()) acc = intersect(acc, ideal_quotient(ideal, g));
  return acc;
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, SaturationStrategy strategy) {
  if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  if (strategy == SaturationStrategy::iterated_quotient) {
    Ideal current = basis_ideal(groebner_basis(ideal), ideal.ring());
    while (true) {
      Ideal next = ideal_quotient(current, f);
      if (ideal_contains(current, next)) return current;
      current = basis_ideal(groebner_basis(next), ideal.ring());
    }
  }
  const std::string t = fresh_name(*ideal.ring(), "_t");
  const RingPtr ring = extended_ring(*ideal.ring(), t);
  Ideal ext = ideal.in_ring(ring);
  ext.add(Polynomial::constant(ring, 1) -
          Polynomial::variable(ring, ring->size() - 1) * f.in_ring(ring));
  return eliminate_into(ext, {t}, ideal.ring());
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  const GroebnerBasis base = groebner_basis(ideal);
  Ideal acc(ideal.ring(), {Polynomial::constant(ideal.ring(), 1)});
  bool any = false;
  for (const auto& g : by.generators()) {
    if (base.contains(g)) continue;  // contributes the unit ideal
    Ideal s = saturate(ideal, g);
    acc = any ? intersect(acc, s) : s;
    any = true;
  }
  return acc;
}

Ideal eliminate_saturation(const Ideal& ideal, const std::vector<Polynomial>& saturant,
                           const std::vector<std::string>& front_vars, const RingPtr& target) {
  const GroebnerBasis base = groebner_basis(ideal);
  const std::string t = fresh_name(*ideal.ring(), "_t");
  const RingPtr ring = extended_ring(*ideal.ring(), t);
  const Polynomial tv = Polynomial::variable(ring, ring->size() - 1);
  std::vector<std::string> front = front_vars;
  front.push_back(t);
  Ideal acc(target, {Polynomial::constant(target, 1)});
  bool any = false;
  for (const auto& g : saturant) {
    if (g.is_zero() || base.contains(g)) continue;
    Ideal ext = ideal.in_ring(ring);
    ext.add(Polynomial::constant(ring, 1) - tv * g.in_ring(ring));
    Ideal image = eliminate_into(ext, front, target);
    acc = any ? intersect(acc, image) : image;
    any = true;
  }
  return acc;
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  const std::string t = fresh_name(*ideal.ring(), "_t");
  const RingPtr ring = extended_ring(*ideal.ring(), t);
  Ideal ext = ideal.in_ring(ring);
  ext.add(Polynomial::constant(ring, 1) -
          Polynomial::variable(ring, ring->size() - 1) * f.in_ring(ring));
  return groebner_basis(ext).is_unit();
}

bool is_unit_ideal(const Ideal& ideal) { return groebner_basis(ideal).is_unit(); }

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  return groebner_basis(outer).contains(inner);
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

}  // namespace mld
