#pragma once

#include <string>
#include <vector>

#include "mld/groebner.hpp"

namespace mld {

/// A variable name not used by `ring`, derived from `base`.
std::string fresh_name(const Ring& ring, const std::string& base);

/// I ∩ k[remaining variables], from a block-order basis whose front block is
/// `front_vars`. The result lives in I's ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& front_vars);

/// Like eliminate() but returns the ideal in `target`, a ring holding the
/// remaining variables.
Ideal eliminate_into(const Ideal& ideal, const std::vector<std::string>& front_vars,
                     const RingPtr& target);

Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : f) = {g : g f ∈ I}. Throws InvalidArgument for f = 0.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);
/// (I : J) = ∩ (I : g) over the generators g of J.
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by);

enum class SaturationStrategy { extra_variable, iterated_quotient };

/// (I : f^∞). Throws InvalidArgument for f = 0.
Ideal saturate(const Ideal& ideal, const Polynomial& f,
               SaturationStrategy strategy = SaturationStrategy::extra_variable);
/// (I : J^∞) = ∩ (I : g^∞) over the generators g of J.
Ideal saturate(const Ideal& ideal, const Ideal& by);

/// (I : J^∞) ∩ k[remaining], computed without forming the saturation:
/// elimination commutes with intersection, so each (I + <1 - t g>) is
/// projected separately and the images are intersected in `target`.
Ideal eliminate_saturation(const Ideal& ideal, const std::vector<Polynomial>& saturant,
                           const std::vector<std::string>& front_vars, const RingPtr& target);

/// True iff f vanishes on V(I) (Rabinowitsch trick).
bool radical_membership(const Polynomial& f, const Ideal& ideal);

bool is_unit_ideal(const Ideal& ideal);
bool same_ideal(const Ideal& a, const Ideal& b);
/// True iff every generator of `inner` lies in `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner);

}  // namespace mld
