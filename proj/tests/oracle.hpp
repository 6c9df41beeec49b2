#pragma once

// Test-side reference routines. They only use the public Polynomial API so
// they stay independent of the Groebner engine they check.

#include <random>
#include <vector>

#include "mld/groebner.hpp"
#include "mld/polynomial.hpp"

namespace oracle {

using mld::Polynomial;

// Multivariate division with remainder: fully reduces f by `divisors`.
inline Polynomial reduce(Polynomial f, const std::vector<Polynomial>& divisors) {
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    const auto lt = f.leading_term();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.monomial)) {
        const auto q = lt.monomial / g.leading_monomial();
        f -= g.mul_term(q, lt.coeff / g.leading_coeff());
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem += Polynomial::term(f.ring(), lt.monomial, lt.coeff);
      f -= Polynomial::term(f.ring(), lt.monomial, lt.coeff);
    }
  }
  return rem;
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const auto l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), 1 / f.leading_coeff()) -
         g.mul_term(l / g.leading_monomial(), 1 / g.leading_coeff());
}

// Buchberger criterion plus membership of every source generator, plus
// reducedness of the basis.
inline bool is_reduced_groebner(const mld::GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (!reduce(spoly(el[i], el[j]), el).is_zero()) return false;
    }
  }
  for (const auto& g : gb.source().generators()) {
    if (!reduce(g.in_ring(gb.ring()), el).is_zero()) return false;
  }
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : el[j].terms()) {
        if (el[i].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

// Random polynomial with up to `terms` terms, total degree <= `max_deg` and
// small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const mld::RingPtr& ring, int terms,
                              int max_deg, int coeff = 5) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> v(0, static_cast<int>(ring->size()) - 1);
  std::uniform_int_distribution<int> d(0, max_deg);
  Polynomial p(ring);
  for (int k = 0; k < terms; ++k) {
    mld::Monomial m(ring->size());
    const int deg = d(rng);
    for (int e = 0; e < deg; ++e) {
      const auto i = static_cast<std::size_t>(v(rng));
      m.set(i, m[i] + 1);
    }
    p += Polynomial::term(ring, m, c(rng));
  }
  return p;
}

// Random homogeneous polynomial of degree `deg`.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const mld::RingPtr& ring, int terms,
                                     int deg, int coeff = 5) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> v(0, static_cast<int>(ring->size()) - 1);
  Polynomial p(ring);
  while (p.is_zero()) {
    for (int k = 0; k < terms; ++k) {
      mld::Monomial m(ring->size());
      for (int e = 0; e < deg; ++e) {
        const auto i = static_cast<std::size_t>(v(rng));
        m.set(i, m[i] + 1);
      }
      p += Polynomial::term(ring, m, c(rng));
    }
  }
  return p;
}

}  // namespace oracle
