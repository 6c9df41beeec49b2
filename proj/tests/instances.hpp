#pragma once

// Random ML degree problems for the property suites: X is P^n or a smooth
// quadric in P^n (n <= 3), F is homogeneous of degree <= 3. On the quadric
// surface F has degree <= 2; cubics there make the exact saturations slow.

#include <algorithm>
#include <random>
#include <string>

#include "mld/mld.hpp"
#include "oracle.hpp"

namespace instances {

using namespace mld;

inline RingPtr projective_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(names);
}

inline Polynomial random_linear(std::mt19937_64& rng, const RingPtr& r, int bound = 5) {
  std::uniform_int_distribution<int> c(-bound, bound);
  Polynomial l(r);
  while (l.is_zero()) {
    for (std::size_t i = 0; i < r->size(); ++i) l += Polynomial::variable(r, i) * Scalar(c(rng));
  }
  return l;
}

// Diagonal quadric with nonzero coefficients: smooth.
inline Polynomial random_smooth_quadric(std::mt19937_64& rng, const RingPtr& r) {
  std::uniform_int_distribution<int> c(1, 4);
  std::bernoulli_distribution sign(0.5);
  Polynomial q(r);
  for (std::size_t i = 0; i < r->size(); ++i) {
    const auto x = Polynomial::variable(r, i);
    q += x * x * Scalar(sign(rng) ? c(rng) : -c(rng));
  }
  return q;
}

// F of degree 1..3: one sparse form, or a product of linear forms and a
// sparse form.
inline Polynomial random_f(std::mt19937_64& rng, const RingPtr& r, int max_deg = 3) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<int> shape(0, 2);
  const int d = deg(rng);
  switch (shape(rng)) {
    case 0:
      return oracle::random_homogeneous(rng, r, 3, d);
    case 1: {
      Polynomial f = Polynomial::constant(r, 1);
      for (int i = 0; i < d; ++i) f *= random_linear(rng, r, 3);
      return f;
    }
    default: {
      Polynomial f = random_linear(rng, r, 3);
      if (d > 1) f *= oracle::random_homogeneous(rng, r, 2, d - 1);
      return f;
    }
  }
}

inline ProblemSpec random_problem(std::mt19937_64& rng, std::size_t max_n = 3, int max_deg = 3) {
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  const std::size_t n = dim(rng);
  const RingPtr r = projective_ring(n);
  std::vector<Polynomial> gens;
  if (n >= 2 && std::bernoulli_distribution(0.4)(rng)) gens.push_back(random_smooth_quadric(rng, r));
  const int deg = n == 3 && !gens.empty() ? std::min(max_deg, 2) : max_deg;
  ProblemSpec spec = projective_problem(r, gens, random_f(rng, r, deg));
  spec.seed = rng();
  return spec;
}

inline std::string describe(const ProblemSpec& spec) {
  std::string s = "F = " + spec.f.to_string();
  for (const auto& g : spec.generators) s += ", g = " + g.to_string();
  return s;
}

}  // namespace instances
