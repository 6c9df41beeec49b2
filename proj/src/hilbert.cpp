#include "mld/hilbert.hpp"

#include <algorithm>
#include <bit>

#include "mld/errors.hpp"

namespace mld {
namespace {

using Series = std::vector<mpz_class>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

void add_shifted(Series& acc, const Series& s, std::size_t shift, int sign) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += sign * s[i];
  trim(acc);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

bool is_pure_power(const Monomial& m) { return std::popcount(m.support()) <= 1; }

Series numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  bool pairwise_coprime = true;
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if (seen & g.support()) {
      pairwise_coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (pairwise_coprime) {
    Series acc{1};
    for (const auto& g : gens) {
      Series factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] = -1;
      acc = mul(acc, factor);
    }
    return acc;
  }

  // Pivot on a variable of a mixed generator: p = x_i^e with e its exponent
  // there, so p is not in the ideal and both recursive calls shrink.
  const Monomial* mixed = nullptr;
  for (const auto& g : gens) {
    if (!is_pure_power(g)) {
      mixed = &g;
      break;
    }
  }
  if (mixed == nullptr) {
    // Pure powers sharing a variable cannot both be minimal.
    throw InconsistencyError("hilbert: non-minimal monomial generators");
  }
  const std::size_t n = mixed->size();
  std::size_t best = n;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((*mixed)[i] == 0) continue;
    std::size_t count = 0;
    for (const auto& g : gens) count += g[i] != 0;
    if (best == n || count > best_count) {
      best = i;
      best_count = count;
    }
  }
  Monomial pivot(n);
  pivot.set(best, (*mixed)[best]);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / gcd(g, pivot));

  Series result = numerator(std::move(with_pivot));
  add_shifted(result, numerator(std::move(quotient)), pivot.degree(), 1);
  return result;
}

// Divides by (1 - t) as long as t = 1 is a root; returns the count.
int strip_one_minus_t(Series& s) {
  int k = 0;
  while (!s.empty()) {
    mpz_class at_one = 0;
    for (const auto& c : s) at_one += c;
    if (at_one != 0) break;
    // s = (1 - t) q  <=>  q_i = sum_{j <= i} s_j
    Series q(s.size() - 1, 0);
    mpz_class run = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      run += s[i];
      q[i] = run;
    }
    s = std::move(q);
    trim(s);
    ++k;
  }
  return k;
}

int max_independent(const std::vector<std::uint32_t>& supports, std::size_t nvars, std::size_t next,
                    std::uint32_t chosen, int size) {
  if (next == nvars) return size;
  int best = -1;
  const std::uint32_t with = chosen | (1u << next);
  const bool ok = std::none_of(supports.begin(), supports.end(),
                               [&](std::uint32_t s) { return (s & ~with) == 0; });
  if (ok) best = max_independent(supports, nvars, next + 1, with, size + 1);
  // Even taking every remaining variable cannot beat `best`: prune.
  if (best == static_cast<int>(size + (nvars - next))) return best;
  return std::max(best, max_independent(supports, nvars, next + 1, chosen, size));
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars) {
  (void)nvars;
  return numerator(std::vector<Monomial>(generators.begin(), generators.end()));
}

int monomial_krull_dimension(std::span<const Monomial> generators, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : generators) {
    if (g.is_one()) return -1;
    supports.push_back(g.support());
  }
  return max_independent(supports, nvars, 0, 0, 0);
}

HilbertData hilbert_data(const GroebnerBasis& basis) {
  HilbertData out;
  const auto lead = basis.leading_monomials();
  const std::size_t n = basis.ring()->size();
  out.series_numerator = hilbert_numerator(lead, n);
  out.krull_dimension = monomial_krull_dimension(lead, n);
  if (out.krull_dimension < 0) return out;
  Series reduced = out.series_numerator;
  const int poles = static_cast<int>(n) - strip_one_minus_t(reduced);
  if (poles != out.krull_dimension) {
    throw InconsistencyError("hilbert: pole order disagrees with independent-set dimension");
  }
  for (const auto& c : reduced) out.degree += c;
  out.dimension = basis.source().is_homogeneous() ? out.krull_dimension - 1 : out.krull_dimension;
  return out;
}

HilbertData hilbert_data(const Ideal& ideal) { return hilbert_data(groebner_basis(ideal)); }

namespace {

bool check_zero_dimensional(std::span<const Monomial> leading,
                            const std::vector<std::string>& names) {
  for (const auto& m : leading) {
    if (m.is_one()) return false;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    const bool has_power = std::any_of(leading.begin(), leading.end(), [&](const Monomial& m) {
      return m.support() == (1u << i);
    });
    if (!has_power) {
      throw DimensionError("ideal is not zero-dimensional: no leading monomial is a pure power of '" +
                           names[i] + "'");
    }
  }
  return true;
}

// Standard monomials form an order ideal; walk it depth first, raising only
// variables at or after the last one raised so each is visited once.
template <typename Visit>
void walk_standard(std::span<const Monomial> leading, std::size_t n, Visit&& visit) {
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(n), 0}};
  while (!stack.empty()) {
    auto [m, first] = stack.back();
    stack.pop_back();
    visit(m);
    for (std::size_t i = first; i < n; ++i) {
      Monomial child = m;
      child.set(i, m[i] + 1);
      const bool standard = std::none_of(leading.begin(), leading.end(),
                                         [&](const Monomial& l) { return l.divides(child); });
      if (standard) stack.emplace_back(child, i);
    }
  }
}

}  // namespace

mpz_class count_standard_monomials(std::span<const Monomial> leading,
                                   const std::vector<std::string>& names) {
  if (!check_zero_dimensional(leading, names)) return 0;
  mpz_class count = 0;
  walk_standard(leading, names.size(), [&](const Monomial&) { ++count; });
  return count;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis) {
  const auto lead = basis.leading_monomials();
  std::vector<Monomial> out;
  if (!check_zero_dimensional(lead, basis.ring()->names())) return out;
  walk_standard(lead, basis.ring()->size(), [&](const Monomial& m) { out.push_back(m); });
  return out;
}

mpz_class zero_dim_count(const GroebnerBasis& basis) {
  const auto lead = basis.leading_monomials();
  return count_standard_monomials(lead, basis.ring()->names());
}

mpz_class zero_dim_count(const Ideal& ideal) { return zero_dim_count(groebner_basis(ideal)); }

}  // namespace mld
