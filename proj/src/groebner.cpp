#include "mld/groebner.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mld/errors.hpp"

namespace mld {
namespace {

// Coefficient domains the engine is instantiated over. Fields keep every
// basis element monic; the integer ring keeps them primitive, which avoids
// the denominator growth of monic rational arithmetic.

struct RationalField {
  using Elem = mpq_class;
  static constexpr bool monic = true;
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem one() { return 1; }
  static Elem inv(const Elem& a) { return 1 / a; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg_mul(const Elem& a, const Elem& b) { return -(a * b); }
  // a - c * b
  static Elem sub_mul(const Elem& a, const Elem& c, const Elem& b) { return a - c * b; }
};

struct IntegerRing {
  using Elem = mpz_class;
  static constexpr bool monic = false;
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }
  static Elem one() { return 1; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg_mul(const Elem& a, const Elem& b) { return -(a * b); }
  static Elem sub_mul(const Elem& a, const Elem& c, const Elem& b) { return a - c * b; }
};

struct PrimeField {
  using Elem = std::uint32_t;
  static constexpr bool monic = true;
  std::uint32_t p;

  bool is_zero(Elem a) const { return a == 0; }
  Elem one() const { return 1; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t{a} * b) % p);
  }
  Elem neg_mul(Elem a, Elem b) const {
    const Elem m = mul(a, b);
    return m == 0 ? 0 : p - m;
  }
  Elem sub_mul(Elem a, Elem c, Elem b) const {
    const Elem m = mul(c, b);
    return a >= m ? a - m : a + (p - m);
  }
  Elem inv(Elem a) const {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<Elem>(t);
  }
  Elem from(const Scalar& q) const {
    const mpz_class num = q.get_num() % p;
    const mpz_class den = q.get_den() % p;
    if (den == 0) throw InvalidArgument("coefficient denominator vanishes modulo the prime");
    Elem n = static_cast<Elem>(mpz_class(num < 0 ? num + p : num).get_ui());
    return mul(n, inv(static_cast<Elem>(den.get_ui())));
  }
};

template <class E>
struct GTerm {
  Monomial m;
  E c;
};

template <class E>
struct GPoly {
  std::vector<GTerm<E>> terms;
  unsigned sugar = 0;

  const Monomial& lm() const { return terms.front().m; }
  bool is_zero() const { return terms.empty(); }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

template <class Field>
class Engine {
 public:
  using E = typename Field::Elem;
  using Poly = GPoly<E>;

  Engine(const Field& field, const MonomialOrder& order) : field_(field), order_(order) {}

  std::vector<Poly> run(std::vector<Poly> input) {
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
      return order_.compare(a.lm(), b.lm()) < 0;
    });
    for (auto& f : input) {
      Poly h = reduce(std::move(f));
      if (h.is_zero()) continue;
      if (h.lm().is_one()) return {unit(h.lm())};
      insert(std::move(h));
    }
    while (!pairs_.empty()) {
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Poly h = top_reduce(spoly(p));
      if (h.is_zero()) continue;
      if (h.lm().is_one()) return {unit(h.lm())};
      insert(std::move(h));
    }
    return finish();
  }

  /// Full reduction (leading and tail terms) by the current basis.
  Poly reduce(Poly f) const {
    f = reduce_from(std::move(f), 0);
    normalize(f);
    return f;
  }

  /// Reduces the leading term only; tails are cleaned up in finish().
  Poly top_reduce(Poly f) const {
    while (!f.is_zero()) {
      const auto r = find_reducer(f.terms.front().m);
      if (!r) break;
      eliminate(f, 0, basis_[*r]);
    }
    normalize(f);
    return f;
  }

  /// Reduces every term at or after `start`. Over a field the scale of f is
  /// kept; over the integers f picks up a nonzero integer factor.
  Poly reduce_from(Poly f, std::size_t start) const {
    std::size_t pos = start;
    while (pos < f.terms.size()) {
      const auto r = find_reducer(f.terms[pos].m);
      if (!r) {
        ++pos;
        continue;
      }
      eliminate(f, pos, basis_[*r]);
    }
    return f;
  }

  void set_basis(std::vector<Poly> basis) {
    basis_ = std::move(basis);
    redundant_.assign(basis_.size(), false);
  }

 private:
  struct PairOrder {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (int c = order->compare(a.lcm, b.lcm)) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  Poly unit(const Monomial& one) const {
    Poly u;
    u.terms.push_back({one, field_.one()});
    return u;
  }

  std::optional<std::size_t> find_reducer(const Monomial& m) const {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!basis_[k].lm().divides(m)) continue;
      if (!best || basis_[k].terms.size() < basis_[*best].terms.size()) best = k;
    }
    return best;
  }

  // Cancels f.terms[pos] against the leading term of g.
  void eliminate(Poly& f, std::size_t pos, const Poly& g) const {
    const Monomial shift = f.terms[pos].m / g.lm();
    f.sugar = std::max(f.sugar, g.sugar + shift.degree());
    if constexpr (Field::monic) {
      const E c = f.terms[pos].c;
      subtract_tail(f.terms, pos, g, shift, nullptr, c);
    } else {
      // a * f - b * shift * g with a * lc(f term) = b * lc(g)
      const E d = gcd(f.terms[pos].c, g.terms.front().c);
      E a = g.terms.front().c / d;
      const E b = f.terms[pos].c / d;
      if (a < 0) {
        a = -a;
        for (std::size_t i = 0; i < pos; ++i) f.terms[i].c *= a;
        subtract_tail(f.terms, pos, g, shift, &a, -b);
      } else {
        for (std::size_t i = 0; i < pos; ++i) f.terms[i].c *= a;
        subtract_tail(f.terms, pos, g, shift, &a, b);
      }
    }
  }

  // Replaces terms[pos..] by mult * terms[pos+1..] - c * shift * g.tail, which
  // cancels terms[pos] against the leading term of g. A null `mult` is 1.
  void subtract_tail(std::vector<GTerm<E>>& terms, std::size_t pos, const Poly& g,
                     const Monomial& shift, const E* mult, const E& c) const {
    scratch_.clear();
    scratch_.reserve(terms.size() - pos + g.terms.size());
    auto scaled = [&](GTerm<E>&& t) {
      if (mult) t.c = field_.mul(t.c, *mult);
      return std::move(t);
    };
    std::size_t i = pos + 1;
    std::size_t j = 1;
    while (i < terms.size() && j < g.terms.size()) {
      const Monomial m = g.terms[j].m * shift;
      const int cmp = order_.compare(terms[i].m, m);
      if (cmp > 0) {
        scratch_.push_back(scaled(std::move(terms[i++])));
      } else if (cmp < 0) {
        scratch_.push_back({m, field_.neg_mul(c, g.terms[j].c)});
        ++j;
      } else {
        E v = field_.sub_mul(mult ? field_.mul(terms[i].c, *mult) : terms[i].c, c, g.terms[j].c);
        if (!field_.is_zero(v)) scratch_.push_back({m, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < terms.size(); ++i) scratch_.push_back(scaled(std::move(terms[i])));
    for (; j < g.terms.size(); ++j) {
      scratch_.push_back({g.terms[j].m * shift, field_.neg_mul(c, g.terms[j].c)});
    }
    terms.resize(pos);
    for (auto& t : scratch_) terms.push_back(std::move(t));
  }

  void normalize(Poly& f) const {
    if (f.is_zero()) return;
    if constexpr (Field::monic) {
      const E inv = field_.inv(f.terms.front().c);
      for (auto& t : f.terms) t.c = field_.mul(t.c, inv);
    } else {
      E content = 0;
      for (const auto& t : f.terms) {
        content = gcd(content, t.c);
        if (content == 1) break;
      }
      if (f.terms.front().c < 0) content = -content;
      if (content != 1) {
        for (auto& t : f.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), content.get_mpz_t());
      }
    }
  }

  Poly spoly(const Pair& p) const {
    const Poly& f = basis_[p.i];
    const Poly& g = basis_[p.j];
    const Monomial mf = p.lcm / f.lm();
    Poly s;
    s.sugar = p.sugar;
    s.terms.reserve(f.terms.size() + g.terms.size());
    for (const auto& t : f.terms) s.terms.push_back({t.m * mf, t.c});
    eliminate(s, 0, g);
    return s;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial l = lcm(basis_[i].lm(), basis_[j].lm());
    const unsigned si = basis_[i].sugar + (l.degree() - basis_[i].lm().degree());
    const unsigned sj = basis_[j].sugar + (l.degree() - basis_[j].lm().degree());
    return Pair{i, j, l, std::max(si, sj)};
  }

  // Gebauer-Moeller update for a new element h (already reduced).
  void insert(Poly h) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    redundant_.push_back(false);
    const Monomial& lh = basis_[hi].lm();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!redundant_[g]) candidates.push_back(make_pair(g, hi));
    }
    // Chain criterion among the new pairs; equal lcms keep one representative.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      const bool disjoint = coprime(basis_[p.i].lm(), lh);
      bool dominated = false;
      if (!disjoint) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b) {
          dominated = candidates[b].lcm.divides(p.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
          dominated = kept[b].lcm.divides(p.lcm);
        }
      }
      if (!dominated) kept.push_back(p);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return coprime(basis_[p.i].lm(), lh); });

    // Old pairs whose lcm is a strict multiple of the new leading monomial.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (lh.divides(p.lcm) && !(lcm(basis_[p.i].lm(), lh) == p.lcm) &&
          !(lcm(basis_[p.j].lm(), lh) == p.lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (auto& p : kept) pairs_.insert(std::move(p));

    for (std::size_t g = 0; g < hi; ++g) {
      if (!redundant_[g] && lh.divides(basis_[g].lm())) redundant_[g] = true;
    }
  }

  std::vector<Poly> finish() {
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!redundant_[k]) minimal.push_back(basis_[k]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
      return order_.compare(a.lm(), b.lm()) < 0;
    });
    // Tail terms are smaller than the leading monomial, so an element never
    // reduces its own tail and the minimal basis can reduce every tail.
    Engine<Field> tails(field_, order_);
    tails.set_basis(minimal);
    for (auto& g : minimal) {
      g = tails.reduce_from(std::move(g), 1);
      tails.normalize(g);
    }
    return minimal;
  }

  Field field_;
  MonomialOrder order_;
  std::vector<Poly> basis_;
  std::vector<bool> redundant_;
  std::set<Pair, PairOrder> pairs_{PairOrder{&order_}};
  mutable std::vector<GTerm<E>> scratch_;
};

RingPtr ordered_ring(const Ideal& ideal, const MonomialOrder& order) {
  return with_order(ideal.ring(), order);
}

Polynomial from_rational(const GPoly<mpq_class>& p, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(p.terms.size());
  for (const auto& t : p.terms) terms.push_back({t.m, t.c});
  return Polynomial::from_sorted(ring, std::move(terms));
}

}  // namespace

GroebnerBasis::GroebnerBasis(Ideal source, MonomialOrder order, std::vector<Polynomial> elements)
    : source_(std::move(source)),
      order_(order),
      ring_(with_order(source_.ring(), order)),
      elements_(std::move(elements)) {}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_.front().is_constant();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!f.ring() || !f.ring()->same_variables(*ring_)) {
    throw RingMismatch("normal_form: polynomial and basis use different rings");
  }
  if (elements_.empty()) return f.in_ring(source_.ring());
  Engine<RationalField> engine(RationalField{}, order_);
  std::vector<GPoly<mpq_class>> basis;
  for (const auto& g : elements_) {
    GPoly<mpq_class> gp;
    for (const auto& t : g.terms()) gp.terms.push_back({t.monomial, t.coeff});
    basis.push_back(std::move(gp));
  }
  engine.set_basis(std::move(basis));
  GPoly<mpq_class> in;
  const Polynomial local = f.in_ring(ring_);
  for (const auto& t : local.terms()) in.terms.push_back({t.monomial, t.coeff});
  return from_rational(engine.reduce_from(std::move(in), 0), ring_).in_ring(source_.ring());
}

bool GroebnerBasis::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

Ideal GroebnerBasis::ideal() const {
  std::vector<Polynomial> gens;
  gens.reserve(elements_.size());
  for (const auto& g : elements_) gens.push_back(g.in_ring(source_.ring()));
  return Ideal(source_.ring(), std::move(gens));
}

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  const RingPtr ring = ordered_ring(ideal, order);
  // clear denominators; the integer engine keeps elements primitive
  std::vector<GPoly<mpz_class>> input;
  for (const auto& g : ideal.generators()) {
    const Polynomial p = g.in_ring(ring);
    if (p.is_zero()) continue;
    mpz_class den = 1;
    for (const auto& t : p.terms()) den = lcm(den, mpz_class(t.coeff.get_den()));
    GPoly<mpz_class> gp;
    gp.sugar = static_cast<unsigned>(p.total_degree());
    for (const auto& t : p.terms()) {
      gp.terms.push_back({t.monomial, t.coeff.get_num() * (den / t.coeff.get_den())});
    }
    input.push_back(std::move(gp));
  }
  Engine<IntegerRing> engine(IntegerRing{}, order);
  std::vector<Polynomial> elements;
  for (const auto& g : engine.run(std::move(input))) {
    std::vector<Term> terms;
    terms.reserve(g.terms.size());
    const mpz_class& lead = g.terms.front().c;
    for (const auto& t : g.terms) {
      Scalar c(t.c, lead);
      c.canonicalize();
      terms.push_back({t.m, std::move(c)});
    }
    elements.push_back(Polynomial::from_sorted(ring, std::move(terms)));
  }
  return GroebnerBasis(ideal, order, std::move(elements));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return basis.normal_form(f);
}

std::vector<Monomial> leading_monomials_mod_p(const Ideal& ideal, const MonomialOrder& order,
                                              std::uint32_t prime) {
  const RingPtr ring = ordered_ring(ideal, order);
  const PrimeField field{prime};
  std::vector<GPoly<std::uint32_t>> input;
  for (const auto& g : ideal.generators()) {
    const Polynomial p = g.in_ring(ring);
    GPoly<std::uint32_t> gp;
    gp.sugar = static_cast<unsigned>(p.total_degree());
    for (const auto& t : p.terms()) {
      const auto c = field.from(t.coeff);
      if (c != 0) gp.terms.push_back({t.monomial, c});
    }
    if (!gp.terms.empty()) input.push_back(std::move(gp));
  }
  Engine<PrimeField> engine(field, order);
  std::vector<Monomial> out;
  for (const auto& g : engine.run(std::move(input))) out.push_back(g.lm());
  return out;
}

std::vector<std::uint32_t> random_primes(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  auto is_prime = [](std::uint32_t n) {
    if (n % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  };
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    std::uint32_t n = static_cast<std::uint32_t>((rng() >> 34) | (1u << 30)) | 1u;
    while (!is_prime(n)) n += 2;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return out;
}

}  // namespace mld
