#include "mld/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "mld/errors.hpp"

namespace mld {

std::string to_string(const Scalar& q) { return q.get_str(); }

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars) {
    throw InvalidArgument("ring has " + std::to_string(names_.size()) +
                          " variables; at most " + std::to_string(kMaxVars) + " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidArgument("duplicate variable '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), order);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->names(), order);
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const MonomialOrder& order = ring_->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(ring->size()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw InvalidArgument("variable index out of range");
  Monomial m(ring->size());
  m.set(index, 1);
  return term(std::move(ring), m, Scalar(1));
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw InvalidArgument("unknown variable '" + name + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

int Polynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const noexcept {
  const std::uint32_t bit = 1u << var;
  return std::any_of(terms_.begin(), terms_.end(),
                     [bit](const Term& t) { return (t.monomial.support() & bit) != 0; });
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms under degree-compatible orders.
  return Polynomial(ring_, std::move(out));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->size()) throw InvalidArgument("evaluation point has wrong arity");
  Scalar total = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->size()) throw InvalidArgument("substitution has wrong arity");
  if (images.empty()) return *this;
  const RingPtr& target = images.front().ring();
  // Cache powers per variable; most substitutions are linear changes of
  // coordinates with small exponents.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial acc = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      if (t.monomial[v] != 0) acc *= power(v, t.monomial[v]);
    }
    result += acc;
  }
  return result;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (ring_ == target || *ring_ == *target) return from_sorted(target, terms_);
  std::vector<std::size_t> map(ring_->size(), target->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (auto j = target->index_of(ring_->names()[i])) map[i] = *j;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] == target->size()) {
        throw RingMismatch("variable '" + ring_->names()[i] + "' does not exist in target ring");
      }
      m.set(map[i], t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::homogenize(std::size_t var) const {
  if (involves(var)) throw InvalidArgument("homogenizing variable already occurs");
  const int d = total_degree();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    m.set(var, static_cast<unsigned>(d) - t.monomial.degree());
    out.push_back({m, t.coeff});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Scalar inv = 1 / leading_coeff();
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(ring_);
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !ring_->same_variables(*o.ring_)) {
    throw RingMismatch("polynomials belong to different rings");
  }
}

Polynomial Polynomial::aligned(const Polynomial& o) const {
  check_compatible(o);
  if (ring_ == o.ring_ || ring_->order() == o.ring_->order()) return o;
  return o.in_ring(ring_);
}

std::vector<Term> add_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                             const Scalar& c, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int cmp = order.compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].monomial, b[j].coeff * c});
      ++j;
    } else {
      Scalar s = a[i].coeff + b[j].coeff * c;
      if (sgn(s) != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, b[j].coeff * c});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (!ring_) return *this = o;
  const Polynomial rhs = aligned(o);
  terms_ = add_scaled(terms_, rhs.terms_, Scalar(1), ring_->order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (!ring_) return *this = -o;
  const Polynomial rhs = aligned(o);
  terms_ = add_scaled(terms_, rhs.terms_, Scalar(-1), ring_->order());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Polynomial rhs = a.aligned(b);
  if (a.is_zero() || rhs.is_zero()) return Polynomial(a.ring_);
  if (a.size() == 1) return rhs.mul_term(a.terms_.front().monomial, a.terms_.front().coeff);
  if (rhs.size() == 1) return a.mul_term(rhs.terms_.front().monomial, rhs.terms_.front().coeff);
  std::unordered_map<Monomial, Scalar> acc;
  acc.reserve(a.size() * rhs.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : rhs.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.push_back({m, std::move(c)});
  }
  const MonomialOrder& order = a.ring_->order();
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return order.greater(x.monomial, y.monomial); });
  return Polynomial::from_sorted(a.ring_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_) {
    if (!a.ring_ || !b.ring_ || !a.ring_->same_variables(*b.ring_)) {
      return a.is_zero() && b.is_zero();
    }
  }
  const Polynomial rhs = a.aligned(b);
  if (a.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == rhs.terms_[i].monomial) ||
        a.terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.monomial.is_one()) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << ring_->names()[i];
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  g.reserve(f.ring()->size());
  for (std::size_t i = 0; i < f.ring()->size(); ++i) g.push_back(f.derivative(i));
  return g;
}

std::optional<unsigned> homogeneity_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const unsigned d = f.leading_monomial().degree();
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != d) return std::nullopt;
  }
  return d;
}

}  // namespace mld
