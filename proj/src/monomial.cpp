#include "mld/monomial.hpp"

#include <algorithm>
#include <limits>

#include "mld/errors.hpp"

namespace mld {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw InvalidArgument("ring has " + std::to_string(nvars) + " variables; at most " +
                          std::to_string(kMaxVars) + " are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<Exponent>::max()) throw InvalidArgument("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
  if (e != 0) {
    mask_ |= (1u << i);
  } else {
    mask_ &= ~(1u << i);
  }
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exp_.begin(), exp_.begin() + nvars_);
}

unsigned Monomial::prefix_degree(std::size_t count) const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < count; ++i) d += exp_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    const unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) {
      throw InvalidArgument("exponent overflow");
    }
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.mask_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = static_cast<Monomial::Exponent>(a.exp_[i] - b.exp_[i]);
    if (r.exp_[i] != 0) r.mask_ |= (1u << i);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  r.mask_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
    if (r.exp_[i] != 0) r.mask_ |= (1u << i);
  }
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_ || a.mask_ != b.mask_) return false;
  return std::equal(a.exp_.begin(), a.exp_.begin() + a.nvars_, b.exp_.begin());
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Reverse lexicographic tie-break on [begin, end): the monomial with the
// smaller exponent in the last differing variable is the bigger one.
int revlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int by_degree(unsigned da, unsigned db) {
  if (da != db) return da < db ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.size();
  switch (kind) {
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::degrevlex:
      if (int c = by_degree(a.degree(), b.degree())) return c;
      return revlex(a, b, 0, n);
    case Kind::block: {
      const std::size_t k = std::min(block_size, n);
      const unsigned fa = a.prefix_degree(k);
      const unsigned fb = b.prefix_degree(k);
      if (int c = by_degree(fa, fb)) return c;
      if (int c = revlex(a, b, 0, k)) return c;
      if (int c = by_degree(a.degree() - fa, b.degree() - fb)) return c;
      return revlex(a, b, k, n);
    }
  }
  return 0;
}

}  // namespace mld
