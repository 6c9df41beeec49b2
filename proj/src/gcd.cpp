#include "mld/gcd.hpp"

#include "mld/errors.hpp"

namespace mld {
namespace {

using Univariate = std::vector<Polynomial>;  // index = degree in the main variable

Univariate split(const Polynomial& p, std::size_t var) {
  Univariate out(p.degree_in(var) + 1, Polynomial(p.ring()));
  std::vector<std::vector<Term>> buckets(out.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  for (std::size_t e = 0; e < out.size(); ++e) {
    out[e] = Polynomial(p.ring(), std::move(buckets[e]));
  }
  return out;
}

Polynomial join(const Univariate& u, std::size_t var, const RingPtr& ring) {
  Polynomial result(ring);
  Monomial shift(ring->size());
  for (std::size_t e = 0; e < u.size(); ++e) {
    shift.set(var, static_cast<unsigned>(e));
    result += u[e].mul_term(shift, Scalar(1));
  }
  return result;
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int highest_var(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = a.ring()->size(); v-- > 0;) {
    if (a.involves(v) || b.involves(v)) return static_cast<int>(v);
  }
  return -1;
}

Polynomial content(const Polynomial& p, std::size_t var) {
  Polynomial c(p.ring());
  for (const auto& coeff : split(p, var)) {
    if (!coeff.is_zero()) c = gcd(c, coeff);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InconsistencyError("gcd: expected exact division");
  return *q;
}

// Pseudo-remainder of a by b (b nonzero) up to a nonzero factor.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const Polynomial& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Polynomial la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  Polynomial rem = a;
  Polynomial quot(a.ring());
  const Polynomial divisor = b.in_ring(a.ring());
  const Monomial& lm = divisor.leading_monomial();
  const Scalar inv = 1 / divisor.leading_coeff();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lm.divides(lt.monomial)) return std::nullopt;
    const Monomial m = lt.monomial / lm;
    const Scalar c = lt.coeff * inv;
    quot += Polynomial::term(a.ring(), m, c);
    rem -= divisor.mul_term(m, c);
  }
  return quot;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
  const int v = highest_var(a, b);
  const auto var = static_cast<std::size_t>(v);
  if (!a.involves(var)) return gcd(a, content(b, var));
  if (!b.involves(var)) return gcd(content(a, var), b);

  const Polynomial ca = content(a, var);
  const Polynomial cb = content(b, var);
  const Polynomial c = gcd(ca, cb);

  Univariate pa = split(exact(a, ca), var);
  Univariate pb = split(exact(b, cb), var);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    Univariate r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb.clear();
      break;
    }
    const Polynomial rp = join(r, var, a.ring());
    pb = split(exact(rp, content(rp, var)), var);
    trim(pb);
  }
  Polynomial g = Polynomial::constant(a.ring(), 1);
  if (pa.size() > 1) {
    const Polynomial last = join(pa, var, a.ring());
    g = exact(last, content(last, var));
  }
  return (c * g).monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
  Polynomial g = f;
  for (const auto& d : gradient(f)) {
    if (g.is_constant()) break;
    g = gcd(g, d);
  }
  return exact(f, g).monic();
}

}  // namespace mld
