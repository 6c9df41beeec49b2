#include <doctest.h>

#include <random>

#include "mld/errors.hpp"
#include "mld/gcd.hpp"
#include "mld/parser.hpp"
#include "oracle.hpp"

using namespace mld;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

bool same_up_to_scalar(const Polynomial& a, const Polynomial& b) {
  return a.monic() == b.monic();
}

}  // namespace

TEST_CASE("parse expands products") {
  auto r = xyz();
  const auto f = P("z*(x*z - y^2)", r);
  CHECK(f == P("x*z^2 - y^2*z", r));
  CHECK(f.size() == 2);
  CHECK(f.to_string() == "-y^2*z + x*z^2");
  CHECK(f.in_ring(make_ring({"x", "y", "z"}, MonomialOrder::lex())).to_string() == "x*z^2 - y^2*z");
}

TEST_CASE("parse zero and rationals") {
  auto r = make_ring({"x"});
  CHECK(P("0", r).is_zero());
  CHECK(P(" 3/6 * x ", r) == Polynomial::variable(r, 0) * Scalar(1, 2));
  CHECK(P("-(x-1)^2", r) == P("-x^2 + 2*x - 1", r));
}

TEST_CASE("parse the conic") {
  auto r = make_ring({"x0", "x1", "x2"});
  const auto f = P("4*x0*x2 - x1^2", r);
  CHECK(f.size() == 2);
  CHECK(homogeneity_degree(f) == 2u);
  CHECK(f.evaluate(std::vector<Scalar>{1, 2, 1}) == 0);
}

TEST_CASE("parse errors carry positions") {
  auto r = xyz();
  try {
    P("x + w", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("x^-2", r), ParseError);
  CHECK_THROWS_AS(P("x*(y", r), ParseError);
  CHECK_THROWS_AS(P("2x", r), ParseError);
  CHECK_THROWS_AS(P("x + ", r), ParseError);
  CHECK_THROWS_AS(P("1/0", r), ParseError);
}

TEST_CASE("gradient examples") {
  auto r = xyz();
  auto g = gradient(P("x*z^2 - y^2*z", r));
  CHECK(g[0] == P("z^2", r));
  CHECK(g[1] == P("-2*y*z", r));
  CHECK(g[2] == P("2*x*z - y^2", r));
  g = gradient(P("x^3 - y^2*z", r));
  CHECK(g[0] == P("3*x^2", r));
  CHECK(g[1] == P("-2*y*z", r));
  CHECK(g[2] == P("-y^2", r));
  for (const auto& d : gradient(P("5", r))) CHECK(d.is_zero());
}

TEST_CASE("homogeneity degree") {
  auto r = xyz();
  CHECK(homogeneity_degree(P("x*z^2 - y^2*z", r)) == 3u);
  CHECK(!homogeneity_degree(P("x + x^2", r)));
  CHECK(!homogeneity_degree(Polynomial(r)));
  auto s = make_ring({"a", "b", "c", "d", "e", "f"});
  // det [[a b c] [b d e] [c e f]]
  const auto det = P("a*d*f + 2*b*c*e - a*e^2 - d*c^2 - f*b^2", s);
  CHECK(homogeneity_degree(det) == 3u);
}

TEST_CASE("squarefree part examples") {
  auto r = xyz();
  CHECK(same_up_to_scalar(squarefree_part(P("x^2*y", r)), P("x*y", r)));
  CHECK(same_up_to_scalar(squarefree_part(P("z*(x*z - y^2)^2", r)), P("z*(x*z - y^2)", r)));
  CHECK(same_up_to_scalar(squarefree_part(P("z*(x*z - y^2)", r)), P("z*(x*z - y^2)", r)));
  CHECK(same_up_to_scalar(squarefree_part(P("(x+y+z)^2", r)), P("x+y+z", r)));
  CHECK_THROWS_AS(squarefree_part(Polynomial(r)), InvalidArgument);
}

TEST_CASE("gcd and exact division") {
  auto r = xyz();
  const auto a = P("(x - y)*(x*z + 1)^2", r);
  const auto b = P("(x*z + 1)*(y + 3)", r);
  CHECK(gcd(a, b) == P("x*z + 1", r).monic());
  CHECK(divide_exact(a, P("x*z + 1", r)) == P("(x - y)*(x*z + 1)", r));
  CHECK(!divide_exact(a, P("y + 3", r)));
}

TEST_CASE("homogenize and substitute") {
  auto r = make_ring({"x", "y", "z", "t"});
  CHECK(P("x*z^2 - y^2*z - 1", r).homogenize(3) == P("x*z^2 - y^2*z - t^3", r));
  const auto f = P("x^2 - y", r);
  std::vector<Polynomial> img = {P("y + 1", r), P("z", r), P("z", r), P("t", r)};
  CHECK(f.substitute(img) == P("(y + 1)^2 - z", r));
}

TEST_CASE("ring mismatch") {
  auto a = make_ring({"x", "y"});
  auto b = make_ring({"x"});
  CHECK_THROWS_AS(P("y", a).in_ring(b), RingMismatch);
  CHECK(P("x", a).in_ring(b) == P("x", b));
}

TEST_CASE("property: ring axioms, Leibniz, Euler, round trip") {
  std::mt19937_64 rng(7);
  auto r = make_ring({"x", "y", "z", "w"});
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = oracle::random_poly(rng, r, 5, 3);
    const auto g = oracle::random_poly(rng, r, 5, 3);
    const auto h = oracle::random_poly(rng, r, 4, 2);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f + g == g + f);
    CHECK((f - f).is_zero());
    for (std::size_t i = 0; i < r->size(); ++i) {
      CHECK((f * g).derivative(i) == f * g.derivative(i) + g * f.derivative(i));
    }
    CHECK(parse_polynomial(f.to_string(), r) == f);

    const int d = 1 + trial % 4;
    const auto hf = oracle::random_homogeneous(rng, r, 6, d);
    Polynomial euler(r);
    for (std::size_t i = 0; i < r->size(); ++i) {
      euler += Polynomial::variable(r, i) * hf.derivative(i);
    }
    CHECK(euler == hf * Scalar(d));
  }
}

TEST_CASE("property: squarefree part of a product with a repeated factor") {
  // s = squarefree_part(f) must divide f, f must divide s^deg f, and s has
  // no repeated factor: gcd(s, all partials of s) is constant.
  std::mt19937_64 rng(11);
  auto r = xyz();
  int checked = 0;
  while (checked < 50) {
    const auto a = oracle::random_poly(rng, r, 3, 2);
    const auto b = oracle::random_poly(rng, r, 3, 2);
    if (a.total_degree() < 1 || b.is_zero()) continue;
    const auto f = a * a * b;
    const auto s = squarefree_part(f);
    CHECK(divide_exact(f, s).has_value());
    CHECK(divide_exact(s.pow(static_cast<unsigned>(f.total_degree())), f).has_value());
    Polynomial g = s;
    for (const auto& d : gradient(s)) g = gcd(g, d);
    CHECK(g.total_degree() <= 0);
    CHECK(s.total_degree() < f.total_degree());
    ++checked;
  }
}
