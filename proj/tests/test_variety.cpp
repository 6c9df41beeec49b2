#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mld/errors.hpp"
#include "mld/gcd.hpp"
#include "mld/parser.hpp"
#include "mld/variety.hpp"
#include "oracle.hpp"

using namespace mld;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(parse_polynomial(g, r));
  return Ideal(r, std::move(v));
}

bool same_up_to_scalar(const Polynomial& a, const Polynomial& b) {
  return primitive_normalized(a) == primitive_normalized(b);
}

std::vector<Scalar> point(std::initializer_list<long> xs) {
  std::vector<Scalar> p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

// Rename variables by a permutation: variable i of `p` becomes variable perm[i].
Polynomial permuted(const Polynomial& p, const std::vector<std::size_t>& perm) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    images.push_back(Polynomial::variable(p.ring(), perm[i]));
  }
  return p.substitute(images);
}

RationalMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  RationalMatrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = d(rng);
  }
  return m;
}

Scalar det3(const RationalMatrix& q) {
  return q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
         q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
         q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
}

Polynomial quadratic_form(const RingPtr& r, const RationalMatrix& q) {
  Polynomial f(r);
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      f += Polynomial::variable(r, i) * Polynomial::variable(r, j) * q[i][j];
    }
  }
  return f;
}

}  // namespace

TEST_CASE("jacobian examples") {
  auto r = make_ring({"x", "y", "z"});
  const auto j = jacobian(r, {P("x*z - y^2", r)});
  REQUIRE(j.rows() == 1);
  CHECK(j.row(0) == std::vector<Polynomial>{P("z", r), P("-2*y", r), P("x", r)});

  const auto empty = jacobian(r, {});
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 3);

  auto r4 = make_ring({"x", "y", "z", "t"});
  const auto c = jacobian(r4, {P("x^3 - y^2*z - t^3", r4)});
  CHECK(c.row(0) ==
        std::vector<Polynomial>{P("3*x^2", r4), P("-2*y*z", r4), P("-y^2", r4), P("-3*t^2", r4)});
}

TEST_CASE("minors examples") {
  auto r = make_ring({"x", "y", "z"});
  const auto j = jacobian(r, {P("x*z - y^2", r)});
  CHECK(minors(j, 1) == j.row(0));
  CHECK_THROWS_AS(minors(j, 2), InvalidArgument);

  auto r4 = make_ring({"a", "b", "c", "d"});
  PolyMatrix m(r4, 2);
  m.append_row({P("a", r4), P("b", r4)});
  m.append_row({P("c", r4), P("d", r4)});
  const auto d = minors(m, 2);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == P("a*d - b*c", r4));
  CHECK(determinant(m) == d[0]);
}

TEST_CASE("projective closure examples") {
  auto r = make_ring({"x", "y", "z"});
  auto net = projective_closure(I(r, {"x*z^2 - y^2*z - 1"}), "t");
  REQUIRE(net.size() == 1);
  CHECK(same_up_to_scalar(net.generators()[0], P("x*z^2 - y^2*z - t^3", net.ring())));

  auto cusp = projective_closure(I(r, {"x^3 - y^2*z - 1"}), "t");
  REQUIRE(cusp.size() == 1);
  CHECK(same_up_to_scalar(cusp.generators()[0], P("x^3 - y^2*z - t^3", cusp.ring())));

  auto r1 = make_ring({"x"});
  auto line = projective_closure(I(r1, {"x - 1"}), "t");
  REQUIRE(line.size() == 1);
  CHECK(same_up_to_scalar(line.generators()[0], P("x - t", line.ring())));

  CHECK_THROWS_AS(projective_closure(I(r, {"x - 1"}), "y"), InvalidArgument);
}

TEST_CASE("dual variety examples") {
  auto r = make_ring({"x", "y", "z", "t"});
  const auto quartic = dual_variety(I(r, {"x*z^2 - y^2*z - t^3"}));
  REQUIRE(quartic.is_hypersurface);
  CHECK(*quartic.degree == 4);
  CHECK(same_up_to_scalar(*quartic.defining_polynomial,
                          P("27*y^4 - 216*x*y^2*z + 432*x^2*z^2 + 64*x*t^3", r)));
  CHECK(*quartic.multiplicity_at_p == 1);

  const auto sextic = dual_variety(I(r, {"x^3 - y^2*z - t^3"}));
  REQUIRE(sextic.is_hypersurface);
  CHECK(*sextic.degree == 6);
  CHECK(same_up_to_scalar(
      *sextic.defining_polynomial,
      P("16*x^6 + 216*x^3*y^2*z + 729*y^4*z^2 + 32*x^3*t^3 - 216*y^2*z*t^3 + 16*t^6", r)));
  CHECK(*sextic.multiplicity_at_p == 0);

  auto r3 = make_ring({"x0", "x1", "x2"});
  const auto conic = dual_variety(I(r3, {"4*x0*x2 - x1^2"}));
  REQUIRE(conic.is_hypersurface);
  CHECK(same_up_to_scalar(*conic.defining_polynomial, P("x0*x2 - x1^2", r3)));

  // a double plane has a point as its dual
  const auto plane = dual_variety(I(make_ring({"x", "y", "z"}), {"x + y + z"}));
  CHECK_FALSE(plane.is_hypersurface);
  CHECK_FALSE(plane.degree.has_value());
}

TEST_CASE("multiplicity examples") {
  auto r = make_ring({"x", "y", "z", "t"});
  const auto quartic = P("27*y^4 - 216*x*y^2*z + 432*x^2*z^2 + 64*x*t^3", r);
  CHECK(multiplicity_at(quartic, point({0, 0, 0, 1})) == 1);
  const auto sextic =
      P("16*x^6 + 216*x^3*y^2*z + 729*y^4*z^2 + 32*x^3*t^3 - 216*y^2*z*t^3 + 16*t^6", r);
  CHECK(multiplicity_at(sextic, point({0, 0, 0, 1})) == 0);

  auto r3 = make_ring({"x", "y", "z"});
  CHECK(multiplicity_at(P("y^2*z - x^3", r3), point({0, 0, 1})) == 2);
  CHECK(multiplicity_at(P("y^2*z - x^3", r3), point({1, 1, 1})) == 1);
  CHECK(multiplicity_at(P("y^2*z - x^3", r3), point({1, 0, 0})) == 0);
  CHECK_THROWS_AS(multiplicity_at(P("x", r3), point({0, 0, 0})), InvalidArgument);
}

TEST_CASE("milnor sum examples") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(milnor_sum_plane_curve(P("z*(x*z - y^2)", r)).total == 3);
  // local algebra of y^2 - x^3 at the origin: k[x,y]/<x^2, y>
  auto r2 = make_ring({"x", "y"});
  const mpz_class cusp_mu = zero_dim_count(I(r2, {"3*x^2", "-2*y"}));
  CHECK(cusp_mu == 2);
  CHECK(milnor_sum_plane_curve(P("x^3 - y^2*z", r)).total == cusp_mu);
  auto r0 = make_ring({"x0", "x1", "x2"});
  CHECK(milnor_sum_plane_curve(P("4*x0*x2 - x1^2", r0)).total == 0);

  // repeated factors are dropped first: a double line is a smooth line
  CHECK(milnor_sum_plane_curve(P("x^2", r)).total == 0);
  CHECK_THROWS_AS(milnor_sum_plane_curve(P("x", make_ring({"x", "y"}))), InvalidArgument);
}

TEST_CASE("inverse variety examples") {
  RationalMatrix a{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  RationalMatrix b{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  RationalMatrix c{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  const auto inv = inverse_variety({a, b, c});
  auto s3 = symmetric_ring(3);
  CHECK(same_ideal(inv, I(s3, {"x22 - x13", "x13*x23 - x12*x33", "x12*x23 - x11*x33",
                               "x12^2 - x11*x13"})));

  RationalMatrix e11{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  RationalMatrix e22{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  RationalMatrix e33{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
  CHECK(same_ideal(inverse_variety({e11, e22, e33}), I(s3, {"x12", "x13", "x23"})));

  RationalMatrix p{{1, 2}, {2, -1}};
  RationalMatrix q{{3, 0}, {0, 5}};
  const auto line = inverse_variety({p, q});
  const auto h = hilbert_data(line);
  CHECK(h.dimension == 1);
  CHECK(h.degree == 1);

  RationalMatrix n1{{1, 0}, {0, 0}};
  CHECK_THROWS_AS(inverse_variety({n1}), InvalidArgument);
  RationalMatrix bad{{1, 2}, {3, 4}};
  CHECK_THROWS_AS(inverse_variety({bad}), InvalidArgument);
}

TEST_CASE("smoothness check examples") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(smoothness_check(I(r, {"x*z - y^2"}), P("x + y + z", r)));
  // the cusp point [0:0:1] is off V(z) and on V(x)
  CHECK_FALSE(smoothness_check(I(r, {"y^2*z - x^3"}), P("z", r)));
  CHECK(smoothness_check(I(r, {"y^2*z - x^3"}), P("x", r)));
}

TEST_CASE("property: parallel minors match the serial reference") {
  std::mt19937_64 rng(11);
  auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    const std::size_t rows = dim(rng), cols = dim(rng);
    PolyMatrix m(r, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < cols; ++j) row.push_back(oracle::random_poly(rng, r, 3, 2));
      m.append_row(row);
    }
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      CHECK(minors(m, k) == minors_serial(m, k));
    }
  }
}

TEST_CASE("property: multiplicity at a point") {
  std::mt19937_64 rng(12);
  auto r = make_ring({"x", "y", "z"});
  std::uniform_int_distribution<int> coord(-3, 3);
  int cases = 0;
  while (cases < 50) {
    auto p = point({coord(rng), coord(rng), coord(rng)});
    if (std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s == 0; })) continue;
    ++cases;
    // forms vanishing at p: combinations of the 2x2 minors p_i x_j - p_j x_i
    std::vector<Polynomial> lin;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        lin.push_back(Polynomial::variable(r, j) * p[i] - Polynomial::variable(r, i) * p[j]);
      }
    }
    auto combo = [&]() {
      Polynomial l(r);
      for (const auto& m : lin) l += m * Scalar(coord(rng));
      return l;
    };
    const auto g = oracle::random_homogeneous(rng, r, 4, 2);
    if (g.is_zero()) continue;
    const unsigned mg = multiplicity_at(g, p);
    CHECK((mg == 0) == (g.evaluate(p) != 0));

    // through p: multiplicity 1 iff some first partial survives at p
    const auto h = combo() * oracle::random_homogeneous(rng, r, 3, 1) + combo() * combo();
    if (h.is_zero()) continue;
    const unsigned mh = multiplicity_at(h, p);
    CHECK(mh >= 1);
    bool smooth = false;
    for (const auto& d : gradient(h)) smooth = smooth || d.evaluate(p) != 0;
    CHECK((mh == 1) == smooth);

    // product of two forms through p
    const auto l1 = combo(), l2 = combo();
    if (l1.is_zero() || l2.is_zero()) continue;
    CHECK(multiplicity_at(l1 * l2, p) == 2);
  }
}

TEST_CASE("property: milnor sum is invariant under permuting x, y, z") {
  std::mt19937_64 rng(13);
  auto r = make_ring({"x", "y", "z"});
  std::uniform_int_distribution<int> coef(-4, 4);
  auto linear = [&]() {
    Polynomial l(r);
    for (std::size_t i = 0; i < 3; ++i) l += Polynomial::variable(r, i) * Scalar(coef(rng));
    return l;
  };
  const std::vector<Polynomial> seeds = {P("z*(x*z - y^2)", r), P("x^3 - y^2*z", r),
                                         P("x*y*z", r), P("y^2*z - x^3 - x^2*z", r)};
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = seeds[trial % seeds.size()];
    if (trial >= 8) {
      // k lines in general position: k(k-1)/2 nodes
      const int k = 2 + trial % 3;
      f = Polynomial::constant(r, 1);
      for (int i = 0; i < k; ++i) f *= linear();
      if (f.is_zero()) continue;
      // skip accidental concurrences and repeated lines
      if (squarefree_part(f).total_degree() != k) continue;
    }
    const auto base = milnor_sum_plane_curve(f);
    std::vector<std::size_t> perm = {0, 1, 2};
    while (std::next_permutation(perm.begin(), perm.end())) {
      CHECK(milnor_sum_plane_curve(permuted(f, perm)).total == base.total);
    }
    CHECK(std::accumulate(base.chart_contributions.begin(), base.chart_contributions.end(),
                          mpz_class(0)) == base.total);
  }
}

TEST_CASE("property: dual of a quadric is the inverse quadric") {
  std::mt19937_64 rng(14);
  auto r = make_ring({"x", "y", "z"});
  int cases = 0;
  while (cases < 50) {
    const auto q = random_symmetric(rng, 3, 3);
    const Scalar d = det3(q);
    if (d == 0) continue;
    ++cases;
    // adjugate = det * inverse
    RationalMatrix adj(3, std::vector<Scalar>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const std::size_t i1 = (j + 1) % 3, i2 = (j + 2) % 3;
        const std::size_t j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        adj[i][j] = q[i1][j1] * q[i2][j2] - q[i1][j2] * q[i2][j1];
      }
    }
    const auto dual = dual_variety(Ideal(r, {quadratic_form(r, q)}));
    REQUIRE(dual.is_hypersurface);
    CHECK(*dual.degree == 2);
    CHECK(same_up_to_scalar(*dual.defining_polynomial, quadratic_form(r, adj)));
  }
}

TEST_CASE("property: dual variety commutes with permuting coordinates") {
  std::mt19937_64 rng(15);
  auto r = make_ring({"x", "y", "z", "t"});
  const std::vector<Polynomial> surfaces = {P("x*z^2 - y^2*z - t^3", r), P("x*y - z*t", r),
                                            P("x^2 + y^2 - z*t", r)};
  for (int trial = 0; trial < 12; ++trial) {
    const auto& g = surfaces[trial % surfaces.size()];
    std::vector<std::size_t> perm = {0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto base = dual_variety(Ideal(r, {g}));
    const auto moved = dual_variety(Ideal(r, {permuted(g, perm)}));
    REQUIRE(base.is_hypersurface);
    REQUIRE(moved.is_hypersurface);
    CHECK(same_up_to_scalar(*moved.defining_polynomial,
                            permuted(*base.defining_polynomial, perm)));
  }
}

TEST_CASE("property: inverting twice recovers the linear relations") {
  std::mt19937_64 rng(16);
  auto s3 = symmetric_ring(3);
  int cases = 0;
  while (cases < 5) {
    const std::vector<RationalMatrix> basis = {random_symmetric(rng, 3, 3),
                                               random_symmetric(rng, 3, 3)};
    if (det3(basis[0]) == 0) continue;
    ++cases;
    // linear relations of L: eliminate the span parameters
    auto r = make_ring({"s1", "s2", "x11", "x12", "x13", "x22", "x23", "x33"});
    const auto m = linear_combination(r, basis, std::vector<Polynomial>{
                                                    Polynomial::variable(r, 0),
                                                    Polynomial::variable(r, 1)});
    Ideal graph(r, {});
    const auto entries = symbolic_symmetric(s3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i; j < 3; ++j) graph.add(entries.at(i, j).in_ring(r) - m.at(i, j));
    }
    const Ideal relations = eliminate_into(graph, {"s1", "s2"}, s3);
    CHECK(relations.size() == 4);

    const auto once = inverse_variety(basis);
    const auto twice = inverse_variety(once, 3);
    CHECK(ideal_contains(twice, relations));
  }
}
