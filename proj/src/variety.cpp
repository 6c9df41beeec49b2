#include "mld/variety.hpp"

#include <algorithm>
#include <numeric>

#include "mld/errors.hpp"
#include "mld/gcd.hpp"

namespace mld {
namespace {

RingPtr append_variable(const Ring& ring, const std::string& name) {
  std::vector<std::string> names = ring.names();
  names.push_back(name);
  return make_ring(std::move(names));
}

Ideal basis_of(const Ideal& ideal) { return groebner_basis(ideal).ideal(); }

mpz_class count_or_unsupported(const Ideal& ideal, const char* what) {
  try {
    return zero_dim_count(ideal);
  } catch (const DimensionError&) {
    throw UnsupportedInput(std::string(what) + ": singularities are not isolated");
  }
}

}  // namespace

int codimension(const Ideal& ideal) {
  const auto h = hilbert_data(ideal);
  if (h.dimension < 0) throw InvalidArgument("the ideal defines the empty set");
  return static_cast<int>(ideal.ring()->size()) - 1 - h.dimension;
}

Ideal projective_closure(const Ideal& affine, const std::string& t) {
  if (affine.ring()->index_of(t)) {
    throw InvalidArgument("homogenizing variable '" + t + "' already exists");
  }
  const RingPtr ring = append_variable(*affine.ring(), t);
  const std::size_t ti = ring->size() - 1;
  std::vector<Polynomial> gens;
  for (const auto& g : affine.generators()) gens.push_back(g.in_ring(ring).homogenize(ti));
  Ideal hom(ring, std::move(gens));
  return basis_of(saturate(hom, Polynomial::variable(ring, ti)));
}

Polynomial primitive_normalized(const Polynomial& f) {
  if (f.is_zero()) return f;
  mpz_class den = 1;
  for (const auto& t : f.terms()) den = lcm(den, mpz_class(t.coeff.get_den()));
  mpz_class num = 0;
  for (const auto& t : f.terms()) {
    const mpz_class v = t.coeff.get_num() * (den / t.coeff.get_den());
    num = gcd(num, v);
  }
  Scalar scale(den, num);
  if (sgn(f.leading_coeff()) < 0) scale = -scale;
  return f * scale;
}

unsigned multiplicity_at(const Polynomial& g, std::span<const Scalar> p) {
  const RingPtr& ring = g.ring();
  const std::size_t n = ring->size();
  if (p.size() != n) throw InvalidArgument("point has the wrong number of coordinates");
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;) {
    if (sgn(p[i]) != 0) {
      k = i;
      break;
    }
  }
  if (k == n) throw InvalidArgument("the zero vector is not a projective point");
  if (g.is_zero()) throw InvalidArgument("multiplicity of the zero polynomial");
  // New coordinates u_0..u_{n-1}: x_i = u_i + p_i u_{n-1} for i != k
  // (reindexed so that u_{n-1} is the last one), x_k = p_k u_{n-1}. The point
  // u = [0 : ... : 0 : 1] maps to p; then u_{n-1} is set to 1.
  std::vector<Polynomial> images(n);
  const Polynomial last = Polynomial::constant(ring, 1);
  std::size_t slot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      images[i] = last * p[i];
    } else {
      images[i] = Polynomial::variable(ring, slot++) + last * p[i];
    }
  }
  const Polynomial local = g.substitute(images);
  unsigned best = ~0u;
  for (const auto& t : local.terms()) best = std::min(best, t.monomial.degree());
  return best;
}

DualVarietyResult dual_variety(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("dual_variety needs a homogeneous ideal");
  const Ring& primal = *ideal.ring();
  const std::size_t n = primal.size();
  const int e = codimension(ideal);

  // Doubled ring: primal variables then dual ones under fresh names.
  std::vector<std::string> names = primal.names();
  std::vector<std::string> dual_names;
  for (const auto& v : primal.names()) {
    std::string d = v + "_d";
    while (std::find(names.begin(), names.end(), d) != names.end()) d += "_";
    names.push_back(d);
    dual_names.push_back(d);
  }
  const RingPtr doubled = make_ring(names);
  const RingPtr dual_ring = make_ring(dual_names);

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(doubled));
  PolyMatrix jac = jacobian(doubled, gens);
  // only the primal partials matter
  PolyMatrix stacked(doubled, n);
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    std::vector<Polynomial> row(jac.row(i).begin(), jac.row(i).begin() + static_cast<long>(n));
    stacked.append_row(row, jac.label(i));
  }
  PolyMatrix singular = stacked;
  std::vector<Polynomial> yrow;
  for (std::size_t i = 0; i < n; ++i) yrow.push_back(Polynomial::variable(doubled, n + i));
  stacked.append_row(yrow, "y");

  Ideal conormal(doubled, gens);
  for (auto& m : minors(stacked, static_cast<std::size_t>(e) + 1)) conormal.add(m);
  std::vector<Polynomial> saturant = minors(singular, static_cast<std::size_t>(e));

  Ideal elim = eliminate_saturation(conormal, saturant, primal.names(), dual_ring);
  // identify the dual space with the primal names
  const RingPtr out_ring = make_ring(primal.names());
  std::vector<Polynomial> renamed;
  for (const auto& g : groebner_basis(elim).elements()) {
    std::vector<Term> terms(g.terms().begin(), g.terms().end());
    renamed.push_back(Polynomial(out_ring, std::move(terms)));
  }
  DualVarietyResult result{Ideal(out_ring, renamed), false, {}, {}, {}};
  if (renamed.size() == 1 && !renamed.front().is_constant()) {
    const Polynomial f = primitive_normalized(squarefree_part(renamed.front()));
    result.is_hypersurface = true;
    result.defining_polynomial = f;
    result.degree = static_cast<unsigned>(f.total_degree());
    std::vector<Scalar> p(n, 0);
    p.back() = 1;
    result.multiplicity_at_p = multiplicity_at(f, p);
  }
  return result;
}

SingularityReport milnor_sum_plane_curve(const Polynomial& f) {
  const RingPtr& ring = f.ring();
  if (ring->size() != 3) throw InvalidArgument("plane curves need exactly three variables");
  if (!homogeneity_degree(f)) throw InvalidArgument("plane curve equation must be homogeneous");
  const Polynomial s = squarefree_part(f);

  Ideal sing(ring, gradient(s));
  sing.add(s);
  if (hilbert_data(sing).dimension > 0) {
    throw UnsupportedInput("milnor_sum: the curve has non-isolated singularities");
  }

  SingularityReport report;
  // chart c: set variable `fixed` to 1; the remaining two keep their order
  const std::array<std::size_t, 3> fixed = {2, 1, 0};
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != fixed[c]) names.push_back(ring->names()[i]);
    }
    const RingPtr chart = make_ring(names);
    std::vector<Polynomial> images;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      images.push_back(i == fixed[c] ? Polynomial::constant(chart, 1)
                                     : Polynomial::variable(chart, slot++));
    }
    const Polynomial fa = s.substitute(images);
    if (fa.is_constant()) continue;  // the curve misses this chart entirely
    const Ideal j(chart, {fa.derivative(0), fa.derivative(1)});
    Ideal k = j;
    if (!j.empty()) {
      const Ideal off = saturate(j, fa);
      k = basis_of(ideal_quotient(j, off));
    }
    if (is_unit_ideal(k)) continue;
    const mpz_class all = count_or_unsupported(k, "milnor_sum");
    // discard the points outside this chart's partition cell
    mpz_class outside = 0;
    if (c == 1) {
      // cell z = 0: z is the second chart variable
      outside = count_or_unsupported(saturate(k, Polynomial::variable(chart, 1)), "milnor_sum");
    } else if (c == 2) {
      const Ideal yz(chart, {Polynomial::variable(chart, 0), Polynomial::variable(chart, 1)});
      outside = count_or_unsupported(saturate(k, yz), "milnor_sum");
    }
    report.chart_contributions[c] = all - outside;
    report.total += all - outside;
  }
  return report;
}

std::vector<std::string> symmetric_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      names.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  }
  return names;
}

RingPtr symmetric_ring(std::size_t n) { return make_ring(symmetric_names(n)); }

PolyMatrix symbolic_symmetric(const RingPtr& ring, std::size_t n) {
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  std::size_t v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) index[i][j] = index[j][i] = v++;
  }
  PolyMatrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(Polynomial::variable(ring, index[i][j]));
    m.append_row(row);
  }
  return m;
}

std::size_t validate_symmetric_basis(const std::vector<RationalMatrix>& basis) {
  if (basis.empty()) throw InvalidArgument("empty matrix basis");
  const std::size_t n = basis.front().size();
  for (const auto& a : basis) {
    if (a.size() != n) throw InvalidArgument("basis matrices differ in size");
    for (const auto& row : a) {
      if (row.size() != n) throw InvalidArgument("basis matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (a[i][j] != a[j][i]) throw InvalidArgument("basis matrix is not symmetric");
      }
    }
  }
  return n;
}

PolyMatrix linear_combination(const RingPtr& ring, const std::vector<RationalMatrix>& basis,
                              std::span<const Polynomial> coefficients) {
  const std::size_t n = basis.front().size();
  PolyMatrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> row(n, Polynomial(ring));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (sgn(basis[b][i][j]) != 0) row[j] += coefficients[b] * basis[b][i][j];
      }
    }
    m.append_row(row);
  }
  return m;
}

namespace {

// Upper-triangle adjugate entries of a square matrix, row-major.
std::vector<Polynomial> adjugate_entries(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Polynomial> adj;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // adj[i][j] = (-1)^{i+j} * minor(delete row j, col i)
      PolyMatrix sub(m.ring(), n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(m.at(r, c));
        }
        sub.append_row(row);
      }
      Polynomial d = n == 1 ? Polynomial::constant(m.ring(), 1) : determinant(sub);
      if ((i + j) % 2 == 1) d = -d;
      adj.push_back(std::move(d));
    }
  }
  return adj;
}

// Closure of the image of M -> adj(M): the graph ideal `base` (in a ring
// whose trailing variables are the target entries) plus proportionality of
// the target entries to adj(M), saturated by the adjugate entries, with the
// leading `sources` variables eliminated.
Ideal adjugate_image(Ideal base, const PolyMatrix& m, const std::vector<std::string>& sources,
                     std::size_t n) {
  const RingPtr& ring = base.ring();
  const std::vector<Polynomial> adj = adjugate_entries(m);
  PolyMatrix two(ring, adj.size());
  std::vector<Polynomial> xrow;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    xrow.push_back(Polynomial::variable(ring, sources.size() + v));
  }
  two.append_row(xrow, "x");
  two.append_row(adj, "adj");
  for (auto& g : minors(two, 2)) base.add(g);
  const RingPtr target = symmetric_ring(n);
  return basis_of(eliminate_saturation(base, adj, sources, target));
}

}  // namespace

Ideal inverse_variety(const std::vector<RationalMatrix>& basis) {
  const std::size_t n = validate_symmetric_basis(basis);
  const std::vector<std::string> entry_names = symmetric_names(n);
  std::vector<std::string> names;
  std::vector<std::string> params;
  for (std::size_t i = 1; i <= basis.size(); ++i) {
    std::string s = "s" + std::to_string(i);
    while (std::find(entry_names.begin(), entry_names.end(), s) != entry_names.end()) s += "_";
    params.push_back(s);
    names.push_back(s);
  }
  names.insert(names.end(), entry_names.begin(), entry_names.end());
  const RingPtr ring = make_ring(names);
  std::vector<Polynomial> svars;
  for (std::size_t i = 0; i < params.size(); ++i) svars.push_back(Polynomial::variable(ring, i));
  const PolyMatrix m = linear_combination(ring, basis, svars);
  if (determinant(m).is_zero()) {
    throw InvalidArgument("the determinant vanishes identically on the span");
  }
  return adjugate_image(Ideal(ring, {}), m, params, n);
}

Ideal inverse_variety(const Ideal& x, std::size_t n) {
  const std::vector<std::string> entry_names = symmetric_names(n);
  if (x.ring()->names() != entry_names) {
    throw InvalidArgument("inverse_variety expects an ideal in the symmetric matrix coordinates");
  }
  std::vector<std::string> sources;
  for (const auto& e : entry_names) sources.push_back("m" + e.substr(1));
  std::vector<std::string> names = sources;
  names.insert(names.end(), entry_names.begin(), entry_names.end());
  const RingPtr ring = make_ring(names);
  // X lives on the source copy
  const RingPtr source_ring = make_ring(sources);
  std::vector<Polynomial> gens;
  for (const auto& g : x.generators()) {
    std::vector<Term> terms(g.terms().begin(), g.terms().end());
    gens.push_back(Polynomial(source_ring, std::move(terms)).in_ring(ring));
  }
  const PolyMatrix src = symbolic_symmetric(ring, n);
  Ideal base(ring, gens);
  if (!is_unit_ideal(base) && radical_membership(determinant(src), base)) {
    throw InvalidArgument("the determinant vanishes identically on X");
  }
  return adjugate_image(std::move(base), src, sources, n);
}

bool smoothness_check(const Ideal& ideal, const Polynomial& f) {
  const int c = codimension(ideal);
  const PolyMatrix jac = jacobian(ideal.ring(), ideal.generators());
  Ideal sing = ideal;
  if (static_cast<std::size_t>(c) > std::min(jac.rows(), jac.cols())) return false;
  for (auto& m : minors(jac, static_cast<std::size_t>(c))) sing.add(m);
  return is_unit_ideal(saturate(sing, f));
}

}  // namespace mld
