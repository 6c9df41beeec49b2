#include "mld/mld.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>

#include "mld/errors.hpp"
#include "mld/gcd.hpp"

namespace mld {

std::string to_string(Method m) {
  switch (m) {
    case Method::A: return "a";
    case Method::B: return "b";
    case Method::dual: return "dual";
    case Method::milnor: return "milnor";
    case Method::chern: return "chern";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Method m : {Method::A, Method::B, Method::dual, Method::milnor, Method::chern}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::genericity_failure: return "genericity_failure";
    case Status::unsupported: return "unsupported";
    case Status::inconsistent: return "inconsistent";
    case Status::error: return "error";
    case Status::skipped: return "skipped";
  }
  return "?";
}

long chern_coefficient(const IntersectionTable& t) {
  const std::size_t r = t.labels.size();
  if (t.dim == 1) {
    if (t.degrees.size() != r + 1) throw InvalidArgument("intersection table: missing degrees");
    long sum = 0;
    for (long d : t.degrees) sum += d;
    return sum;
  }
  if (t.dim != 2) throw InvalidArgument("intersection table: only dimensions 1 and 2 are supported");
  if (t.matrix.size() != r + 1) throw InvalidArgument("intersection table: missing rows");
  for (const auto& row : t.matrix) {
    if (row.size() != r + 1) throw InvalidArgument("intersection table: missing entries");
  }
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t.matrix[i][j] != t.matrix[j][i]) {
        throw InvalidArgument("intersection table is not symmetric");
      }
    }
  }
  long sum = t.chi_top;
  for (std::size_t i = 1; i <= r; ++i) {
    sum += t.matrix[0][i] + t.matrix[i][i];
    for (std::size_t j = i + 1; j <= r; ++j) sum += t.matrix[i][j];
  }
  return sum;
}

long curve_formula_mld(const CurveData& c) {
  if (c.genus < 0 || c.degree < 1) throw InvalidArgument("curve data out of range");
  long sum = -2 + 2 * c.genus + c.degree;
  for (long h : c.branches) {
    if (h < 1) throw InvalidArgument("branch counts must be positive");
    sum += h;
  }
  return sum;
}

ProblemSpec projective_problem(RingPtr ring, std::vector<Polynomial> generators, Polynomial f) {
  ProblemSpec spec;
  spec.ring = std::move(ring);
  spec.generators = std::move(generators);
  spec.f = std::move(f);
  return spec;
}

ProblemSpec symmetric_problem(std::size_t n, std::vector<Polynomial> generators) {
  ProblemSpec spec;
  spec.ring = symmetric_ring(n);
  spec.ambient = Ambient::symmetric;
  spec.symmetric_n = n;
  for (auto& g : generators) spec.generators.push_back(g.in_ring(spec.ring));
  spec.f = determinant(symbolic_symmetric(spec.ring, n));
  return spec;
}

int validate(const ProblemSpec& spec) {
  if (!spec.ring) throw InvalidArgument("problem has no ring");
  const auto d = homogeneity_degree(spec.f);
  if (!d || *d < 1) throw InvalidArgument("F must be homogeneous of positive degree");
  for (const auto& g : spec.generators) {
    if (!homogeneity_degree(g)) throw InvalidArgument("ideal generators must be homogeneous");
  }
  const Ideal x(spec.ring, spec.generators);
  const auto h = hilbert_data(x);
  if (h.dimension < 0) throw InvalidArgument("X is empty");
  const int c = static_cast<int>(spec.ring->size()) - 1 - h.dimension;
  if (spec.codim && *spec.codim != c) {
    throw InvalidArgument("supplied codimension " + std::to_string(*spec.codim) +
                          " differs from the computed " + std::to_string(c));
  }
  if (spec.eta_bound < 1) throw InvalidArgument("eta_bound must be positive");
  if (spec.retries < 1) throw InvalidArgument("retries must be positive");
  return c;
}

std::vector<long> draw_integers(std::uint64_t seed, int attempt, std::size_t count, long lo,
                                long hi, bool skip_zero) {
  // mt19937_64 output is fixed by the standard; the bounded draw below is
  // plain rejection sampling so results do not depend on the library.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 eng(seq);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::vector<long> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::uint64_t v = eng();
    if (limit != 0 && v >= limit) continue;
    const long x = lo + static_cast<long>(v % span);
    if (skip_zero && x == 0) continue;
    out.push_back(x);
  }
  return out;
}

EtaVector draw_eta(const ProblemSpec& spec, int attempt) {
  EtaVector eta;
  eta.seed = spec.seed;
  eta.attempt = attempt;
  const std::size_t n = spec.ring->size();
  eta.entries = draw_integers(spec.seed, attempt, n, -spec.eta_bound, spec.eta_bound, true);
  if (spec.ambient == Ambient::symmetric) {
    // entries are S_ij for i <= j in the order of symmetric_names
    std::size_t v = 0;
    for (std::size_t i = 0; i < spec.symmetric_n; ++i) {
      for (std::size_t j = i; j < spec.symmetric_n; ++j, ++v) {
        eta.coefficients.push_back(Scalar(i == j ? eta.entries[v] : 2 * eta.entries[v]));
      }
    }
  } else {
    for (long e : eta.entries) eta.coefficients.push_back(Scalar(e));
  }
  return eta;
}

namespace {

Polynomial eta_form(const RingPtr& ring, const EtaVector& eta) {
  Polynomial l(ring);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    l += Polynomial::variable(ring, i) * eta.coefficients[i];
  }
  return l;
}

unsigned degree_of(const Polynomial& f) {
  const auto d = homogeneity_degree(f);
  if (!d) throw InvalidArgument("F must be homogeneous");
  return *d;
}

void append_gradients(PolyMatrix& m, const ProblemSpec& spec) {
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    m.append_row(gradient(spec.generators[i].in_ring(spec.ring)),
                 "grad g" + std::to_string(i + 1));
  }
}

Ideal with_minors(const ProblemSpec& spec, const PolyMatrix& m, std::size_t k) {
  Ideal out(spec.ring, spec.generators);
  if (k > m.rows() || k > m.cols()) return out;  // no minors of that size: the ideal is I(X)
  for (auto& p : minors(m, k)) out.add(p);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

namespace {

// grad F - F eta and grad F share the factor F / squarefree(F); dividing it
// out leaves the same saturation with far smaller junk components.
std::vector<Polynomial> reduced_row(const Polynomial& f, std::vector<Polynomial> row) {
  const auto g = divide_exact(f, squarefree_part(f));
  if (!g) throw InconsistencyError("squarefree part does not divide F");
  if (g->is_constant()) return row;
  for (auto& e : row) {
    auto q = divide_exact(e, *g);
    if (!q) throw InconsistencyError("gradient row is not divisible by F / squarefree(F)");
    e = std::move(*q);
  }
  return row;
}

}  // namespace

PolyMatrix matrix_A(const ProblemSpec& spec, const EtaVector& eta) {
  PolyMatrix m(spec.ring, spec.ring->size());
  const Polynomial f = spec.f.in_ring(spec.ring);
  std::vector<Polynomial> row = gradient(f);
  for (std::size_t i = 0; i < row.size(); ++i) row[i] -= f * eta.coefficients[i];
  m.append_row(reduced_row(f, std::move(row)), "grad F - F eta");
  append_gradients(m, spec);
  return m;
}

PolyMatrix matrix_B(const ProblemSpec& spec, const EtaVector& eta) {
  PolyMatrix m(spec.ring, spec.ring->size());
  const Polynomial f = spec.f.in_ring(spec.ring);
  m.append_row(reduced_row(f, gradient(f)), "grad F");
  std::vector<Polynomial> row;
  for (const auto& c : eta.coefficients) row.push_back(Polynomial::constant(spec.ring, c));
  m.append_row(row, "eta");
  append_gradients(m, spec);
  return m;
}

Ideal critical_ideal_A_unsaturated(const ProblemSpec& spec, const EtaVector& eta, int c) {
  return with_minors(spec, matrix_A(spec, eta), static_cast<std::size_t>(c) + 1);
}

Ideal critical_ideal_B_unsaturated(const ProblemSpec& spec, const EtaVector& eta, int c) {
  Ideal j = with_minors(spec, matrix_B(spec, eta), static_cast<std::size_t>(c) + 2);
  j.add(eta_form(spec.ring, eta) - Polynomial::constant(spec.ring, degree_of(spec.f)));
  return j;
}

Ideal critical_ideal_A(const ProblemSpec& spec, const EtaVector& eta) {
  const int c = validate(spec);
  return groebner_basis(saturate(critical_ideal_A_unsaturated(spec, eta, c), spec.f)).ideal();
}

Ideal critical_ideal_B(const ProblemSpec& spec, const EtaVector& eta) {
  const int c = validate(spec);
  return groebner_basis(saturate(critical_ideal_B_unsaturated(spec, eta, c), spec.f)).ideal();
}

namespace {

Ideal localized_ideal(const Ideal& unsaturated, const Polynomial& f) {
  const RingPtr& base = unsaturated.ring();
  // t goes first: as the largest variable in degrevlex it is eliminated
  // early, which keeps the junk inside V(F) from growing the basis
  std::vector<std::string> names{fresh_name(*base, "_t")};
  names.insert(names.end(), base->names().begin(), base->names().end());
  const RingPtr ring = make_ring(std::move(names));
  Ideal ext = unsaturated.in_ring(ring);
  ext.add(Polynomial::constant(ring, 1) - Polynomial::variable(ring, 0) * f.in_ring(ring));
  return ext;
}

}  // namespace

bool LocalizedScheme::saturation_contains(const Polynomial& g) const {
  return basis.contains(g.in_ring(ideal.ring()));
}

LocalizedScheme localize(const Ideal& unsaturated, const Polynomial& f) {
  Ideal ext = localized_ideal(unsaturated, f);
  GroebnerBasis gb = groebner_basis(ext);
  return LocalizedScheme{std::move(ext), std::move(gb)};
}

namespace {

// Row-reduces `rows` in place and keeps an independent spanning subset.
std::vector<std::vector<Scalar>> independent_rows(std::vector<std::vector<Scalar>> rows) {
  std::vector<std::vector<Scalar>> kept;
  std::vector<std::size_t> pivots;
  for (auto& r : rows) {
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const Scalar c = r[pivots[k]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (kept[k][i] != 0) r[i] -= c * kept[k][i];
      }
    }
    const auto it = std::find_if(r.begin(), r.end(), [](const Scalar& x) { return x != 0; });
    if (it == r.end()) continue;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const Scalar inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    // keep earlier rows reduced at the new pivot
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const Scalar c = kept[k][p];
      if (c == 0) continue;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] != 0) kept[k][i] -= c * r[i];
      }
    }
    kept.push_back(std::move(r));
    pivots.push_back(p);
  }
  return kept;
}

}  // namespace

constexpr std::uint32_t kProbePrime = 2147483647;

SaturatedQuotient::SaturatedQuotient(const Ideal& unsaturated, const Polynomial& f) {
  // Cheap routing probe: when J is positive-dimensional (junk inside V(F))
  // its plain basis is costly and the localization is the better route.
  try {
    const auto lms = leading_monomials_mod_p(unsaturated, MonomialOrder::degrevlex(), kProbePrime);
    count_standard_monomials(lms, unsaturated.ring()->names());
  } catch (const DimensionError&) {
    use_localization(unsaturated, f);
    return;
  } catch (const InvalidArgument&) {
    // a denominator vanishes mod the probe prime; go exact
  }
  basis_.emplace(groebner_basis(unsaturated));
  if (basis_->is_unit()) return;
  try {
    monomials_ = standard_monomials(*basis_);
  } catch (const DimensionError&) {
    basis_.reset();
    use_localization(unsaturated, f);
    return;
  }
  const std::size_t n = monomials_.size();
  std::unordered_map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(monomials_[i], i);
  // column j of the multiplication map is NF(f * b_j)
  const Polynomial local = f.in_ring(basis_->ring());
  std::vector<std::vector<Scalar>> columns(n, std::vector<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial image = basis_->normal_form(local.mul_term(monomials_[j], 1));
    for (const auto& t : image.terms()) columns[j][index.at(t.monomial)] = t.coeff;
  }
  // F acts nilpotently on the part supported on V(F) and invertibly on the
  // rest, so the images F^k (k[x]/J) shrink to a stable subspace whose
  // dimension is the length of J : F^inf.
  std::vector<std::vector<Scalar>> span = columns;
  std::size_t dim = n;
  for (;;) {
    span = independent_rows(std::move(span));
    if (span.size() == dim || span.empty()) break;
    dim = span.size();
    std::vector<std::vector<Scalar>> next;
    for (const auto& v : span) {
      std::vector<Scalar> w(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
          if (columns[j][i] != 0) w[i] += v[j] * columns[j][i];
        }
      }
      next.push_back(std::move(w));
    }
    span = std::move(next);
  }
  stable_ = std::move(span);
  length_ = static_cast<unsigned long>(stable_.size());
}

void SaturatedQuotient::use_localization(const Ideal& unsaturated, const Polynomial& f) {
  localized_.emplace(localize(unsaturated, f));
  length_ = localized_->count();
}

bool SaturatedQuotient::contains(const Polynomial& g) const {
  if (localized_) return localized_->saturation_contains(g);
  if (!basis_ || basis_->is_unit()) return true;
  // g lies in J : F^inf iff it kills F^k (k[x]/J)
  const Polynomial local = g.in_ring(basis_->ring());
  for (const auto& v : stable_) {
    Polynomial element(basis_->ring());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) element += Polynomial::term(basis_->ring(), monomials_[j], v[j]);
    }
    if (!basis_->normal_form(local * element).is_zero()) return false;
  }
  return true;
}

mpz_class localized_count_mod_p(const Ideal& unsaturated, const Polynomial& f,
                                std::uint32_t prime) {
  const Ideal ext = localized_ideal(unsaturated, f);
  const auto lms = leading_monomials_mod_p(ext, MonomialOrder::degrevlex(), prime);
  for (const auto& m : lms) {
    if (m.is_one()) return 0;
  }
  return count_standard_monomials(lms, ext.ring()->names());
}

namespace {

// One count for a fixed eta. Empty when the modular images disagree.
std::optional<mpz_class> count_once(const ProblemSpec& spec, Method method, const EtaVector& eta,
                                    int c) {
  const unsigned d = degree_of(spec.f);
  const Polynomial slice = eta_form(spec.ring, eta) - Polynomial::constant(spec.ring, d);
  Ideal j = method == Method::A ? critical_ideal_A_unsaturated(spec, eta, c)
                                : critical_ideal_B_unsaturated(spec, eta, c);
  const bool sliced = method == Method::B || spec.slice_method_a;
  if (method == Method::A && spec.slice_method_a) j.add(slice);
  // same saturation, lower degree
  const Polynomial f = squarefree_part(spec.f);
  if (spec.modular) {
    const auto primes = random_primes(spec.seed + static_cast<std::uint64_t>(eta.attempt), 2);
    const mpz_class c0 = localized_count_mod_p(j, f, primes[0]);
    const mpz_class c1 = localized_count_mod_p(j, f, primes[1]);
    if (c0 != c1) return std::nullopt;
    return c0;
  }
  const SaturatedQuotient scheme(j, f);
  const mpz_class n = scheme.length();
  if (n > 0 && !sliced) {
    // critical points lie on eta(x) = deg F
    if (!scheme.contains(slice)) {
      throw InconsistencyError("critical points off the hyperplane eta(x) = deg F");
    }
  }
  return n;
}

}  // namespace

CountResult mld_count(const ProblemSpec& spec, Method method) {
  if (method != Method::A && method != Method::B) {
    throw InvalidArgument("mld_count supports methods a and b only");
  }
  const int c = validate(spec);
  CountResult result;
  for (int round = 0; round < spec.retries; ++round) {
    result.rounds = round + 1;
    const EtaVector e0 = draw_eta(spec, 2 * round);
    const EtaVector e1 = draw_eta(spec, 2 * round + 1);
    result.eta_draws.push_back(e0);
    result.eta_draws.push_back(e1);
    std::optional<mpz_class> n0, n1;
    try {
      n0 = count_once(spec, method, e0, c);
      if (!n0) continue;
      n1 = count_once(spec, method, e1, c);
    } catch (const DimensionError&) {
      continue;
    }
    if (n1 && *n0 == *n1) {
      result.count = *n0;
      return result;
    }
  }
  throw GenericityFailure("method " + to_string(method) + ": no two eta draws agreed in " +
                          std::to_string(spec.retries) + " rounds");
}

DualCount mld_dual(const ProblemSpec& spec) {
  validate(spec);
  Ideal affine(spec.ring, spec.generators);
  affine.add(spec.f - Polynomial::constant(spec.ring, 1));
  const Ideal closure = projective_closure(affine, fresh_name(*spec.ring, "t"));
  DualCount out;
  out.dual = dual_variety(closure);
  if (!out.dual.is_hypersurface) return out;
  const long num = static_cast<long>(*out.dual.degree) - *out.dual.multiplicity_at_p;
  const long d = degree_of(spec.f);
  if (num % d != 0) {
    throw InconsistencyError("dual method: deg - m_p = " + std::to_string(num) +
                             " is not divisible by deg F = " + std::to_string(d));
  }
  out.count = num / d;
  return out;
}

mpz_class mld_milnor(const Polynomial& f) {
  if (f.ring()->size() != 3) throw UnsupportedInput("milnor method needs X = P^2");
  const Polynomial s = squarefree_part(f);
  const long d = s.total_degree();
  const SingularityReport sing = milnor_sum_plane_curve(f);
  return mpz_class((d - 1) * (d - 1)) - sing.total;
}

MldReport run_methods(const ProblemSpec& spec) {
  MldReport report;
  report.codim = validate(spec);
  const std::size_t k = spec.methods.size();
  report.methods.resize(k);
  for (std::size_t i = 0; i < k; ++i) report.methods[i].method = spec.methods[i];

  std::string smooth_problem;
  if (spec.check_smoothness &&
      !smoothness_check(Ideal(spec.ring, spec.generators), spec.f)) {
    smooth_problem = "X is singular away from V(F)";
  }

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < k; ++i) {
    MethodResult& r = report.methods[i];
    const auto start = std::chrono::steady_clock::now();
    try {
      if (!smooth_problem.empty()) throw UnsupportedInput(smooth_problem);
      switch (r.method) {
        case Method::A:
        case Method::B: {
          CountResult c = mld_count(spec, r.method);
          r.count = c.count;
          r.eta_draws = std::move(c.eta_draws);
          break;
        }
        case Method::dual:
          r.count = mld_dual(spec).count;
          break;
        case Method::milnor:
          if (!spec.generators.empty()) {
            throw UnsupportedInput("milnor method needs X = P^2 without generators");
          }
          r.count = mld_milnor(spec.f);
          break;
        case Method::chern:
          if (!spec.chern_table) throw UnsupportedInput("chern method needs an intersection table");
          r.count = mpz_class(chern_coefficient(*spec.chern_table));
          break;
      }
      r.status = Status::ok;
    } catch (const GenericityFailure& e) {
      r.status = Status::genericity_failure;
      r.message = e.what();
    } catch (const UnsupportedInput& e) {
      r.status = Status::unsupported;
      r.message = e.what();
    } catch (const InconsistencyError& e) {
      r.status = Status::inconsistent;
      r.message = e.what();
    } catch (const std::exception& e) {
      r.status = Status::error;
      r.message = e.what();
    }
    r.seconds = seconds_since(start);
  }

  report.agreement.assign(k, std::vector<std::optional<bool>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = report.methods[i].count;
      const auto& b = report.methods[j].count;
      if (a && b) {
        report.agreement[i][j] = (*a == *b);
        if (*a != *b) report.disagreement = true;
      }
    }
  }
  if (!report.disagreement) {
    for (const auto& m : report.methods) {
      if (m.count) {
        report.final_value = *m.count;
        break;
      }
    }
  }
  return report;
}

MldReport gaussian_mld(const std::vector<RationalMatrix>& basis, ProblemSpec options,
                       std::vector<std::string> names) {
  validate_symmetric_basis(basis);
  if (names.empty()) {
    for (std::size_t i = 1; i <= basis.size(); ++i) names.push_back("s" + std::to_string(i));
  }
  if (names.size() != basis.size()) throw InvalidArgument("one variable name per basis matrix");
  const RingPtr ring = make_ring(names);
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->size(); ++i) vars.push_back(Polynomial::variable(ring, i));
  const Polynomial f = determinant(linear_combination(ring, basis, vars));
  if (f.is_zero()) throw InvalidArgument("the determinant vanishes identically on the span");
  options.ring = ring;
  options.ambient = Ambient::projective;
  options.generators.clear();
  options.f = f;
  return run_methods(options);
}

MldReport gaussian_mld(std::size_t n, std::vector<Polynomial> generators, ProblemSpec options) {
  ProblemSpec base = symmetric_problem(n, std::move(generators));
  options.ring = base.ring;
  options.ambient = Ambient::symmetric;
  options.symmetric_n = n;
  options.generators = std::move(base.generators);
  options.f = std::move(base.f);
  return run_methods(options);
}

namespace {

Polynomial product_of_variables(const RingPtr& ring) {
  Polynomial p = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < ring->size(); ++i) p *= Polynomial::variable(ring, i);
  return p;
}

Ideal discrete_unsaturated(const DiscreteSpec& spec, const std::vector<long>& u, int c) {
  const RingPtr& ring = spec.ring;
  const std::size_t n = ring->size();
  const Polynomial all = product_of_variables(ring);
  PolyMatrix m(ring, n);
  std::vector<Polynomial> row;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial others = Polynomial::constant(ring, 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others *= Polynomial::variable(ring, j);
    }
    row.push_back(others * Scalar(u[i]) - all);
  }
  m.append_row(row, "u/x - 1 (cleared)");
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    m.append_row(gradient(spec.generators[i].in_ring(ring)), "grad g" + std::to_string(i + 1));
  }
  Ideal j(ring, spec.generators);
  const auto k = static_cast<std::size_t>(c) + 1;
  if (k <= m.rows()) {
    for (auto& p : minors(m, k)) j.add(p);
  }
  return j;
}

int discrete_codim(const DiscreteSpec& spec) {
  const auto h = hilbert_data(Ideal(spec.ring, spec.generators));
  if (h.dimension < 0) throw InvalidArgument("X is empty");
  for (const auto& g : spec.generators) {
    if (!homogeneity_degree(g)) throw InvalidArgument("ideal generators must be homogeneous");
  }
  return static_cast<int>(spec.ring->size()) - 1 - h.dimension;
}

}  // namespace

Ideal discrete_critical_ideal(const DiscreteSpec& spec, const std::vector<long>& u) {
  const int c = discrete_codim(spec);
  const Ideal j = discrete_unsaturated(spec, u, c);
  return groebner_basis(saturate(j, product_of_variables(spec.ring))).ideal();
}

DiscreteResult discrete_mld(const DiscreteSpec& spec) {
  if (spec.u_bound < 1) throw InvalidArgument("u_bound must be positive");
  const int c = discrete_codim(spec);
  const Polynomial all = product_of_variables(spec.ring);
  const std::size_t n = spec.ring->size();
  DiscreteResult result;
  for (int round = 0; round < spec.retries; ++round) {
    result.rounds = round + 1;
    const auto u0 = draw_integers(spec.seed, 2 * round, n, 1, spec.u_bound, false);
    const auto u1 = draw_integers(spec.seed, 2 * round + 1, n, 1, spec.u_bound, false);
    result.u_draws.push_back(u0);
    result.u_draws.push_back(u1);
    try {
      const mpz_class n0 = localize(discrete_unsaturated(spec, u0, c), all).count();
      const mpz_class n1 = localize(discrete_unsaturated(spec, u1, c), all).count();
      if (n0 == n1) {
        result.count = n0;
        return result;
      }
    } catch (const DimensionError&) {
    }
  }
  throw GenericityFailure("discrete: no two u draws agreed in " + std::to_string(spec.retries) +
                          " rounds");
}

DiscreteGaussianComparison compare_discrete_gaussian(const DiscreteSpec& spec) {
  DiscreteGaussianComparison out;
  out.discrete = discrete_mld(spec).count;
  ProblemSpec g = projective_problem(spec.ring, spec.generators, product_of_variables(spec.ring));
  g.seed = spec.seed;
  g.retries = spec.retries;
  out.gaussian = mld_count(g, Method::A).count;
  out.holds = out.discrete <= out.gaussian;
  if (!out.holds) {
    throw InconsistencyError("discrete ML degree exceeds the Gaussian one");
  }
  return out;
}

}  // namespace mld
