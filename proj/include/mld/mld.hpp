#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mld/variety.hpp"

namespace mld {

enum class Method { A, B, dual, milnor, chern };

std::string to_string(Method m);
/// Accepts "a", "b", "dual", "milnor", "chern" in any case.
std::optional<Method> parse_method(const std::string& name);

/// Pairwise intersection data on a surface (dim 2) or degrees on a curve
/// (dim 1). Index 0 of `matrix` and `degrees` is the canonical class K;
/// indices 1..r are the boundary divisors B_i.
struct IntersectionTable {
  int dim = 2;
  long chi_top = 0;
  std::vector<std::string> labels;  // B_1..B_r
  std::vector<std::vector<long>> matrix;
  std::vector<long> degrees;
};

/// dim 2: chi_top + sum K.B_i + sum B_i^2 + sum_{i<j} B_i.B_j.
/// dim 1: deg K + sum deg B_i. Throws InvalidArgument on a malformed table.
long chern_coefficient(const IntersectionTable& table);

struct CurveData {
  long genus = 0;
  long degree = 1;
  std::vector<long> branches;  // h_i
};

/// -2 + 2g + d + sum h_i.
long curve_formula_mld(const CurveData& c);

enum class Ambient { projective, symmetric };

struct ProblemSpec {
  RingPtr ring;
  Ambient ambient = Ambient::projective;
  std::size_t symmetric_n = 0;
  std::vector<Polynomial> generators;
  Polynomial f;
  /// User-supplied codimension; checked against the recomputed one.
  std::optional<int> codim;
  std::vector<Method> methods = {Method::A, Method::B};
  std::uint64_t seed = 0;
  long eta_bound = 1000;
  int retries = 5;
  bool modular = false;
  bool check_smoothness = false;
  /// Method A counts with the hyperplane eta(x) = deg F adjoined. It lies in
  /// the saturated critical ideal whenever X is smooth off V(F) (Euler's
  /// formula), so the count is unchanged while coefficient growth drops
  /// sharply. Off: the plain cleared-A ideal is localized.
  bool slice_method_a = true;
  std::optional<IntersectionTable> chern_table;
};

/// X = V(generators) in P^{n} with the variables of `ring`.
ProblemSpec projective_problem(RingPtr ring, std::vector<Polynomial> generators, Polynomial f);
/// X = V(generators) in P(S^n) with F = det of the generic symmetric matrix.
ProblemSpec symmetric_problem(std::size_t n, std::vector<Polynomial> generators);

/// Checks homogeneity and returns the recomputed codimension c. Throws
/// InvalidArgument if the spec is inconsistent.
int validate(const ProblemSpec& spec);

struct EtaVector {
  std::uint64_t seed = 0;
  int attempt = 0;
  /// The drawn integers: one per variable, or the upper triangle of S
  /// (row-major) in the symmetric ambient.
  std::vector<long> entries;
  /// Coefficients of the linear form eta(x) in ring variable order. In the
  /// symmetric ambient eta(M) = tr(SM), so off-diagonal entries are doubled.
  std::vector<Scalar> coefficients;
};

/// Nonzero integers in [-bound, bound], a deterministic function of
/// (seed, attempt, count, bound).
std::vector<long> draw_integers(std::uint64_t seed, int attempt, std::size_t count, long lo,
                                long hi, bool skip_zero);

EtaVector draw_eta(const ProblemSpec& spec, int attempt);

/// Cleared A(x, eta): first row grad F - F eta, then the gradients of the g_i.
PolyMatrix matrix_A(const ProblemSpec& spec, const EtaVector& eta);
/// Cleared B(x, eta): rows grad F, eta, then the gradients of the g_i.
PolyMatrix matrix_B(const ProblemSpec& spec, const EtaVector& eta);

/// I_{c+1}(A) + I(X), before saturation by F.
Ideal critical_ideal_A_unsaturated(const ProblemSpec& spec, const EtaVector& eta, int c);
/// I_{c+2}(B) + I(X) + <eta(x) - deg F>, before saturation by F.
Ideal critical_ideal_B_unsaturated(const ProblemSpec& spec, const EtaVector& eta, int c);

/// Saturated critical ideals (I : F^inf).
Ideal critical_ideal_A(const ProblemSpec& spec, const EtaVector& eta);
Ideal critical_ideal_B(const ProblemSpec& spec, const EtaVector& eta);

/// Critical scheme localized at F: J + <1 - t F> in k[x, t]. Its quotient is
/// the coordinate ring of J : F^inf with F inverted, so its length is the
/// critical point count and membership there is membership in J : F^inf.
struct LocalizedScheme {
  Ideal ideal;
  GroebnerBasis basis;
  mpz_class count() const { return zero_dim_count(basis); }
  /// True iff g lies in the saturation; g is given in the original ring.
  bool saturation_contains(const Polynomial& g) const;
};

LocalizedScheme localize(const Ideal& unsaturated, const Polynomial& f);

/// J : f^inf for J with finitely many zeros off V(f). When J itself is
/// zero-dimensional it is held as the f-stable subspace of k[x]/J (the
/// image of a high power of multiplication by f); otherwise as the
/// localization.
class SaturatedQuotient {
 public:
  SaturatedQuotient(const Ideal& unsaturated, const Polynomial& f);
  /// Length of k[x] / (J : f^inf). Throws DimensionError if infinite.
  const mpz_class& length() const noexcept { return length_; }
  /// True iff g lies in J : f^inf.
  bool contains(const Polynomial& g) const;

 private:
  void use_localization(const Ideal& unsaturated, const Polynomial& f);

  std::optional<LocalizedScheme> localized_;
  std::optional<GroebnerBasis> basis_;
  std::vector<Monomial> monomials_;
  std::vector<std::vector<Scalar>> stable_;
  mpz_class length_ = 0;
};

/// Count of k[x,t]/(J + <1 - tF>) from leading monomials over GF(prime).
mpz_class localized_count_mod_p(const Ideal& unsaturated, const Polynomial& f,
                                std::uint32_t prime);

struct CountResult {
  mpz_class count = 0;
  std::vector<EtaVector> eta_draws;
  int rounds = 0;
};

/// Count by method A or B with the double-draw genericity policy. Throws
/// GenericityFailure once all rounds are used up.
CountResult mld_count(const ProblemSpec& spec, Method method);

struct DualCount {
  mpz_class count = 0;
  DualVarietyResult dual;
};

/// (deg X_F^dual - m_p) / deg F via the dual of the closure of V(g, F - 1).
DualCount mld_dual(const ProblemSpec& spec);

/// (d - 1)^2 - sum of Milnor numbers of the reduced curve V(F) in P^2.
mpz_class mld_milnor(const Polynomial& f);

enum class Status { ok, genericity_failure, unsupported, inconsistent, error, skipped };
std::string to_string(Status s);

struct MethodResult {
  Method method = Method::A;
  Status status = Status::skipped;
  std::optional<mpz_class> count;
  std::vector<EtaVector> eta_draws;
  double seconds = 0;
  std::string message;
};

struct MldReport {
  std::vector<MethodResult> methods;
  /// agreement[i][j] is set when both methods produced a count.
  std::vector<std::vector<std::optional<bool>>> agreement;
  std::optional<mpz_class> final_value;
  bool disagreement = false;
  int codim = 0;
};

/// Runs every requested method (concurrently) and cross-checks the counts.
MldReport run_methods(const ProblemSpec& spec);

/// Gaussian ML degree of the span of `basis` (in span coordinates named
/// `names`, default s1..sr).
MldReport gaussian_mld(const std::vector<RationalMatrix>& basis, ProblemSpec options,
                       std::vector<std::string> names = {});
/// Gaussian ML degree of V(generators) inside P(S^n).
MldReport gaussian_mld(std::size_t n, std::vector<Polynomial> generators, ProblemSpec options);

struct DiscreteSpec {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::uint64_t seed = 0;
  long u_bound = 50;
  int retries = 5;
};

struct DiscreteResult {
  mpz_class count = 0;
  std::vector<std::vector<long>> u_draws;
  int rounds = 0;
};

/// Critical ideal of prod x_i^{u_i} - sum x_i on the cone over X, with the
/// log-gradient row cleared by prod x_i, saturated by prod x_i.
Ideal discrete_critical_ideal(const DiscreteSpec& spec, const std::vector<long>& u);
DiscreteResult discrete_mld(const DiscreteSpec& spec);

struct DiscreteGaussianComparison {
  mpz_class discrete = 0;
  mpz_class gaussian = 0;
  bool holds = false;
};

/// Discrete ML degree of X against its Gaussian ML degree as a variety of
/// diagonal matrices (F = prod x_i). Throws InconsistencyError if
/// discrete > gaussian.
DiscreteGaussianComparison compare_discrete_gaussian(const DiscreteSpec& spec);

}  // namespace mld
