#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "mld/errors.hpp"
#include "problem_file.hpp"

namespace mld::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::vector<std::string> methods;
  int retries = 0;
  long eta_bound = 0;
  bool check_smoothness = false;
  bool modular = false;
  bool normalize = false;
  std::string output;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* retries_opt = nullptr;
  CLI::Option* eta_opt = nullptr;
};

void override_spec(const Globals& g, ProblemSpec& spec) {
  if (g.seed_opt->count()) spec.seed = g.seed;
  if (g.retries_opt->count()) spec.retries = g.retries;
  if (g.eta_opt->count()) spec.eta_bound = g.eta_bound;
  if (!g.methods.empty()) {
    spec.methods.clear();
    for (const auto& m : g.methods) spec.methods.push_back(*parse_method(m));
  }
  if (g.check_smoothness) spec.check_smoothness = true;
  if (g.modular) spec.modular = true;
}

void write_report(const Json& report, const Globals& g, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (g.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file || !(file << text)) throw ProblemFileError("", "cannot write " + g.output);
}

Polynomial product_of_variables(const RingPtr& ring) {
  Polynomial p = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < ring->size(); ++i) p *= Polynomial::variable(ring, i);
  return p;
}

// Runs one command body and turns exceptions into exit codes.
int guarded(const std::string& command, std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ProblemFileError& e) {
    err << "mld " << command << ": problem file: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "mld " << command << ": polynomial: " << e.what() << "\n";
    return kInputError;
  } catch (const GenericityFailure& e) {
    err << "mld " << command << ": genericity: " << e.what() << "\n";
    return kGenericity;
  } catch (const InconsistencyError& e) {
    err << "mld " << command << ": inconsistency: " << e.what() << "\n";
    return kDisagreement;
  } catch (const UnsupportedInput& e) {
    err << "mld " << command << ": unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InvalidArgument& e) {
    err << "mld " << command << ": invalid input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DimensionError& e) {
    err << "mld " << command << ": invalid input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "mld " << command << ": " << e.what() << "\n";
    return kInputError;
  }
}

void report_failures(const MldReport& report, const std::string& command, std::ostream& err) {
  for (const auto& m : report.methods) {
    if (m.status != Status::ok) {
      err << "mld " << command << ": method " << to_string(m.method) << ": " << to_string(m.status)
          << (m.message.empty() ? "" : ": " + m.message) << "\n";
    }
  }
}

int finish_report(const MldReport& report, const ReportOptions& opts, const Globals& g,
                  std::ostream& out, std::ostream& err) {
  report_failures(report, opts.command, err);
  const int code = exit_code(report);
  if (code == kOk || code == kDisagreement) write_report(report_json(report, opts), g, out);
  return code;
}

}  // namespace

int exit_code(const MldReport& report) {
  bool genericity = false;
  bool unsupported = false;
  for (const auto& m : report.methods) {
    if (m.status == Status::inconsistent) return kDisagreement;
    genericity = genericity || m.status == Status::genericity_failure;
    unsupported = unsupported || m.status == Status::unsupported;
  }
  if (report.disagreement) return kDisagreement;
  if (report.final_value) return kOk;
  if (genericity) return kGenericity;
  if (unsupported) return kUnsupported;
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum likelihood degrees of log functions on projective varieties", "mld"};
  app.require_subcommand(1);
  Globals g;
  g.seed_opt = app.add_option("--seed", g.seed, "Seed for the eta and u draws");
  app.add_option("--methods", g.methods, "Comma list of a, b, dual, milnor, chern")
      ->delimiter(',')
      ->check([](const std::string& m) {
        return parse_method(m) ? std::string() : "unknown method " + m;
      });
  g.retries_opt = app.add_option("--retries", g.retries, "Redraw rounds")->check(CLI::PositiveNumber);
  g.eta_opt =
      app.add_option("--eta-bound", g.eta_bound, "Bound on the eta entries")->check(CLI::PositiveNumber);
  app.add_flag("--check-smoothness", g.check_smoothness, "Verify X is smooth away from V(F)");
  app.add_flag("--modular", g.modular, "Count methods A and B over two primes");
  app.add_flag("--normalize", g.normalize, "Omit timings and version from the report");
  app.add_option("--output", g.output, "Report path (default: stdout)");

  std::string path;
  auto* compute = app.add_subcommand("compute", "ML degree of X and F by the requested methods");
  compute->add_option("problem", path, "Problem file")->required();
  auto* gaussian = app.add_subcommand("gaussian", "Gaussian ML degree of a span or of X in P(S^n)");
  gaussian->add_option("problem", path, "Problem file")->required();
  bool compare = false;
  auto* discrete = app.add_subcommand("discrete", "Discrete ML degree of X");
  discrete->add_option("problem", path, "Problem file")->required();
  discrete->add_flag("--compare", compare, "Also compute the Gaussian ML degree and compare");
  auto* chern = app.add_subcommand("chern", "Chern coefficient of an intersection table");
  chern->add_option("problem", path, "Problem file with chern_table")->required();
  CurveData curve;
  auto* curve_cmd = app.add_subcommand("curve", "ML degree of a curve from its normalization data");
  curve_cmd->add_option("--genus", curve.genus, "Geometric genus")->required()->check(CLI::NonNegativeNumber);
  curve_cmd->add_option("--degree", curve.degree, "Degree")->required()->check(CLI::PositiveNumber);
  curve_cmd->add_option("--branches", curve.branches, "Comma list of fiber sizes h_i")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  for (auto* sub : {compute, gaussian, discrete, chern, curve_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (compute->parsed()) {
    return guarded("compute", err, [&] {
      const auto file = read_problem_file(path);
      ProblemSpec spec = build_spec(file.doc);
      override_spec(g, spec);
      const MldReport report = run_methods(spec);
      return finish_report(report, {"compute", input_hash(file.bytes), g.normalize}, g, out, err);
    });
  }

  if (gaussian->parsed()) {
    return guarded("gaussian", err, [&] {
      const auto file = read_problem_file(path);
      ProblemSpec options = build_options(file.doc);
      override_spec(g, options);
      MldReport report;
      if (file.doc.contains("basis")) {
        report = gaussian_mld(build_basis(file.doc), options);
      } else {
        if (!is_symmetric_ambient(file.doc)) {
          throw ProblemFileError("", "gaussian needs a basis or a symmetric_matrices ambient");
        }
        const ProblemSpec spec = build_spec(file.doc);
        report = gaussian_mld(spec.symmetric_n, spec.generators, options);
      }
      return finish_report(report, {"gaussian", input_hash(file.bytes), g.normalize}, g, out, err);
    });
  }

  if (discrete->parsed()) {
    return guarded("discrete", err, [&] {
      const auto file = read_problem_file(path);
      DiscreteSpec spec = build_discrete(file.doc);
      if (g.seed_opt->count()) spec.seed = g.seed;
      if (g.retries_opt->count()) spec.retries = g.retries;
      const DiscreteResult d = discrete_mld(spec);
      Json j = report_header({"discrete", input_hash(file.bytes), g.normalize});
      j["discrete"] = {{"count", count_json(d.count)}, {"u_draws", d.u_draws}, {"rounds", d.rounds}};
      int code = kOk;
      if (compare) {
        // Gaussian side: X as a variety of diagonal matrices, F = det = prod x_i
        ProblemSpec gs = projective_problem(spec.ring, spec.generators, product_of_variables(spec.ring));
        gs.seed = spec.seed;
        gs.retries = spec.retries;
        const mpz_class gaussian_count = mld_count(gs, Method::A).count;
        const bool holds = d.count <= gaussian_count;
        j["gaussian"] = count_json(gaussian_count);
        j["holds"] = holds;
        if (!holds) {
          err << "mld discrete: discrete ML degree exceeds the Gaussian one\n";
          code = kDisagreement;
        }
      }
      j["final"] = count_json(d.count);
      write_report(j, g, out);
      return code;
    });
  }

  if (chern->parsed()) {
    return guarded("chern", err, [&] {
      const auto file = read_problem_file(path);
      if (!file.doc.contains("chern_table")) throw ProblemFileError("", "missing chern_table");
      const long value = chern_coefficient(build_table(file.doc["chern_table"]));
      Json j = report_header({"chern", input_hash(file.bytes), g.normalize});
      j["chern"] = value;
      j["final"] = value;
      write_report(j, g, out);
      return static_cast<int>(kOk);
    });
  }

  return guarded("curve", err, [&] {
    std::string canonical = "genus=" + std::to_string(curve.genus) +
                            ";degree=" + std::to_string(curve.degree) + ";branches=";
    for (std::size_t i = 0; i < curve.branches.size(); ++i) {
      canonical += (i ? "," : "") + std::to_string(curve.branches[i]);
    }
    const long value = curve_formula_mld(curve);
    Json j = report_header({"curve", input_hash(canonical), g.normalize});
    j["curve"] = {{"genus", curve.genus}, {"degree", curve.degree}, {"branches", curve.branches}};
    j["final"] = value;
    write_report(j, g, out);
    return static_cast<int>(kOk);
  });
}

}  // namespace mld::cli
