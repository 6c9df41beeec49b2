#include "problem_file.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "mld/errors.hpp"
#include "mld/parser.hpp"

namespace mld::cli {

namespace {

using Keys = std::set<std::string>;

void expect(bool ok, const std::string& where, const std::string& what) {
  if (!ok) throw ProblemFileError(where, what);
}

void check_keys(const Json& obj, const std::string& where, const Keys& allowed) {
  expect(obj.is_object(), where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    expect(allowed.count(key) > 0, where + "/" + key, "unknown field");
  }
}

void check_strings(const Json& v, const std::string& where) {
  expect(v.is_array(), where, "expected an array of strings");
  for (std::size_t i = 0; i < v.size(); ++i) {
    expect(v[i].is_string(), where + "/" + std::to_string(i), "expected a string");
  }
}

void check_int(const Json& v, const std::string& where, long lo) {
  expect(v.is_number_integer(), where, "expected an integer");
  if (v.is_number_unsigned()) return;
  expect(v.get<long>() >= lo, where, "must be at least " + std::to_string(lo));
}

void check_ints(const Json& v, const std::string& where) {
  expect(v.is_array(), where, "expected an array of integers");
  for (std::size_t i = 0; i < v.size(); ++i) {
    check_int(v[i], where + "/" + std::to_string(i), std::numeric_limits<long>::min());
  }
}

Scalar parse_entry(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  expect(v.is_string(), where, "expected an integer or a rational string");
  Scalar q;
  expect(q.set_str(v.get<std::string>(), 10) == 0, where, "not a rational number");
  expect(q.get_den() != 0, where, "zero denominator");
  q.canonicalize();
  return q;
}

void check_table(const Json& t, const std::string& where) {
  check_keys(t, where, {"dim", "chi_top", "labels", "matrix", "degrees"});
  expect(t.contains("dim"), where, "missing dim");
  check_int(t["dim"], where + "/dim", 1);
  if (t.contains("chi_top")) check_int(t["chi_top"], where + "/chi_top", std::numeric_limits<long>::min());
  expect(t.contains("labels"), where, "missing labels");
  check_strings(t["labels"], where + "/labels");
  if (t.contains("matrix")) {
    expect(t["matrix"].is_array(), where + "/matrix", "expected an array of rows");
    for (std::size_t i = 0; i < t["matrix"].size(); ++i) {
      check_ints(t["matrix"][i], where + "/matrix/" + std::to_string(i));
    }
  }
  if (t.contains("degrees")) check_ints(t["degrees"], where + "/degrees");
}

RingPtr ring_of(const Json& doc) {
  expect(doc.contains("ring"), "", "missing ring");
  return make_ring(doc["ring"]["variables"].get<std::vector<std::string>>());
}

std::vector<Polynomial> ideal_of(const Json& doc, const RingPtr& ring) {
  std::vector<Polynomial> out;
  if (!doc.contains("ideal")) return out;
  for (const auto& g : doc["ideal"]) out.push_back(parse_polynomial(g.get<std::string>(), ring));
  return out;
}

void apply_options(const Json& doc, ProblemSpec& spec) {
  if (doc.contains("codim")) spec.codim = doc["codim"].get<int>();
  if (doc.contains("seed")) spec.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("eta_bound")) spec.eta_bound = doc["eta_bound"].get<long>();
  if (doc.contains("retries")) spec.retries = doc["retries"].get<int>();
  if (doc.contains("methods")) {
    spec.methods.clear();
    for (const auto& m : doc["methods"]) spec.methods.push_back(*parse_method(m.get<std::string>()));
  }
  if (doc.contains("flags")) {
    const auto& f = doc["flags"];
    spec.check_smoothness = f.value("check_smoothness", false);
    spec.modular = f.value("modular", false);
  }
  if (doc.contains("chern_table")) spec.chern_table = build_table(doc["chern_table"]);
}

}  // namespace

ProblemFile parse_problem_text(std::string text) {
  ProblemFile out;
  try {
    out.doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProblemFileError("", std::string("malformed JSON: ") + e.what());
  }
  out.bytes = std::move(text);
  validate_schema(out.doc);
  return out;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemFileError("", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

void validate_schema(const Json& doc) {
  check_keys(doc, "", {"ring", "ideal", "F", "ambient", "basis", "codim", "methods", "seed",
                       "eta_bound", "retries", "flags", "chern_table", "u_bound"});
  if (doc.contains("ring")) {
    check_keys(doc["ring"], "/ring", {"variables"});
    expect(doc["ring"].contains("variables"), "/ring", "missing variables");
    const auto& v = doc["ring"]["variables"];
    check_strings(v, "/ring/variables");
    expect(!v.empty(), "/ring/variables", "empty");
  }
  if (doc.contains("ideal")) check_strings(doc["ideal"], "/ideal");
  if (doc.contains("F")) expect(doc["F"].is_string(), "/F", "expected a string");
  if (doc.contains("ambient")) {
    const auto& a = doc["ambient"];
    check_keys(a, "/ambient", {"type", "n"});
    expect(a.contains("type") && a["type"].is_string(), "/ambient/type", "expected a string");
    const auto type = a["type"].get<std::string>();
    expect(type == "projective" || type == "symmetric_matrices", "/ambient/type",
           "must be \"projective\" or \"symmetric_matrices\"");
    if (type == "symmetric_matrices") {
      expect(a.contains("n"), "/ambient", "missing n");
      check_int(a["n"], "/ambient/n", 1);
    } else if (a.contains("n")) {
      check_int(a["n"], "/ambient/n", 1);
    }
  }
  if (doc.contains("basis")) {
    const auto& b = doc["basis"];
    expect(b.is_array() && !b.empty(), "/basis", "expected a non-empty array of matrices");
    for (std::size_t k = 0; k < b.size(); ++k) {
      const std::string w = "/basis/" + std::to_string(k);
      expect(b[k].is_array(), w, "expected an array of rows");
      for (std::size_t i = 0; i < b[k].size(); ++i) {
        expect(b[k][i].is_array() && b[k][i].size() == b[k].size(), w + "/" + std::to_string(i),
               "expected a row of the square matrix");
        for (std::size_t j = 0; j < b[k][i].size(); ++j) {
          parse_entry(b[k][i][j], w + "/" + std::to_string(i) + "/" + std::to_string(j));
        }
      }
    }
  }
  if (doc.contains("codim")) check_int(doc["codim"], "/codim", 0);
  if (doc.contains("methods")) {
    check_strings(doc["methods"], "/methods");
    for (std::size_t i = 0; i < doc["methods"].size(); ++i) {
      expect(parse_method(doc["methods"][i].get<std::string>()).has_value(),
             "/methods/" + std::to_string(i), "unknown method");
    }
  }
  if (doc.contains("seed")) check_int(doc["seed"], "/seed", 0);
  if (doc.contains("eta_bound")) check_int(doc["eta_bound"], "/eta_bound", 1);
  if (doc.contains("retries")) check_int(doc["retries"], "/retries", 1);
  if (doc.contains("u_bound")) check_int(doc["u_bound"], "/u_bound", 1);
  if (doc.contains("flags")) {
    check_keys(doc["flags"], "/flags", {"check_smoothness", "modular"});
    for (const auto& [key, value] : doc["flags"].items()) {
      expect(value.is_boolean(), "/flags/" + key, "expected true or false");
    }
  }
  if (doc.contains("chern_table")) check_table(doc["chern_table"], "/chern_table");
}

std::string input_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char out[32];
  std::snprintf(out, sizeof out, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return out;
}

bool is_symmetric_ambient(const Json& doc) {
  return doc.contains("ambient") && doc["ambient"]["type"] == "symmetric_matrices";
}

ProblemSpec build_spec(const Json& doc) {
  ProblemSpec spec;
  if (is_symmetric_ambient(doc)) {
    const auto n = doc["ambient"]["n"].get<std::size_t>();
    const RingPtr ring = symmetric_ring(n);
    if (doc.contains("ring")) {
      expect(doc["ring"]["variables"].get<std::vector<std::string>>() == symmetric_names(n),
             "/ring/variables", "must be the symmetric coordinates x11, x12, ...");
    }
    spec = symmetric_problem(n, ideal_of(doc, ring));
    if (doc.contains("F")) spec.f = parse_polynomial(doc["F"].get<std::string>(), spec.ring);
  } else {
    const RingPtr ring = ring_of(doc);
    if (doc.contains("ambient") && doc["ambient"].contains("n")) {
      expect(doc["ambient"]["n"].get<std::size_t>() + 1 == ring->size(), "/ambient/n",
             "does not match the number of variables");
    }
    expect(doc.contains("F"), "", "missing F");
    spec = projective_problem(ring, ideal_of(doc, ring),
                              parse_polynomial(doc["F"].get<std::string>(), ring));
  }
  apply_options(doc, spec);
  return spec;
}

ProblemSpec build_options(const Json& doc) {
  ProblemSpec spec;
  apply_options(doc, spec);
  return spec;
}

std::vector<RationalMatrix> build_basis(const Json& doc) {
  expect(doc.contains("basis"), "", "missing basis");
  std::vector<RationalMatrix> out;
  for (const auto& m : doc["basis"]) {
    RationalMatrix a;
    for (const auto& row : m) {
      std::vector<Scalar> r;
      for (const auto& e : row) r.push_back(parse_entry(e, "/basis"));
      a.push_back(std::move(r));
    }
    out.push_back(std::move(a));
  }
  return out;
}

DiscreteSpec build_discrete(const Json& doc) {
  DiscreteSpec d;
  d.ring = ring_of(doc);
  d.generators = ideal_of(doc, d.ring);
  if (doc.contains("seed")) d.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("retries")) d.retries = doc["retries"].get<int>();
  if (doc.contains("u_bound")) d.u_bound = doc["u_bound"].get<long>();
  return d;
}

IntersectionTable build_table(const Json& t) {
  IntersectionTable out;
  out.dim = t["dim"].get<int>();
  out.chi_top = t.value("chi_top", 0L);
  out.labels = t["labels"].get<std::vector<std::string>>();
  if (t.contains("matrix")) out.matrix = t["matrix"].get<std::vector<std::vector<long>>>();
  if (t.contains("degrees")) out.degrees = t["degrees"].get<std::vector<long>>();
  return out;
}

Json count_json(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json report_header(const ReportOptions& opts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "mld";
  if (!opts.normalize) j["version"] = MLD_VERSION;
  j["command"] = opts.command;
  j["input_hash"] = opts.hash;
  return j;
}

Json report_json(const MldReport& report, const ReportOptions& opts) {
  Json j = report_header(opts);
  j["codim"] = report.codim;
  Json methods = Json::array();
  Json names = Json::array();
  for (const auto& m : report.methods) {
    Json r;
    r["method"] = to_string(m.method);
    r["status"] = to_string(m.status);
    r["count"] = m.count ? count_json(*m.count) : Json(nullptr);
    Json draws = Json::array();
    for (const auto& e : m.eta_draws) {
      draws.push_back({{"seed", e.seed}, {"attempt", e.attempt}, {"entries", e.entries}});
    }
    r["eta_draws"] = std::move(draws);
    if (!opts.normalize) r["seconds"] = m.seconds;
    if (!m.message.empty()) r["message"] = m.message;
    methods.push_back(std::move(r));
    names.push_back(to_string(m.method));
  }
  j["methods"] = std::move(methods);
  Json matrix = Json::array();
  for (const auto& row : report.agreement) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell ? Json(*cell) : Json(nullptr));
    matrix.push_back(std::move(r));
  }
  j["cross_check"] = {{"methods", std::move(names)}, {"agreement", std::move(matrix)}};
  j["disagreement"] = report.disagreement;
  j["final"] = report.final_value ? count_json(*report.final_value) : Json(nullptr);
  return j;
}

}  // namespace mld::cli
