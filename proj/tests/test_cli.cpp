#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "problem_file.hpp"

using namespace mld;
using mld::cli::Json;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mld");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string problem(const std::string& name) {
  return (fs::path(MLD_PROBLEMS_DIR) / name).string();
}

// Writes `text` to a scratch file and returns its path.
std::string scratch(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "mld_cli_test";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

MldReport report_with(std::vector<std::pair<Status, std::optional<long>>> methods) {
  MldReport r;
  for (auto [status, count] : methods) {
    MethodResult m;
    m.status = status;
    if (count) m.count = *count;
    r.methods.push_back(m);
  }
  for (const auto& m : r.methods) {
    for (const auto& o : r.methods) {
      if (m.count && o.count && *m.count != *o.count) r.disagreement = true;
    }
  }
  if (!r.disagreement) {
    for (const auto& m : r.methods) {
      if (m.count) {
        r.final_value = *m.count;
        break;
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("compute on the shipped examples") {
  const auto net = run({"compute", problem("net.json")});
  REQUIRE(net.code == 0);
  const auto report = net.report();
  CHECK(report["final"] == 1);
  CHECK(report["schema_version"] == cli::kSchemaVersion);
  CHECK(report["methods"].size() == 4);
  CHECK(report["cross_check"]["agreement"][0][3] == true);
  CHECK(report["methods"][0]["eta_draws"].size() == 2);

  const auto cusp = run({"compute", problem("cusp.json")});
  REQUIRE(cusp.code == 0);
  CHECK(cusp.report()["final"] == 2);
}

TEST_CASE("every shipped problem reruns to its value") {
  const std::vector<std::pair<std::vector<std::string>, long>> cases = {
      {{"compute", problem("net.json")}, 1},
      {{"compute", problem("net_chern.json")}, 1},
      {{"compute", problem("cusp.json")}, 2},
      {{"compute", problem("square.json")}, 0},
      {{"compute", problem("smooth_cubic.json")}, 4},
      {{"chern", problem("net_table.json")}, 1},
      {{"discrete", problem("conic.json")}, 1},
      {{"gaussian", problem("net_basis.json")}, 1},
      {{"gaussian", problem("adjugate.json")}, 4},
  };
  for (const auto& [args, value] : cases) {
    INFO(args[1]);
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(r.report()["final"] == value);
  }
  const auto curve = run({"curve", "--genus", "0", "--degree", "2", "--branches", "1,1"});
  REQUIRE(curve.code == 0);
  CHECK(curve.report()["final"] == 2);
}

TEST_CASE("discrete --compare") {
  const auto r = run({"discrete", problem("conic.json"), "--compare"});
  REQUIRE(r.code == 0);
  const auto j = r.report();
  CHECK(j["discrete"]["count"] == 1);
  CHECK(j["gaussian"] == 2);
  CHECK(j["holds"] == true);
  CHECK(j["discrete"]["u_draws"].size() == 2);
}

TEST_CASE("input errors exit 1 without a report") {
  SUBCASE("malformed JSON") {
    const auto r = run({"compute", scratch("bad.json", "{\"F\": ")});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("malformed JSON") != std::string::npos);
  }
  SUBCASE("missing file") {
    CHECK(run({"compute", "/nonexistent/problem.json"}).code == 1);
  }
  SUBCASE("unknown field") {
    const auto r = run({"compute", scratch("unknown.json",
                                           R"({"ring": {"variables": ["x"]}, "F": "x", "colour": 1})")});
    CHECK(r.code == 1);
    CHECK(r.err.find("/colour") != std::string::npos);
  }
  SUBCASE("unknown nested field") {
    const auto r = run({"compute", scratch("nested.json",
                                           R"({"ring": {"variables": ["x"], "order": "lex"}, "F": "x"})")});
    CHECK(r.code == 1);
    CHECK(r.err.find("/ring/order") != std::string::npos);
  }
  SUBCASE("wrong type") {
    CHECK(run({"compute", scratch("type.json", R"({"ring": {"variables": ["x", "y"]}, "F": 3})")})
              .code == 1);
    CHECK(run({"compute", scratch("seed.json",
                                  R"({"ring": {"variables": ["x", "y"]}, "F": "x", "seed": -1})")})
              .code == 1);
  }
  SUBCASE("unknown method") {
    CHECK(run({"compute", scratch("method.json",
                                  R"({"ring": {"variables": ["x", "y"]}, "F": "x", "methods": ["c"]})")})
              .code == 1);
    CHECK(run({"compute", problem("net.json"), "--methods", "a,zz"}).code == 1);
  }
  SUBCASE("bad polynomial") {
    CHECK(run({"compute", scratch("poly.json", R"({"ring": {"variables": ["x", "y"]}, "F": "x*w"})")})
              .code == 1);
  }
  SUBCASE("symmetric ambient with foreign variable names") {
    CHECK(run({"compute", scratch("sym.json", R"({"ambient": {"type": "symmetric_matrices", "n": 2},
                                                   "ring": {"variables": ["a", "b", "c"]}})")})
              .code == 1);
  }
  SUBCASE("non-square basis") {
    CHECK(run({"gaussian", scratch("basis.json", R"({"basis": [[[1, 0], [0]]]})")}).code == 1);
  }
  SUBCASE("curve flags") {
    CHECK(run({"curve", "--genus", "0", "--degree", "0"}).code == 1);
    CHECK(run({"curve", "--genus", "-1", "--degree", "1"}).code == 1);
    CHECK(run({"curve", "--degree", "1"}).code == 1);
  }
  SUBCASE("no subcommand") { CHECK(run({}).code == 1); }
}

TEST_CASE("unsupported input exits 4") {
  // F is not homogeneous
  CHECK(run({"compute", scratch("inhom.json", R"({"ring": {"variables": ["x", "y"]}, "F": "x + 1"})")})
            .code == 4);
  // the Milnor method needs X = P^2
  const auto r = run({"compute", scratch("milnor.json", R"({"ring": {"variables": ["x", "y", "z"]},
                                                          "ideal": ["x - y"], "F": "x*z",
                                                          "methods": ["milnor"]})")});
  CHECK(r.code == 4);
  CHECK(r.out.empty());
  CHECK(r.err.find("milnor") != std::string::npos);
}

TEST_CASE("exit codes from a report") {
  CHECK(cli::exit_code(report_with({{Status::ok, 1}, {Status::ok, 1}})) == 0);
  CHECK(cli::exit_code(report_with({{Status::ok, 1}, {Status::ok, 2}})) == 2);
  CHECK(cli::exit_code(report_with({{Status::ok, 1}, {Status::inconsistent, {}}})) == 2);
  CHECK(cli::exit_code(report_with({{Status::genericity_failure, {}}})) == 3);
  CHECK(cli::exit_code(report_with({{Status::unsupported, {}}})) == 4);
  CHECK(cli::exit_code(report_with({{Status::error, {}}})) == 1);
  // a method that does not apply does not block the agreed answer
  CHECK(cli::exit_code(report_with({{Status::ok, 1}, {Status::unsupported, {}}})) == 0);
}

TEST_CASE("reports are deterministic") {
  const auto a = run({"compute", problem("cusp.json"), "--normalize"});
  const auto b = run({"compute", problem("cusp.json"), "--normalize"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seconds") == std::string::npos);
  CHECK(a.out.find("\"version\"") == std::string::npos);
  CHECK(run({"compute", problem("cusp.json")}).out.find("seconds") != std::string::npos);
}

TEST_CASE("global flags override the file") {
  const auto r = run({"compute", problem("net.json"), "--methods", "b", "--seed", "5", "--eta-bound",
                      "20", "--retries", "2"});
  REQUIRE(r.code == 0);
  const auto j = r.report();
  REQUIRE(j["methods"].size() == 1);
  CHECK(j["methods"][0]["method"] == "b");
  for (const auto& draw : j["methods"][0]["eta_draws"]) {
    CHECK(draw["seed"] == 5);
    for (const auto& e : draw["entries"]) CHECK(std::abs(e.get<long>()) <= 20);
  }
  const auto modular = run({"compute", problem("cusp.json"), "--modular", "--methods", "a,b"});
  REQUIRE(modular.code == 0);
  CHECK(modular.report()["final"] == 2);
}

TEST_CASE("--output writes the report file") {
  const auto path = (fs::temp_directory_path() / "mld_cli_test" / "out.json").string();
  fs::create_directories(fs::path(path).parent_path());
  fs::remove(path);
  const auto r = run({"chern", problem("net_table.json"), "--output", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["final"] == 1);
  CHECK(run({"chern", problem("net_table.json"), "--output", "/nonexistent/dir/out.json"}).code == 1);
}

TEST_CASE("input hash") {
  CHECK(cli::input_hash("") == "fnv1a64:cbf29ce484222325");
  CHECK(cli::input_hash("a") == "fnv1a64:af63dc4c8601ec8c");
  const auto a = run({"chern", problem("net_table.json")}).report();
  CHECK(a["input_hash"].get<std::string>().rfind("fnv1a64:", 0) == 0);
}
