#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "../tools/cli.hpp"
#include "qgp/carrier.hpp"
#include "support.hpp"

using namespace qgp;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

  struct Result {
    int         code;
    std::string out, err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  json run_json(std::vector<std::string> args, int expected) {
    args.insert(args.begin(), "--json");
    auto r = run(args);
    CHECK(r.code == expected);
    auto doc = json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(doc.is_discarded());
    CHECK(doc["exit"] == expected);
    return doc;
  }

  std::string fx(std::string const& name) {
    return test::fixture_path(name);
  }

  std::string script(std::string const& name) {
    return std::string(QGP_FIXTURES) + "/scripts/" + name + ".qgp";
  }

  struct TempDir {
    fs::path path;
    TempDir() {
      char tmpl[] = "/tmp/qgp-test-XXXXXX";
      REQUIRE(mkdtemp(tmpl));
      path = tmpl;
    }
    ~TempDir() {
      fs::remove_all(path);
    }
    std::string operator/(std::string const& f) const {
      return (path / f).string();
    }
  };

}  // namespace

TEST_CASE("check reports a holding property", "[cli]") {
  auto r = run({"check", fx("c_lio"), "--prop", "right-reversible"});
  CHECK(r.code == cli::ok);
  CHECK(r.out == "right-reversible: Holds\n");
}

TEST_CASE("check reports a failure with its witness", "[cli]") {
  auto r = run({"check", fx("quiver"), "--prop", "right-reversible"});
  CHECK(r.code == cli::failed);
  CHECK(r.out.rfind("right-reversible: Fails (f, g)", 0) == 0);
  auto doc = run_json({"check", fx("quiver"), "--prop", "right-reversible"}, cli::failed);
  CHECK(doc["verb"] == "check");
  CHECK(doc["reports"][0]["verdict"] == "Fails");
  CHECK(doc["reports"][0]["witness"] == json::array({"f", "g"}));
}

TEST_CASE("windows give inconclusive exits", "[cli]") {
  auto r = run({"check", fx("natplus_window6"), "--prop", "right-reversible"});
  CHECK(r.code == cli::inconclusive);
  CHECK(r.out.find("Inconclusive") != std::string::npos);
  CHECK(run({"check", fx("nat_window5"), "--prop", "pushouts"}).code == cli::ok);
}

TEST_CASE("fractions writes the groupoid and theta", "[cli]") {
  TempDir d;
  auto    r = run({"fractions", fx("c_lio"), "-o", d / "g.alg"});
  REQUIRE(r.code == cli::ok);
  auto g = view(load_file(d / "g.alg"));
  CHECK(g.kind() == structure_kind::groupoid);
  CHECK(g.size() == 8);
  std::ifstream tf(d / "theta.json");
  REQUIRE(tf);
  auto theta = json::parse(tf)["theta"];
  auto c     = test::fixture("c_lio");
  REQUIRE(theta.size() == c.size());
  for (index_type a = 0; a < c.size(); ++a) {
    CHECK(g.base().find(theta[c.name(a)].get<std::string>()).has_value());
  }
}

TEST_CASE("fractions reports preconditions", "[cli]") {
  auto doc = run_json({"fractions", fx("quiver")}, cli::failed);
  CHECK(doc["error"]["type"] == "precondition-failed");
  CHECK(doc["error"]["witness"] == json::array({"f", "g"}));
  auto nat = run_json({"fractions", fx("natplus_window6"), "--mode", "semigroupoid"},
                      cli::inconclusive);
  CHECK(nat["classes"] == 11);
  CHECK(nat["theta"]["6"].is_null());
}

TEST_CASE("usage errors exit with 3", "[cli]") {
  CHECK(run({}).code == cli::usage);
  CHECK(run({"frobnicate"}).code == cli::usage);
  CHECK(run({"check", fx("c_lio"), "--prop", "no-such-property"}).code == cli::usage);
  CHECK(run({"check", fx("c_lio"), "--prop", "connected", "--bogus"}).code == cli::usage);
  CHECK(run({"check", "/nonexistent/x.alg", "--prop", "connected"}).code == cli::usage);
  CHECK(run({"fractions", fx("s_lio"), "--mode", "category"}).code == cli::usage);
  auto doc = run_json({"check", fx("c_lio"), "--prop", "connected", "--kind", "widget"}, cli::usage);
  CHECK(doc["error"]["type"] == "input");
}

TEST_CASE("parse errors exit with 3", "[cli]") {
  TempDir d;
  std::ofstream(d / "bad.alg") << "kind category\nelements a\n";
  std::ofstream(d / "bad.alg", std::ios::app) << "a * b = a\n";
  auto doc = run_json({"check", d / "bad.alg", "--prop", "connected"}, cli::usage);
  CHECK(doc.contains("error"));
}

TEST_CASE("every verb emits parseable JSON", "[cli]") {
  TempDir d;
  struct Case {
    std::vector<std::string> args;
    int                      code;
    char const*              key;
  };
  std::vector<Case> const cases = {
      {{"check", fx("c_lio"), "--prop", "left-cancellative"}, cli::ok, "reports"},
      {{"fractions", fx("c_lio")}, cli::ok, "theta"},
      {{"adjoin-zero", fx("groupoid_z2_2")}, cli::ok, "algebra"},
      {{"strip-zero", fx("b_z2_2")}, cli::ok, "algebra"},
      {{"augment", fx("b_z2_2"), fx("s_lio")}, cli::ok, "algebra"},
      {{"iorder", fx("b_z2_2"), fx("s_lio")}, cli::ok, "pairs"},
      {{"inductive", fx("b_z2_2")}, cli::ok, "inductive"},
      {{"pseudoproduct", fx("b_z2_2"), "(1,a,2)", "(2,e,1)"}, cli::ok, "product"},
      {{"pseudoproduct", fx("b_z2_2")}, cli::ok, "algebra"},
      {{"construct", "brandt", "--group", "z2", "--n", "2"}, cli::ok, "algebra"},
      {{"components", fx("groupoid_disjoint")}, cli::ok, "components"},
      {{"iso", fx("z2"), fx("z2")}, cli::ok, "morphism"},
      {{"extend", fx("c_lio"), fx("groupoid_z2_2")}, cli::ok, "morphism"},
      {{"green", fx("inductive_b_z2_2"), "--rel", "green_R"}, cli::ok, "classes"},
      {{"pipeline", script("round_trip")}, cli::ok, "stages"},
  };
  for (auto const& c : cases) {
    INFO(c.args[0]);
    auto doc = run_json(c.args, c.code);
    CHECK(doc["verb"] == c.args[0]);
    CHECK(doc.contains(c.key));
  }
}

TEST_CASE("output is deterministic", "[cli]") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"fractions", fx("c_lio")},
           {"--json", "fractions", fx("groupoid_s3_2")},
           {"--json", "iorder", fx("b_z3_2"), fx("b_z3_2")},
           {"construct", "omega", "--group", "z2", "--n", "2"},
           {"green", fx("groupoid_s3_2"), "--rel", "green_L"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("construct matches the fixtures", "[cli]") {
  TempDir d;
  struct Case {
    std::vector<std::string> args;
    char const*              fixture;
  };
  std::vector<Case> const cases = {
      {{"construct", "connected", "--group", "z2", "--n", "2"}, "groupoid_z2_2"},
      {{"construct", "brandt", "--group", "z2", "--n", "2"}, "b_z2_2"},
      {{"construct", "nat", "--n", "5"}, "nat_window5"},
      {{"construct", "natplus", "--n", "6"}, "natplus_window6"},
  };
  for (auto const& c : cases) {
    INFO(c.fixture);
    auto args = c.args;
    args.push_back("-o");
    args.push_back(d / "x.alg");
    REQUIRE(run(args).code == cli::ok);
    auto built = load_file(d / "x.alg");
    auto fixed = load_file(fx(c.fixture));
    CHECK(serialize(built) == serialize(fixed));
  }
  auto z = run({"construct", "zero-union", "--part", fx("z2_zero"), "--part", fx("b_trivial_2")});
  REQUIRE(z.code == cli::ok);
  CHECK(view(load(z.out)).size() == 2 + 4 + 1);
  CHECK(run({"construct", "zero-union", "--part", fx("z2")}).code == cli::failed);
  CHECK(run({"construct", "brandt", "--group", "q8"}).code == cli::usage);
}

TEST_CASE("iso honours fixed points", "[cli]") {
  CHECK(run({"iso", fx("z3"), fx("z3"), "--fix", "a=a2"}).code == cli::ok);
  CHECK(run({"iso", fx("z3"), fx("z3"), "--fix", "a=e"}).code == cli::failed);
  CHECK(run({"iso", fx("z2"), fx("z3")}).code == cli::failed);
  auto doc = run_json({"iso", fx("z3"), fx("z3"), "--fix", "a=a2"}, cli::ok);
  CHECK(doc["morphism"].dump().find("a2") != std::string::npos);
}

TEST_CASE("extend reports uniqueness", "[cli]") {
  auto doc = run_json({"extend", fx("c_lio"), fx("groupoid_z2_2")}, cli::ok);
  CHECK(doc["unique"] == true);
  CHECK(doc["reports"][0]["verdict"] == "Holds");
  auto into = run_json({"extend", fx("c_lio"), fx("groupoid_z2_2"), "--into",
                        fx("groupoid_z2_2")},
                       cli::ok);
  CHECK(into["unique"] == true);
}

TEST_CASE("green agrees with the ideal relation", "[cli]") {
  for (auto const& name : {"inductive_b_z2_2", "groupoid_z2_2", "groupoid_disjoint", "groupoid_s3_2"}) {
    for (auto const& rel : {"green_R", "green_L", "green_J"}) {
      INFO(name << " " << rel);
      auto doc = run_json({"green", fx(name), "--rel", rel, "--oracle"}, cli::ok);
      CHECK(doc["reports"][0]["verdict"] == "Holds");
    }
  }
  CHECK(run({"green", fx("b_z2_2"), "--rel", "green_R"}).code == cli::usage);
  auto po = run_json({"green", fx("b_z2_2"), "--rel", "natural_order"}, cli::ok);
  CHECK(po.contains("pairs"));
}

TEST_CASE("pipelines chain their outputs", "[cli]") {
  auto doc = run_json({"pipeline", script("round_trip")}, cli::ok);
  REQUIRE(doc["stages"].size() == 6);
  CHECK(doc["stages"][1]["classes"] == 8);
  CHECK(doc["stages"][2]["reports"][0]["verdict"] == "Holds");
  CHECK(doc["stages"][4]["reports"][0]["verdict"] == "Holds");
  auto nat = run_json({"pipeline", script("nat_window")}, cli::ok);
  CHECK(nat["stages"][1]["classes"] == 11);
  CHECK(nat["stages"][2]["components"].size() == 1);
  // A usage error stops the script.
  auto bad = run_json({"pipeline", script("wrong_mode")}, cli::usage);
  CHECK(bad["stages"].size() == 1);
  CHECK(bad["stages"][0]["error"]["type"] == "incompatible-kind");
}

TEST_CASE("pipelines reject dangling references", "[cli]") {
  TempDir d;
  std::ofstream(d / "s.qgp") << "adjoin-zero $2\n";
  auto r = run({"pipeline", d / "s.qgp"});
  CHECK(r.code == cli::usage);
  CHECK(r.err.find("$2") != std::string::npos);
}
