#include <doctest.h>

#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include "fockspace/cli/app.hpp"
#include "fockspace/cli/divisor_io.hpp"
#include "fockspace/cli/generators.hpp"
#include "fockspace/cli/report.hpp"
#include "fockspace/errors.hpp"

using namespace fockspace;
using namespace fockspace::cli;

namespace {

const FockParams kUnit(1.0);

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("fockctl_test_" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate_lattice") {
  CHECK(generate_lattice(kUnit, 1.0, 1, 1.5).divisor.size() == 9);
  CHECK(generate_lattice(kUnit, 10.0, 1, 5.0).divisor.size() == 1);
  CHECK(generate_lattice(kUnit, 1.0, 2, 1.0).divisor.size() == 5);  // boundary points kept
  CHECK(generate_lattice(kUnit, 1.0, 3, 2.0).divisor.total_multiplicity() == 3 * 13);
  CHECK_THROWS_AS(generate_lattice(kUnit, 0.0, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(generate_lattice(kUnit, 1.0, 0, 1.0), std::invalid_argument);
}

TEST_CASE("generate_covering_rings") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const FockParams p(alpha);
    const GeneratedDivisor g = generate_covering_rings(p, 1.0, 8.0);
    CHECK(g.family == "covering-rings");
    CHECK(coverage_defect(g.divisor, 1.0, DiscSign::minus, Window(8.0, 0.08), 0.0).empty());
    for (std::size_t i = 1; i < g.rings.size(); ++i) {
      CHECK(g.rings[i].multiplicity >= g.rings[i - 1].multiplicity);
      CHECK(g.rings[i].radius > g.rings[i - 1].radius);
    }
    CHECK_FALSE(pairwise_disjoint(g.divisor, 1.0, DiscSign::plus).disjoint);
  }
}

TEST_CASE("generate_disjoint_rings") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const FockParams p(alpha);
    const GeneratedDivisor g = generate_disjoint_rings(p, 1.0, 9.0);
    CHECK(g.family == "disjoint-rings");
    CHECK(pairwise_disjoint(g.divisor, 1.0, DiscSign::plus).disjoint);
    CHECK_FALSE(coverage_defect(g.divisor, 1.0, DiscSign::minus, Window(9.0, 0.09), 0.0).empty());
    CHECK(max_overlap(g.divisor, Window(9.0, 0.09)) == 1);
  }
  const GeneratedDivisor steep = generate_disjoint_rings(kUnit, 0.5, 12.0, 3);
  for (std::size_t i = 1; i < steep.rings.size(); ++i) {
    CHECK(steep.rings[i].multiplicity == steep.rings[i - 1].multiplicity + 3);
  }
}

TEST_CASE("divisor files") {
  SUBCASE("round trip") {
    const Divisor x(FockParams(0.7), {{{0.1, -1.0 / 3}, 2}, {{1e-17, 12345.678901234567}, 1}});
    const std::string text = serialize_divisor(x);
    const IngestedDivisor back = parse_divisor(text);
    CHECK(back.warnings.empty());
    CHECK(back.divisor.params() == x.params());
    CHECK(back.divisor.entries() == x.entries());
    CHECK(serialize_divisor(back.divisor) == text);
  }
  SUBCASE("merge warning") {
    const IngestedDivisor d = parse_divisor(
        R"({"alpha":1,"points":[{"re":1,"im":0,"mult":1},{"re":1,"im":0,"mult":2}]})");
    REQUIRE(d.divisor.size() == 1);
    CHECK(d.divisor.entries()[0].multiplicity == 3);
    CHECK(d.warnings.size() == 1);
  }
  SUBCASE("schema errors") {
    CHECK_THROWS_AS(parse_divisor(R"({"alpha":0,"points":[]})"), SchemaError);
    CHECK_THROWS_AS(parse_divisor(R"({"alpha":1,"points":[{"re":0,"im":0,"mult":0}]})"), SchemaError);
    CHECK_THROWS_AS(parse_divisor(R"({"alpha":1,"points":[{"re":0,"im":0,"mult":1.5}]})"), SchemaError);
    CHECK_THROWS_AS(parse_divisor(R"({"alpha":1,"points":[{"re":0,"im":0}]})"), SchemaError);
    CHECK_THROWS_AS(parse_divisor(R"({"alpha":1,"points":[],"extra":1})"), SchemaError);
    CHECK_THROWS_AS(parse_divisor(R"({"alpha":1,"points":[3]})"), SchemaError);
    try {
      parse_divisor("{\n\"alpha\": 1,\n\"points\": [\n{\"re\": }\n]}");
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(e.where().find("line 4") != std::string::npos);
    }
    try {
      parse_divisor(R"({"alpha":1,"points":[{"re":0,"im":0,"mult":1},{"re":0,"im":1,"mult":-2}]})");
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(e.where().find("/points/1") != std::string::npos);
    }
  }
}

TEST_CASE("report numbers") {
  CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
  CHECK(number(1.0 / 3.0).dump() == "0.333333333333");
  CHECK(number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(number(2.0).dump() == "2.0");
}

TEST_CASE("fockctl end to end") {
  TempDir tmp;
  const std::string lattice = tmp.file("lattice.json");

  SUBCASE("lattice check-geometry") {
    const RunResult gen =
        invoke({"generate", "lattice", "--spacing", "1", "--mult", "1", "--window", "5", "--out", lattice});
    REQUIRE(gen.code == kExitOk);
    const Json greport = Json::parse(gen.out);
    CHECK(greport["result"]["points"] == 81);

    const RunResult check = invoke({"check-geometry", lattice, "--window", "5"});
    REQUIRE(check.code == kExitOk);
    const Json report = Json::parse(check.out);
    CHECK(report["tool"] == "fockctl");
    CHECK(report["verdicts"]["sampling_necessary_cover_plus_c"]["witness_c"] == 1.0);
    CHECK(report["verdicts"]["finite_overlap_bound"] == 4);

    const RunResult again = invoke({"check-geometry", lattice, "--window", "5"});
    CHECK(again.out == check.out);
  }

  SUBCASE("defect files") {
    REQUIRE(invoke({"generate", "lattice", "--spacing", "1", "--window", "3", "--out", lattice}).code == 0);
    const std::string dir = tmp.file("defects");
    const RunResult r =
        invoke({"check-geometry", lattice, "--window", "3", "--c-list", "0.25,0.5", "--defects-dir", dir});
    REQUIRE(r.code == kExitOk);
    CHECK(std::filesystem::exists(dir + "/sampling_sufficient_c1.csv"));
    CHECK(read_text_file(dir + "/uniqueness.csv").rfind("re,im\n", 0) == 0);
  }

  SUBCASE("frame-bounds on a single high-multiplicity point") {
    const std::string file = tmp.file("single.json");
    write_text_file(file, serialize_divisor(Divisor(kUnit, {{0.0, 21}})));
    const RunResult r = invoke({"frame-bounds", file, "--degree", "20"});
    REQUIRE(r.code == kExitOk);
    const Json s = Json::parse(r.out)["summaries"][0];
    CHECK(s["ratio"] == 1.0);
    CHECK(s["N"] == 20);

    const std::string csv = tmp.file("sweep.csv");
    REQUIRE(invoke({"frame-bounds", file, "--degree-sweep", "5:20:5", "--csv", csv}).code == kExitOk);
    const std::string text = read_text_file(csv);
    CHECK(text.rfind("N,smin,smax,ratio\n5,", 0) == 0);
  }

  SUBCASE("interpolate and gram") {
    const std::string file = tmp.file("pair.json");
    const std::string values = tmp.file("values.json");
    write_text_file(file, serialize_divisor(Divisor(kUnit, {{0.0, 1}, {4.0, 1}})));
    write_text_file(values, R"({"values":[{"re":1,"im":0},{"re":0,"im":0}]})");
    const RunResult r = invoke({"interpolate", file, "--values", values, "--dump-atoms"});
    REQUIRE(r.code == kExitOk);
    const Json result = Json::parse(r.out)["result"];
    CHECK(result["norm"].get<double>() == doctest::Approx(1.0 / std::sqrt(1.0 - std::exp(-16.0))).epsilon(1e-11));
    CHECK(result["atoms"].size() == 2);
    CHECK(invoke({"gram", file}).code == kExitOk);

    write_text_file(values, R"({"values":[{"re":1,"im":0}]})");
    CHECK(invoke({"interpolate", file, "--values", values}).code == kExitSchema);
  }

  SUBCASE("exit codes") {
    CHECK(invoke({"check-geometry", tmp.file("missing.json"), "--window", "5"}).code == kExitSchema);
    const std::string bad = tmp.file("bad.json");
    write_text_file(bad, R"({"alpha":-1,"points":[]})");
    CHECK(invoke({"frame-bounds", bad, "--degree", "3"}).code == kExitSchema);
    CHECK(invoke({"no-such-command"}).code == kExitSchema);

    const std::string four = tmp.file("four.json");
    write_text_file(four, serialize_divisor(Divisor(kUnit, {{0.0, 4}})));
    const RunResult pre = invoke({"uniqueness", four, "--degree", "3", "--window", "2"});
    CHECK(pre.code == kExitPrecondition);
    CHECK_FALSE(pre.err.empty());
    const RunResult ok = invoke({"uniqueness", four, "--degree", "8", "--window", "2"});
    CHECK(ok.code == kExitOk);
  }
}
