// Contract tests for the slicestar binary: file formats, exit codes and the
// wire formats of each subcommand.  The binary path arrives in SLICESTAR_BIN.

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "slicestar/json_io.hpp"
#include "slicestar/stem.hpp"

using namespace slicestar;

namespace {

std::string bin() {
    const char* p = std::getenv("SLICESTAR_BIN");
    REQUIRE(p != nullptr);
    return p;
}

std::string tmp_dir() {
    static int counter = 0;
    std::string dir = "/tmp/slicestar_cli_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++);
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    return dir;
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << j.dump(2);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run(const std::string& args, const std::string& stdout_to = "/dev/null") {
    const std::string cmd = bin() + " " + args + " > " + stdout_to + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

json ball_json(double radius = 1.0) {
    return json{{"name", "euclidean_ball"},
                {"params", {{"center", {0.0}}, {"radius", radius}}}};
}

}  // namespace

TEST_CASE("eval evaluates a polynomial at points") {
    const std::string dir = tmp_dir();
    write_file(dir + "/d.json", ball_json(4.0));
    write_file(dir + "/f.json",
               json{{"type", "poly"},
                    {"coeffs", {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}}}});
    write_file(dir + "/p.json",
               json::array({SlicePoint::make({1.0}, {2.0}, unit_i())}));
    REQUIRE(run("eval --fn " + dir + "/f.json --domain " + dir +
                "/d.json --points " + dir + "/p.json --out " + dir +
                "/out.json") == 0);
    const json out = json::parse(slurp(dir + "/out.json"));
    const Quaternion v = out["values"][0].get<Quaternion>();
    CHECK(approx_equal(v, Quaternion{-3, 4, 0, 0}, 1e-12));  // (1+2i)^2
}

TEST_CASE("stem emits the wire format {F1, F2}") {
    const std::string dir = tmp_dir();
    write_file(dir + "/d.json", ball_json(4.0));
    write_file(dir + "/f.json", json{{"type", "identity"}});
    write_file(dir + "/p.json", json{{"generator", "segment"},
                                     {"from", {1.0}},
                                     {"to", {{1.0}, {2.0}}}});
    REQUIRE(run("stem --fn " + dir + "/f.json --domain " + dir +
                "/d.json --path " + dir + "/p.json --out " + dir +
                "/stem.json") == 0);
    const json out = json::parse(slurp(dir + "/stem.json"));
    const StemValue F = out.get<StemValue>();
    CHECK(approx_equal(F.F1, Quaternion(1.0), 1e-12));
    CHECK(approx_equal(F.F2, Quaternion(2.0), 1e-12));
}

TEST_CASE("star writes the pinned CSV columns") {
    const std::string dir = tmp_dir();
    write_file(dir + "/d.json", ball_json());
    write_file(dir + "/f.json", json{{"type", "const"}, {"value", {0, 0, 1, 0}}});
    write_file(dir + "/g.json", json{{"type", "identity"}});
    write_file(dir + "/probes.json",
               json::array({SlicePoint::make({0.2}, {0.4}, unit_i())}));
    REQUIRE(run("star --f " + dir + "/f.json --g " + dir + "/g.json --omega1 " +
                dir + "/d.json --omega2 " + dir + "/d.json --probes " + dir +
                "/probes.json --override-hypotheses --out " + dir +
                "/star.csv") == 0);
    const std::string csv = slurp(dir + "/star.csv");
    CHECK(csv.find("probe,f,g,f_star_g,pointwise_fg,residual_vs_oracle") !=
          std::string::npos);
    CHECK(csv.find("# hypothesis") != std::string::npos);
    CHECK(csv.find("caller-override") != std::string::npos);
}

TEST_CASE("check-domain verdicts drive the exit code") {
    const std::string dir = tmp_dir();
    write_file(dir + "/ball.json", ball_json());
    CHECK(run("check-domain --domain " + dir +
              "/ball.json --suite weak-axial --units 40 --seed 7") == 0);

    const ComplexPath base = make_segment({{0.2, 0.0}}, {{1.0, 2.0}});
    json tube;
    tube["name"] = "slice_tube";
    tube["params"] = json{{"base", base}, {"unit", {1.0, 0.0, 0.0}},
                          {"thickness", 0.1}};
    write_file(dir + "/tube.json", tube);
    CHECK(run("check-domain --domain " + dir +
              "/tube.json --suite self-stem --units 100 --seed 7 --format json "
              "--out " + dir + "/tube_report.json") == 1);
    const json report = json::parse(slurp(dir + "/tube_report.json"));
    CHECK(report["verdict"] == "violation-found");
    CHECK(report["witnesses"].size() > 0);
}

TEST_CASE("cr-check writes a residual table") {
    const std::string dir = tmp_dir();
    write_file(dir + "/d.json", ball_json());
    write_file(dir + "/f.json", json{{"type", "exp-series"}, {"terms", 12}});
    REQUIRE(run("cr-check --fn " + dir + "/f.json --domain " + dir +
                "/d.json --h 1e-3 --units 6 --grid 9 --out " + dir +
                "/cr.csv") == 0);
    const std::string csv = slurp(dir + "/cr.csv");
    CHECK(csv.find("I_x,I_y,I_z,x,y,var,residual") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') > 10);
}

TEST_CASE("verify on the tube counterexample scenario exits nonzero") {
    const std::string dir = tmp_dir();
    CHECK(run("verify --scenario single-slice-tube --domain-units 100 "
              "--format json --out " + dir + "/tube.json") == 1);
    const json report = json::parse(slurp(dir + "/tube.json"));
    CHECK(report["checks"]["stem-preserving"]["verdict"] == "violation-found");
    CHECK(report["summary"]["expected_mismatches"] == 0);
}

TEST_CASE("SLICESTAR_SEED overrides the seed flag") {
    const std::string dir = tmp_dir();
    const std::string cmd =
        "SLICESTAR_SEED=99 " + bin() +
        " verify --scenario ball-polynomials --seed 7 --units 20 "
        "--domain-units 40 --format json --out " + dir + "/r.json" +
        " > /dev/null 2>&1";
    // restrict to a cheap check list via a scenario file
    json sc;
    sc["base"] = "ball-polynomials";
    sc["checks"] = json::array({"eq-fcg"});
    write_file(dir + "/sc.json", sc);
    const std::string cmd2 = "SLICESTAR_SEED=99 " + bin() +
                             " verify --scenario-file " + dir +
                             "/sc.json --seed 7 --units 20 --domain-units 40 "
                             "--format json --out " + dir +
                             "/r.json > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
    const json report = json::parse(slurp(dir + "/r.json"));
    CHECK(report["seed"] == 99);
    (void)cmd;
}

TEST_CASE("malformed input is a diagnostic, not a crash") {
    const std::string dir = tmp_dir();
    std::ofstream bad(dir + "/bad.json");
    bad << "{ not json";
    bad.close();
    CHECK(run("check-domain --domain " + dir + "/bad.json --suite real-path") == 2);
    CHECK(run("verify --scenario no-such-scenario") == 2);
}
