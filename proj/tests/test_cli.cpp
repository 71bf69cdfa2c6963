// Black-box checks of the command-line interface: output modes, exit codes,
// and the report cache. The binary under test comes from CRITMONO_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("CRITMONO_CLI");
  REQUIRE_MESSAGE(p != nullptr, "CRITMONO_CLI must point at the binary");
  return p;
}

std::string samples() { return CRITMONO_SAMPLES_DIR; }

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = "\"" + cli_path() + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int rc = pclose(p);
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

// Scratch directory, removed when the test process ends.
struct Scratch {
  fs::path dir;
  Scratch() {
    std::string tmpl = (fs::temp_directory_path() / "critmono-cli-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    REQUIRE(mkdtemp(buf.data()) != nullptr);
    dir = buf.data();
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string file(const std::string& name, const std::string& content) {
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

}  // namespace

TEST_CASE("version and help") {
  RunResult v = run("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("0.1.0") != std::string::npos);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("bound --help").exit_code == 0);
}

TEST_CASE("bound output modes") {
  RunResult text = run("bound --n 7");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("s: 3") != std::string::npos);
  CHECK(text.out.find("(3,1,1,1,1) < (5,1,1) < (7)") != std::string::npos);

  RunResult js = run("bound --n 7 --json");
  CHECK(js.exit_code == 0);
  Json j = Json::parse(js.out);
  CHECK(j["s"] == 3);
  CHECK(j["kind"] == "alternating");

  RunResult sym = run("bound --n 6 --kind symmetric --json");
  CHECK(sym.exit_code == 0);
  CHECK(Json::parse(sym.out)["kind"] == "symmetric");
}

TEST_CASE("argument errors exit with status 2") {
  CHECK(run("bound").exit_code == 2);                 // missing --n
  CHECK(run("").exit_code == 2);                      // missing subcommand
  CHECK(run("frobnicate").exit_code == 2);            // unknown subcommand
  CHECK(run("bound --n 9 --kind nonsense").exit_code == 2);
  CHECK(run("monodromy --family " + samples() + "/cubic.json --basepoint " + samples() +
            "/basepoint_cubic.json")
            .exit_code == 2);  // neither --loops nor --auto
  CHECK(run("monodromy --family " + samples() + "/cubic.json --basepoint " + samples() +
            "/basepoint_cubic.json --auto --loops " + samples() + "/loops_cubic.json")
            .exit_code == 2);  // both
  CHECK(run("bound --n 9 --json extra-positional").exit_code == 2);
}

TEST_CASE("missing and malformed input files exit with status 2") {
  Scratch tmp;
  std::string garbage = tmp.file("garbage.json", "{ not json");
  CHECK(run("monodromy --family /nonexistent.json --basepoint " + samples() +
            "/basepoint_cubic.json --auto")
            .exit_code == 2);
  CHECK(run("monodromy --family " + garbage + " --basepoint " + samples() +
            "/basepoint_cubic.json --auto")
            .exit_code == 2);
  RunResult r = run("monodromy --family " + garbage + " --basepoint " + samples() +
                        "/basepoint_cubic.json --auto",
                    true);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("table output") {
  RunResult text = run("table");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("chain lower bound") != std::string::npos);
  CHECK(text.out.find("hilbert") != std::string::npos);

  RunResult js = run("table --json");
  Json j = Json::parse(js.out);
  CHECK(j["tschebotarow"] == Json::array({2, 2, 3, 3, 4}));
  CHECK(j["hilbert"] == Json::array({1, 2, 3, 4, 4}));
}

TEST_CASE("monodromy subcommand") {
  RunResult js = run("monodromy --family " + samples() + "/cubic.json --basepoint " + samples() +
                     "/basepoint_cubic.json --auto --json");
  CHECK(js.exit_code == 0);
  Json j = Json::parse(js.out);
  CHECK(j["order"] == 6);
  CHECK(j["transitive"] == true);
  CHECK(j["auto"] == true);

  // explicit loops on the product family: one 3-cycle, one transposition
  RunResult ex = run("monodromy --family " + samples() + "/product32.json --basepoint " +
                     samples() + "/basepoint_product32.json --loops " + samples() +
                     "/loops_product32.json --json");
  CHECK(ex.exit_code == 0);
  Json je = Json::parse(ex.out);
  CHECK(je["loop_count"] == 2);
  CHECK(je["order"] == 6);
  CHECK(je["transitive"] == false);

  // identical invocations replay byte-identically
  RunResult again = run("monodromy --family " + samples() + "/cubic.json --basepoint " +
                        samples() + "/basepoint_cubic.json --auto --json");
  CHECK(again.out == js.out);
}

TEST_CASE("inertia subcommand") {
  RunResult js = run("inertia --family " + samples() + "/sqrt.json --point " + samples() +
                     "/point_origin1.json --probes 2 --json");
  CHECK(js.exit_code == 0);
  Json j = Json::parse(js.out);
  CHECK(j["class"] == Json::array({2}));
  CHECK(j["order"] == 2);
  CHECK(j["probes"].size() == 2);

  RunResult text = run("inertia --family " + samples() + "/sqrt.json --point " + samples() +
                       "/point_origin1.json --probes 2");
  CHECK(text.out.find("class: (2)") != std::string::npos);
  CHECK(text.out.find("order: 2") != std::string::npos);
}

TEST_CASE("phi subcommand") {
  RunResult yes = run("phi --family " + samples() + "/product32.json --point " + samples() +
                      "/point_phi_product32.json --class 3,1,1 --blocks " + samples() +
                      "/blocks_cubic_orbit.json --basepoint " + samples() +
                      "/basepoint_product32.json --json");
  CHECK(yes.exit_code == 0);
  Json j = Json::parse(yes.out);
  CHECK(j["vanishes"] == true);

  RunResult no = run("phi --family " + samples() + "/product32.json --point " + samples() +
                     "/point_phi_product32.json --class 2,1,1,1 --blocks " + samples() +
                     "/blocks_pair_04.json --basepoint " + samples() +
                     "/basepoint_product32.json --json");
  CHECK(no.exit_code == 0);
  Json jn = Json::parse(no.out);
  CHECK(jn["vanishes"] == false);
  CHECK(jn["min_abs"].get<double>() > 1e-3);
}

TEST_CASE("chain subcommand") {
  RunResult js = run("chain --family " + samples() + "/quintic_chain.json --points " + samples() +
                     "/points_chain.json --json");
  CHECK(js.exit_code == 0);
  Json j = Json::parse(js.out);
  CHECK(j["lower_bound"] == 3);
  CHECK(j["chain"] == Json::parse("[[2,1,1,1],[3,1,1],[5]]"));
}

TEST_CASE("transform subcommand") {
  RunResult js = run("transform --from " + samples() + "/cubic.json --to " + samples() +
                     "/cubic_general3.json --pmap " + samples() + "/pmap_square.json --basepoint " +
                     samples() + "/basepoint_cubic.json --loops " + samples() +
                     "/loops_cubic.json --json");
  CHECK(js.exit_code == 0);
  Json j = Json::parse(js.out);
  CHECK(j["transformable"] == true);
  REQUIRE(j["alphas"].size() == 3);
  CHECK(std::abs(j["alphas"][2][0].get<double>() - 1.0) < 1e-8);
  CHECK(j["residual"].get<double>() < 1e-8);
}

TEST_CASE("numerical failures exit with status 3") {
  Scratch tmp;
  // two roots separated by ~6e-6 cannot be clustered at tolerance 1e-6
  std::string near = tmp.file("near.json", "[[[1e-11, 0]]]");
  RunResult r = run("chain --family " + samples() + "/sqrt.json --points " + near, true);
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("the report cache replays without recomputing") {
  Scratch tmp;
  std::string base = "bound --n 8 --json --cache-dir " + tmp.dir.string();
  RunResult first = run(base);
  CHECK(first.exit_code == 0);

  int entries = 0;
  for (const auto& e : fs::directory_iterator(tmp.dir))
    if (e.path().extension() == ".json") ++entries;
  CHECK(entries == 1);

  RunResult second = run(base);
  CHECK(second.exit_code == 0);
  CHECK(second.out == first.out);
  entries = 0;
  for (const auto& e : fs::directory_iterator(tmp.dir))
    if (e.path().extension() == ".json") ++entries;
  CHECK(entries == 1);

  // a different seed gets its own entry
  RunResult seeded = run(base + " --seed 7");
  CHECK(seeded.exit_code == 0);
  entries = 0;
  for (const auto& e : fs::directory_iterator(tmp.dir))
    if (e.path().extension() == ".json") ++entries;
  CHECK(entries == 2);

  // text mode renders from the same cached artifact
  RunResult text = run("bound --n 8 --cache-dir " + tmp.dir.string());
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("s: 3") != std::string::npos);
}

TEST_CASE("tolerances reach the report configuration") {
  RunResult js = run("bound --n 5 --json --tol-cluster 1e-5 --seed 42");
  Json j = Json::parse(js.out);
  CHECK(j["config"]["tolerances"]["cluster"] == 1e-5);
  CHECK(j["config"]["seed"] == 42);
}
