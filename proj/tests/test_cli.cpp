#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qmatroids/json_io.hpp"

namespace fs = std::filesystem;
namespace io = qm::io;
using qm::Subspace;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qm_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const char* cli = std::getenv("QM_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "QM_CLI must point at the qmatroid binary");
  fs::path out = work_dir() / ("stdout" + std::to_string(++counter));
  fs::path err = work_dir() / ("stderr" + std::to_string(counter));
  std::string cmd =
      std::string(cli) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string fixture(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p.string();
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

std::string example_family_json() {
  io::FamilyFile fam;
  fam.q = 2;
  fam.n = 4;
  auto loop = Subspace::span(2, 4, {{0, 0, 0, 1}});
  for (const auto& s : qm::enumerate_subspaces(2, 4))
    if (s.dim() <= 2 && !s.contains(loop)) fam.members.push_back(s);
  return io::render(io::family_to_json(fam));
}

std::string counterexample_family_json() {
  io::FamilyFile fam;
  fam.q = 2;
  fam.n = 4;
  auto top = Subspace::span(2, 4, {{1, 0, 0, 1}, {0, 1, 1, 0}});
  for (const auto& s : qm::enumerate_subspaces(2, 4))
    if (top.contains(s)) fam.members.push_back(s);
  return io::render(io::family_to_json(fam));
}

std::string example_code_json() {
  qm::RankMetricCode C(qm::FieldSpec::prime_field(2), qm::FieldSpec::make(2, 3, {1, 1, 0, 1}),
                       4, {{1, 2, 0, 0}, {0, 1, 2, 0}});
  return io::render(io::code_to_json(C));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("uniform emits a deterministic rank table") {
    auto r = run("uniform -k 2 -n 4 -q 2");
    REQUIRE(r.code == 0);
    auto j = io::json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["q"] == 2);
    CHECK(j["ranks"].size() == 67);
    CHECK(io::qmatroid_from_json(j) == qm::uniform(2, 4, 2));
    auto again = run("uniform -k 2 -n 4 -q 2");
    CHECK(again.out == r.out);
  }

  TEST_CASE("usage and parameter errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("no-such-verb").code == 2);
    CHECK(run("uniform -k 2").code == 2);
    auto r = run("uniform -k 5 -n 4 -q 2");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("error") != std::string::npos);
  }

  TEST_CASE("dual through files is an involution, byte for byte") {
    auto u24 = path_of("u24.json");
    REQUIRE(run("uniform -k 2 -n 4 -q 2 -o " + u24).code == 0);
    REQUIRE(run("dual " + u24 + " -o " + path_of("d.json")).code == 0);
    REQUIRE(run("dual " + path_of("d.json") + " -o " + path_of("dd.json")).code == 0);
    CHECK(slurp(path_of("dd.json")) == slurp(u24));
    CHECK(slurp(path_of("d.json")) ==
          io::render(io::qmatroid_to_json(qm::uniform(2, 4, 2))));
  }

  TEST_CASE("check passes on a uniform matroid across all suites") {
    auto u24 = fixture("u24_check.json", io::render(io::qmatroid_to_json(qm::uniform(2, 4, 2))));
    auto r = run("check " + u24);
    REQUIRE(r.code == 0);
    auto j = io::json::parse(r.out);
    CHECK(j.size() >= 25);
    for (const auto& rep : j) CHECK(rep["holds"] == true);
    CHECK(r.err.find("r1: PASS") != std::string::npos);
    auto again = run("check " + u24);
    CHECK(again.out == r.out);
  }

  TEST_CASE("check honours a suite subset") {
    auto u = fixture("u13.json", io::render(io::qmatroid_to_json(qm::uniform(1, 3, 2))));
    auto r = run("check " + u + " --suites rank,closure");
    REQUIRE(r.code == 0);
    auto j = io::json::parse(r.out);
    REQUIRE(j.size() == 7);  // r1..r3 + cl1..cl4
    CHECK(j[0]["axiom"] == "r1");
    CHECK(j[3]["axiom"] == "cl1");
    CHECK(run("check " + u + " --suites nope").code == 2);
  }

  TEST_CASE("the counterexample family is rejected with I4 evidence") {
    auto fam = fixture("counter.json", counterexample_family_json());
    auto r = run("check " + fam + " --as-independents");
    REQUIRE(r.code == 1);
    auto j = io::json::parse(r.out);
    bool i4_failed = false;
    for (const auto& rep : j)
      if (rep["axiom"] == "I4") i4_failed = (rep["holds"] == false);
    CHECK(i4_failed);
    CHECK(r.err.find("I4: FAIL") != std::string::npos);

    auto build = run("from-family " + fam);
    CHECK(build.code == 1);
    auto reports = io::json::parse(build.out);
    CHECK(!reports.empty());
  }

  TEST_CASE("from-code and from-family produce identical tables") {
    auto code = fixture("excode.json", example_code_json());
    auto fam = fixture("exfam.json", example_family_json());
    REQUIRE(run("from-code " + code + " -o " + path_of("mc.json")).code == 0);
    REQUIRE(run("from-family " + fam + " -o " + path_of("mf.json")).code == 0);
    CHECK(slurp(path_of("mc.json")) == slurp(path_of("mf.json")));

    auto inv = run("invariants " + path_of("mc.json"));
    REQUIRE(inv.code == 0);
    auto j = io::json::parse(inv.out);
    CHECK(j["rank"] == 2);
    CHECK(j["bases"] == 28);
    CHECK(j["loops"] == 1);
    CHECK(j["circuits"] == 9);
  }

  TEST_CASE("restriction to the loop-perp is isomorphic to a free uniform") {
    auto fam = fixture("exfam_r.json", example_family_json());
    REQUIRE(run("from-family " + fam + " -o " + path_of("exm.json")).code == 0);
    REQUIRE(run("restrict " + path_of("exm.json") + " -e 0001 -o " + path_of("res.json")).code ==
            0);
    REQUIRE(run("uniform -k 2 -n 3 -q 2 -o " + path_of("u23.json")).code == 0);
    auto iso = run("iso " + path_of("res.json") + " " + path_of("u23.json"));
    REQUIRE(iso.code == 0);
    auto j = io::json::parse(iso.out);
    CHECK(j["isomorphic"] == true);
    CHECK(j["witness"].is_array());

    CHECK(run("restrict " + path_of("exm.json") + " -o " + path_of("x.json")).code == 2);
    CHECK(run("contract " + path_of("exm.json") + " -e 0001").code == 2);
  }

  TEST_CASE("truncate matches the next uniform down") {
    auto u24 = fixture("u24_t.json", io::render(io::qmatroid_to_json(qm::uniform(2, 4, 2))));
    REQUIRE(run("truncate " + u24 + " -o " + path_of("t.json")).code == 0);
    CHECK(slurp(path_of("t.json")) == io::render(io::qmatroid_to_json(qm::uniform(1, 4, 2))));
  }

  TEST_CASE("gabidulin codes round trip through distance and duality") {
    REQUIRE(run("gabidulin -q 2 -m 4 -n 4 -k 2 -o " + path_of("gab.json")).code == 0);
    auto d = run("code-distance " + path_of("gab.json"));
    REQUIRE(d.code == 0);
    auto j = io::json::parse(d.out);
    CHECK(j["d"] == 3);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    REQUIRE(run("code-dual " + path_of("gab.json") + " -o " + path_of("gd.json")).code == 0);
    auto dd = run("code-distance " + path_of("gd.json"));
    REQUIRE(dd.code == 0);
    CHECK(io::json::parse(dd.out)["d"] == 3);
    CHECK(run("gabidulin -q 6 -m 2 -n 2 -k 1").code == 2);
  }

  TEST_CASE("iso exits 1 for non-isomorphic matroids") {
    auto a = fixture("iso_a.json", io::render(io::qmatroid_to_json(qm::uniform(2, 4, 2))));
    auto b = fixture("iso_b.json", io::render(io::qmatroid_to_json(qm::uniform(1, 4, 2))));
    auto r = run("iso " + a + " " + b);
    CHECK(r.code == 1);
    auto j = io::json::parse(r.out);
    CHECK(j["isomorphic"] == false);
    CHECK(j["witness"].is_null());
  }

  TEST_CASE("rank-poly matches the library rendering") {
    auto u = fixture("u24_rp.json", io::render(io::qmatroid_to_json(qm::uniform(2, 4, 2))));
    auto r = run("rank-poly " + u);
    REQUIRE(r.code == 0);
    CHECK(r.out == io::render(io::rank_poly_to_json(qm::uniform(2, 4, 2).rank_polynomial())));
  }

  TEST_CASE("invariants reports the uniform profile") {
    auto u = fixture("u24_inv.json", io::render(io::qmatroid_to_json(qm::uniform(2, 4, 2))));
    auto r = run("invariants " + u);
    REQUIRE(r.code == 0);
    auto j = io::json::parse(r.out);
    CHECK(j["bases"] == 35);
    CHECK(j["circuits"] == 15);
    CHECK(j["flats"] == 17);
    CHECK(j["independents"] == 51);
    CHECK(j["isthmuses"] == 0);
    CHECK(j["loops"] == 0);
    CHECK(j["rank"] == 2);
    CHECK(j["rank_polynomial"] == "X^2 + 15*X + 35 + 15*Y + Y^2");
  }
}
