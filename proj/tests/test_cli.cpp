#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "atomreach/cli.hpp"
#include "test_helpers.hpp"

using namespace atomreach;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_path() {
  static std::string path = [] {
    auto p = std::filesystem::temp_directory_path() / "atomreach_mono.spec";
    std::ofstream file(p);
    file << atomreach::test::kMonoSpec;
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_CASE("cli check") {
  Run r = run({"check", spec_path()});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("cli saturate prints the new transition and iteration count") {
  Run r = run({"saturate", spec_path(), "--pds", "Mono", "--nfa", "A"});
  CHECK(r.code == 0);
  CHECK(r.out.find("iterations: 2") != std::string::npos);
  CHECK(r.out.find("added (lI,k,l1): 2") != std::string::npos);
  CHECK(r.out.find("delta (lI,k,l1):") != std::string::npos);

  Run again = run({"saturate", spec_path(), "--pds", "Mono", "--nfa", "A"});
  CHECK(again.out == r.out);  // byte-identical output
}

TEST_CASE("cli saturate json") {
  Run r = run({"saturate", spec_path(), "--pds", "Mono", "--nfa", "A", "--json"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["iterations"] == 2);
  CHECK(j["added"].size() == 1);
  CHECK(j["added"][0]["count"] == 2);
}

TEST_CASE("cli member") {
  CHECK(run({"member", spec_path(), "--pds", "Mono", "--nfa", "A", "--config",
             "lI | k(2) k(1) k(3)"})
            .code == 0);
  CHECK(run({"member", spec_path(), "--pds", "Mono", "--nfa", "A", "--config",
             "lI | k(3) k(1)"})
            .code == 1);
  CHECK(run({"member", spec_path(), "--pds", "Mono", "--nfa", "A", "--config", "lI | k(1) k(3)"})
            .code == 0);
}

TEST_CASE("cli reach and decide") {
  CHECK(run({"reach", spec_path(), "--pds", "Mono", "--from", "lI", "--bottom", "k(any)", "--to",
             "lI"})
            .code == 0);
  CHECK(run({"decide", spec_path(), "--pds", "Mono", "--b", "A", "--c", "A"}).code == 0);
}

TEST_CASE("cli orbits") {
  Run atoms2 = run({"orbits", spec_path(), "--atoms", "--width", "2"});
  CHECK(atoms2.code == 0);
  CHECK(atoms2.out == "3\n");
  Run set = run({"orbits", spec_path(), "--set", "Mono.alphabet"});
  CHECK(set.code == 0);
  CHECK(set.out == "1\n");
}

TEST_CASE("cli exit codes") {
  // Width budget exceeded.
  CHECK(run({"orbits", spec_path(), "--atoms", "--width", "9"}).code == 3);
  // Usage errors.
  CHECK(run({"member", spec_path(), "--pds", "Nope", "--nfa", "A", "--config", "lI |"}).code == 2);
  CHECK(run({"nosuchcommand"}).code == 2);
  CHECK(run({"member", spec_path()}).code == 2);
  // Budget can be adjusted.
  CHECK(run({"orbits", spec_path(), "--atoms", "--width", "9", "--max-width", "9"}).code == 0);
}

TEST_CASE("cli saturate to file") {
  auto out_path = std::filesystem::temp_directory_path() / "atomreach_sat.json";
  Run r = run({"saturate", spec_path(), "--pds", "Mono", "--nfa", "A", "--json", "-o",
               out_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["iterations"] == 2);
  std::filesystem::remove(out_path);
}

TEST_CASE("cli oracle") {
  Run r = run({"oracle", spec_path(), "--pds", "Mono", "--nfa", "A", "--universe", "0,1,2",
               "--stack-bound", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
  CHECK(r.out.find("configs checked:") != std::string::npos);
}

TEST_CASE("shipped example specs answer as documented") {
  const std::string mono = std::string(ATOMREACH_SPEC_DIR) + "/mono.spec";
  const std::string dup = std::string(ATOMREACH_SPEC_DIR) + "/dup.spec";
  CHECK(run({"check", mono}).code == 0);
  CHECK(run({"check", dup}).code == 0);

  CHECK(run({"member", dup, "--pds", "Dup", "--nfa", "TwoEqual", "--config",
             "q | a(#1) a(#1)"})
            .code == 0);
  CHECK(run({"member", dup, "--pds", "Dup", "--nfa", "TwoEqual", "--config",
             "q | a(#0) a(#1)"})
            .code == 1);
  CHECK(run({"member", dup, "--pds", "Dup", "--nfa", "TwoEqual", "--config", "p | a(#3)"})
            .code == 0);
  CHECK(run({"oracle", dup, "--pds", "Dup", "--nfa", "TwoEqual", "--stack-bound", "4"}).code ==
        0);
}
