#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nextclosure/cli.hpp"
#include "nextclosure/cxt.hpp"
#include "nextclosure/random_context.hpp"

using namespace nextclosure;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("nextclosure_cli_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

const std::string kK1 = "B\n\n3\n3\n\ng0\ng1\ng2\nm0\nm1\nm2\nXX.\n.XX\nX.X\n";

}  // namespace

TEST_CASE("intents on K1") {
  const auto file = write_temp("k1.cxt", kK1).string();
  const auto r = run({"intents", file});
  CHECK(r.code == 0);
  CHECK(lines(r.out) ==
        std::vector<std::string>{"m0 m1 m2", "m0 m2", "m1 m2", "m2", "m0 m1", "m0", "m1", ""});

  const auto first = run({"intents", file, "--limit", "1"});
  CHECK(lines(first.out) == std::vector<std::string>{"m0 m1 m2"});

  const auto classic = run({"intents", file, "--algorithm", "classic"});
  CHECK(classic.code == 0);
  const auto a = lines(r.out), b = lines(classic.out);
  CHECK(std::multiset<std::string>(a.begin(), a.end()) == std::multiset<std::string>(b.begin(), b.end()));
  CHECK(b.front() == "");

  const auto json = run({"intents", file, "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 8);
  CHECK(doc[0] == nlohmann::json{"m0", "m1", "m2"});
  CHECK(doc[1] == nlohmann::json{"m0", "m2"});
  CHECK(doc[7] == nlohmann::json::array());
}

TEST_CASE("extents, concepts, reduce") {
  const auto file = write_temp("k1b.cxt", kK1).string();
  const auto ex = run({"extents", file});
  CHECK(ex.code == 0);
  CHECK(lines(ex.out).size() == 8);
  CHECK(lines(ex.out).front() == "g0 g1 g2");

  const auto cs = run({"concepts", file, "--limit", "2"});
  CHECK(lines(cs.out) == std::vector<std::string>{" | m0 m1 m2", "g2 | m0 m2"});
  const auto cj = nlohmann::json::parse(run({"concepts", file, "--format", "json"}).out);
  CHECK(cj.size() == 8);
  CHECK(cj[7]["extent"] == nlohmann::json{"g0", "g1", "g2"});

  const auto dup = write_temp("dup.cxt", "B\n\n3\n2\n\na\nb\nc\nx\ny\nX.\nX.\nXX\n").string();
  const auto red = run({"reduce", dup});
  CHECK(red.code == 0);
  CHECK(red.out == "B\n\n1\n2\n\na\nx\ny\nX.\n");
}

TEST_CASE("bench reports equal intent counts") {
  const auto file = write_temp("k1c.cxt", kK1).string();
  const auto r = run({"bench", file, "--repeat", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["algorithm"] == "irreducible");
  CHECK(doc[0]["intents"] == 8);
  CHECK(doc[1]["intents"] == 8);
  CHECK(run({"bench", file}).out.find("irreducible") != std::string::npos);
}

TEST_CASE("random and check") {
  const auto r = run({"random", "--objects", "4", "--attributes", "3", "--density", "0.5", "--seed", "9"});
  CHECK(r.code == 0);
  CHECK(parse_cxt(r.out) == random_context(4, 3, 0.5, 9));
  CHECK(run({"random", "--objects", "4", "--attributes", "3", "--density", "2", "--seed", "9"}).code == 2);

  const auto file = write_temp("rand.cxt", r.out).string();
  const auto c = run({"check", file});
  CHECK(c.code == 0);
  CHECK(c.out.find("0 violations") != std::string::npos);
}

TEST_CASE("classic and irreducible print the same lines") {
  SplitMix64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto k = random_context(rng.below(9), rng.below(9), 0.5, rng.next());
    const auto file = write_temp("prop.cxt", write_cxt(k)).string();
    auto a = lines(run({"intents", file}).out), b = lines(run({"intents", file, "--algorithm", "classic"}).out);
    CHECK(a.size() == b.size());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"intents"}).code == 2);
  CHECK(run({"intents", "x.cxt", "--algorithm", "magic"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto missing = run({"intents", "/nonexistent/file.cxt"});
  CHECK(missing.code == 1);
  CHECK(missing.out.empty());
  CHECK(missing.err.find("cannot read") != std::string::npos);

  const auto bad = write_temp("bad.cxt", "B\n\n1\n2\n\ng\na\nb\nX\n").string();
  const auto parsed = run({"intents", bad});
  CHECK(parsed.code == 1);
  CHECK(parsed.err.find(":9:") != std::string::npos);
}
