#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "monodisk/cli.hpp"
#include "monodisk/render_io.hpp"

using namespace monodisk;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(MONODISK_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in, "missing golden file " << name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "monodisk_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

// One JSON object on one line.
nlohmann::json error_line(const std::string& err) {
  REQUIRE(!err.empty());
  CHECK(err.find('\n') == err.size() - 1);
  return nlohmann::json::parse(err);
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"count_C_3_2.txt", {"count", "--family", "C", "--n", "3", "--k", "2"}},
      {"count_C_11_5.txt", {"count", "--family", "C", "--n", "11", "--k", "5"}},
      {"necklace_3_6_brute.txt", {"necklace", "--a", "3", "--b", "6", "--brute"}},
      {"members_3_2_limit8.txt", {"members", "--n", "3", "--k", "2", "--limit", "8"}},
      {"quasipoly_3_k5.txt", {"quasipoly", "--n", "3", "--k", "5"}},
      {"quasipoly_5_derive.txt", {"quasipoly", "--n", "5", "--derive"}},
      {"locus_3.txt", {"locus", "--n", "3"}},
  };
  for (const auto& [name, args] : cases) {
    CAPTURE(name);
    const auto r = call(args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == golden(name));
  }
  CHECK(call({"count", "--family", "C", "--n", "3", "--k", "2"}).out == "62\n");
  CHECK(call({"necklace", "--a", "3", "--b", "6", "--brute"}).out == "10 (formula=oracle ✓)\n");
  CHECK(call({"count", "--family", "Ctilde", "--n", "3", "--k", "2"}).out == "4\n");
  CHECK(call({"count", "--family", "D", "--n", "5"}).out == "2\n");
}

TEST_CASE("members listing") {
  const auto r = call({"members", "--n", "3", "--k", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string word, flag;
  int count = 0;
  while (lines >> word >> flag) {
    ++count;
    CHECK((flag == "A" || flag == "B"));
  }
  CHECK(count == 62);
}

TEST_CASE("usage errors") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"count", "--family", "C"},
           {"count", "--family", "E", "--n", "3"},
           {"count", "--family", "C", "--n", "4", "--k", "2"},
           {"count", "--family", "C", "--n", "three"},
           {"build", "--family", "D", "--word", "LSS"},
           {"build", "--family", "C", "--n", "3", "--k", "2", "--word", "LSSLSSSS"},
           {"build", "--family", "D", "--t", "1.5"},
           {"necklace", "--a", "0", "--b", "0"},
           {"quasipoly", "--n", "7"},
           {"locus", "--n", "4"},
       }) {
    CAPTURE(args.size());
    const auto r = call(args);
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.out.empty());
    const auto j = error_line(r.err);
    CHECK(j.contains("error"));
    CHECK(j.contains("message"));
  }
  CHECK(error_line(call({"build", "--family", "D", "--word", "LSS"}).err)["error"] == "Usage");
  CHECK(error_line(call({"count", "--family", "C", "--n", "4", "--k", "2"}).err)["error"] == "InvalidN");

  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("build, render, verify") {
  const auto doc = scratch("d5.json");
  CHECK(call({"build", "--family", "D", "--n", "5", "--t", "0.3", "--out", doc.string()}).code == 0);
  const auto r = call({"verify", doc.string()});
  CHECK(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["tile_count"] == 20);
  CHECK(report["center_touch_count"] == 10);
  CHECK(report["boundary_touch_count"] == 10);
  CHECK(report["valid"] == true);
  CHECK(report["monohedral"] == true);

  // Standard output carries the same document as --out.
  const auto piped = call({"build", "--family", "D", "--n", "5", "--t", "0.3"});
  CHECK(piped.out == read_text_file(doc.string()));

  const auto svg = scratch("d5.svg");
  CHECK(call({"render", doc.string(), "--svg", svg.string(), "--style", "colored"}).code == 0);
  CHECK(read_text_file(svg.string()).find("#c8102e") != std::string::npos);

  const auto locus_svg_file = scratch("locus5.svg");
  CHECK(call({"locus", "--n", "5", "--svg", locus_svg_file.string()}).code == 0);
  CHECK(fs::file_size(locus_svg_file) > 0);

  // A tiling with a tile removed still parses but fails validation.
  auto j = nlohmann::ordered_json::parse(read_text_file(doc.string()));
  j["tiles"].erase(3);
  const auto broken = scratch("broken.json");
  write_text_file(broken.string(), j.dump());
  const auto bad = call({"verify", broken.string()});
  CHECK(bad.code == cli::kExitFailure);
  CHECK(nlohmann::json::parse(bad.out)["valid"] == false);

  const auto missing = call({"verify", scratch("nope.json").string()});
  CHECK(missing.code == cli::kExitFailure);
  CHECK(error_line(missing.err)["error"] == "Io");

  // Same flags, same bytes; the environment seed applies only without --seed.
  CHECK(call({"verify", doc.string(), "--samples", "500"}).out == call({"verify", doc.string(), "--samples", "500"}).out);
  ::setenv("MONODISK_SEED", "7", 1);
  const auto env_seeded = call({"verify", doc.string(), "--samples", "500"}).out;
  ::setenv("MONODISK_SEED", "x7", 1);
  CHECK(call({"verify", doc.string()}).code == cli::kExitUsage);
  CHECK(call({"verify", doc.string(), "--samples", "500", "--seed", "7"}).out == env_seeded);
  ::unsetenv("MONODISK_SEED");
}

TEST_CASE("build and verify across the documented grid") {
  const auto doc = scratch("grid.json");
  auto pipeline = [&](std::vector<std::string> build_args) {
    build_args.insert(build_args.begin(), "build");
    build_args.push_back("--out");
    build_args.push_back(doc.string());
    CAPTURE(build_args);
    REQUIRE(call(build_args).code == 0);
    const auto r = call({"verify", doc.string(), "--samples", "2000"});
    CHECK(r.code == 0);
    if (r.code != 0) MESSAGE(r.out);
  };
  for (int n : {3, 5, 7}) {
    const std::string ns = std::to_string(n);
    for (const char* t : {"0", "0.3"}) {
      pipeline({"--family", "D", "--n", ns, "--t", t});
      for (int k : {1, 2, 3}) {
        const std::string ks = std::to_string(k);
        pipeline({"--family", "C", "--n", ns, "--k", ks, "--t", t});
        // One flipped wedge, then the rest unflipped.
        pipeline({"--family", "C", "--n", ns, "--k", ks, "--t", t, "--chirality", "B", "--word",
                  "L" + std::string((2 * n - 1) * k, 'S')});
        pipeline({"--family", "Ctilde", "--n", ns, "--k", ks, "--t", t, "--variant", "P"});
        pipeline({"--family", "Ctilde", "--n", ns, "--k", ks, "--t", t, "--variant", "Q"});
      }
    }
  }
  pipeline({"--family", "symradial", "--n", "6"});
  pipeline({"--family", "radgen"});
  pipeline({"--family", "D31"});
}
