// Copyright 2026 The bbst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "bbst/cli.hpp"
#include "bbst/constructions.hpp"
#include "bbst/io.hpp"

using namespace bbst;
using Catch::Approx;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("bbst-test-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("point files", "[io]") {
  SECTION("round trip keeps coordinates") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PointSet ps = random_points(50, seed);
      std::istringstream in(format_points(ps));
      const PointSet back = parse_points(in);
      REQUIRE(back.size() == ps.size());
      for (Index i = 0; i < ps.size(); ++i) REQUIRE((back[i] - ps[i]).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  SECTION("comments, blanks and stray whitespace") {
    std::istringstream in("# header\n\n  1.5   2\n\t-3e-1 4 \n# trailing\n");
    const PointSet ps = parse_points(in);
    REQUIRE(ps.size() == 2);
    CHECK(ps[1](0) == -0.3);
  }
  SECTION("malformed input") {
    for (const char* bad : {"1\n", "1 2 3\n", "a b\n", "", "# only a comment\n", "1 2\n1 2\n"}) {
      std::istringstream in(bad);
      CHECK_THROWS_AS(parse_points(in), Error);
    }
  }
}

TEST_CASE("reports", "[io]") {
  const PointSet ps = generate({ConstructionName::PentagonCenter});
  const auto dbt = approximate(ps, 4);
  const auto j = tree_report(dbt, ps);
  CHECK(j["n"] == 6);
  CHECK(j["k"] == 4);
  CHECK(j["edges"].size() == 5);
  CHECK(j["maxDegree"].get<int>() <= 4);
  CHECK(j["ratio"].get<double>() == Approx(j["bottleneck"].get<double>() / j["baseBottleneck"].get<double>()));
  CHECK(j["guarantee"].get<double>() == Approx(std::numbers::sqrt2));

  const auto e = to_json(exact_bottleneck_tree(ps, 4), ps);
  CHECK(e["value"].get<double>() == Approx(2 * std::sin(to_radians(36.0))));
}

TEST_CASE("svg", "[io]") {
  SECTION("one point") {
    const PointSet ps(std::vector<Point>{{0.5, 0.5}});
    const std::string svg = render_svg(ps, {});
    CHECK(count(svg, "<circle") == 1);
    CHECK(count(svg, "<line") == 0);
    CHECK(svg.rfind("<svg", 0) == 0);
  }
  SECTION("nineteen points with the EMST") {
    const PointSet ps = generate({ConstructionName::Lower19});
    const std::vector<SvgLayer> layers{{compute_emst(ps), "emst"}};
    const std::string svg = render_svg(ps, layers);
    CHECK(count(svg, "<circle") == 19);
    CHECK(count(svg, "<line") == 18);
    CHECK(svg == render_svg(ps, layers));
  }
  SECTION("two styled layers") {
    const PointSet ps = random_points(25, 1);
    const std::vector<SvgLayer> layers{{compute_emst(ps), "emst", "#999"}, {approximate(ps, 3).tree, "deg3", "#c00"}};
    const std::string svg = render_svg(ps, layers);
    CHECK(count(svg, "class=\"emst\"") == 1);
    CHECK(count(svg, "class=\"deg3\"") == 1);
    CHECK(count(svg, "<line") == 48);
  }
}

TEST_CASE("command line", "[cli]") {
  TempDir dir;
  const std::string sq = dir.file("square.txt");

  SECTION("gen then ratio") {
    REQUIRE(run({"gen", "square_center", "-o", sq}).code == 0);
    const Run r = run({"ratio", sq, "--degree", "3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ratio"].get<double>() == Approx(std::numbers::sqrt2).epsilon(1e-12));
  }
  SECTION("gen to stdout") {
    const Run r = run({"gen", "random", "--n", "7", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(count(r.out, "\n") == 7);
  }
  SECTION("tree on the pentagon") {
    const std::string f = dir.file("pent.txt");
    REQUIRE(run({"gen", "pentagon_center", "-o", f}).code == 0);
    const std::string svg = dir.file("pent.svg");
    const Run r = run({"tree", f, "--degree", "4", "--svg", svg});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["maxDegree"].get<int>() <= 4);
    CHECK(j["ratio"].get<double>() <= std::numbers::sqrt2 + 1e-9);
    CHECK(count(slurp(svg), "<circle") == 6);
  }
  SECTION("emst") {
    const std::string f = dir.file("l19.txt");
    REQUIRE(run({"gen", "lower19", "-o", f}).code == 0);
    const Run r = run({"emst", f});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["edges"].size() == 18);
    CHECK(j["k"].is_null());
    CHECK(j["bottleneck"].get<double>() == Approx(1.0));
  }
  SECTION("check passes on every construction") {
    for (ConstructionName name : all_constructions()) {
      const std::string f = dir.file(std::string(to_string(name)) + ".txt");
      REQUIRE(run({"gen", std::string(to_string(name)), "-o", f}).code == 0);
      const Run r = run({"check", f});
      INFO(to_string(name) << "\n" << r.out << r.err);
      CHECK(r.code == 0);
      CHECK(nlohmann::json::parse(r.out).size() == 4);
    }
  }
  SECTION("single checker selection") {
    REQUIRE(run({"gen", "square_center", "-o", sq}).code == 0);
    const Run r = run({"check", sq, "--lemma", "two-angle"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 1);
  }
  SECTION("exact budget") {
    const std::string f = dir.file("r13.txt");
    REQUIRE(run({"gen", "random", "--n", "13", "--seed", "1", "-o", f}).code == 0);
    const Run over = run({"exact", f, "--degree", "3"});
    CHECK(over.code == 2);
    CHECK(over.err.find("--max-exact-n") != std::string::npos);
    CHECK(run({"exact", f, "--degree", "2"}).code == 0);
    CHECK(run({"exact", f, "--degree", "3", "--max-exact-n", "13"}).code == 0);
  }
  SECTION("repro") {
    for (const char* name : {"beta2-sqrt7", "beta3-sqrt2", "beta4-pentagon", "spider-beta2"}) {
      const Run r = run({"repro", name});
      INFO(r.out);
      CHECK(r.code == 0);
      CHECK(r.out.find("PASS") != std::string::npos);
    }
    const Run j = run({"repro", "beta4-pentagon", "--json"});
    CHECK(nlohmann::json::parse(j.out)["pass"] == true);
  }
  SECTION("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"tree", sq}).code == 2);
    CHECK(run({"tree", dir.file("missing.txt"), "--degree", "3"}).code == 2);
    CHECK(run({"tree", sq, "--degree", "5"}).code == 2);
    CHECK(run({"gen", "octagon"}).code == 2);
    CHECK(run({"repro", "beta9"}).code == 2);
    CHECK(run({"gen", "square_center", "--radius", "-1"}).code == 2);
  }
}
