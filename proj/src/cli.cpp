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

#include "bbst/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include "bbst/bounded_tree.hpp"
#include "bbst/constructions.hpp"
#include "bbst/exact_oracle.hpp"
#include "bbst/io.hpp"
#include "bbst/verify.hpp"

namespace bbst {

namespace {

struct Options {
  std::string name;
  std::string file;
  std::string output = "-";
  std::string svg;
  std::string lemma = "all";
  double radius = 1.0;
  int n = 20;
  std::uint64_t seed = 0;
  int degree = 0;
  int max_exact_n = -1;
  bool json = false;
};

int default_budget(int k) { return k == 2 ? 20 : 12; }

void enforce_cli_budget(const PointSet& ps, int k, int max_exact_n) {
  const int limit = max_exact_n > 0 ? max_exact_n : default_budget(k);
  if (ps.size() > limit) {
    throw Error(ErrorKind::BudgetExceeded, "exact solver limited to " + std::to_string(limit) + " points (got " +
                                               std::to_string(ps.size()) + "); raise --max-exact-n");
  }
}

void write_svg(const std::string& path, const PointSet& ps, const std::vector<SvgLayer>& layers) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path);
  f << render_svg(ps, layers);
}

int run_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const auto name = parse_construction(o.name);
  if (!name) {
    err << "unknown construction '" << o.name << "'\n";
    return 2;
  }
  NamedConstruction c{*name, o.radius, o.n, o.seed};
  const PointSet ps = generate(c);
  if (o.output == "-") {
    out << format_points(ps);
  } else {
    write_points(ps, o.output);
  }
  return 0;
}

int run_emst(const Options& o, std::ostream& out) {
  const PointSet ps = read_points(o.file);
  const Tree t = compute_emst(ps);
  const double b = bottleneck(t, ps).value;
  out << tree_report(t, ps, std::nullopt, b, 1.0).dump(2) << "\n";
  if (!o.svg.empty()) write_svg(o.svg, ps, {SvgLayer{t, "emst", "#1f77b4", 1.5}});
  return 0;
}

int run_tree(const Options& o, std::ostream& out, std::ostream& err) {
  const PointSet ps = read_points(o.file);
  const Tree mst = compute_emst(ps);
  const DegreeBoundedTree dbt = approximate(ps, o.degree);
  const CheckReport check = verify_result(ps, dbt, bottleneck(mst, ps));
  if (!check.passed()) {
    err << to_json(check).dump(2) << "\n";
    return 1;
  }
  out << tree_report(dbt, ps).dump(2) << "\n";
  if (!o.svg.empty()) {
    write_svg(o.svg, ps,
              {SvgLayer{mst, "emst", "#bbbbbb", 3.0},
               SvgLayer{dbt.tree, "degree-" + std::to_string(o.degree), "#d62728", 1.5}});
  }
  return 0;
}

int run_exact(const Options& o, std::ostream& out) {
  const PointSet ps = read_points(o.file);
  enforce_cli_budget(ps, o.degree, o.max_exact_n);
  out << to_json(exact_bottleneck_tree(ps, o.degree), ps).dump(2) << "\n";
  return 0;
}

int run_ratio(const Options& o, std::ostream& out) {
  const PointSet ps = read_points(o.file);
  enforce_cli_budget(ps, o.degree, o.max_exact_n);
  out << to_json(ratio(ps, o.degree)).dump(2) << "\n";
  return 0;
}

int run_check(const Options& o, std::ostream& out) {
  const PointSet ps = read_points(o.file);
  const Tree t = compute_emst(ps);
  std::vector<CheckReport> reports;
  const bool all = o.lemma == "all";
  if (all || o.lemma == "angle-bounds") reports.push_back(check_angle_bounds(t, ps));
  if (all || o.lemma == "chord") reports.push_back(check_chord_bound(t, ps));
  if (all || o.lemma == "two-angle") reports.push_back(check_two_angle(t, ps));
  if (all || o.lemma == "empty-triangle") reports.push_back(check_empty_triangle(t, ps));
  nlohmann::json j = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    j.push_back(to_json(r));
    ok = ok && r.passed();
  }
  out << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

struct Reproduction {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  std::string expected_label;
  bool pass = false;
  std::string detail;
};

Reproduction reproduce(const std::string& which) {
  constexpr double tol = 1e-9;
  Reproduction r;
  r.name = which;
  auto ratio_for = [](ConstructionName name, int k) { return ratio(generate({name}), k); };

  if (which == "beta2-sqrt7") {
    const RatioReport rr = ratio_for(ConstructionName::Lower19, 2);
    r.measured = rr.ratio;
    r.expected = std::sqrt(7.0);
    r.expected_label = "sqrt(7)";
    r.pass = std::abs(rr.ratio - r.expected) <= tol && std::abs(rr.bst_value - 1.0) <= tol;
    r.detail = "bst " + std::to_string(rr.bst_value);
  } else if (which == "beta3-sqrt2") {
    const PointSet ps = generate({ConstructionName::SquareCenter});
    const RatioReport rr = ratio(ps, 3);
    const DegreeBoundedTree approx = approximate(ps, 3);
    r.measured = rr.ratio;
    r.expected = std::numbers::sqrt2;
    r.expected_label = "sqrt(2)";
    r.pass = std::abs(rr.ratio - r.expected) <= tol && approx.ratio() <= std::sqrt(3.0) + tol;
    r.detail = "degree-3 transform ratio " + std::to_string(approx.ratio());
  } else if (which == "beta4-pentagon") {
    const RatioReport rr = ratio_for(ConstructionName::PentagonCenter, 4);
    r.measured = rr.ratio;
    r.expected = 2.0 * std::sin(std::numbers::pi / 5.0);
    r.expected_label = "2 sin(36deg)";
    r.pass = std::abs(rr.ratio - r.expected) <= tol && rr.ratio > 1.175;
  } else if (which == "spider-beta2") {
    const RatioReport rr = ratio_for(ConstructionName::SpiderBeta2, 2);
    r.measured = rr.ratio;
    r.expected = 2.0;
    r.expected_label = "2";
    r.pass = std::abs(rr.ratio - r.expected) <= tol;
  } else {
    throw Error(ErrorKind::BadParams, "unknown reproduction '" + which + "'");
  }
  return r;
}

int run_repro(const Options& o, std::ostream& out) {
  const Reproduction r = reproduce(o.name);
  if (o.json) {
    out << nlohmann::json{{"name", r.name},
                          {"measured", r.measured},
                          {"expected", r.expected},
                          {"expectedLabel", r.expected_label},
                          {"pass", r.pass}}
               .dump(2)
        << "\n";
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: measured %.12f expected %.12f (%s) %s", r.name.c_str(), r.measured,
                  r.expected, r.expected_label.c_str(), r.pass ? "PASS" : "FAIL");
    out << buf;
    if (!r.detail.empty()) out << " [" << r.detail << "]";
    out << "\n";
  }
  return r.pass ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bottleneck bounded-degree spanning trees"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a named point set");
  gen->add_option("name", o.name, "Construction name")->required();
  gen->add_option("--radius", o.radius, "Scale of deterministic constructions");
  gen->add_option("--n", o.n, "Point count for 'random'");
  gen->add_option("--seed", o.seed, "Seed for 'random'");
  gen->add_option("-o,--output", o.output, "Output file ('-' for stdout)");

  auto* emst = app.add_subcommand("emst", "Euclidean MST report");
  emst->add_option("file", o.file)->required();
  emst->add_flag("--json", o.json);
  emst->add_option("--svg", o.svg, "Also write an SVG drawing");

  auto* tree = app.add_subcommand("tree", "Degree-bounded tree from the EMST");
  tree->add_option("file", o.file)->required();
  tree->add_option("--degree", o.degree)->required()->check(CLI::IsMember({2, 3, 4}));
  tree->add_flag("--json", o.json);
  tree->add_option("--svg", o.svg, "Also write an SVG drawing");

  auto* exact = app.add_subcommand("exact", "Exact bottleneck degree-K spanning tree");
  exact->add_option("file", o.file)->required();
  exact->add_option("--degree", o.degree)->required()->check(CLI::IsMember({2, 3, 4, 5}));
  exact->add_option("--max-exact-n", o.max_exact_n, "Point budget (default 20 for K=2, 12 otherwise)");

  auto* rat = app.add_subcommand("ratio", "Exact degree-K bottleneck over BST bottleneck");
  rat->add_option("file", o.file)->required();
  rat->add_option("--degree", o.degree)->required()->check(CLI::IsMember({2, 3, 4, 5}));
  rat->add_option("--max-exact-n", o.max_exact_n, "Point budget (default 20 for K=2, 12 otherwise)");

  auto* check = app.add_subcommand("check", "Check MST structure properties");
  check->add_option("file", o.file)->required();
  check->add_option("--lemma", o.lemma)->check(CLI::IsMember({"angle-bounds", "chord", "two-angle", "empty-triangle", "all"}));

  auto* repro = app.add_subcommand("repro", "Reproduce a lower-bound witness");
  repro->add_option("name", o.name)
      ->required()
      ->check(CLI::IsMember({"beta2-sqrt7", "beta3-sqrt2", "beta4-pentagon", "spider-beta2"}));
  repro->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return run_gen(o, out, err);
    if (*emst) return run_emst(o, out);
    if (*tree) return run_tree(o, out, err);
    if (*exact) return run_exact(o, out);
    if (*rat) return run_ratio(o, out);
    if (*check) return run_check(o, out);
    if (*repro) return run_repro(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bbst
