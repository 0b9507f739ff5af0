#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polyomino/io.hpp"
#include "polyomino/report.hpp"

using namespace polyomino;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, not_closed = 3, refuted = 4, bound = 5, precondition = 6, uncertified = 7 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse_error: return parse;
    case ErrorKind::empty_collection:
    case ErrorKind::disconnected:
    case ErrorKind::not_closed_path: return not_closed;
    case ErrorKind::generation_timeout: return bound;
    case ErrorKind::not_certified:
    case ErrorKind::not_member: return uncertified;
    default: return precondition;
  }
}

struct Common {
  std::string input;
  std::string order = "auto";
  std::string variant = "primary";
  bool json_out = false;
  bool timings = false;
};

struct Loaded {
  std::string bytes;
  CellInput cells;
  Polyomino P;
  std::optional<ClosedPath> path;
  std::optional<ClosedPathViolation> violation;
};

Loaded load(const std::string& file) {
  std::string bytes;
  if (file == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    bytes = buf.str();
  } else {
    std::ifstream f(file);
    if (!f) throw Error(ErrorKind::parse_error, "cannot read " + file);
    std::ostringstream buf;
    buf << f.rdbuf();
    bytes = buf.str();
  }
  auto cells = parse_cells(bytes);
  for (const auto& w : cells.warnings) std::cerr << "warning: " << w << "\n";
  auto P = Polyomino::make(cells.cells);
  Loaded l{bytes, cells, P, std::nullopt, closed_path_violation(P)};
  if (!l.violation) l.path = as_closed_path(P);
  return l;
}

json header(const std::string& command, const Loaded& l) {
  json j;
  j["schema_version"] = report_schema_version;
  j["command"] = command;
  j["input"] = {{"digest", digest(l.bytes)}, {"format", l.cells.format}, {"warnings", l.cells.warnings}};
  j["polyomino"] = polyomino_stats(l.P);
  j["closed_path"] = {{"valid", l.path.has_value()}};
  if (l.violation) j["closed_path"]["violation"] = to_json(*l.violation);
  return j;
}

OrderOptions order_options(const Common& c) {
  OrderOptions o;
  o.variant = c.variant == "remark" ? MarkerVariant::remark : MarkerVariant::primary;
  return o;
}

// Order for the requested rule; q1 and without-w also work on polyominoes
// that are not closed paths.
std::pair<VertexOrder, YResult> pick_order(const Loaded& l, const Common& c) {
  auto opts = order_options(c);
  if (!l.path) {
    if (c.order == "q1") {
      YResult y;
      return {order_q1(l.P), y};
    }
    if (c.order == "without-w") {
      auto y = y_without_w(l.P, opts);
      return {order_from_y(l.P, y.y), y};
    }
    throw NotClosedPath(*l.violation);
  }
  if (c.order == "auto") {
    auto ch = choose_order(*l.path, opts);
    return {ch.order, ch.y};
  }
  OrderRule rule = c.order == "q1"           ? OrderRule::q1
                   : c.order == "without-w"  ? OrderRule::no_w
                   : c.order == "without-rw" ? OrderRule::no_rw
                                             : OrderRule::algorithm;
  auto ch = order_for_rule(*l.path, rule, opts);
  return {ch.order, ch.y};
}

void emit(const Common& c, json& report, const std::string& summary,
          std::chrono::steady_clock::time_point t0) {
  if (c.timings)
    report["timings"] = {
        {"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
  if (c.json_out) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
  } else {
    std::cout << summary << "\n";
  }
}

std::string cells_summary(const Loaded& l) {
  std::ostringstream s;
  s << l.P.size() << " cells, " << l.P.vertices().size() << " vertices, "
    << inner_intervals(l.P).size() << " inner intervals; ";
  if (l.path)
    s << "closed path";
  else
    s << "not a closed path (condition " << l.violation->condition << ": " << l.violation->message << ")";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyomino ideals of closed paths: orders, Gröbner certification, primitive binomials"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub, bool with_order) {
    sub->add_option("input", c.input, "cell list or JSON document ('-' for stdin)")->required();
    sub->add_flag("--json", c.json_out, "write the structured report to stdout");
    sub->add_flag("--timings", c.timings, "include wall-clock timings in the report");
    if (with_order) {
      sub->add_option("--order", c.order, "vertex order rule")
          ->check(CLI::IsMember({"auto", "q1", "without-w", "without-rw", "algorithm"}));
      sub->add_option("--variant", c.variant, "primary or remark (alternative marker pairs)")
          ->check(CLI::IsMember({"primary", "remark"}));
    }
  };

  auto* validate = app.add_subcommand("validate", "polyomino statistics and the closed-path verdict");
  add_common(validate, false);
  auto* analyze = app.add_subcommand("analyze", "configuration census and zig-zag equivalence");
  add_common(analyze, false);
  auto* order = app.add_subcommand("order", "the set Y and its provenance trace");
  add_common(order, true);
  auto* gbcheck = app.add_subcommand("gb-check", "Buchberger check of the inner minors");
  add_common(gbcheck, true);
  bool serial = false;
  std::size_t max_failures = 0;
  gbcheck->add_flag("--serial", serial, "use the serial reference sweep");
  gbcheck->add_option("--max-failures", max_failures, "stop after this many failing pairs (0 = all)");
  auto* initial = app.add_subcommand("initial", "initial ideal under the chosen order");
  add_common(initial, true);
  auto* scan = app.add_subcommand("scan", "degree-bounded search for primitive binomials");
  add_common(scan, false);
  std::size_t max_degree = 3;
  scan->add_option("--max-degree", max_degree, "largest degree to enumerate");
  auto* random = app.add_subcommand("random", "random closed path as a cell list");
  std::size_t n_cells = 0;
  std::uint64_t seed = 0;
  std::string out_file;
  RandomConstraints rc;
  random->add_option("--cells", n_cells, "number of cells (even, at least 8)")->required();
  random->add_option("--seed", seed, "generator seed");
  random->add_option("-o,--output", out_file, "write to this file instead of stdout");
  auto tri = [&](const std::string& name, std::optional<bool>& slot, const std::string& what) {
    random->add_flag_callback("--with-" + name, [&slot] { slot = true; }, "require " + what);
    random->add_flag_callback("--without-" + name, [&slot] { slot = false; }, "forbid " + what);
  };
  tri("w", rc.w_pentomino, "a W-pentomino");
  tri("rw", rc.rw_heptomino, "an RW-heptomino");
  tri("lconf", rc.l_configuration, "an L-configuration");
  tri("ladder3", rc.ladder3, "a ladder of at least three steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (random->parsed()) {
      auto cells = random_closed_path(n_cells, seed, rc);
      auto text = format_cells(cells, "closed path, " + std::to_string(n_cells) + " cells, seed " +
                                          std::to_string(seed));
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_file) << text;
      }
      return ok;
    }

    auto l = load(c.input);
    if (validate->parsed()) {
      auto report = header("validate", l);
      emit(c, report, cells_summary(l), t0);
      return l.path ? ok : not_closed;
    }
    if (analyze->parsed()) {
      if (!l.path) throw NotClosedPath(*l.violation);
      auto report = header("analyze", l);
      report["configurations"] = configuration_census(*l.path, {});
      std::ostringstream s;
      s << cells_summary(l) << "; W " << report["configurations"]["WPentomino"].size() << ", RW "
        << report["configurations"]["RWHeptomino"].size() << ", zig-zag equivalence "
        << (report["configurations"]["zigzag"]["agree"].get<bool>() ? "agrees" : "DISAGREES");
      emit(c, report, s.str(), t0);
      return ok;
    }
    if (order->parsed()) {
      auto [ord, y] = pick_order(l, c);
      auto report = header("order", l);
      report["order"] = to_json(y);
      std::ostringstream s;
      s << "rule " << to_string(y.provenance.rule) << ", |Y| = " << y.y.size();
      emit(c, report, s.str(), t0);
      return ok;
    }
    if (gbcheck->parsed()) {
      auto [ord, y] = pick_order(l, c);
      CheckOptions co;
      co.execution = serial ? Execution::serial : Execution::parallel;
      co.max_failures = max_failures;
      auto rep = buchberger_check(l.P, ord, co);
      auto report = header("gb-check", l);
      report["order"] = to_json(y);
      report["gb"] = to_json(rep);
      std::ostringstream s;
      s << "rule " << to_string(y.provenance.rule) << ": " << rep.generators << " generators, "
        << rep.reduced_pairs << " S-pairs reduced, " << rep.failures.size() << " failing; "
        << (rep.is_groebner ? "Gröbner basis" : "NOT a Gröbner basis")
        << (rep.is_groebner && rep.is_reduced ? " (reduced)" : "");
      for (const auto& f : rep.failures)
        s << "\n  " << to_string(f.first) << " x " << to_string(f.second) << " -> " << render(f.normal_form);
      emit(c, report, s.str(), t0);
      return rep.is_groebner ? ok : refuted;
    }
    if (initial->parsed()) {
      auto [ord, y] = pick_order(l, c);
      auto ini = initial_ideal(l.P, ord);
      auto report = header("initial", l);
      report["order"] = to_json(y);
      report["initial"] = to_json(ini);
      std::ostringstream s;
      s << ini.generators.size() << " initial monomials, "
        << (is_squarefree(ini.generators) ? "squarefree" : "not squarefree")
        << (ini.certified ? "" : " (order not certified)");
      emit(c, report, s.str(), t0);
      return ini.certified ? ok : refuted;
    }
    if (scan->parsed()) {
      if (!l.path) throw NotClosedPath(*l.violation);
      auto res = graver_scan(*l.path, max_degree);
      auto report = header("scan", l);
      report["scan"] = to_json(res);
      std::ostringstream s;
      s << res.primitives.size() << " primitive binomials up to degree " << max_degree
        << (res.non_squarefree_found ? ", some not squarefree" : ", all squarefree");
      emit(c, report, s.str(), t0);
      return ok;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return usage;
}
