#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nutforge/nutforge.hpp"
#include "nutforge/report.hpp"

namespace nutforge::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

struct RunConfig {
  int workers = 1;
  int bound_order = 10;
  std::string json_path;  // empty: no JSON report unless the command prints one

  // enumerate / classify
  int order = 0;
  bool list = false;
  bool expect_no_candidates = false;

  // sweep / derive / presub
  std::string pregraph_path;
  int block = 0;
  int modulus = 0;
  int max_lift = 512;
  std::string voltages;
  std::optional<int> dart;
  int times = 1;

  // family
  std::string which = "g7";
  int alpha = 0;
  int beta = 0;
  bool certify = false;
  bool emit_graph6 = false;

  // verify / derive output
  std::string graph_path;
  std::string format = "graph6";
};

namespace detail {

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidParamsError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_json(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.json_path.empty()) return;
  if (cfg.json_path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(cfg.json_path);
  if (!f) throw InvalidParamsError("cannot write " + cfg.json_path);
  f << j.dump(2) << '\n';
}

inline PregraphText load_block(const RunConfig& cfg) {
  auto blocks = parse_pregraphs(read_file(cfg.pregraph_path));
  if (cfg.block < 0 || cfg.block >= static_cast<int>(blocks.size()))
    throw InvalidParamsError("block " + std::to_string(cfg.block) + " not present in " +
                             cfg.pregraph_path);
  return std::move(blocks[static_cast<std::size_t>(cfg.block)]);
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidParamsError("not an integer: '" + item + "'");
    }
  }
  return out;
}

inline void emit_graph(const Graph& g, const std::string& format, std::ostream& out) {
  if (format == "graph6") {
    out << to_graph6(g) << '\n';
  } else {
    out << format_edge_list(g);
  }
}

inline std::string kernel_line(const KernelBasis& k) {
  std::ostringstream os;
  for (std::size_t i = 0; i < k.vectors.size(); ++i) {
    os << (i ? " | " : "");
    for (std::size_t j = 0; j < k.vectors[i].size(); ++j)
      os << (j ? " " : "") << k.vectors[i][j].get_str();
  }
  return os.str();
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  EnumerationOptions opts;
  opts.max_order = cfg.bound_order;
  const auto r = enumerate_quotients(cfg.order, opts);
  out << "l=" << r.order << " U=" << r.underlying_count << " Q=" << r.quotient_count << '\n';
  if (cfg.list)
    for (const auto& p : r.pregraphs) out << format_pregraph(p);
  write_json(cfg, enumeration_json(r), out);
  return kOk;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  SearchOptions opts;
  opts.workers = cfg.workers;
  opts.max_order = cfg.bound_order;
  const auto r = classify(cfg.order, opts);
  out << "l=" << r.order << " quotients=" << r.verdicts.size()
      << " excluded_step1=" << r.excluded_step1 << " excluded_step2=" << r.excluded_step2
      << " candidates=" << r.candidates << '\n';
  write_json(cfg, search_json(r), out);
  if (cfg.expect_no_candidates && r.candidates > 0) return kNegative;
  return kOk;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto block = load_block(cfg);
  int n = cfg.modulus;
  if (n == 0 && block.voltages) n = block.voltages->modulus();
  if (n <= 0) throw InvalidParamsError("sweep needs --n or an n= line in the input");
  SweepOptions opts;
  opts.workers = cfg.workers;
  opts.max_lift_order = cfg.max_lift;
  const auto entries = brute_force_voltage_sweep(block.pregraph, n, opts);
  std::size_t nuts = 0;
  Json list = Json::array();
  for (const auto& e : entries) {
    if (!e.verdict.is_nut) continue;
    ++nuts;
    out << "nut";
    for (int g : e.edge_voltages) out << ' ' << g;
    out << '\n';
    list.push_back(e.edge_voltages);
  }
  out << "n=" << n << " simple_lifts=" << entries.size() << " nut_lifts=" << nuts << '\n';
  write_json(cfg, Json{{"n", n}, {"simple_lifts", entries.size()}, {"nut_lifts", nuts},
                       {"nut_assignments", std::move(list)}},
             out);
  return kOk;
}

inline VoltagePregraph voltage_block(const RunConfig& cfg) {
  auto block = load_block(cfg);
  if (!cfg.voltages.empty()) {
    int n = cfg.modulus;
    if (n == 0 && block.voltages) n = block.voltages->modulus();
    if (n <= 0) throw InvalidParamsError("--voltages needs --n or an n= line in the input");
    const auto volts = parse_int_list(cfg.voltages);
    return VoltagePregraph::from_edge_voltages(block.pregraph, n, volts);
  }
  if (!block.voltages) throw InvalidParamsError("input has no voltages; pass --n and --voltages");
  return std::move(*block.voltages);
}

inline int cmd_derive(const RunConfig& cfg, std::ostream& out) {
  const auto vp = voltage_block(cfg);
  const auto lift = derive(vp);
  emit_graph(lift.graph(), cfg.format, out);
  if (!cfg.json_path.empty()) write_json(cfg, nut_certificate(lift.graph(), is_nut(lift.graph())), out);
  return kOk;
}

inline int cmd_family(const RunConfig& cfg, std::ostream& out) {
  FamilyParams p{cfg.which == "g11" ? Family::kG11 : Family::kG7, cfg.modulus, cfg.alpha,
                 cfg.beta};
  const auto vp = build_family(p);
  const auto lift = derive(vp);
  if (cfg.emit_graph6) out << to_graph6(lift.graph()) << '\n';
  if (!cfg.certify) {
    out << to_string(p.family) << " n=" << p.n << " alpha=" << p.alpha << " beta=" << p.beta
        << " orbits=" << vp.base().vertex_count() << " lift_order=" << lift.graph().order()
        << '\n';
    return kOk;
  }
  const auto poly = p.family == Family::kG7 ? g7_polynomial(p) : g11_polynomial(p);
  const bool condition = family_is_nut_condition(p);
  const auto verdict = is_nut(lift.graph());
  Json roots = Json::array();
  for (int d : unity_root_divisors(poly, p.n)) roots.push_back(d);
  Json cert{{"family", to_string(p.family)},
            {"n", p.n},
            {"alpha", p.alpha},
            {"beta", p.beta},
            {"voltage_pregraph", format_voltage_pregraph(vp)},
            {"polynomial", poly.to_string()},
            {"cyclotomic_factors", std::move(roots)},
            {"polynomial_condition", condition},
            {"lift", nut_certificate(lift.graph(), verdict)},
            {"agree", condition == verdict.is_nut}};
  if (cfg.json_path.empty()) {
    out << cert.dump(2) << '\n';
  } else {
    write_json(cfg, cert, out);
  }
  return condition && verdict.is_nut ? kOk : kNegative;
}

inline int cmd_presub(const RunConfig& cfg, std::ostream& out) {
  auto vp = voltage_block(cfg);
  if (cfg.times < 0) throw InvalidParamsError("--times must be nonnegative");
  int remaining = cfg.times;
  if (cfg.dart && remaining > 0) {
    vp = presubdivide(vp, *cfg.dart);
    --remaining;
  }
  vp = presub_closure(std::move(vp), remaining);
  out << format_voltage_pregraph(vp);
  if (!cfg.json_path.empty()) {
    const auto lift = derive(vp);
    write_json(cfg, nut_certificate(lift.graph(), is_nut(lift.graph())), out);
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto text = read_file(cfg.graph_path);
  Graph g;
  if (cfg.format == "graph6") {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::optional<Graph> found;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line.front() == '#') continue;
      if (found) throw ParseError(line_no, 1, "expected a single graph");
      found = from_graph6(line, line_no);
    }
    if (!found) throw ParseError(line_no + 1, 1, "no graph6 data");
    g = std::move(*found);
  } else {
    std::istringstream in(text);
    g = parse_edge_list(in);
  }
  const auto verdict = is_nut(g);
  out << "order=" << g.order() << " size=" << g.edge_count() << " nullity="
      << verdict.kernel.dimension() << " nut=" << (verdict.is_nut ? "true" : "false") << '\n';
  out << "kernel: " << kernel_line(verdict.kernel) << '\n';
  write_json(cfg, nut_certificate(g, verdict), out);
  return verdict.is_nut ? kOk : kNegative;
}

}  // namespace detail

/// Parses argv and dispatches. Diagnostics go to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Search and certification tools for cubic polycirculant nut graphs", "nutforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--bound-order", cfg.bound_order, "largest quotient order accepted")
      ->check(CLI::PositiveNumber);
  app.add_option("--json", cfg.json_path, "write a JSON report to this path ('-' for stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "count connected cubic quotient pregraphs");
  enumerate->add_option("--l", cfg.order, "quotient order")->required();
  enumerate->add_flag("--list", cfg.list, "print every pregraph");

  auto* classify_cmd = app.add_subcommand("classify", "run both exclusion tests on every quotient");
  classify_cmd->add_option("--l", cfg.order, "quotient order")->required();
  classify_cmd->add_flag("--expect-no-candidates", cfg.expect_no_candidates,
                         "exit 1 if any quotient survives both tests");

  auto* sweep = app.add_subcommand("sweep", "check every voltage assignment of a pregraph");
  sweep->add_option("--pregraph", cfg.pregraph_path, "pregraph file")->required();
  sweep->add_option("--n", cfg.modulus, "cyclic group order")->check(CLI::PositiveNumber);
  sweep->add_option("--block", cfg.block, "block index within the file");
  sweep->add_option("--max-lift", cfg.max_lift, "largest lift order accepted")
      ->check(CLI::PositiveNumber);

  auto* derive_cmd = app.add_subcommand("derive", "build the lift of a voltage pregraph");
  derive_cmd->add_option("--pregraph", cfg.pregraph_path, "pregraph file")->required();
  derive_cmd->add_option("--block", cfg.block, "block index within the file");
  derive_cmd->add_option("--n", cfg.modulus, "cyclic group order")->check(CLI::PositiveNumber);
  derive_cmd->add_option("--voltages", cfg.voltages, "comma-separated voltages, one per edge");
  derive_cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* family = app.add_subcommand("family", "build a member of the G7 or G11 family");
  family->add_option("--which", cfg.which, "family")->check(CLI::IsMember({"g7", "g11"}));
  family->add_option("--n", cfg.modulus, "cyclic group order")->required();
  family->add_option("--alpha", cfg.alpha, "first loop or dart voltage")->required();
  family->add_option("--beta", cfg.beta, "second loop or dart voltage")->required();
  family->add_flag("--certify", cfg.certify,
                   "print a certificate; exit 1 unless both tests say nut");
  family->add_flag("--emit-graph6", cfg.emit_graph6, "print the lift in graph6");

  auto* presub = app.add_subcommand("presub", "pre-subdivide an edge of a voltage pregraph");
  presub->add_option("--in", cfg.pregraph_path, "voltage pregraph file")->required();
  presub->add_option("--block", cfg.block, "block index within the file");
  presub->add_option("--dart", cfg.dart, "dart for the first step (default: first eligible)");
  presub->add_option("--times", cfg.times, "number of steps");

  auto* verify = app.add_subcommand("verify", "test whether a graph is a nut graph");
  verify->add_option("--graph", cfg.graph_path, "graph file ('-' for stdin)")->required();
  verify->add_option("--format", cfg.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate->parsed()) return detail::cmd_enumerate(cfg, out);
    if (classify_cmd->parsed()) return detail::cmd_classify(cfg, out);
    if (sweep->parsed()) return detail::cmd_sweep(cfg, out);
    if (derive_cmd->parsed()) return detail::cmd_derive(cfg, out);
    if (family->parsed()) return detail::cmd_family(cfg, out);
    if (presub->parsed()) return detail::cmd_presub(cfg, out);
    if (verify->parsed()) return detail::cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << "nutforge: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace nutforge::cli
