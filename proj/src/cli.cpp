#include "skbounds/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "skbounds/bounds.hpp"
#include "skbounds/errors.hpp"
#include "skbounds/io.hpp"
#include "skbounds/report.hpp"

namespace skbounds {

namespace {

enum class Command { Analyze, Mmi, Rco, Ub, Lb };

struct Options {
  Command command = Command::Analyze;
  bool json = false;
  bool check = false;
  bool full_rows = false;
  bool row_gen = false;
  bool dump_lp = false;
  std::vector<std::string> files;

  LpMode mode() const {
    if (full_rows) return LpMode::FullRows;
    if (row_gen) return LpMode::RowGeneration;
    return LpMode::Auto;
  }
};

struct FileOutput {
  std::string text;
  Json json;
  int code = kExitOk;
};

FileOutput render(const WeightedHypergraph& hg, const Options& opt) {
  FileOutput result;
  std::ostringstream text;
  Json doc = Json::object();
  doc["m"] = hg.vertex_count();

  std::optional<AnalysisReport> report;
  if (opt.command == Command::Analyze || opt.check) report = analyze(hg, opt.mode());

  switch (opt.command) {
    case Command::Analyze:
      text << report_text(*report);
      doc = report_json(*report);
      break;
    case Command::Mmi: {
      const MmiResult r = report ? report->mmi : mmi(hg);
      text << mmi_text(r, hg.vertex_count());
      doc["mmi"] = mmi_json(r);
      break;
    }
    case Command::Rco: {
      const Rational r = report ? report->r_co : r_co_direct(hg, opt.mode()).value;
      text << rco_text(r);
      doc["entropy_total"] = hg.total_entropy().to_string();
      doc["r_co"] = r.to_string();
      break;
    }
    case Command::Ub: {
      const MmiResult m = report ? report->mmi : mmi(hg);
      const auto ub = upper_bound_theorem1(hg, m.value, opt.mode());
      text << ub_text(ub.bound, ub.x_star);
      doc["ub_theorem1"] = ub.bound.to_string();
      doc["x_star"] = packing_json(ub.x_star);
      if (hg.is_graph()) {
        const Rational th2 = graphical_upper_bound(hg, m);
        text << "UB(Thm 2) = " << th2 << '\n';
        doc["ub_theorem2"] = th2.to_string();
      }
      break;
    }
    case Command::Lb: {
      if (!hg.is_graph()) throw NotAGraph("lb needs a graph: every edge must have exactly two vertices");
      const MmiResult m = report ? report->mmi : mmi(hg);
      const GraphicalBounds g{graphical_upper_bound(hg, m), graphical_lower_bound(hg, m), ci_graphical(hg, m),
                              cross_edges(hg, m.fundamental).weight};
      text << "LB(Thm 3) = " << g.lower_bound << '\n' << "CI = " << g.ci << '\n';
      doc["graphical"] = graphical_json(g);
      break;
    }
  }

  if (opt.dump_lp) text << format_lp(build_gamma_lp(hg, report ? report->mmi.value : mmi(hg).value));

  if (opt.check) {
    const auto failures = check_report(hg, *report);
    for (const auto& f : failures) text << "check failed: " << f << '\n';
    if (!failures.empty()) result.code = kExitCheckFailed;
    doc["check"] = failures.empty() ? "passed" : "failed";
    if (!failures.empty()) doc["check_failures"] = failures;
  }
  result.text = text.str();
  result.json = std::move(doc);
  return result;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secret-key capacity and communication bounds for hypergraphical sources", "skbounds"};
  app.require_subcommand(1);
  Options opt;

  const std::pair<const char*, Command> commands[] = {
      {"analyze", Command::Analyze}, {"mmi", Command::Mmi}, {"rco", Command::Rco},
      {"ub", Command::Ub},           {"lb", Command::Lb},
  };
  const char* descriptions[] = {
      "full report",
      "multivariate mutual information and fundamental partition",
      "minimum rate of communication for omniscience",
      "fractional-packing upper bound on communication complexity",
      "graphical lower bound and interactive common information",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    const Command command = commands[i].second;
    sub->callback([&opt, command] { opt.command = command; });
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--check", opt.check, "run the full invariant suite; exit 1 on any violation");
    auto* full = sub->add_flag("--full-rows", opt.full_rows, "solve LPs with every subset row up front");
    auto* gen = sub->add_flag("--row-gen", opt.row_gen, "solve LPs by row generation");
    full->excludes(gen);
    sub->add_flag("--dump-lp", opt.dump_lp, "print the Gamma LP listing");
    sub->add_option("files", opt.files, "hypergraph files, '-' for stdin")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitParseError;
  }

  int code = kExitOk;
  Json batch = Json::array();
  for (const auto& file : opt.files) {
    FileOutput result;
    try {
      const auto hg = load_hypergraph(file, in);
      result = render(hg, opt);
    } catch (const ParseError& e) {
      err << e.what() << '\n';
      result.code = kExitParseError;
    } catch (const NotAGraph& e) {
      err << file << ": " << e.what() << '\n';
      result.code = kExitParseError;
    } catch (const CapExceeded& e) {
      err << file << ": " << e.what() << '\n';
      result.code = kExitCapExceeded;
    } catch (const InvariantViolation& e) {
      err << file << ": invariant violated: " << e.what() << '\n';
      result.code = kExitCheckFailed;
    }
    code = std::max(code, result.code);
    if (opt.json) {
      if (!result.json.is_null()) batch.push_back(std::move(result.json));
    } else if (!result.text.empty()) {
      if (opt.files.size() > 1) out << "== " << file << " ==\n";
      out << result.text;
    }
  }
  if (opt.json) {
    if (opt.files.size() == 1) {
      if (!batch.empty()) out << batch.front().dump(2) << '\n';
    } else {
      out << batch.dump(2) << '\n';
    }
  }
  return code;
}

}  // namespace skbounds
