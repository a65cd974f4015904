#ifndef SATLAB_TOOLS_CLI_HPP
#define SATLAB_TOOLS_CLI_HPP

// Command-line front end. Exit codes:
//   0  success (and, for check, every graph saturated)
//   1  bad arguments or parameters
//   2  malformed graph6 input
//   3  check: some graph not saturated; verify: an asserted row failed
//   4  count overflow
//   5  search budget exceeded (n > 8 or time limit)

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <satlab/json_io.hpp>
#include <satlab/satlab.hpp>

namespace satlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kCheckFailed = 3,
  kOverflow = 4,
  kBudget = 5,
};

namespace detail {

struct Range {
  int lo = 0;
  int hi = 0;
};

inline Range parse_range(const std::string &text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error &) {
    throw ParameterError("range must look like A..B, got '" + text + "'");
  }
}

inline int effective_shards(int requested) {
  if (const char *env = std::getenv("SATLAB_SHARDS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1)
        return v;
    } catch (const std::logic_error &) {
    }
    throw ParameterError(std::string("SATLAB_SHARDS must be a positive integer, got '") + env +
                         "'");
  }
  return std::max(1, requested);
}

inline std::vector<Graph> read_input(const std::string &path, const std::string &inline_g6,
                                     std::istream &in) {
  if (!inline_g6.empty()) {
    std::istringstream ss(inline_g6);
    return read_graph6_lines(ss);
  }
  if (path.empty() || path == "-")
    return read_graph6_lines(in);
  std::ifstream file(path);
  if (!file)
    throw ParameterError("cannot open input file '" + path + "'");
  return read_graph6_lines(file);
}

inline void print_verify_table(std::ostream &out, const std::vector<VerifyRow> &rows) {
  out << std::left << std::setw(4) << "n" << std::setw(10) << "formula" << std::setw(10)
      << "optimum" << std::setw(8) << "classes" << std::setw(7) << "equal" << std::setw(8)
      << "unique" << std::setw(7) << "split" << std::setw(10) << "asserted"
      << "status\n";
  for (const auto &r : rows) {
    out << std::left << std::setw(4) << r.n << std::setw(10)
        << (r.formula ? r.formula->to_string() : "-") << std::setw(10) << r.optimum.to_string()
        << std::setw(8) << r.classes << std::setw(7) << (r.equal ? "yes" : "no") << std::setw(8)
        << (r.unique ? "yes" : "no") << std::setw(7) << (r.split_extremal ? "yes" : "no")
        << std::setw(10) << (r.asserted ? "yes" : "no")
        << (r.asserted ? (r.pass ? "PASS" : "FAIL") : "report") << "\n";
  }
}

inline void print_probe_table(std::ostream &out, const std::vector<ProbeRow> &rows) {
  out << std::left << std::setw(5) << "n" << std::setw(9) << "samples" << std::setw(14)
      << "split" << std::setw(14) << "sampled_min" << std::setw(10) << "min_edges"
      << "min>=split\n";
  for (const auto &r : rows) {
    out << std::left << std::setw(5) << r.n << std::setw(9) << r.samples << std::setw(14)
        << r.split_value.to_string() << std::setw(14) << r.sampled_min.to_string()
        << std::setw(10) << r.min_sampled_edges << (r.sampled_min_at_least_split ? "yes" : "no")
        << "\n";
  }
}

} // namespace detail

/// Runs one CLI invocation; args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::istream &in, std::ostream &out,
                   std::ostream &err) {
  CLI::App app{"satlab: K_s-saturated graphs, exact motif counts and extremal search"};
  app.require_subcommand(1);

  // construct
  auto *construct = app.add_subcommand("construct", "Print a graph6 line for a construction");
  std::vector<int> split_args;
  int complete_n = -1, empty_n = -1;
  auto *split_opt = construct->add_option("--split", split_args, "S_{N,Q}: Q-clique joined to N-Q independent vertices")
                        ->expected(2);
  auto *complete_opt = construct->add_option("--complete", complete_n, "complete graph K_N");
  auto *empty_opt = construct->add_option("--empty", empty_n, "edgeless graph on N vertices");
  split_opt->excludes(complete_opt, empty_opt);
  complete_opt->excludes(empty_opt);

  // shared input options
  std::string input_path, inline_g6;
  auto add_input = [&](CLI::App *sub) {
    sub->add_option("--input,-i", input_path, "graph6 file, one graph per line (default stdin)");
    sub->add_option("--graph,-g", inline_g6, "a single graph6 string");
  };

  auto *check = app.add_subcommand("check", "K_s-saturation report (JSON, one line per graph)");
  int check_s = 0;
  check->add_option("--s", check_s, "clique order s")->required();
  add_input(check);

  auto *count = app.add_subcommand("count", "Exact motif count, one decimal per graph");
  std::string motif_text;
  count->add_option("--motif", motif_text, "matching:K | clique:R | indepset:L")->required();
  add_input(count);

  auto *search = app.add_subcommand("search", "Exhaustive extremal search over K_s-saturated graphs");
  int search_n = 0, search_s = 0, shards = 1;
  double time_limit = 0;
  std::string mode_text = "min";
  search->add_option("--n", search_n, "vertex count (at most 8)")->required();
  search->add_option("--s", search_s, "clique order s")->required();
  search->add_option("--motif", motif_text, "matching:K | clique:R | indepset:L")->required();
  search->add_option("--mode", mode_text, "min or max")->check(CLI::IsMember({"min", "max"}));
  search->add_option("--shards", shards, "parallel shards (SATLAB_SHARDS overrides)");
  search->add_option("--time-limit", time_limit, "seconds, 0 = unlimited");

  auto *verify = app.add_subcommand("verify", "Check closed forms against exhaustive search");
  std::string theorem_text, range_text, format = "table";
  int verify_s = 0, verify_k = 2, verify_r = 3;
  verify->add_option("--theorem", theorem_text, "ehm | cliques | main")->required();
  verify->add_option("--n-range", range_text, "A..B")->required();
  verify->add_option("--s", verify_s, "clique order s")->required();
  verify->add_option("--k", verify_k, "matching size for --theorem main");
  verify->add_option("--r", verify_r, "clique size for --theorem cliques");
  verify->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--shards", shards, "parallel shards (SATLAB_SHARDS overrides)");
  verify->add_option("--time-limit", time_limit, "seconds per n, 0 = unlimited");

  auto *probe = app.add_subcommand("probe", "Sample saturated graphs beyond the exhaustive range");
  int probe_s = 0, probe_k = 2, samples = 50;
  std::uint64_t seed = 0;
  probe->add_option("--n-range", range_text, "A..B")->required();
  probe->add_option("--s", probe_s, "clique order s")->required();
  probe->add_option("--k", probe_k, "matching size");
  probe->add_option("--samples", samples, "samples per n");
  probe->add_option("--seed", seed, "base seed");
  probe->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto *sample = app.add_subcommand("sample", "Random K_s-saturated graph (graph6)");
  int sample_n = 0, sample_s = 0;
  sample->add_option("--n", sample_n, "vertex count")->required();
  sample->add_option("--s", sample_s, "clique order s")->required();
  sample->add_option("--seed", seed, "seed");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*construct) {
      Graph g;
      if (*split_opt)
        g = make_split({split_args[0], split_args[1]});
      else if (*complete_opt)
        g = Graph::complete(complete_n);
      else if (*empty_opt)
        g = Graph::empty(empty_n);
      else
        throw ParameterError("construct needs one of --split, --complete, --empty");
      out << to_graph6(g) << "\n";
      return kOk;
    }

    if (*check) {
      if (check_s < 2)
        throw ParameterError("--s must be at least 2");
      bool all = true;
      for (const Graph &g : detail::read_input(input_path, inline_g6, in)) {
        auto report = check_saturation(g, check_s);
        all = all && report.is_saturated;
        out << to_json(report, g.order()).dump() << "\n";
      }
      return all ? kOk : kCheckFailed;
    }

    if (*count) {
      const MotifSpec motif = parse_motif(motif_text);
      for (const Graph &g : detail::read_input(input_path, inline_g6, in))
        out << count_motif(g, motif).to_string() << "\n";
      return kOk;
    }

    if (*search) {
      SearchBudget budget;
      budget.parallel_shards = detail::effective_shards(shards);
      budget.time_limit = time_limit;
      const auto result = extremal_count(search_n, search_s, parse_motif(motif_text),
                                         mode_text == "max" ? SearchMode::max : SearchMode::min,
                                         budget);
      out << to_json(result).dump(2) << "\n";
      return kOk;
    }

    if (*verify) {
      VerifyRequest req;
      req.theorem = parse_theorem(theorem_text);
      auto range = detail::parse_range(range_text);
      req.n_lo = range.lo;
      req.n_hi = range.hi;
      req.s = verify_s;
      req.size = req.theorem == Theorem::cliques ? verify_r : verify_k;
      SearchBudget budget;
      budget.parallel_shards = detail::effective_shards(shards);
      budget.time_limit = time_limit;
      const auto rows = verify_theorem(req, budget);
      if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto &r : rows)
          j.push_back(to_json(r));
        out << j.dump(2) << "\n";
      } else {
        detail::print_verify_table(out, rows);
      }
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const VerifyRow &r) {
        return !r.asserted || r.pass;
      });
      return ok ? kOk : kCheckFailed;
    }

    if (*probe) {
      auto range = detail::parse_range(range_text);
      const auto rows = probe_conjecture(range.lo, range.hi, probe_s, probe_k, samples, seed);
      if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto &r : rows)
          j.push_back(to_json(r));
        out << j.dump(2) << "\n";
      } else {
        detail::print_probe_table(out, rows);
      }
      return kOk;
    }

    if (*sample) {
      out << to_graph6(random_saturated(sample_n, sample_s, seed)) << "\n";
      return kOk;
    }
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const OverflowError &e) {
    err << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const BudgetError &e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

} // namespace satlab::cli

#endif
