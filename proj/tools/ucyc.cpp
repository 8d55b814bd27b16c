// Command line front end: generation subcommands print the object with a
// one-line '#' header; --verify re-checks the printed object through the
// verify module and appends '# verified' (exit 1 and failure details on
// stderr otherwise); --json replaces text output with one flat record. Codes:
// 0 ok, 1 failed verification or stalled construction, 2 invalid input.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ucyc/debruijn.hpp"
#include "ucyc/greedy_ucycle.hpp"
#include "ucyc/overlap_graph.hpp"
#include "ucyc/patterns.hpp"
#include "ucyc/setpartition.hpp"
#include "ucyc/text.hpp"
#include "ucyc/verify.hpp"

namespace {

using nlohmann::json;
using namespace ucyc;

struct Common {
  bool verify = false;
  bool as_json = false;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_flag("--verify", common.verify,
                "re-check the output and append a '# verified' trailer");
  cmd->add_flag("--json", common.as_json,
                "print one JSON record instead of text");
}

json rows_json(const std::vector<Word>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

// Returns the process exit code.
int emit(const Common& common, const std::string& kind, const json& params,
         const std::vector<Word>& rows, const std::string& header,
         bool word_style, const CoverageReport* report) {
  bool verified_ok = report == nullptr || report->verdict;
  if (common.as_json) {
    json record;
    record["kind"] = kind;
    record["params"] = params;
    record["rows"] = rows_json(rows);
    record["verified"] = report == nullptr ? json(nullptr) : json(report->verdict);
    std::cout << record.dump() << "\n";
  } else {
    std::cout << header << "\n";
    for (const auto& row : rows)
      std::cout << (word_style ? word_text(row) : row_text(row)) << "\n";
    if (report != nullptr && report->verdict) std::cout << "# verified\n";
  }
  if (!verified_ok) {
    std::cerr << "verification failed: covered " << report->covered << " of "
              << report->total_expected << ", " << report->duplicate_count
              << " duplicated, " << report->missing_count << " missing, "
              << report->unexpected_count << " unexpected\n";
    return 1;
  }
  return 0;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::string> read_input_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

void print_report(const CoverageReport& report) {
  if (report.verdict) {
    std::cout << "verified total=" << report.total_expected << "\n";
    return;
  }
  std::cout << "verification-failed total=" << report.total_expected
            << " covered=" << report.covered
            << " duplicates=" << report.duplicate_count
            << " missing=" << report.missing_count
            << " unexpected=" << report.unexpected_count << "\n";
  for (const auto& [key, where] : report.duplicates) {
    std::cout << "duplicate " << key << " at";
    for (std::size_t p : where) std::cout << " " << p + 1;
    std::cout << "\n";
  }
  for (const auto& key : report.missing) std::cout << "missing " << key << "\n";
  for (const auto& key : report.unexpected)
    std::cout << "unexpected " << key << "\n";
}

int run_debruijn(std::size_t n, std::size_t k, const std::string& method,
                 const std::string& start_text, bool dot,
                 const Common& common) {
  if (dot) {
    std::cout << to_dot(debruijn_graph(n, k));
    return 0;
  }
  Word word;
  std::uint64_t covered = 0, total = 0;
  bool success = true;
  if (method == "euler") {
    word = debruijn_via_euler(n, k);
  } else {
    GreedyWordRun run = start_text.empty()
                            ? martin(n, k)
                            : martin(n, k, parse_word(start_text));
    covered = run.covered;
    total = run.total;
    success = run.success;
    word = std::move(run.word);
  }
  json params{{"n", n}, {"k", k}, {"method", method}};
  if (!success) {
    if (common.as_json) {
      json record{{"kind", "debruijn"},
                  {"params", params},
                  {"rows", rows_json({word})},
                  {"verified", false}};
      std::cout << record.dump() << "\n";
    } else {
      std::cout << "# stall covered=" << covered << " total=" << total << "\n"
                << word_text(word) << "\n";
    }
    std::cerr << "greedy stalled after covering " << covered << " of " << total
              << " words\n";
    return 1;
  }
  CoverageReport report;
  if (common.verify) report = verify_debruijn(word, n, k);
  const std::string header = "# cyclic n=" + std::to_string(n) +
                             " k=" + std::to_string(k) +
                             " length=" + std::to_string(word.size());
  return emit(common, "debruijn", params, {word}, header, true,
              common.verify ? &report : nullptr);
}

int run_multiperm(std::size_t d, std::size_t n, bool uword,
                  const std::vector<std::size_t>& complement_rows, bool family,
                  const Common& common) {
  if (uword && (family || !complement_rows.empty()))
    throw std::invalid_argument(
        "complement options apply to the cyclic object only");

  json params{{"d", d}, {"n", n}, {"cyclic", !uword}};
  if (uword) {
    const GreedyTrace trace = greedy_uword(d, n);
    CoverageReport report;
    if (common.verify)
      report = verify_multiperm_ucycle(trace.uword, d, n, false);
    const std::string header = "# uword d=" + std::to_string(d) +
                               " n=" + std::to_string(n) +
                               " columns=" + std::to_string(trace.uword.cols());
    return emit(common, "multiperm", params, trace.uword.rows, header, false,
                common.verify ? &report : nullptr);
  }

  PermMatrix u = greedy_ucycle(d, n);
  if (family) {
    const std::vector<PermMatrix> members = complement_family(u);
    bool all_ok = true;
    if (common.as_json) {
      json record;
      record["kind"] = "multiperm-family";
      record["params"] = params;
      json rows = json::array();
      for (const auto& member : members)
        for (const auto& row : member.rows) rows.push_back(row);
      record["rows"] = rows;
      if (common.verify) {
        for (const auto& member : members)
          all_ok = all_ok &&
                   verify_multiperm_ucycle(member, d, n, true).verdict;
        record["verified"] = all_ok;
      } else {
        record["verified"] = nullptr;
      }
      std::cout << record.dump() << "\n";
    } else {
      for (std::size_t mask = 0; mask < members.size(); ++mask) {
        std::string rows_flag;
        for (std::size_t j = 0; j < d - 1; ++j)
          if (mask & (std::size_t{1} << j)) {
            if (!rows_flag.empty()) rows_flag += ',';
            rows_flag += std::to_string(j + 1);
          }
        if (rows_flag.empty()) rows_flag = "-";
        std::cout << "# cyclic d=" << d << " n=" << n
                  << " columns=" << members[mask].cols()
                  << " complement=" << rows_flag << "\n";
        for (const auto& row : members[mask].rows)
          std::cout << row_text(row) << "\n";
        if (common.verify) {
          const CoverageReport report =
              verify_multiperm_ucycle(members[mask], d, n, true);
          all_ok = all_ok && report.verdict;
          if (report.verdict) std::cout << "# verified\n";
        }
      }
    }
    if (common.verify && !all_ok) {
      std::cerr << "verification failed for a family member\n";
      return 1;
    }
    return 0;
  }

  for (std::size_t row : complement_rows) u = complement_row(u, row);
  if (!complement_rows.empty())
    params["complement_rows"] = complement_rows;
  CoverageReport report;
  if (common.verify) report = verify_multiperm_ucycle(u, d, n, true);
  const std::string header = "# cyclic d=" + std::to_string(d) +
                             " n=" + std::to_string(n) +
                             " columns=" + std::to_string(u.cols());
  return emit(common, "multiperm", params, u.rows, header, false,
              common.verify ? &report : nullptr);
}

int run_matrix(const std::vector<std::size_t>& dims, std::size_t k,
               const Common& common) {
  MatrixUCycleSpec spec{dims, k};
  const std::vector<Word> slices = matrix_ucycle(spec);
  CoverageReport report;
  if (common.verify) report = verify_matrix_ucycle(slices, spec);
  json params{{"dims", dims}, {"k", k}};
  const std::string header = "# cyclic dims=" + join_sizes(dims) +
                             " k=" + std::to_string(k) +
                             " slices=" + std::to_string(slices.size());
  return emit(common, "matrix", params, slices, header, false,
              common.verify ? &report : nullptr);
}

int run_setpartition(std::size_t n, const std::string& mode,
                     const std::string& start_text, bool search,
                     std::size_t alphabet_max, bool allow_heavy,
                     std::size_t jobs, const Common& common) {
  const bool cyclic = mode == "ucycle";
  if (search) {
    const StartSearch result = search_starts(
        n, cyclic ? PartitionMode::ucycle : PartitionMode::uword, alphabet_max,
        allow_heavy, jobs);
    if (common.verify) {
      for (const auto& start : result.starts) {
        const CoverageReport report =
            cyclic ? verify_partition_ucycle(
                         greedy_partition_ucycle(n, start).word, n, true)
                   : verify_partition_ucycle(
                         greedy_partition_uword(n, start).word, n, false);
        if (!report.verdict) {
          std::cerr << "verification failed for start " << word_text(start)
                    << "\n";
          return 1;
        }
      }
    }
    if (common.as_json) {
      json record{{"kind", "setpartition-search"},
                  {"params",
                   {{"n", n},
                    {"mode", mode},
                    {"alphabet_max", result.alphabet_max}}},
                  {"rows", rows_json(result.starts)},
                  {"verified", common.verify ? json(true) : json(nullptr)}};
      std::cout << record.dump() << "\n";
    } else {
      std::cout << "n=" << n << " mode=" << mode
                << " alphabet_max=" << result.alphabet_max
                << " successes=" << result.starts.size() << "\n";
      for (const auto& start : result.starts)
        std::cout << word_text(start) << "\n";
      if (common.verify) std::cout << "# verified\n";
    }
    return 0;
  }

  if (start_text.empty())
    throw std::invalid_argument("setpartition: need --start or --search");
  const Word start = parse_word(start_text);
  json params{{"n", n}, {"mode", mode}, {"start", start}};

  Word word;
  std::string header;
  bool ok = true;
  std::string failure;
  std::uint64_t covered = 0, total = 0;
  if (cyclic) {
    PartitionCycleRun run = greedy_partition_ucycle(n, start);
    covered = run.covered;
    total = run.total;
    word = std::move(run.word);
    if (run.status == PartitionCycleStatus::success) {
      header = "# cyclic n=" + std::to_string(n) +
               " length=" + std::to_string(word.size());
    } else if (run.status == PartitionCycleStatus::greedy_stalled) {
      ok = false;
      failure = "greedy stalled";
      header = "# stall covered=" + std::to_string(covered) +
               " total=" + std::to_string(total);
    } else {
      ok = false;
      failure = "u-word found but it does not end with its start";
      header = std::string("# not-closed trim-covers=") +
               (run.trim_covers ? "yes" : "no");
    }
  } else {
    PartitionGreedyRun run = greedy_partition_uword(n, start);
    covered = run.covered;
    total = run.total;
    word = std::move(run.word);
    if (run.success) {
      header = "# uword n=" + std::to_string(n) +
               " length=" + std::to_string(word.size());
    } else {
      ok = false;
      failure = "greedy stalled";
      header = "# stall covered=" + std::to_string(covered) +
               " total=" + std::to_string(total);
    }
  }
  if (!ok) {
    if (common.as_json) {
      json record{{"kind", "setpartition"},
                  {"params", params},
                  {"rows", rows_json({word})},
                  {"verified", false}};
      std::cout << record.dump() << "\n";
    } else {
      std::cout << header << "\n" << word_text(word) << "\n";
    }
    std::cerr << "setpartition: " << failure << " (covered " << covered
              << " of " << total << ")\n";
    return 1;
  }
  CoverageReport report;
  if (common.verify) report = verify_partition_ucycle(word, n, cyclic);
  return emit(common, "setpartition", params, {word}, header, true,
              common.verify ? &report : nullptr);
}

int run_graph(std::size_t d, std::size_t n, bool dot, bool hamiltonian,
              bool linearize_flag, std::uint64_t budget) {
  const OverlapGraph g = build_overlap_graph(d, n);
  if (dot) {
    std::cout << to_dot(g.graph);
    return 0;
  }
  if (!hamiltonian && !linearize_flag) {
    std::cout << "overlap-graph d=" << d << " n=" << n
              << " vertices=" << g.vertices.size()
              << " edges=" << g.graph.edge_count() << "\n";
    return 0;
  }
  const HamiltonianSearch search = hamiltonian_cycle(g, budget);
  if (!search.cycle) {
    std::cout << "# hamiltonian unknown expansions=" << search.expansions
              << (search.budget_exhausted ? " budget-exhausted" : "") << "\n";
    return 1;
  }
  if (hamiltonian) {
    std::cout << "# hamiltonian d=" << d << " n=" << n
              << " vertices=" << search.cycle->size() << "\n";
    for (std::size_t v : *search.cycle)
      std::cout << matrix_text(g.vertices[v]) << "\n";
  }
  if (!linearize_flag) return 0;

  std::vector<PermMatrix> cycle;
  cycle.reserve(search.cycle->size());
  for (std::size_t v : *search.cycle) cycle.push_back(g.vertices[v]);
  const ImpliedOrder order = implied_order(cycle, d, n);
  const std::vector<Word> rows = linearize(order);
  std::cout << "# cyclic d=" << d << " n=" << n << " columns=" << order.length
            << "\n";
  for (const auto& row : rows) std::cout << row_text(row) << "\n";
  const CoverageReport report =
      verify_multiperm_ucycle(PermMatrix{rows}, d, n, true);
  if (report.verdict) {
    std::cout << "# verified\n";
    return 0;
  }
  std::cout << "# not-universal covered=" << report.covered << " of "
            << report.total_expected << "\n";
  return 1;
}

int run_lab(bool s4, const std::vector<std::string>& keygroup) {
  if (s4 == !keygroup.empty())
    throw std::invalid_argument("lab: pass exactly one of --s4-switch or --keygroup");
  if (s4) {
    const S4Switch result = s4_switch();
    std::cout << "# s4-switch vertices=" << result.cycle.size() << "\n";
    for (const auto& perm : result.cycle)
      std::cout << word_text(perm) << "\n";
    return 0;
  }
  const KeyGroupCheck check =
      d3_keygroup_cycle_check(parse_word(keygroup[0]), parse_word(keygroup[1]));
  std::cout << "# keygroup small-cycle=" << (check.small_cycle ? "true" : "false");
  if (check.failing_step)
    std::cout << " failing-step=" << *check.failing_step + 1;
  std::cout << "\n";
  for (const auto& m : check.elements) std::cout << matrix_text(m) << "\n";
  return 0;
}

int run_verify(const std::string& kind, std::size_t n, std::size_t k,
               std::size_t d, const std::vector<std::size_t>& dims,
               bool cyclic) {
  const std::vector<std::string> lines = read_input_lines(std::cin);
  if (lines.empty()) throw std::invalid_argument("verify: empty input");

  CoverageReport report;
  if (kind == "debruijn") {
    report = verify_debruijn(parse_word(lines[0]), n, k);
  } else if (kind == "perm" || kind == "multiperm") {
    const std::size_t want = kind == "perm" ? 2 : d;
    if (lines.size() != want - 1)
      throw std::invalid_argument("verify: expected d-1 rows of input");
    PermMatrix u;
    for (const auto& line : lines) u.rows.push_back(parse_word(line));
    report = verify_multiperm_ucycle(u, want, n, cyclic);
  } else if (kind == "partition") {
    report = verify_partition_ucycle(parse_word(lines[0]), n, cyclic);
  } else if (kind == "matrix") {
    std::vector<Word> slices;
    slices.reserve(lines.size());
    for (const auto& line : lines) slices.push_back(parse_word(line));
    report = verify_matrix_ucycle(slices, MatrixUCycleSpec{dims, k});
  } else {
    throw std::invalid_argument("verify: unknown kind '" + kind + "'");
  }
  print_report(report);
  return report.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal cycles for words, permutations, matrices and set partitions"};
  app.require_subcommand(1);

  // debruijn
  auto* debruijn_cmd = app.add_subcommand("debruijn", "de Bruijn sequences");
  std::size_t db_n = 2, db_k = 2;
  std::string db_method = "greedy", db_start;
  bool db_dot = false;
  Common db_common;
  debruijn_cmd->add_option("--n", db_n, "window length")->required();
  debruijn_cmd->add_option("--k", db_k, "alphabet size")->required();
  debruijn_cmd->add_option("--method", db_method, "greedy|euler")
      ->check(CLI::IsMember({"greedy", "euler"}));
  debruijn_cmd->add_option("--start", db_start, "greedy start word (n-1 letters)");
  debruijn_cmd->add_flag("--dot", db_dot, "print the graph instead");
  add_common(debruijn_cmd, db_common);

  // perm / multiperm
  auto* perm_cmd = app.add_subcommand("perm", "u-cycles for permutations");
  std::size_t p_n = 1;
  bool p_uword = false;
  Common p_common;
  perm_cmd->add_option("--n", p_n, "permutation size")->required();
  perm_cmd->add_flag("--uword", p_uword, "print the u-word instead");
  add_common(perm_cmd, p_common);

  auto* mp_cmd =
      app.add_subcommand("multiperm", "u-cycles for d-dimensional permutations");
  std::size_t mp_d = 2, mp_n = 1;
  bool mp_uword = false, mp_family = false;
  std::vector<std::size_t> mp_complement;
  Common mp_common;
  mp_cmd->add_option("--d", mp_d, "dimension")->required();
  mp_cmd->add_option("--n", mp_n, "permutation size")->required();
  mp_cmd->add_flag("--uword", mp_uword, "print the u-word instead");
  mp_cmd->add_option("--complement-rows", mp_complement,
                     "1-based rows to complement")
      ->delimiter(',');
  mp_cmd->add_flag("--family", mp_family, "print all 2^(d-1) complements");
  add_common(mp_cmd, mp_common);

  // matrix
  auto* mx_cmd = app.add_subcommand("matrix", "u-cycles for matrices");
  std::vector<std::size_t> mx_dims;
  std::size_t mx_k = 2;
  Common mx_common;
  mx_cmd->add_option("--dims", mx_dims, "matrix dimensions n1,n2,...")
      ->required()
      ->delimiter(',');
  mx_cmd->add_option("--k", mx_k, "alphabet size")->required();
  add_common(mx_cmd, mx_common);

  // setpartition
  auto* sp_cmd = app.add_subcommand("setpartition", "u-words for set partitions");
  std::size_t sp_n = 2, sp_alpha = 0, sp_jobs = 1;
  std::string sp_mode = "uword", sp_start;
  bool sp_search = false, sp_heavy = false;
  Common sp_common;
  sp_cmd->add_option("--n", sp_n, "ground set size")->required();
  sp_cmd->add_option("--mode", sp_mode, "uword|ucycle")
      ->check(CLI::IsMember({"uword", "ucycle"}));
  sp_cmd->add_option("--start", sp_start, "start word (n-1 letters)");
  sp_cmd->add_flag("--search", sp_search, "try all starts");
  sp_cmd->add_option("--alphabet-max", sp_alpha,
                     "largest start letter (default n-1 for u-words, n for "
                     "u-cycles)");
  sp_cmd->add_flag("--allow-heavy", sp_heavy, "permit searches beyond n=7");
  sp_cmd->add_option("--jobs", sp_jobs, "worker threads for --search");
  add_common(sp_cmd, sp_common);

  // graph
  auto* gr_cmd = app.add_subcommand("graph", "overlap graphs P_d(n)");
  std::size_t gr_d = 2, gr_n = 1;
  std::uint64_t gr_budget = 10000000;
  bool gr_dot = false, gr_ham = false, gr_lin = false;
  gr_cmd->add_option("--d", gr_d, "dimension")->required();
  gr_cmd->add_option("--n", gr_n, "permutation size")->required();
  gr_cmd->add_flag("--dot", gr_dot, "print the graph in DOT form");
  gr_cmd->add_flag("--hamiltonian", gr_ham, "search for a Hamiltonian cycle");
  gr_cmd->add_flag("--linearize", gr_lin,
                   "linearize the implied order of the found cycle");
  gr_cmd->add_option("--budget", gr_budget, "search budget in node expansions");

  // lab
  auto* lab_cmd = app.add_subcommand("lab", "key/head constructions");
  bool lab_s4 = false;
  std::vector<std::string> lab_keygroup;
  lab_cmd->add_flag("--s4-switch", lab_s4, "spliced Hamiltonian cycle on P(4)");
  lab_cmd->add_option("--keygroup", lab_keygroup,
                      "check a d=3 key group pair for a small cycle")
      ->expected(2);

  // verify
  auto* vf_cmd = app.add_subcommand("verify", "verify an object from stdin");
  std::string vf_kind;
  std::size_t vf_n = 1, vf_k = 1, vf_d = 2;
  std::vector<std::size_t> vf_dims;
  bool vf_cyclic = false;
  vf_cmd->add_option("--kind", vf_kind, "debruijn|perm|multiperm|partition|matrix")
      ->required()
      ->check(CLI::IsMember({"debruijn", "perm", "multiperm", "partition", "matrix"}));
  vf_cmd->add_option("--n", vf_n, "window length / permutation size");
  vf_cmd->add_option("--k", vf_k, "alphabet size");
  vf_cmd->add_option("--d", vf_d, "dimension (multiperm)");
  vf_cmd->add_option("--dims", vf_dims, "matrix dimensions")->delimiter(',');
  vf_cmd->add_flag("--cyclic", vf_cyclic, "treat the object as cyclic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (debruijn_cmd->parsed())
      return run_debruijn(db_n, db_k, db_method, db_start, db_dot, db_common);
    if (perm_cmd->parsed())
      return run_multiperm(2, p_n, p_uword, {}, false, p_common);
    if (mp_cmd->parsed())
      return run_multiperm(mp_d, mp_n, mp_uword, mp_complement, mp_family,
                           mp_common);
    if (mx_cmd->parsed()) return run_matrix(mx_dims, mx_k, mx_common);
    if (sp_cmd->parsed())
      return run_setpartition(sp_n, sp_mode, sp_start, sp_search, sp_alpha,
                              sp_heavy, sp_jobs, sp_common);
    if (gr_cmd->parsed())
      return run_graph(gr_d, gr_n, gr_dot, gr_ham, gr_lin, gr_budget);
    if (lab_cmd->parsed()) return run_lab(lab_s4, lab_keygroup);
    if (vf_cmd->parsed())
      return run_verify(vf_kind, vf_n, vf_k, vf_d, vf_dims, vf_cyclic);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
