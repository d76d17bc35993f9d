#include "palsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "palsym/bounds.hpp"
#include "palsym/errors.hpp"
#include "palsym/game.hpp"
#include "palsym/search.hpp"
#include "palsym/subseq.hpp"
#include "palsym/verify.hpp"

namespace palsym::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string_view to_string(TargetKind t) {
  return t == TargetKind::Palindrome ? "Palindrome" : "Antipalindrome";
}

std::string join_positions(const std::vector<std::size_t>& positions, char sep) {
  std::string out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(positions[i]);
  }
  return out;
}

Json row_json(const SdTableRow& row) {
  Json j;
  j["n"] = row.n;
  j["sd"] = row.sd_n;
  j["lower"] = row.lower ? Json(*row.lower) : Json(nullptr);
  j["upper"] = row.upper;
  j["extremal"] = Json::array();
  for (const Word& w : row.extremal) j["extremal"].push_back(w.str());
  return j;
}

std::string row_csv(const SdTableRow& row) {
  std::ostringstream s;
  s << row.n << ',' << row.sd_n << ',';
  if (row.lower) s << *row.lower;
  s << ',' << row.upper << ',';
  for (std::size_t i = 0; i < row.extremal.size(); ++i) {
    if (i) s << ';';
    s << row.extremal[i].str();
  }
  return s.str();
}

Json transcript_json(const Transcript& t) {
  Json j;
  j["initial"] = t.initial.str();
  j["moves"] = Json::array();
  for (const TranscriptEntry& m : t.moves) {
    Json e;
    e["mover"] = std::string(to_string(m.mover));
    e["position"] = m.position;
    e["letter"] = std::string(1, to_char(m.letter));
    e["word"] = m.result.str();
    j["moves"].push_back(e);
  }
  j["final"] = std::string(palsym::to_string(t.final_class));
  j["move_count"] = t.moves.size();
  return j;
}

void print_transcript(std::ostream& out, const Transcript& t) {
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    const TranscriptEntry& m = t.moves[i];
    out << "  " << (i + 1) << ". " << to_string(m.mover) << " player deletes position "
        << m.position << " (" << to_char(m.letter) << ") -> "
        << (m.result.empty() ? "(empty)" : m.result.str()) << '\n';
  }
}

unsigned default_jobs() {
  return std::max(1U, std::thread::hardware_concurrency());
}

struct SdArgs {
  std::string word;
  bool witness = false;
  bool binary = false;
  bool from_stdin = false;
  std::string format = "text";
};

void report_sd(const Word& w, const SdArgs& a, std::ostream& out) {
  const SdValue v = sd(w);
  const SymmetryClass cls = symmetry_class(w);
  if (a.format == "json") {
    Json j;
    j["word"] = w.str();
    j["length"] = w.size();
    j["sd"] = v.value;
    j["lps"] = v.lps;
    j["las"] = v.las;
    j["class"] = std::string(palsym::to_string(cls));
    if (a.witness) {
      const DeletionWitness wit = sd_witness(w);
      j["witness"] = {{"deleted", wit.deleted_positions},
                      {"target", std::string(to_string(wit.target))},
                      {"residual", wit.residual.str()}};
    }
    out << j.dump() << '\n';
    return;
  }
  out << "word: " << (w.empty() ? "(empty)" : w.str()) << '\n'
      << "length: " << w.size() << '\n'
      << "S_d = " << v.value << '\n'
      << "lps: " << v.lps << '\n'
      << "las: " << v.las << '\n'
      << "class: " << palsym::to_string(cls) << '\n';
  if (a.witness) {
    const DeletionWitness wit = sd_witness(w);
    out << "deleted positions: "
        << (wit.deleted_positions.empty() ? "(none)" : join_positions(wit.deleted_positions, ' '))
        << '\n'
        << "target: " << to_string(wit.target) << '\n'
        << "residual: " << (wit.residual.empty() ? "(empty)" : wit.residual.str()) << '\n';
  }
}

int cmd_sd(const SdArgs& a, std::istream& in, std::ostream& out) {
  const Alphabet alphabet = a.binary ? Alphabet::Binary : Alphabet::Letters;
  if (!a.from_stdin) {
    report_sd(parse_word(a.word, alphabet), a, out);
    return kSuccess;
  }
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!first && a.format == "text") out << '\n';
    report_sd(parse_word(line, alphabet), a, out);
    first = false;
  }
  return kSuccess;
}

struct TableArgs {
  std::size_t from = 1;
  std::size_t to = 20;
  std::string format = "text";
  unsigned jobs = default_jobs();
  bool compare = false;
  std::size_t limit = 8;
  std::string kernel;
  unsigned progress_ms = 0;
};

SearchConfig search_config(unsigned jobs, const std::string& kernel) {
  SearchConfig c;
  c.worker_count = std::max(1U, jobs);
  if (!kernel.empty()) {
    const auto k = parse_kernel(kernel);
    if (!k || !kernel_available(*k)) throw DomainError("kernel '" + kernel + "' is not available");
    c.kernel = *k;
  }
  return c;
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  SearchConfig config = search_config(a.jobs, a.kernel);
  config.extremal_limit = a.limit;
  if (a.progress_ms > 0) {
    config.progress_interval = std::chrono::milliseconds(a.progress_ms);
    config.on_progress = [&err](std::uint64_t done, std::uint64_t total) {
      err << "  " << done << " / " << total << '\n';
    };
  }
  if (a.from == 0 || a.from > a.to) throw DomainError("need 1 <= --from <= --to");
  if (a.to > config.max_length) throw LengthBudgetExceeded(a.to, config.max_length);

  if (a.format == "csv") out << "n,sd,lower,upper,extremal\n";
  if (a.format == "text") out << " n  sd  lower  upper  extremal\n";
  std::vector<SdTableRow> rows;
  for (std::size_t n = a.from; n <= a.to; ++n) {
    const SdTableRow row = sd_max(n, config);
    if (a.format == "json") {
      out << row_json(row).dump() << '\n';
    } else if (a.format == "csv") {
      out << row_csv(row) << '\n';
    } else {
      out << std::setw(2) << row.n << "  " << std::setw(2) << row.sd_n << "  " << std::setw(5)
          << (row.lower ? std::to_string(*row.lower) : "-") << "  " << std::setw(5) << row.upper
          << "  ";
      for (std::size_t i = 0; i < row.extremal.size(); ++i) {
        out << (i ? " " : "") << row.extremal[i].str();
      }
      out << '\n';
    }
    out.flush();
    rows.push_back(row);
  }

  if (!a.compare) return kSuccess;
  const auto mismatches = compare_with_reference(rows);
  std::ostream& note = a.format == "text" ? out : err;
  for (const TableMismatch& m : mismatches) {
    note << "mismatch at n=" << m.n << ": published " << m.expected << ", computed "
         << m.computed << '\n';
  }
  if (!mismatches.empty()) return kCheckFailed;
  note << "all rows with n <= 20 match the published table\n";
  return kSuccess;
}

struct ConstructArgs {
  int n = 0;
  int alpha = 0;
  int beta = 0;
  std::string format = "text";
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const ConstructionParams p{a.n, a.alpha, a.beta};
  const Word w = build_word(p);
  const int bound = construction_bound(p);
  const int computed = sd(w).value;
  if (a.format == "json") {
    Json j;
    j["n"] = a.n;
    j["alpha"] = a.alpha;
    j["beta"] = a.beta;
    j["word"] = w.str();
    j["length"] = w.size();
    j["bound"] = bound;
    j["sd"] = computed;
    out << j.dump() << '\n';
  } else {
    out << "word: " << w.str() << '\n'
        << "length: " << w.size() << '\n'
        << "bound: " << bound << '\n'
        << "computed S_d: " << computed << '\n';
  }
  return kSuccess;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> max_n;
  unsigned jobs = default_jobs();
  bool inequality_only = false;
  std::string format = "text";
  std::string kernel;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw DomainError("unknown suite '" + a.suite + "'");
  VerifyOptions o;
  o.max_n = a.max_n;
  o.search = search_config(a.jobs, a.kernel);
  o.check_equality = !a.inequality_only;
  const SuiteReport report = run_suite(*suite, o);
  for (const CheckLine& line : report.lines) {
    if (a.format == "json") {
      Json j;
      j["suite"] = std::string(suite_name(*suite));
      j["check"] = line.name;
      j["passed"] = line.passed;
      j["detail"] = line.detail;
      out << j.dump() << '\n';
    } else {
      out << (line.passed ? "PASS  " : "FAIL  ") << line.name << "  [" << line.detail << "]\n";
    }
  }
  const std::size_t failed = static_cast<std::size_t>(std::count_if(
      report.lines.begin(), report.lines.end(), [](const CheckLine& l) { return !l.passed; }));
  if (a.format == "text") {
    out << suite_name(*suite) << ": " << report.lines.size() - failed << " passed, " << failed
        << " failed\n";
  }
  return report.passed() ? kSuccess : kCheckFailed;
}

struct GameArgs {
  std::string word;
  std::size_t n = 0;
  std::string side = "second";
  std::string engine = "exact";
  std::string format = "text";
};

int cmd_game_solve(const GameArgs& a, std::ostream& out) {
  const Word w = parse_word(a.word);
  const GameOutcome outcome = game_value(w);
  const Transcript t = replay(w, outcome.principal_line);
  if (a.format == "json") {
    Json j;
    j["word"] = w.str();
    j["value"] = outcome.value;
    j["principal_line"] = outcome.principal_line;
    j["transcript"] = transcript_json(t);
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "word: " << w.str() << '\n'
      << "value: " << outcome.value << '\n'
      << "principal line: "
      << (outcome.principal_line.empty() ? "(none)" : join_positions(outcome.principal_line, ' '))
      << '\n';
  print_transcript(out, t);
  out << "final: " << palsym::to_string(t.final_class) << '\n';
  return kSuccess;
}

int cmd_game_best(const GameArgs& a, std::ostream& out) {
  const BestWord best = first_player_gain(a.n);
  if (a.format == "json") {
    Json j;
    j["n"] = a.n;
    j["value"] = best.value;
    j["word"] = best.word.str();
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "g1(" << a.n << ") = " << best.value << '\n'
      << "word: " << (best.word.empty() ? "(empty)" : best.word.str()) << '\n';
  return kSuccess;
}

int cmd_game_play(const GameArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const Word initial = parse_word(a.word);
  const EngineMode mode = a.engine == "exact" ? EngineMode::Exact : EngineMode::Heuristic;
  if (mode == EngineMode::Exact && initial.size() > kGameLengthLimit) {
    throw LengthBudgetExceeded(initial.size(), kGameLengthLimit);
  }
  const Player human = a.side == "first" ? Player::Maximizer : Player::Minimizer;

  GameState s{initial, Player::Minimizer};
  std::vector<std::size_t> positions;
  std::optional<Letter> last_deleted;
  out << "you are the " << to_string(human) << " player; the second player moves first\n";
  while (!s.terminal()) {
    const std::size_t len = s.word.size();
    out << "word: " << s.word.str() << '\n' << "      ";
    for (std::size_t i = 1; i <= len; ++i) out << (i % 10);
    out << '\n';

    Move move;
    if (s.mover == human) {
      for (;;) {
        out << "your move (1.." << len << "): " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
          err << "input ended before the game finished\n";
          return kUsageError;
        }
        std::size_t p = 0;
        std::istringstream parse(line);
        std::string rest;
        if ((parse >> p) && !(parse >> rest) && p >= 1 && p <= len) {
          move = {p};
          break;
        }
        out << "invalid position '" << line << "', enter a number from 1 to " << len << '\n';
      }
    } else {
      move = engine_move(s, mode, last_deleted);
      out << "engine (" << to_string(s.mover) << " player) deletes position " << move.position
          << " (" << to_char(s.word[move.position - 1]) << ")\n";
    }
    last_deleted = s.word[move.position - 1];
    positions.push_back(move.position);
    s = {s.word.erase(move.position - 1), opponent(s.mover)};
  }

  const Transcript t = replay(initial, positions);
  out << "game over after " << t.moves.size() << " moves: "
      << (s.word.empty() ? "(empty)" : s.word.str()) << " is "
      << palsym::to_string(t.final_class) << '\n';
  if (a.format == "json") out << transcript_json(t).dump() << '\n';
  return kSuccess;
}

int cmd_kernels(std::ostream& out) {
  for (Kernel k : available_kernels()) {
    out << kernel_name(k) << "  lanes=" << kernel_lanes(k)
        << (k == best_kernel() ? "  (default)" : "") << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Deletion symmetry measure of binary words: S_d(w), S_d(n), extremal "
               "constructions and the deletion game"};
  app.name("palsym");
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};
  const std::vector<std::string> table_formats{"text", "json", "csv"};

  SdArgs sd_args;
  auto* sd_cmd = app.add_subcommand("sd", "S_d(w), lps, las and symmetry class of a word");
  sd_cmd->add_option("word", sd_args.word, "word over {a,b}");
  sd_cmd->add_flag("--witness", sd_args.witness, "print an optimal deletion set");
  sd_cmd->add_flag("--binary", sd_args.binary, "also accept 0 for a and 1 for b");
  sd_cmd->add_flag("--stdin", sd_args.from_stdin, "read one word per line from standard input");
  sd_cmd->add_option("--format", sd_args.format)->check(CLI::IsMember(formats));

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "exhaustive S_d(n) with bounds");
  table_cmd->add_option("--from", table_args.from)->capture_default_str();
  table_cmd->add_option("--to", table_args.to)->capture_default_str();
  table_cmd->add_option("--format", table_args.format)->check(CLI::IsMember(table_formats));
  table_cmd->add_option("--jobs,-j", table_args.jobs, "worker threads")
      ->envname("PALSYM_JOBS")
      ->check(CLI::PositiveNumber);
  table_cmd->add_flag("--compare-paper", table_args.compare,
                      "exit 1 unless rows with n <= 20 match the published table");
  table_cmd->add_option("--limit", table_args.limit, "extremal words kept per n")
      ->capture_default_str();
  table_cmd->add_option("--kernel", table_args.kernel, "scalar, sse2, avx2, avx512 or neon");
  table_cmd->add_option("--progress-ms", table_args.progress_ms,
                        "report scan progress on stderr at this period");

  ConstructArgs construct_args;
  auto* construct_cmd =
      app.add_subcommand("construct", "build b^(n+1)(ab)^n b^(2n+1+alpha) a^(2n+1+beta)");
  construct_cmd->add_option("n", construct_args.n)->required();
  construct_cmd->add_option("alpha", construct_args.alpha)->required();
  construct_cmd->add_option("beta", construct_args.beta)->required();
  construct_cmd->add_option("--format", construct_args.format)->check(CLI::IsMember(formats));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_args.suite)
      ->required()
      ->check(CLI::IsMember({"lemma4", "bounds", "oracle", "peeling", "invariance", "game"}));
  verify_cmd->add_option("--max-n", verify_args.max_n, "suite size parameter");
  verify_cmd->add_option("--jobs,-j", verify_args.jobs)
      ->envname("PALSYM_JOBS")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--inequality-only", verify_args.inequality_only,
                       "lemma4: check S_d >= bound instead of equality");
  verify_cmd->add_option("--format", verify_args.format)->check(CLI::IsMember(formats));
  verify_cmd->add_option("--kernel", verify_args.kernel);

  GameArgs game_args;
  auto* game_cmd = app.add_subcommand("game", "the alternating deletion game");
  game_cmd->require_subcommand(1);
  auto* solve_cmd = game_cmd->add_subcommand("solve", "exact value and principal line");
  solve_cmd->add_option("word", game_args.word)->required();
  solve_cmd->add_option("--format", game_args.format)->check(CLI::IsMember(formats));
  auto* best_cmd = game_cmd->add_subcommand("best", "best initial word of length n");
  best_cmd->add_option("n", game_args.n)->required();
  best_cmd->add_option("--format", game_args.format)->check(CLI::IsMember(formats));
  auto* play_cmd = game_cmd->add_subcommand("play", "play against the engine");
  play_cmd->add_option("word", game_args.word)->required();
  play_cmd->add_option("--side", game_args.side, "your side")
      ->check(CLI::IsMember({"first", "second"}));
  play_cmd->add_option("--engine", game_args.engine)->check(CLI::IsMember({"exact", "heuristic"}));
  play_cmd->add_option("--format", game_args.format)->check(CLI::IsMember(formats));

  app.add_subcommand("kernels", "list batch kernels usable on this CPU");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "palsym: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (sd_cmd->parsed()) {
      if (!sd_args.from_stdin && sd_cmd->count("word") == 0) {
        err << "palsym sd: a word or --stdin is required\n";
        return kUsageError;
      }
      return cmd_sd(sd_args, in, out);
    }
    if (table_cmd->parsed()) return cmd_table(table_args, out, err);
    if (construct_cmd->parsed()) return cmd_construct(construct_args, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (solve_cmd->parsed()) return cmd_game_solve(game_args, out);
    if (best_cmd->parsed()) return cmd_game_best(game_args, out);
    if (play_cmd->parsed()) return cmd_game_play(game_args, in, out, err);
    return cmd_kernels(out);
  } catch (const Error& e) {
    err << "palsym: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace palsym::cli
