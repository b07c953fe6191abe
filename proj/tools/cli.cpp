#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "lsrs/hardness.hpp"
#include "lsrs/lsrs_plus3.hpp"
#include "lsrs/lsrs_solver.hpp"
#include "lsrs/oracles.hpp"
#include "lsrs/repeat_tables.hpp"
#include "lsrs/scaling.hpp"
#include "serialize.hpp"

namespace lsrs::cli {

namespace {

using io::Json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SequenceSource {
  std::string file;
  std::optional<std::string> seq;
  bool tokens = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "Input file ('-' or omitted for stdin)");
    cmd->add_option("--seq", seq, "Sequence given inline");
    cmd->add_flag("--tokens", tokens, "Whitespace-separated tokens instead of raw characters");
  }

  ParseMode mode() const { return tokens ? ParseMode::tokens : ParseMode::raw; }
};

std::string read_all(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(file, std::ios::binary);
  if (!f) throw InputError("cannot open " + file);
  return {std::istreambuf_iterator<char>(f), {}};
}

Sequence load_sequence(const SequenceSource& src, std::istream& in) {
  std::string text = src.seq ? *src.seq : read_all(src.file, in);
  return parse_sequence(io::ingest(text, src.mode()), src.mode());
}

void check_guard(const Sequence& seq, std::size_t max_n) {
  if (seq.size() > max_n)
    throw GuardError("sequence length " + std::to_string(seq.size()) + " exceeds --max-n " + std::to_string(max_n) +
                     "; raise --max-n to run the O(n^6) stage anyway");
}

// Re-validates an emitted witness; anything off is an internal error.
void certify(const Sequence& seq, const SrsDecomposition& dec, std::size_t length, const std::string& what,
             const std::set<LetterId>& cover = {}) {
  auto report = validate_srs(seq, dec, cover);
  if (!report.ok()) throw InternalError(what + " witness invalid: " + report.violations.front());
  if (dec.total_length() != length)
    throw InternalError(what + " witness has length " + std::to_string(dec.total_length()) + ", expected " +
                        std::to_string(length));
}

class Stopwatch {
public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Json analyze(const Sequence& seq, int threads, bool timing) {
  const std::size_t n = seq.size();
  OccurrenceIndex occ(seq);
  Json report;
  report["input"] = {{"length", n}, {"alphabet_size", seq.alphabet().size()}, {"d", occ.max_occurrence}};
  Json times;
  Stopwatch clock;

  auto q2 = square_table(seq, threads);
  times["square_table"] = clock.lap();
  auto q3 = cube_table(seq, threads);
  times["cube_table"] = clock.lap();

  auto repeat_section = [&](const IntervalTable<int>& table, bool cube, const char* name) {
    const int length = n == 0 ? 0 : table.at(1, n);
    SrsDecomposition witness;
    if (length > 0) {
      auto w = cube ? cube_witness(seq, 1, n) : square_witness(seq, 1, n);
      if (!w) throw InternalError(std::string(name) + " witness missing");
      witness = std::move(*w);
    }
    certify(seq, witness, static_cast<std::size_t>(length), name);
    report[name] = {{"length", length}, {"witness", io::decomposition_json(seq, witness)}};
  };
  repeat_section(q2, false, "square");
  repeat_section(q3, true, "cube");
  times["witnesses"] = clock.lap();

  auto best = solve_lsrs_from_tables(seq, q2, q3);
  certify(seq, best.decomposition, static_cast<std::size_t>(best.length), "lsrs");
  report["lsrs"] = {{"length", best.length}, {"decomposition", io::decomposition_json(seq, best.decomposition)}};
  times["lsrs"] = clock.lap();

  if (occ.max_occurrence <= 3) {
    auto plus = lsrs_plus3(seq, threads);
    Json section{{"feasible", plus.feasible}, {"length", plus.length}};
    if (plus.feasible) {
      certify(seq, plus.decomposition, static_cast<std::size_t>(plus.length), "lsrs_plus3",
              {seq.letters().begin(), seq.letters().end()});
      section["decomposition"] = io::decomposition_json(seq, plus.decomposition);
    }
    report["lsrs_plus3"] = std::move(section);
    times["lsrs_plus3"] = clock.lap();
  }
  if (timing) report["timing_ms"] = std::move(times);
  return report;
}

std::vector<int> read_choices(const std::string& file) {
  std::ifstream f(file);
  if (!f) throw InputError("cannot open witness file " + file);
  std::vector<int> out;
  std::string word;
  while (f >> word) {
    if (word != "1" && word != "2" && word != "3") throw InputError("witness entries must be 1, 2 or 3, got '" + word + "'");
    out.push_back(word[0] - '0');
  }
  return out;
}

void print(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Longest subsequence-repeated subsequence toolkit", "lsrs"};
  app.require_subcommand(1);

  SequenceSource analyze_src;
  std::size_t analyze_max_n = 64;
  int analyze_threads = 1;
  bool no_timing = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Square, cube, LSRS and LSRS+(3) of one sequence");
  analyze_src.attach(analyze_cmd);
  analyze_cmd->add_option("--max-n", analyze_max_n, "Length guard for the cube stage")->capture_default_str();
  analyze_cmd->add_option("--threads", analyze_threads, "Worker threads")->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--no-timing", no_timing, "Omit the timing_ms section");

  SequenceSource tables_src;
  std::string which = "q2", format = "json";
  std::size_t tables_max_n = 64;
  int tables_threads = 1;
  auto* tables_cmd = app.add_subcommand("tables", "Dump the Q2 or Q3 table of all substrings");
  tables_src.attach(tables_cmd);
  tables_cmd->add_option("--which", which)->check(CLI::IsMember({"q2", "q3"}))->capture_default_str();
  tables_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  tables_cmd->add_option("--max-n", tables_max_n)->capture_default_str();
  tables_cmd->add_option("--threads", tables_threads)->check(CLI::PositiveNumber);

  std::string reduce_file, from = "coloring", to = "string", witness_file;
  bool dimacs = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build reduction instances from a graph or SAT instance");
  reduce_cmd->add_option("file", reduce_file, "Graph ('|V| |E|' then edges) or SAT JSON; stdin if omitted");
  reduce_cmd->add_option("--from", from)->check(CLI::IsMember({"coloring", "sat"}))->capture_default_str();
  reduce_cmd->add_option("--to", to)->check(CLI::IsMember({"sat", "string"}))->capture_default_str();
  reduce_cmd->add_option("--witness", witness_file, "Colours per vertex, or true literal per 3-clause");
  reduce_cmd->add_flag("--dimacs", dimacs, "Write the SAT instance as DIMACS CNF");

  SequenceSource oracle_src;
  std::string kind;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference values for small inputs");
  oracle_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"q2", "q3", "lsrs", "lsrs-plus"}));
  oracle_src.attach(oracle_cmd);

  std::string alg = "q3";
  std::vector<std::size_t> sizes{8, 16, 32};
  std::uint64_t seed = 1;
  int bench_threads = 1;
  double min_ms = 100;
  auto* bench_cmd = app.add_subcommand("bench", "Time an algorithm on seeded random inputs");
  bench_cmd->add_option("--alg", alg)->check(CLI::IsMember({"q2", "q3", "lsrs", "plus3"}))->capture_default_str();
  bench_cmd->add_option("--sizes", sizes)->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--seed", seed)->capture_default_str();
  bench_cmd->add_option("--threads", bench_threads)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min-ms", min_ms, "Minimum total time per size")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ok;
    }
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  try {
    if (analyze_cmd->parsed()) {
      auto seq = load_sequence(analyze_src, in);
      check_guard(seq, analyze_max_n);
      print(out, analyze(seq, analyze_threads, !no_timing));
    } else if (tables_cmd->parsed()) {
      auto seq = load_sequence(tables_src, in);
      check_guard(seq, tables_max_n);
      auto table = which == "q2" ? square_table(seq, tables_threads) : cube_table(seq, tables_threads);
      if (format == "csv")
        io::write_table_csv(out, table);
      else
        print(out, io::table_json(table));
    } else if (reduce_cmd->parsed()) {
      std::string text = read_all(reduce_file, in);
      hardness::SatInstance f;
      if (from == "coloring") {
        std::istringstream graph_text(text);
        f = hardness::coloring_to_sat(hardness::parse_graph(graph_text));
      } else {
        Json doc;
        try {
          doc = Json::parse(text);
        } catch (const Json::parse_error& e) {
          throw InputError(std::string("SAT input is not JSON: ") + e.what());
        }
        f = io::sat_from_json(doc);
      }
      if (to == "sat") {
        if (!witness_file.empty()) throw InputError("--witness requires --to string");
        if (dimacs)
          hardness::write_dimacs(out, f);
        else
          print(out, io::sat_json(f));
      } else {
        if (dimacs) throw InputError("--dimacs requires --to sat");
        auto r = hardness::sat_to_string(f);
        Json doc = io::reduction_json(r);
        if (!witness_file.empty()) {
          auto a = hardness::assignment_from_choices(f, read_choices(witness_file));
          if (!a.valid) throw InputError("witness does not give a valid assignment");
          auto w = hardness::extract_witness(f, a, r);
          auto report = validate_srs(r.h, w, {r.h.letters().begin(), r.h.letters().end()});
          if (!report.ok()) throw InternalError("extracted witness invalid: " + report.violations.front());
          doc["witness"] = {{"length", w.total_length()},
                            {"validation", io::validation_json(report)},
                            {"coverage", "full"},
                            {"decomposition", io::decomposition_json(r.h, w)}};
        }
        print(out, doc);
      }
    } else if (oracle_cmd->parsed()) {
      auto seq = load_sequence(oracle_src, in);
      const std::size_t n = seq.size();
      if (kind == "q2") {
        auto t = oracle::square_table(seq);
        out << (n == 0 ? 0 : t.at(1, n)) << '\n';
      } else if (kind == "q3") {
        auto t = oracle::cube_table(seq);
        out << (n == 0 ? 0 : t.at(1, n)) << '\n';
      } else if (kind == "lsrs") {
        out << oracle::lsrs(seq) << '\n';
      } else {
        auto v = oracle::lsrs_plus(seq);
        if (v)
          out << *v << '\n';
        else
          out << "infeasible\n";
      }
    } else if (bench_cmd->parsed()) {
      auto algorithm = *scaling::parse_algorithm(alg);
      auto report = scaling::run_bench(algorithm, sizes, seed, bench_threads, min_ms);
      Json rows = Json::array();
      for (const auto& row : report.rows) rows.push_back({{"n", row.n}, {"ms", row.ms}});
      Json doc{{"algorithm", alg}, {"seed", seed}, {"threads", bench_threads}, {"rows", rows}};
      doc["slope"] = report.rows.size() >= 2 ? Json(report.slope) : Json(nullptr);
      print(out, doc);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const hardness::ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return guard_exceeded;
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return guard_exceeded;
  } catch (const hardness::SearchTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return guard_exceeded;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
  return ok;
}

}  // namespace lsrs::cli
