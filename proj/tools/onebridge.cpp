// Command-line surface: classification, enumeration, census, the
// reference table, and the self-verification oracles.
// Exit codes: 0 success, 1 verification/golden failure, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onebridge/census.hpp"
#include "onebridge/json_io.hpp"
#include "onebridge/oracle.hpp"

namespace {

using onebridge::Braid;
using onebridge::Census;
using onebridge::CensusRecord;
using onebridge::Int;
using onebridge::Json;
using onebridge::Slope;

std::string render_slope(const Slope& slope) {
  return std::to_string(slope.p) + "/" + std::to_string(slope.q);
}

std::string render_braid(const Braid& braid) {
  std::ostringstream out;
  out << "K(" << braid.w << "," << braid.b << "," << braid.t << ")";
  return out.str();
}

std::string render_tuple(const onebridge::AllowableTuple& tuple) {
  std::ostringstream out;
  out << "(" << tuple.p << "," << tuple.q << "," << tuple.k << "," << tuple.x
      << "," << (tuple.eps > 0 ? "+1" : "-1") << ")";
  return out.str();
}

void emit_json(const Json& document) { std::cout << document.dump(2) << "\n"; }

int run_fillings(Int w, Int b, Int t, const std::string& format) {
  const Braid braid = Braid::of(w, b, t);
  const auto fillings = onebridge::fillings_of(braid);
  const int components = onebridge::component_count(braid);

  if (format == "json") {
    Json slopes = Json::array();
    for (const auto& filling : fillings) slopes.push_back(to_json(filling));
    emit_json(Json{{"braid", to_json(braid)},
                   {"knot", components == 1},
                   {"components", components},
                   {"fillings", std::move(slopes)}});
    return 0;
  }

  if (components == 1)
    std::cout << render_braid(braid) << ": knot\n";
  else
    std::cout << render_braid(braid) << ": closure is a link (" << components
              << " components)\n";
  if (fillings.empty()) {
    std::cout << "(none)\n";
    return 0;
  }
  for (const auto& filling : fillings) {
    std::cout << render_slope(filling.slope);
    for (const auto& witness : filling.witnesses)
      std::cout << "  [case " << witness.case_id << " via "
                << render_tuple(witness.tuple) << "]";
    std::cout << "\n";
  }
  return 0;
}

int run_knots(Int p, Int q, Int max_w, const std::string& format) {
  const Slope slope = Slope::of(p, q);
  const auto braids = onebridge::knots_for_slope(slope, max_w);

  if (format == "json") {
    Json rows = Json::array();
    for (const auto& [braid, tuple] : braids)
      rows.push_back(Json{{"braid", to_json(braid)},
                          {"tuple", to_json(tuple)}});
    emit_json(Json{{"slope", to_json(slope)},
                   {"max_w", max_w},
                   {"braids", std::move(rows)}});
    return 0;
  }

  if (braids.empty()) {
    std::cout << "(none)\n";
    return 0;
  }
  for (const auto& [braid, tuple] : braids)
    std::cout << render_braid(braid) << "  [tuple " << render_tuple(tuple)
              << "]\n";
  return 0;
}

int run_tuple(Int p, Int q, Int k, Int x, Int eps, const std::string& format) {
  const auto tuple =
      onebridge::AllowableTuple::of(p, q, k, x, static_cast<int>(eps));
  const auto image = onebridge::tuple_to_braid(tuple);

  if (format == "json") {
    emit_json(to_json(image));
    return 0;
  }
  if (image.valid())
    std::cout << render_braid(*image.braid) << "\n";
  else
    std::cout << "degenerate (w=" << image.w << ", b=" << image.b
              << ", t=" << image.t << "): violates " << image.violation
              << "\n";
  return 0;
}

std::string census_record_line(const CensusRecord& record) {
  std::ostringstream out;
  out << "(" << record.braid.w << ", " << record.braid.b << ", "
      << record.braid.t << "; ";
  if (!record.knot) {
    out << "link)";
  } else if (record.fillings.empty()) {
    out << "-)";
  } else {
    for (size_t i = 0; i < record.fillings.size(); ++i) {
      if (i > 0) out << ", ";
      out << render_slope(record.fillings[i]);
    }
    out << ")";
  }
  if (record.canonical) out << " canonical";
  return out.str();
}

int run_census(Int max_w, bool list, const std::string& dedup,
               const std::string& format, const std::string& cache_flag,
               int jobs) {
  // Flag overrides environment; either names a directory holding one
  // cache file per max_w.
  std::string cache_dir = cache_flag;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv("ONEBRIDGE_CACHE_DIR")) cache_dir = env;
  }

  std::optional<Census> census;
  std::string cache_path;
  if (!cache_dir.empty()) {
    cache_path =
        cache_dir + "/census_w" + std::to_string(max_w) + ".jsonl";
    census = onebridge::read_census_jsonl(cache_path, max_w);
    if (!census && std::ifstream(cache_path).good())
      std::cerr << "warning: cache file " << cache_path
                << " is stale or malformed; recomputing\n";
  }
  if (!census) {
    census = onebridge::run_census(max_w, jobs);
    if (!cache_path.empty()) onebridge::write_census_jsonl(*census, cache_path);
  }

  const bool canonical_only = dedup == "canonical";
  const auto selected = [&]() {
    std::vector<CensusRecord> records;
    for (const CensusRecord& record : census->records)
      if (!canonical_only || record.canonical) records.push_back(record);
    return records;
  };

  if (format == "csv") {
    Census view;
    view.records = selected();
    view.summary = census->summary;
    onebridge::write_census_csv(view, std::cout);
    return 0;
  }

  if (format == "json") {
    Json document{{"summary", to_json(census->summary)}};
    if (list) {
      Json rows = Json::array();
      for (const CensusRecord& record : selected())
        rows.push_back(to_json(record));
      document["records"] = std::move(rows);
    }
    emit_json(document);
    return 0;
  }

  if (list)
    for (const CensusRecord& record : selected())
      std::cout << census_record_line(record) << "\n";
  const auto& summary = census->summary;
  std::cout << "triples: " << summary.triple_count
            << ", knots: " << summary.knot_count
            << ", admitting: " << summary.admitting_count
            << ", fillings: " << summary.filling_count << "\n";
  std::cout << "canonical knots: " << summary.canonical_knot_count
            << ", admitting: " << summary.canonical_admitting_count
            << ", fillings: " << summary.canonical_filling_count << "\n";
  return 0;
}

int run_table1(Int max_w, bool check, const std::string& format) {
  const auto rows = onebridge::table1(max_w);

  if (check) {
    if (max_w != 10) {
      std::cerr << "table1: --check compares the full table; use --max-w 10\n";
      return 2;
    }
    const auto& golden = onebridge::table1_golden();
    std::vector<std::string> rendered;
    for (const auto& row : rows) rendered.push_back(render_table1_row(row));
    if (rendered != golden) {
      std::cerr << "table1: rendered table differs from the golden copy\n";
      const size_t common = std::min(rendered.size(), golden.size());
      for (size_t i = 0; i < common; ++i)
        if (rendered[i] != golden[i])
          std::cerr << "row " << (i + 1) << ": got \"" << rendered[i]
                    << "\", want \"" << golden[i] << "\"\n";
      if (rendered.size() != golden.size())
        std::cerr << "row count: got " << rendered.size() << ", want "
                  << golden.size() << "\n";
      return 1;
    }
  }

  if (format == "json") {
    Json encoded = Json::array();
    for (const auto& row : rows) {
      Json slopes = Json::array();
      for (const Slope& slope : row.slopes) slopes.push_back(to_json(slope));
      encoded.push_back(Json{{"w", row.braid.w},
                             {"b", row.braid.b},
                             {"t", row.braid.t},
                             {"slopes", std::move(slopes)}});
    }
    emit_json(Json{{"max_w", max_w}, {"rows", std::move(encoded)}});
    return 0;
  }

  for (const auto& row : rows) std::cout << render_table1_row(row) << "\n";
  return 0;
}

int run_verify(Int max_w, int jobs, const std::string& format) {
  if (max_w < 4 || max_w > 200) {
    std::cerr << "verify: need 4 <= max-w <= 200\n";
    return 2;
  }
  const auto equivalence = onebridge::check_equivalence(max_w, jobs);
  const auto transit = onebridge::transit_vs_formula_sweep(30, 3);
  const auto intervals = onebridge::phi_closed_vs_direct_sweep(200);
  const auto mirror = onebridge::verify_mirror_pairs(max_w);
  const bool passed = equivalence.passed() && transit.passed() &&
                      intervals.passed() && mirror.passed();

  if (format == "json") {
    emit_json(Json{{"equivalence", to_json(equivalence)},
                   {"transit", to_json(transit)},
                   {"intervals", to_json(intervals)},
                   {"mirror", to_json(mirror)},
                   {"passed", passed}});
    return passed ? 0 : 1;
  }

  std::cout << "equivalence (w <= " << max_w << "): "
            << (equivalence.passed() ? "PASS" : "FAIL") << " ("
            << equivalence.triples_checked << " triples, "
            << equivalence.mismatches.size() << " mismatches)\n";
  for (const auto& mismatch : equivalence.mismatches) {
    std::cout << "  " << render_braid(mismatch.braid) << ": closed form {";
    for (size_t i = 0; i < mismatch.closed_form.size(); ++i)
      std::cout << (i ? ", " : "") << render_slope(mismatch.closed_form[i]);
    std::cout << "} vs enumeration {";
    for (size_t i = 0; i < mismatch.enumerated.size(); ++i)
      std::cout << (i ? ", " : "") << render_slope(mismatch.enumerated[i]);
    std::cout << "}\n";
  }

  std::cout << "transit measurement (p <= 30, k <= 3): "
            << (transit.passed() ? "PASS" : "FAIL") << " (" << transit.checked
            << " tuples, " << transit.mismatches.size() << " mismatches)\n";
  for (const auto& line : transit.mismatches) std::cout << "  " << line << "\n";

  std::cout << "interval counts (p <= 200): "
            << (intervals.passed() ? "PASS" : "FAIL") << " ("
            << intervals.checked << " shapes, " << intervals.mismatches.size()
            << " mismatches)\n";
  for (const auto& line : intervals.mismatches)
    std::cout << "  " << line << "\n";

  std::cout << "mirror pairs (w <= " << max_w << "): "
            << (mirror.passed() ? "PASS" : "FAIL") << " ("
            << mirror.pairs_checked << " pairs, " << mirror.mismatches.size()
            << " mismatches)\n";
  for (const auto& mismatch : mirror.mismatches) {
    std::cout << "  " << render_braid(mismatch.braid) << " <-> "
              << render_braid(mismatch.partner) << ": expected {";
    for (size_t i = 0; i < mismatch.expected.size(); ++i)
      std::cout << (i ? ", " : "") << render_slope(mismatch.expected[i]);
    std::cout << "}, got {";
    for (size_t i = 0; i < mismatch.actual.size(); ++i)
      std::cout << (i ? ", " : "") << render_slope(mismatch.actual[i]);
    std::cout << "}\n";
  }
  for (const Braid& braid : mirror.partner_not_knot)
    std::cout << "  " << render_braid(braid)
              << ": mirror partner is not a knot\n";
  if (!mirror.map_divergent.empty())
    std::cout << "note: the (t-b-1) parameter map diverges from the "
                 "filling-set involution for "
              << mirror.map_divergent.size() << " knots\n";

  std::cout << "result: " << (passed ? "PASS" : "FAIL") << "\n";
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solid torus Dehn fillings of 1-bridge braid exteriors"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "report elapsed time on stderr");

  static const std::vector<std::string> kFormats = {"text", "json"};
  static const std::vector<std::string> kCensusFormats = {"text", "json",
                                                          "csv"};

  auto* fillings_cmd = app.add_subcommand(
      "fillings", "classify the solid-torus filling slopes of K(w,b,t)");
  Int fill_w = 0, fill_b = 0, fill_t = 0;
  std::string fill_format = "text";
  fillings_cmd->add_option("w", fill_w, "winding number")->required();
  fillings_cmd->add_option("b", fill_b, "bridge width")->required();
  fillings_cmd->add_option("t", fill_t, "twist")->required();
  fillings_cmd->add_option("--format", fill_format)
      ->check(CLI::IsMember(kFormats));

  auto* knots_cmd = app.add_subcommand(
      "knots", "list the braids whose exterior admits the slope p/q");
  Int knots_p = 0, knots_q = 0, knots_max_w = 40;
  std::string knots_format = "text";
  knots_cmd->add_option("p", knots_p, "slope numerator")->required();
  knots_cmd->add_option("q", knots_q, "slope denominator")->required();
  knots_cmd->add_option("--max-w", knots_max_w, "winding number bound");
  knots_cmd->add_option("--format", knots_format)
      ->check(CLI::IsMember(kFormats));

  auto* tuple_cmd = app.add_subcommand(
      "tuple", "map an allowable 5-tuple (p,q,k,x,eps) to its braid");
  Int tup_p = 0, tup_q = 0, tup_k = 0, tup_x = 0, tup_eps = 1;
  std::string tuple_format = "text";
  tuple_cmd->add_option("p", tup_p)->required();
  tuple_cmd->add_option("q", tup_q)->required();
  tuple_cmd->add_option("k", tup_k)->required();
  tuple_cmd->add_option("x", tup_x)->required();
  tuple_cmd->add_option("eps", tup_eps)->required();
  tuple_cmd->add_option("--format", tuple_format)
      ->check(CLI::IsMember(kFormats));

  auto* census_cmd =
      app.add_subcommand("census", "sweep all triples up to a winding bound");
  Int census_max_w = 10;
  bool census_list = false;
  std::string census_dedup, census_format = "text", census_cache;
  int census_jobs = 1;
  census_cmd->add_option("--max-w", census_max_w, "winding number bound");
  census_cmd->add_flag("--list", census_list, "emit every record");
  census_cmd->add_option("--dedup", census_dedup,
                         "'canonical' keeps one of each mirror pair")
      ->check(CLI::IsMember(std::vector<std::string>{"canonical"}));
  census_cmd->add_option("--format", census_format)
      ->check(CLI::IsMember(kCensusFormats));
  census_cmd->add_option("--cache", census_cache,
                         "cache directory (overrides ONEBRIDGE_CACHE_DIR)");
  census_cmd->add_option("--jobs", census_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  auto* table1_cmd =
      app.add_subcommand("table1", "reference table of canonical knots");
  Int table1_max_w = 10;
  bool table1_check = false;
  std::string table1_format = "text";
  table1_cmd->add_option("--max-w", table1_max_w, "winding number bound");
  table1_cmd->add_flag("--check", table1_check,
                       "compare against the embedded golden table");
  table1_cmd->add_option("--format", table1_format)
      ->check(CLI::IsMember(kFormats));

  auto* verify_cmd = app.add_subcommand(
      "verify", "run the independent verification oracles");
  Int verify_max_w = 25;
  int verify_jobs = 1;
  std::string verify_format = "text";
  verify_cmd->add_option("--max-w", verify_max_w, "winding number bound");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format)
      ->check(CLI::IsMember(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Help and version requests exit 0; every parse failure is a
    // usage error.
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*fillings_cmd)
      code = run_fillings(fill_w, fill_b, fill_t, fill_format);
    else if (*knots_cmd)
      code = run_knots(knots_p, knots_q, knots_max_w, knots_format);
    else if (*tuple_cmd)
      code = run_tuple(tup_p, tup_q, tup_k, tup_x, tup_eps, tuple_format);
    else if (*census_cmd)
      code = run_census(census_max_w, census_list, census_dedup, census_format,
                        census_cache, census_jobs);
    else if (*table1_cmd)
      code = run_table1(table1_max_w, table1_check, table1_format);
    else if (*verify_cmd)
      code = run_verify(verify_max_w, verify_jobs, verify_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }

  if (timing) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms: " << (elapsed.count() / 1000.0) << "\n";
  }
  return code;
}
