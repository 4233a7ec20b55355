// Census sweep, reference table, mirror-pair verification, and the
// JSONL cache / CSV export.

#include "onebridge/census.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <unistd.h>

#include "onebridge/json_io.hpp"

namespace onebridge {

namespace {

CensusSummary summarize(const std::vector<CensusRecord>& records, Int max_w) {
  CensusSummary summary;
  summary.max_w = max_w;
  summary.triple_count = static_cast<Int>(records.size());
  for (const CensusRecord& record : records) {
    if (!record.knot) continue;
    ++summary.knot_count;
    const Int fillings = static_cast<Int>(record.fillings.size());
    if (fillings > 0) ++summary.admitting_count;
    summary.filling_count += fillings;
    if (record.canonical) {
      ++summary.canonical_knot_count;
      if (fillings > 0) ++summary.canonical_admitting_count;
      summary.canonical_filling_count += fillings;
    }
  }
  return summary;
}

CensusRecord make_record(const Braid& braid) {
  CensusRecord record;
  record.braid = braid;
  record.knot = is_knot(braid);
  record.canonical = is_canonical(braid);
  if (record.knot) record.fillings = filling_slopes(braid);
  return record;
}

Int triple_count_up_to(Int max_w) {
  Int total = 0;
  for (Int w = 3; w <= max_w; ++w) total += (w - 2) * (w - 1);
  return total;
}

}  // namespace

Census run_census(Int max_w, int jobs) {
  if (max_w < 3 || max_w > 1000)
    throw std::invalid_argument("run_census: need 3 <= max_w <= 1000");
  if (jobs < 1) throw std::invalid_argument("run_census: need jobs >= 1");

  std::vector<std::vector<CensusRecord>> per_w(
      static_cast<size_t>(max_w - 2));
  const auto sweep_stripe = [&](Int first_w) {
    for (Int w = first_w; w <= max_w; w += jobs) {
      auto& records = per_w[static_cast<size_t>(w - 3)];
      records.reserve(static_cast<size_t>((w - 2) * (w - 1)));
      for (Int b = 1; b <= w - 2; ++b)
        for (Int t = 1; t <= w - 1; ++t)
          records.push_back(make_record(Braid::of(w, b, t)));
    }
  };
  std::vector<std::thread> workers;
  for (int stripe = 1; stripe < jobs; ++stripe)
    workers.emplace_back(sweep_stripe, Int{3} + stripe);
  sweep_stripe(3);
  for (auto& worker : workers) worker.join();

  Census census;
  census.records.reserve(static_cast<size_t>(triple_count_up_to(max_w)));
  for (auto& records : per_w)
    census.records.insert(census.records.end(),
                          std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
  census.summary = summarize(census.records, max_w);
  return census;
}

std::vector<Table1Row> table1(Int max_w) {
  if (max_w < 4 || max_w > 1000)
    throw std::invalid_argument("table1: need 4 <= max_w <= 1000");
  std::vector<Table1Row> rows;
  for (Int w = 3; w <= max_w; ++w)
    for (Int b = 1; b <= w - 2; ++b)
      for (Int t = 1; t <= w - 1; ++t) {
        const Braid braid = Braid::of(w, b, t);
        if (!is_canonical(braid) || !is_knot(braid)) continue;
        rows.push_back({braid, filling_slopes(braid)});
      }
  return rows;
}

std::string render_table1_row(const Table1Row& row) {
  std::ostringstream out;
  out << "(" << row.braid.w << ", " << row.braid.b << ", " << row.braid.t
      << "; ";
  if (row.slopes.empty()) {
    out << "-";
  } else {
    for (size_t i = 0; i < row.slopes.size(); ++i) {
      if (i > 0) out << ", ";
      out << row.slopes[i].p << "/" << row.slopes[i].q;
    }
  }
  out << ")";
  return out.str();
}

const std::vector<std::string>& table1_golden() {
  static const std::vector<std::string> rows = {
      "(4, 1, 2; 3/2, 5/3)",
      "(5, 2, 1; 3/1, 4/1)",
      "(6, 1, 2; 5/2)",
      "(6, 1, 4; 7/5)",
      "(6, 2, 1; 5/1)",
      "(6, 2, 3; 5/3, 7/4)",
      "(7, 2, 1; 6/1)",
      "(7, 2, 4; 3/2, 5/3, 8/5)",
      "(7, 2, 5; 4/3)",
      "(8, 1, 2; 7/2)",
      "(8, 1, 6; 9/7)",
      "(8, 2, 1; 7/1)",
      "(8, 2, 3; 5/2, 7/3)",
      "(8, 3, 2; 3/1, 7/2)",
      "(8, 3, 4; 7/4, 9/5)",
      "(8, 3, 6; -)",
      "(9, 2, 1; 8/1)",
      "(9, 2, 3; 8/3)",
      "(9, 2, 5; 5/3, 7/4)",
      "(9, 2, 6; 10/7)",
      "(9, 2, 7; 5/4)",
      "(9, 4, 1; -)",
      "(9, 4, 2; 4/1)",
      "(9, 4, 3; 5/2, 8/3)",
      "(10, 1, 2; 9/2)",
      "(10, 1, 4; -)",
      "(10, 1, 6; -)",
      "(10, 1, 8; 11/9)",
      "(10, 2, 1; 9/1)",
      "(10, 2, 7; 7/5, 11/8)",
      "(10, 3, 2; 9/2)",
      "(10, 3, 4; 9/4)",
      "(10, 3, 6; 3/2, 11/7)",
      "(10, 3, 8; -)",
      "(10, 4, 1; -)",
      "(10, 4, 5; 9/5, 11/6)",
  };
  return rows;
}

MirrorReport verify_mirror_pairs(Int max_w) {
  if (max_w < 4 || max_w > 1000)
    throw std::invalid_argument("verify_mirror_pairs: need 4 <= max_w <= 1000");
  MirrorReport report;
  report.max_w = max_w;
  for (Int w = 3; w <= max_w; ++w) {
    for (Int b = 1; b <= w - 2; ++b) {
      for (Int t = 1; t <= w - 1; ++t) {
        const Braid braid = Braid::of(w, b, t);
        if (!is_knot(braid)) continue;

        const std::optional<Braid> partner = mirror_partner(braid);
        if (!partner || !is_knot(*partner)) {
          report.partner_not_knot.push_back(braid);
        } else if (!(*partner < braid)) {
          ++report.pairs_checked;
          std::vector<Slope> expected;
          for (const Slope& slope : filling_slopes(braid))
            expected.push_back(mirror_slope(slope));
          std::sort(expected.begin(), expected.end());
          std::vector<Slope> actual = filling_slopes(*partner);
          if (expected != actual)
            report.mismatches.push_back(
                {braid, *partner, std::move(expected), std::move(actual)});
        }

        const MirrorImage image = mirror(braid);
        if (!image.in_range())
          report.map_out_of_range.push_back(braid);
        else if (!is_knot(*image.braid))
          report.map_image_link.push_back(braid);
        else if (partner && *image.braid != *partner)
          report.map_divergent.push_back({braid, *image.braid, *partner});
        else
          ++report.map_matches_partner;
      }
    }
  }
  return report;
}

void write_census_jsonl(const Census& census, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path dir = target.parent_path();
  if (dir.empty()) dir = ".";
  fs::create_directories(dir);
  const fs::path temp =
      dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(temp);
    if (!out)
      throw std::runtime_error("write_census_jsonl: cannot open " +
                               temp.string());
    out << Json{{"format_version", 1},
                {"max_w", census.summary.max_w},
                {"convention", "gamma_after_rho"}}
               .dump()
        << '\n';
    for (const CensusRecord& record : census.records)
      out << to_json(record).dump() << '\n';
    out.flush();
    if (!out)
      throw std::runtime_error("write_census_jsonl: write failed for " +
                               temp.string());
  }
  fs::rename(temp, target);
}

std::optional<Census> read_census_jsonl(const std::string& path,
                                        Int expect_max_w) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  const Json header = Json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object()) return std::nullopt;
  if (!header.contains("format_version") ||
      header["format_version"] != Json(1))
    return std::nullopt;
  if (!header.contains("convention") ||
      header["convention"] != Json("gamma_after_rho"))
    return std::nullopt;
  if (!header.contains("max_w") || header["max_w"] != Json(expect_max_w))
    return std::nullopt;

  Census census;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::optional<CensusRecord> record =
        census_record_from_json(Json::parse(line, nullptr, false));
    if (!record) return std::nullopt;
    if (!census.records.empty() &&
        !(census.records.back().braid < record->braid))
      return std::nullopt;
    census.records.push_back(std::move(*record));
  }
  if (static_cast<Int>(census.records.size()) != triple_count_up_to(expect_max_w))
    return std::nullopt;
  census.summary = summarize(census.records, expect_max_w);
  return census;
}

void write_census_csv(const Census& census, std::ostream& out) {
  out << "w,b,t,is_knot,is_canonical,fillings\n";
  for (const CensusRecord& record : census.records) {
    out << record.braid.w << ',' << record.braid.b << ',' << record.braid.t
        << ',' << (record.knot ? "true" : "false") << ','
        << (record.canonical ? "true" : "false") << ',';
    for (size_t i = 0; i < record.fillings.size(); ++i) {
      if (i > 0) out << ';';
      out << record.fillings[i].p << '/' << record.fillings[i].q;
    }
    out << '\n';
  }
}

}  // namespace onebridge
