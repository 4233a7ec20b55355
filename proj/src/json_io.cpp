// JSON encodings and the strict census-record decoder.

#include "onebridge/json_io.hpp"

#include <algorithm>
#include <exception>

namespace onebridge {

Json to_json(const Slope& slope) {
  return Json{{"p", slope.p}, {"q", slope.q}};
}

Json to_json(const Braid& braid) {
  return Json{{"w", braid.w}, {"b", braid.b}, {"t", braid.t}};
}

Json to_json(const AllowableTuple& tuple) {
  return Json{{"p", tuple.p},
              {"q", tuple.q},
              {"k", tuple.k},
              {"x", tuple.x},
              {"eps", tuple.eps}};
}

Json to_json(const CaseWitness& witness) {
  return Json{{"case", witness.case_id}, {"tuple", to_json(witness.tuple)}};
}

Json to_json(const SlopeFillings& fillings) {
  Json witnesses = Json::array();
  for (const CaseWitness& witness : fillings.witnesses)
    witnesses.push_back(to_json(witness));
  return Json{{"slope", to_json(fillings.slope)},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const TupleImage& image) {
  Json encoded{{"tuple", to_json(image.tuple)},
               {"w", image.w},
               {"b", image.b},
               {"t", image.t},
               {"valid", image.valid()}};
  if (!image.valid()) encoded["violation"] = image.violation;
  return encoded;
}

Json to_json(const CensusRecord& record) {
  Json encoded{{"w", record.braid.w},
               {"b", record.braid.b},
               {"t", record.braid.t},
               {"knot", record.knot},
               {"canonical", record.canonical}};
  if (record.knot) {
    Json fillings = Json::array();
    for (const Slope& slope : record.fillings)
      fillings.push_back(to_json(slope));
    encoded["fillings"] = std::move(fillings);
  }
  return encoded;
}

Json to_json(const CensusSummary& summary) {
  return Json{{"max_w", summary.max_w},
              {"triples", summary.triple_count},
              {"knots", summary.knot_count},
              {"admitting", summary.admitting_count},
              {"fillings", summary.filling_count},
              {"canonical_knots", summary.canonical_knot_count},
              {"canonical_admitting", summary.canonical_admitting_count},
              {"canonical_fillings", summary.canonical_filling_count}};
}

Json to_json(const EquivalenceReport& report) {
  Json mismatches = Json::array();
  for (const EquivalenceMismatch& mismatch : report.mismatches) {
    Json closed = Json::array();
    for (const Slope& slope : mismatch.closed_form)
      closed.push_back(to_json(slope));
    Json oracle = Json::array();
    for (const Slope& slope : mismatch.enumerated)
      oracle.push_back(to_json(slope));
    mismatches.push_back(Json{{"w", mismatch.braid.w},
                              {"b", mismatch.braid.b},
                              {"t", mismatch.braid.t},
                              {"closed_form", std::move(closed)},
                              {"oracle", std::move(oracle)}});
  }
  return Json{{"max_w", report.max_w},
              {"triples_checked", report.triples_checked},
              {"mismatches", std::move(mismatches)},
              {"passed", report.passed()}};
}

Json to_json(const SweepReport& report) {
  return Json{{"checked", report.checked},
              {"mismatches", report.mismatches},
              {"passed", report.passed()}};
}

Json to_json(const MirrorReport& report) {
  Json mismatches = Json::array();
  for (const MirrorMismatch& mismatch : report.mismatches) {
    Json expected = Json::array();
    for (const Slope& slope : mismatch.expected)
      expected.push_back(to_json(slope));
    Json actual = Json::array();
    for (const Slope& slope : mismatch.actual)
      actual.push_back(to_json(slope));
    mismatches.push_back(Json{{"braid", to_json(mismatch.braid)},
                              {"partner", to_json(mismatch.partner)},
                              {"expected", std::move(expected)},
                              {"actual", std::move(actual)}});
  }
  Json partner_not_knot = Json::array();
  for (const Braid& braid : report.partner_not_knot)
    partner_not_knot.push_back(to_json(braid));
  Json out_of_range = Json::array();
  for (const Braid& braid : report.map_out_of_range)
    out_of_range.push_back(to_json(braid));
  Json image_link = Json::array();
  for (const Braid& braid : report.map_image_link)
    image_link.push_back(to_json(braid));
  Json divergent = Json::array();
  for (const MapDivergence& divergence : report.map_divergent)
    divergent.push_back(Json{{"braid", to_json(divergence.braid)},
                             {"image", to_json(divergence.map_image)},
                             {"partner", to_json(divergence.partner)}});
  return Json{{"max_w", report.max_w},
              {"pairs_checked", report.pairs_checked},
              {"mismatches", std::move(mismatches)},
              {"partner_not_knot", std::move(partner_not_knot)},
              {"literal_map",
               Json{{"out_of_range", std::move(out_of_range)},
                    {"image_link", std::move(image_link)},
                    {"divergent", std::move(divergent)},
                    {"matches_partner", report.map_matches_partner}}},
              {"passed", report.passed()}};
}

std::optional<CensusRecord> census_record_from_json(const Json& encoded) {
  if (encoded.is_discarded() || !encoded.is_object()) return std::nullopt;
  try {
    for (const char* key : {"w", "b", "t"})
      if (!encoded.contains(key) || !encoded[key].is_number_integer())
        return std::nullopt;
    for (const char* key : {"knot", "canonical"})
      if (!encoded.contains(key) || !encoded[key].is_boolean())
        return std::nullopt;

    CensusRecord record;
    record.braid = Braid::of(encoded["w"].get<Int>(), encoded["b"].get<Int>(),
                             encoded["t"].get<Int>());
    record.knot = encoded["knot"].get<bool>();
    record.canonical = encoded["canonical"].get<bool>();
    if (record.knot != encoded.contains("fillings")) return std::nullopt;
    if (record.knot) {
      if (!encoded["fillings"].is_array()) return std::nullopt;
      for (const Json& slope : encoded["fillings"]) {
        if (!slope.is_object() || !slope.contains("p") ||
            !slope.contains("q") || !slope["p"].is_number_integer() ||
            !slope["q"].is_number_integer())
          return std::nullopt;
        record.fillings.push_back(
            Slope::of(slope["p"].get<Int>(), slope["q"].get<Int>()));
      }
      if (!std::is_sorted(record.fillings.begin(), record.fillings.end()) ||
          std::adjacent_find(record.fillings.begin(), record.fillings.end()) !=
              record.fillings.end())
        return std::nullopt;
    }
    if (record.knot != is_knot(record.braid)) return std::nullopt;
    if (record.canonical != is_canonical(record.braid)) return std::nullopt;
    return record;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace onebridge
