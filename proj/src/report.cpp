#include "b1/report.hpp"

#include <sstream>

#include "b1/text_format.hpp"

namespace b1 {

namespace {

nlohmann::json point_set_json(PointSet s, std::size_t n) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t p = 0; p < n; ++p) {
    if (s & (PointSet{1} << p)) out.push_back(p);
  }
  return out;
}

}  // namespace

nlohmann::json elements_json(ElementSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (Element e : s.elements()) out.push_back(e);
  return out;
}

nlohmann::json ideal_json(ElementSet ideal) { return {{"ideal", elements_json(ideal)}}; }

nlohmann::json congruence_json(const Congruence& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (ElementSet c : r.classes()) classes.push_back(elements_json(c));
  return {{"classes", classes}};
}

nlohmann::json topology_json(const Spectrum<ElementSet>& prs, const SpectralReport& report) {
  nlohmann::json points = nlohmann::json::array();
  for (ElementSet p : prs.points) points.push_back(ideal_json(p));
  nlohmann::json closed = nlohmann::json::array();
  for (PointSet c : prs.space.closed_sets) closed.push_back(point_set_json(c, prs.space.num_points));
  nlohmann::json generic = nlohmann::json::array();
  for (const GenericPoint& g : report.generic_points) {
    generic.push_back({{"closed_set", point_set_json(g.closed_set, prs.space.num_points)}, {"point", g.point}});
  }
  return {{"points", points},
          {"closed_sets", closed},
          {"t0", report.t0},
          {"sober", report.sober},
          {"quasi_compact", report.quasi_compact},
          {"basic_opens_form_basis", report.basic_opens_form_basis},
          {"finite_type", report.finite_type},
          {"intersection_stable", report.intersection_stable},
          {"spectral", report.spectral()},
          {"generic_points", generic}};
}

std::string census_csv(const CensusResult& census) {
  std::size_t max_card = 0;
  for (const MonogenicRecord& r : census.records) max_card = std::max(max_card, r.algebra.size());
  std::ostringstream out;
  out << "cardinality,case,count\n";
  for (std::size_t n = 3; n <= max_card; ++n) {
    for (MonogenicCase c : {MonogenicCase::I, MonogenicCase::II, MonogenicCase::III}) {
      out << n << ',' << to_string(c) << ',' << census.count(n, c) << '\n';
    }
  }
  for (MonogenicCase c : {MonogenicCase::I, MonogenicCase::II, MonogenicCase::III}) {
    out << "total," << to_string(c) << ',' << census.count(c) << '\n';
  }
  return out.str();
}

nlohmann::json census_json(const CensusResult& census) {
  nlohmann::json records = nlohmann::json::array();
  for (const MonogenicRecord& r : census.records) {
    nlohmann::json prs = nlohmann::json::array();
    for (ElementSet p : r.prs_shape) prs.push_back(elements_json(p));
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& [g, c] : r.generator_cases) gens.push_back({{"generator", g}, {"case", to_string(c)}});
    records.push_back({{"cardinality", r.algebra.size()},
                       {"generator", r.generator},
                       {"case", to_string(r.case_tag)},
                       {"prs", prs},
                       {"generators", gens},
                       {"algebra", format_algebra(r.algebra)}});
  }
  nlohmann::json counts = nlohmann::json::object();
  for (MonogenicCase c : {MonogenicCase::I, MonogenicCase::II, MonogenicCase::III}) {
    counts[std::string(to_string(c))] = census.count(c);
  }
  return {{"total", census.records.size()},
          {"counts", counts},
          {"discrepancies", census.discrepancies().size()},
          {"records", records}};
}

std::string format_set(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    out += (first ? "" : ",") + std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string format_partition(const Congruence& r) {
  std::string out;
  for (ElementSet c : r.classes()) out += (out.empty() ? "" : " | ") + format_set(c);
  return out;
}

}  // namespace b1
