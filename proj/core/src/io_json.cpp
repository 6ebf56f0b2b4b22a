#include "bmres/io_json.hpp"

#include <sstream>

namespace bmres {

namespace {

Monomial monomial_from_csv(const std::string& csv) {
  std::vector<int> e;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) e.push_back(std::stoi(cell));
  return Monomial(std::move(e));
}

}  // namespace

json matching_to_json(const MonomialIdeal& ideal, const AcyclicMatching& a) {
  json edges = json::array();
  for (const MatchEdge& e : a.edges)
    edges.push_back({{"source", e.source},
                     {"target", e.target},
                     {"lcm", ideal.lcm_of(e.source).csv()}});
  return json{{"edges", edges}};
}

AcyclicMatching matching_from_json(const json& j) {
  std::vector<MatchEdge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("source").get<GenSet>(),
                     e.at("target").get<GenSet>()});
  return AcyclicMatching::from_edges(std::move(edges));
}

json complex_to_json(const FreeComplex& c) {
  json basis = json::array();
  for (const auto& level : c.basis) basis.push_back(level);
  json entries = json::array();
  for (std::size_t d = 1; d < c.diff.size(); ++d)
    for (std::size_t col = 0; col < c.diff[d].size(); ++col)
      for (const Entry& e : c.diff[d][col])
        entries.push_back({static_cast<int>(d), e.row,
                           static_cast<int>(col), e.coeff, e.mono.csv()});
  return json{{"num_vars", c.num_vars},
              {"ranks", c.ranks()},
              {"basis", basis},
              {"entries", entries}};
}

FreeComplex complex_from_json(const json& j) {
  FreeComplex c;
  c.num_vars = j.at("num_vars").get<int>();
  for (const auto& level : j.at("basis"))
    c.basis.push_back(level.get<std::vector<GenSet>>());
  c.diff.resize(c.basis.size());
  for (std::size_t d = 1; d < c.basis.size(); ++d)
    c.diff[d].resize(c.basis[d].size());
  for (const auto& e : j.at("entries")) {
    int d = e.at(0).get<int>();
    Entry entry{e.at(1).get<int>(), e.at(3).get<long long>(),
                monomial_from_csv(e.at(4).get<std::string>())};
    c.diff[static_cast<std::size_t>(d)][e.at(2).get<std::size_t>()]
        .push_back(std::move(entry));
  }
  return c;
}

json betti_to_json(const BettiTable& t) {
  json rows = json::array();
  for (const auto& [key, count] : t.entries)
    rows.push_back({key.first, key.second.csv(), count});
  return rows;
}

json certificate_to_json(const Certificate& cert) {
  json bad = json::array();
  for (const BadPathReport& r : cert.bad) {
    json paths = json::array();
    for (const GradientPath& path : r.paths)
      paths.push_back({{"cells", path.cells}, {"sign", path.sign}});
    bad.push_back({{"type", r.type_p.csv()}, {"paths", paths}});
  }
  return json{{"minimal", cert.minimal},
              {"betti", betti_to_json(cert.oracle)},
              {"bad_paths", bad}};
}

json pipeline_report_to_json(const PipelineReport& report) {
  json gens = json::array();
  for (const Monomial& g : report.ideal.gens()) gens.push_back(g.csv());
  json out{{"ideal", {{"num_vars", report.ideal.num_vars()},
                      {"gens", gens},
                      {"j_part", report.ideal.j_part_mask()},
                      {"pure_powers", report.ideal.pure_power_mask()}}},
           {"certified", report.search.certified},
           {"matching", matching_to_json(report.ideal,
                                         report.morse.matching)},
           {"complex", complex_to_json(report.morse.complex)},
           {"report", certificate_to_json(report.certificate)},
           {"resolution_ok", report.resolution.ok}};
  if (report.j_restriction_minimal)
    out["j_restriction_minimal"] = *report.j_restriction_minimal;
  return out;
}

}  // namespace bmres
