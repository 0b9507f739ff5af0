#include "polyomino/report.hpp"

#include <cstdio>

namespace polyomino {

json to_json(Point p) { return json::array({p.i, p.j}); }
json to_json(const Cell& c) { return to_json(c.lower_left); }
json to_json(const Interval& I) { return json::array({to_json(I.lo), to_json(I.hi)}); }

json to_json(const Configuration& cfg) {
  json j;
  j["kind"] = std::string(to_string(cfg.kind));
  j["cells"] = json::array();
  for (const auto& c : cfg.cells) j["cells"].push_back(to_json(c));
  if (cfg.first_index) j["first_index"] = cfg.first_index;
  if (cfg.middle) j["middle"] = to_json(*cfg.middle);
  if (cfg.middle_index) j["middle_index"] = cfg.middle_index;
  if (cfg.kind == ConfigKind::ladder) j["steps"] = cfg.steps;
  if (!cfg.markers.empty()) {
    j["markers"] = json::object();
    for (const auto& [name, p] : cfg.markers) j["markers"][name] = to_json(p);
  }
  return j;
}

json to_json(const ClosedPathViolation& v) {
  json j;
  j["condition"] = v.condition;
  j["message"] = v.message;
  j["witness"] = json::array();
  for (const auto& c : v.witness) j["witness"].push_back(to_json(c));
  return j;
}

json to_json(const YResult& y) {
  json j;
  j["rule"] = std::string(to_string(y.provenance.rule));
  j["y"] = json::array();
  for (auto p : y.y) j["y"].push_back(to_json(p));
  j["trace"] = json::array();
  for (const auto& e : y.provenance.trace) {
    json t;
    t["label"] = e.label;
    t["kind"] = std::string(to_string(e.kind));
    t["index"] = e.index;
    t["markers"] = json::object();
    for (const auto& [name, p] : e.markers) t["markers"][name] = to_json(p);
    t["reason"] = e.reason;
    j["trace"].push_back(std::move(t));
  }
  j["notes"] = y.provenance.notes;
  return j;
}

json to_json(const GBReport& rep) {
  json j;
  j["generators"] = rep.generators;
  j["total_pairs"] = rep.total_pairs;
  j["coprime_skips"] = rep.coprime_skips;
  j["reduced_pairs"] = rep.reduced_pairs;
  j["is_groebner"] = rep.is_groebner;
  j["is_reduced"] = rep.is_reduced;
  j["failures"] = json::array();
  for (const auto& f : rep.failures) {
    json x;
    x["first"] = to_json(f.first);
    x["second"] = to_json(f.second);
    x["pattern"] = std::string(to_string(classify_overlap(f.first, f.second).pattern));
    x["normal_form"] = render(f.normal_form);
    j["failures"].push_back(std::move(x));
  }
  return j;
}

json to_json(const InitialIdeal& ini) {
  json j;
  j["certified"] = ini.certified;
  j["squarefree"] = is_squarefree(ini.generators);
  j["count"] = ini.generators.size();
  j["generators"] = json::array();
  for (const auto& m : ini.generators) j["generators"].push_back(render(m));
  return j;
}

json to_json(const ScanResult& scan) {
  json j;
  j["max_degree"] = scan.max_degree;
  j["monomials"] = scan.monomials;
  j["member_pairs"] = scan.member_pairs;
  j["toric_hypothesis"] = scan.toric_hypothesis;
  j["non_squarefree_found"] = scan.non_squarefree_found;
  j["primitives"] = json::array();
  for (const auto& c : scan.primitives) {
    json x;
    x["degree"] = c.degree;
    x["squarefree"] = c.squarefree();
    x["binomial"] = render(c.binomial());
    j["primitives"].push_back(std::move(x));
  }
  return j;
}

json polyomino_stats(const Polyomino& P) {
  json j;
  j["cells"] = P.size();
  j["vertices"] = P.vertices().size();
  j["edges"] = P.edges().size();
  j["inner_intervals"] = inner_intervals(P).size();
  auto s = is_simple(P);
  j["simple"] = s.simple;
  j["holes"] = s.holes.size();
  return j;
}

json configuration_census(const ClosedPath& cp, const DetectionOptions& opts) {
  json j;
  for (auto kind : {ConfigKind::w_pentomino, ConfigKind::rw_heptomino, ConfigKind::ld_skew_tetromino_h,
                    ConfigKind::ld_skew_tetromino_v, ConfigKind::ld_skew_hexomino_h,
                    ConfigKind::ld_skew_hexomino_v}) {
    json list = json::array();
    for (const auto& cfg : find_configurations(cp, kind, opts)) list.push_back(to_json(cfg));
    j[std::string(to_string(kind))] = std::move(list);
  }
  json ls = json::array();
  for (const auto& cfg : find_l_configurations(cp)) ls.push_back(to_json(cfg));
  j["l_configurations"] = std::move(ls);
  json ladders = json::array();
  for (const auto& cfg : find_ladders(cp, 2)) ladders.push_back(to_json(cfg));
  j["ladders"] = std::move(ladders);
  auto eq = no_zigzag_equivalence(cp);
  j["zigzag"] = {{"no_zigzag", eq.no_zigzag}, {"lconf_or_ladder3", eq.lconf_or_ladder3}, {"agree", eq.agree}};
  return j;
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace polyomino
