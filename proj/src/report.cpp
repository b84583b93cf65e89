// SPDX-License-Identifier: MIT

#include "twobridge/report.hpp"

#include <sstream>

namespace twobridge {

using nlohmann::json;

namespace {

json pair_json(const SlopePair& p) { return json::array({p.l, p.m}); }

json pair_json(const std::optional<IntPair>& p) {
  if (!p) return nullptr;
  return json::array({p->a, p->b});
}

json optional_rational(const std::optional<Rational>& x) {
  if (!x) return nullptr;
  return to_json(*x);
}

template <typename T>
json optional_value(const std::optional<T>& x) {
  if (!x) return nullptr;
  return *x;
}

json point_json(const WeightPoint& p) {
  return {{"family", p.family}, {"w", p.w}, {"u", p.u}, {"alpha", p.alpha}, {"beta", p.beta}, {"n", p.n}};
}

json points_json(const std::vector<WeightPoint>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(point_json(p));
  return out;
}

}  // namespace

json to_json(const Rational& x) { return x.str(); }

json to_json(const LinkParams& lp) {
  return {{"w", lp.w}, {"u", lp.u}, {"r", lp.r()}, {"s", lp.s()}};
}

json to_json(const EdgePath& path) {
  json edges = json::array();
  for (const auto& e : path.edges) {
    edges.push_back({{"label", std::string(1, to_char(e.label))},
                     {"matched", e.orientation_matched},
                     {"sequence", to_string(e.tag.sequence)},
                     {"quad", e.tag.quad},
                     {"k", e.tag.k},
                     {"t1_diagonal", e.t1_diagonal},
                     {"matrix", json::array({e.matrix.a(), e.matrix.b(), e.matrix.c(), e.matrix.d()})},
                     {"pole", to_json(e.matrix.neg_d_over_c())}});
  }
  json gens = nullptr;
  if (path.generators) gens = json::array({path.generators->first, path.generators->second});
  return {{"name", path.name},
          {"regime", to_string(path.regime)},
          {"link", to_json(path.params)},
          {"generators", gens},
          {"labels", path.label_string()},
          {"edges", edges}};
}

json to_json(const CatalogEntry& entry, const EdgePath* path) {
  json out = {{"name", entry.name},
              {"regime", to_string(entry.regime)},
              {"minimal", entry.minimal},
              {"exclusion_reason", entry.minimal ? json(nullptr) : json(entry.exclusion_reason)}};
  if (path) {
    out["edge_count"] = path->edges.size();
    out["labels"] = path->label_string();
  }
  return out;
}

json to_json(const SurfaceData& d) {
  return {{"family", d.family},
          {"link", to_json(d.params)},
          {"alpha", d.weights.alpha},
          {"beta", d.weights.beta},
          {"n", d.weights.n},
          {"i1", d.i1},
          {"i2", d.i2},
          {"raw_slope1", pair_json(d.raw_slope1)},
          {"raw_slope2", pair_json(d.raw_slope2)},
          {"slope1", pair_json(d.slope1)},
          {"slope2", pair_json(d.slope2)},
          {"reduced_slope1", optional_rational(d.reduced1)},
          {"reduced_slope2", optional_rational(d.reduced2)},
          {"chi", d.chi},
          {"b1", d.b1},
          {"b2", d.b2},
          {"gprime", d.gprime()},
          {"two_gprime", d.two_gprime},
          {"meridional", d.meridional}};
}

json to_json(const GenusZeroSolution& s) {
  return {{"family", s.family}, {"alpha", s.alpha}, {"beta", s.beta}, {"n", s.n}, {"witness", to_json(s.witness)}};
}

json to_json(const ReducibleSurgery& r) {
  return {{"gamma1", r.gamma1}, {"gamma2", r.gamma2}, {"families", r.families},
          {"mirror_pair", json::array({-r.gamma1, -r.gamma2})}};
}

json to_json(const SurgeryClassification& c) {
  json checks = json::object();
  for (const auto& p : c.checks) checks[p.name] = p.value;
  return {{"kind", to_string(c.kind)},
          {"w", c.w},
          {"u", c.u},
          {"gamma", c.gamma},
          {"lens_p", optional_value(c.lens_p)},
          {"cable_of_core", pair_json(c.cable_of_core)},
          {"cable_of_dual_core", pair_json(c.cable_of_dual_core)},
          {"torus_pair", pair_json(c.torus_pair)},
          {"cable_k", optional_value(c.cable_k)},
          {"mirror", c.mirror},
          {"checks", checks},
          {"note", c.note}};
}

json to_json(const TorusKnotSurgery& t) {
  return {{"family", t.family},
          {"expansion", t.expansion},
          {"gamma", t.gamma},
          {"torus_pair", json::array({t.torus_pair.a, t.torus_pair.b})},
          {"mirror", t.mirror},
          {"consistency", t.consistency}};
}

json to_json(const SatelliteResult& s) {
  return {{"status", to_string(s.status)}, {"expansion", s.expansion}, {"mirror", s.mirror}, {"note", s.note}};
}

json to_json(const AllBInvariants& b) {
  return {{"alpha", b.alpha},
          {"beta", b.beta},
          {"chi", b.chi},
          {"genus", b.genus},
          {"boundary_circles", b.boundary_circles},
          {"integral_slope", b.integral_slope}};
}

json to_json(const GenusZeroReport& r) {
  return {{"ok", r.ok()},
          {"evaluated", r.evaluated},
          {"solutions", points_json(r.brute)},
          {"predicted_count", r.predicted.size()},
          {"missing", points_json(r.missing)},
          {"extra", points_json(r.extra)},
          {"lemma_violations", points_json(r.lemma_violations)}};
}

json to_json(const ClosedFormReport& r) {
  json groups = json::array();
  for (const auto& g : r.groups) {
    json ex = json::array();
    for (const auto& m : g.examples) {
      ex.push_back({{"at", point_json(m.at)}, {"assembled", m.assembled}, {"closed", m.closed}});
    }
    groups.push_back({{"family", g.family},
                      {"field", g.field},
                      {"erratum", g.erratum.empty() ? json(nullptr) : json(g.erratum)},
                      {"count", g.count},
                      {"examples", ex}});
  }
  json errata = json::array();
  for (const auto& e : known_errata()) {
    errata.push_back({{"name", e.name}, {"family", e.family}, {"field", e.field},
                      {"printed", e.printed}, {"corrected", e.corrected}});
  }
  return {{"ok", r.ok()},
          {"compared", r.compared},
          {"unexplained", r.unexplained},
          {"correction_failures", r.correction_failures},
          {"mismatch_groups", groups},
          {"errata", errata}};
}

json to_json(const SymmetryReport& r) {
  json rel = json::array();
  for (const auto& x : r.relations) {
    rel.push_back({{"name", x.name},
                   {"checked", x.checked},
                   {"failures", x.failures},
                   {"first_failure", x.failures ? json(x.first_failure) : json(nullptr)}});
  }
  return {{"ok", r.ok()}, {"relations", rel}};
}

json catalog_json(i64 r, i64 s) {
  const LinkParams lp = LinkParams::from_rs(r, s);
  json regimes = json::object();
  json counts = json::object();
  for (Regime regime : {Regime::D1, Regime::Dinf, Regime::Dt}) {
    json list = json::array();
    int minimal = 0;
    for (const auto& entry : catalog_entries(r, s, regime)) {
      const EdgePath p = path_edges_unchecked(entry.name, lp.w, lp.u);
      list.push_back(to_json(entry, &p));
      minimal += entry.minimal ? 1 : 0;
    }
    regimes[to_string(regime)] = list;
    counts[to_string(regime)] = minimal;
  }
  return {{"link", to_json(lp)}, {"regimes", regimes}, {"minimal_counts", counts}};
}

std::string to_text(const GenusZeroReport& r) {
  std::ostringstream os;
  os << "genus-zero sweep: " << r.evaluated << " weight vectors, " << r.brute.size() << " with g' = 0, "
     << (r.ok() ? "matches" : "DISAGREES WITH") << " the case analysis\n";
  for (const auto& p : r.brute) os << "  g'=0  " << p.str() << "\n";
  for (const auto& p : r.missing) os << "  missing (predicted only)  " << p.str() << "\n";
  for (const auto& p : r.extra) os << "  extra (brute force only)  " << p.str() << "\n";
  for (const auto& p : r.lemma_violations) os << "  chi bound violated  " << p.str() << "\n";
  return os.str();
}

std::string to_text(const ClosedFormReport& r) {
  std::ostringstream os;
  os << "closed forms: " << r.compared << " comparisons, " << r.unexplained << " unexplained, "
     << r.correction_failures << " erratum cells off the corrected expression\n";
  for (const auto& g : r.groups) {
    os << "  " << g.family << "." << g.field << ": " << g.count << " cells"
       << (g.erratum.empty() ? " UNEXPLAINED" : " (erratum " + g.erratum + ")") << "\n";
    for (const auto& m : g.examples) {
      os << "    " << m.at.str() << " assembled " << m.assembled << " printed " << m.closed << "\n";
    }
  }
  for (const auto& e : known_errata()) {
    os << "  erratum " << e.name << ": printed " << e.printed << ", corrected " << e.corrected << "\n";
  }
  return os.str();
}

std::string to_text(const SymmetryReport& r) {
  std::ostringstream os;
  os << "symmetries: " << (r.ok() ? "all hold" : "FAILURES") << "\n";
  for (const auto& x : r.relations) {
    os << "  " << x.name << ": " << x.checked << " checked, " << x.failures << " failed";
    if (x.failures) os << " (first " << x.first_failure << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace twobridge
