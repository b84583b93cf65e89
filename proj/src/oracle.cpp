// SPDX-License-Identifier: MIT

#include "twobridge/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "twobridge/checked.hpp"
#include "twobridge/classify.hpp"
#include "twobridge/error.hpp"
#include "twobridge/paths.hpp"

namespace twobridge {

SweepSpec SweepSpec::defaults(i64 alpha_max) {
  SweepSpec spec;
  for (int w = 1; w <= 6; ++w) spec.w_values.push_back(w);
  for (int u = 1; u <= 6; ++u) spec.u_values.push_back(u);
  for (int u = -7; u <= -2; ++u) spec.u_values.push_back(u);
  spec.alpha_max = alpha_max;
  return spec;
}

bool SweepSpec::wants(const std::string& family) const {
  return families.empty() || std::find(families.begin(), families.end(), family) != families.end();
}

void validate_spec(const SweepSpec& spec) {
  if (spec.alpha_max < 2) throw DomainError("sweep.alpha_max", "alpha_max must be >= 2");
  for (int w : spec.w_values) {
    if (w < 1) throw DomainError("sweep.w_range", "w values must be >= 1");
  }
  for (int u : spec.u_values) {
    if (u == 0 || u == -1) throw DomainError("sweep.u_range", "u values must avoid -1 and 0");
  }
  for (const auto& f : spec.families) {
    if (!family_regime(f)) throw DomainError("sweep.family", "unknown family '" + f + "'");
  }
}

std::string WeightPoint::str() const {
  std::ostringstream os;
  os << family << "(w=" << w << ",u=" << u << ",alpha=" << alpha << ",beta=" << beta << ",n=" << n << ")";
  return os.str();
}

namespace {

// Minimal paths of the spec, in deterministic (w, u, catalog) order.
template <typename Fn>
void for_each_path(const SweepSpec& spec, bool skip_dinf, Fn&& fn) {
  for (int w : spec.w_values) {
    for (int u : spec.u_values) {
      const LinkParams lp = LinkParams::from_ws(w, u);
      for (const auto& name : family_names(lp.s_positive())) {
        if (!spec.wants(name) || !in_catalog(lp, name)) continue;
        if (skip_dinf && family_regime(name) == Regime::Dinf) continue;
        fn(path_edges(name, w, u));
      }
    }
  }
}

WeightPoint point(const EdgePath& p, const Weights& wt) {
  return {p.name, p.params.w, p.params.u, wt.alpha, wt.beta, wt.n};
}

std::string pair_str(const SlopePair& p) {
  return "(" + std::to_string(p.l) + "," + std::to_string(p.m) + ")";
}

}  // namespace

GenusZeroReport verify_genus_zero(const SweepSpec& spec) {
  validate_spec(spec);
  GenusZeroReport report;
  for_each_path(spec, true, [&](const EdgePath& path) {
    for (const Weights& wt : weight_grid(path, spec.alpha_max)) {
      ++report.evaluated;
      const SurfaceData d = assemble(path, wt);
      if (d.two_gprime != 0) continue;
      report.brute.push_back(point(path, wt));
      if (d.chi < -(wt.alpha + wt.beta) + 2) report.lemma_violations.push_back(point(path, wt));
    }
    for (const auto& s : genus_zero_solutions(path.name, path.params.w, path.params.u, spec.alpha_max)) {
      report.predicted.push_back({s.family, s.params.w, s.params.u, s.alpha, s.beta, s.n});
    }
  });
  std::sort(report.brute.begin(), report.brute.end());
  std::sort(report.predicted.begin(), report.predicted.end());
  std::set_difference(report.predicted.begin(), report.predicted.end(), report.brute.begin(),
                      report.brute.end(), std::back_inserter(report.missing));
  std::set_difference(report.brute.begin(), report.brute.end(), report.predicted.begin(),
                      report.predicted.end(), std::back_inserter(report.extra));
  return report;
}

const std::vector<Erratum>& known_errata() {
  static const std::vector<Erratum> kErrata = {
      {"d06.slope1", "d06", "slope1", "(alpha, (w+u+1) beta)", "(alpha, (w-u-1) beta)"},
      {"d26.chi", "d26", "chi", "-(w-u-2)(alpha-beta) + beta", "-(w-u-2)(alpha-beta) - beta"},
  };
  return kErrata;
}

namespace {

// The printed row with the named correction applied.
SurfaceData corrected_row(const Erratum& e, const WeightPoint& at) {
  SurfaceData d = closed_form(at.family, at.w, at.u, at.alpha, at.beta, at.n);
  const i64 w = at.w;
  const i64 u = at.u;
  const i64 a = at.alpha;
  const i64 b = at.beta;
  if (e.name == "d06.slope1") {
    d.slope1.m = (w - u - 1) * b;
    d.b1 = gcm(a, d.slope1.m);
    d.two_gprime = (w - u - 2) * (a + b) + 2 - d.b1 - d.b2;
  } else if (e.name == "d26.chi") {
    d.chi = -(w - u - 2) * (a - b) - b;
  }
  return d;
}

const Erratum* erratum_for(const std::string& family, const std::string& field) {
  for (const auto& e : known_errata()) {
    if (e.family == family && e.field == field) return &e;
  }
  return nullptr;
}

}  // namespace

std::string first_difference(const SurfaceData& x, const SurfaceData& y, std::string* lhs, std::string* rhs) {
  auto report = [&](const char* field, const std::string& a, const std::string& b) {
    if (lhs) *lhs = a;
    if (rhs) *rhs = b;
    return std::string(field);
  };
  if (!(x.slope1 == y.slope1)) return report("slope1", pair_str(x.slope1), pair_str(y.slope1));
  if (!(x.slope2 == y.slope2)) return report("slope2", pair_str(x.slope2), pair_str(y.slope2));
  if (x.chi != y.chi) return report("chi", std::to_string(x.chi), std::to_string(y.chi));
  if (x.b1 != y.b1) return report("b1", std::to_string(x.b1), std::to_string(y.b1));
  if (x.b2 != y.b2) return report("b2", std::to_string(x.b2), std::to_string(y.b2));
  if (x.two_gprime != y.two_gprime) {
    return report("gprime", std::to_string(x.gprime()), std::to_string(y.gprime()));
  }
  return {};
}

ClosedFormReport verify_closed_forms(const SweepSpec& spec) {
  validate_spec(spec);
  ClosedFormReport report;
  std::map<std::tuple<std::string, std::string, std::string>, ClosedFormGroup> groups;
  for_each_path(spec, true, [&](const EdgePath& path) {
    if (!has_closed_form(path.name)) return;
    for (const Weights& wt : weight_grid(path, spec.alpha_max, 0)) {
      ++report.compared;
      const SurfaceData got = assemble(path, wt);
      const SurfaceData printed = closed_form(path.name, path.params.w, path.params.u, wt.alpha, wt.beta, wt.n);
      ClosedFormMismatch mm;
      mm.at = point(path, wt);
      mm.field = first_difference(got, printed, &mm.assembled, &mm.closed);
      if (mm.field.empty()) continue;
      if (const Erratum* e = erratum_for(path.name, mm.field)) {
        mm.erratum = e->name;
        if (!same_invariants(got, corrected_row(*e, mm.at))) ++report.correction_failures;
      } else {
        ++report.unexplained;
      }
      auto& g = groups[{path.name, mm.field, mm.erratum}];
      g.family = path.name;
      g.field = mm.field;
      g.erratum = mm.erratum;
      ++g.count;
      if (g.examples.size() < 3) g.examples.push_back(mm);
    }
  });
  for (auto& [key, g] : groups) report.groups.push_back(std::move(g));
  return report;
}

bool SymmetryReport::ok() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.failures == 0; });
}

namespace {

void record(RelationResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  if (r.failures == 0) r.first_failure = what;
  ++r.failures;
}

// Reflection of L([r, s]) in L([s, r]): the second family at (u, w), with
// every meridional entry negated.
const std::vector<std::pair<std::string, std::string>> kMirrorPairs = {
    {"c38", "c14"}, {"c36", "c16"}, {"c28", "c24"}, {"c27", "c25"},
    {"c3", "c1"},   {"c7", "c5"},   {"c8", "c4"}};

// The same link L([-s, -r]): the second family at (-u-1, -w-1), unchanged.
const std::vector<std::pair<std::string, std::string>> kSamePairs = {
    {"d38", "d14"}, {"d36", "d16"}, {"d28", "d24"}, {"d3", "d1"}, {"d8", "d4"}};

void check_pair(const SweepSpec& spec, const std::string& lhs, const std::string& rhs, bool mirror,
                RelationResult& result) {
  for (int w : spec.w_values) {
    for (int u : spec.u_values) {
      if ((u > 0) != mirror) continue;
      const int pw = mirror ? u : -u - 1;
      const int pu = mirror ? w : -w - 1;
      const LinkParams lp = LinkParams::from_ws(w, u);
      const LinkParams partner = LinkParams::from_ws(pw, pu);
      if (!in_catalog(lp, lhs) || !in_catalog(partner, rhs)) continue;
      const EdgePath p = path_edges(lhs, w, u);
      const EdgePath q = path_edges(rhs, pw, pu);
      for (const Weights& wt : weight_grid(p, spec.symmetry_alpha_max, 0)) {
        const SurfaceData a = assemble(p, wt);
        SurfaceData b = assemble(q, wt);
        if (mirror) b = mirror_data(b);
        record(result, same_invariants(a, b), point(p, wt).str());
      }
    }
  }
}

}  // namespace

SymmetryReport verify_symmetries(const SweepSpec& spec) {
  validate_spec(spec);
  SymmetryReport report;
  for (const auto& [lhs, rhs] : kMirrorPairs) {
    if (!spec.wants(lhs) && !spec.wants(rhs)) continue;
    RelationResult r{lhs + " = mirror(" + rhs + " of L([s,r]))", 0, 0, {}};
    check_pair(spec, lhs, rhs, true, r);
    report.relations.push_back(r);
  }
  for (const auto& [lhs, rhs] : kSamePairs) {
    if (!spec.wants(lhs) && !spec.wants(rhs)) continue;
    RelationResult r{lhs + " = " + rhs + " of L([-s,-r])", 0, 0, {}};
    check_pair(spec, lhs, rhs, false, r);
    report.relations.push_back(r);
  }

  // The component exchange is an involution on assembled data.
  RelationResult inv{"swap_components involution", 0, 0, {}};
  std::mt19937 rng(20240607u);
  std::vector<EdgePath> pool;
  for_each_path(spec, false, [&](const EdgePath& p) { pool.push_back(p); });
  for (int k = 0; k < 100 && !pool.empty(); ++k) {
    const EdgePath& p = pool[rng() % pool.size()];
    const auto grid = weight_grid(p, spec.symmetry_alpha_max, 0);
    if (grid.empty()) continue;
    const Weights& wt = grid[rng() % grid.size()];
    const SurfaceData d = assemble(p, wt);
    const SurfaceData back = swap_components(swap_components(d));
    const bool same = same_invariants(d, back) && back.weights == d.weights && back.i1 == d.i1 &&
                      back.i2 == d.i2 && back.raw_slope1 == d.raw_slope1 && back.raw_slope2 == d.raw_slope2;
    record(inv, same, point(p, wt).str());
  }
  report.relations.push_back(inv);

  // Every genus-zero witness satisfies chi >= -(alpha + beta) + 2.
  RelationResult lemma{"chi >= -(alpha+beta)+2 on genus-zero witnesses", 0, 0, {}};
  for_each_path(spec, true, [&](const EdgePath& path) {
    for (const Weights& wt : weight_grid(path, spec.alpha_max)) {
      const SurfaceData d = assemble(path, wt);
      if (d.two_gprime != 0) continue;
      record(lemma, d.chi >= -(wt.alpha + wt.beta) + 2, point(path, wt).str());
    }
  });
  report.relations.push_back(lemma);
  return report;
}

}  // namespace twobridge
