// SPDX-License-Identifier: MIT

#include "twobridge/classify.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "twobridge/checked.hpp"
#include "twobridge/error.hpp"
#include "twobridge/paths.hpp"

namespace twobridge {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

// ---------------------------------------------------------------- genus zero

namespace {

bool is_one_of(const std::string& f, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (f == n) return true;
  }
  return false;
}

}  // namespace

bool genus_zero_predicted(const std::string& family, const LinkParams& lp, i64 alpha, i64 beta, i64 n) {
  if (is_one_of(family, {"c2", "d2"})) return alpha == 2 && beta == 2 && n >= 0 && n <= 2;
  // Only beta = 2 makes b1 + b2 = alpha + beta reach 2 - chi here.
  if (is_one_of(family, {"c25", "c27", "d25", "d27"})) return beta == 2;
  if (family == "d26") return lp.w == 1 && lp.u == -2 && alpha == 4 && beta == 2;
  return false;
}

std::string genus_zero_rule(const std::string& family, const LinkParams& lp) {
  if (is_one_of(family, {"c2", "d2"})) return "alpha = beta = 2, n in {0, 1, 2}";
  if (is_one_of(family, {"c25", "c27", "d25", "d27"})) return "beta = 2, alpha even >= 4";
  if (family == "d26") {
    return (lp.w == 1 && lp.u == -2) ? "(alpha, beta) = (4, 2)" : "none";
  }
  return "none";
}

std::vector<GenusZeroSolution> genus_zero_solutions(const std::string& family, int w, int u, i64 alpha_max) {
  const EdgePath path = path_edges(family, w, u);
  std::vector<GenusZeroSolution> out;
  if (path.regime == Regime::Dinf) return out;  // meridional on the second component
  for (const Weights& wt : weight_grid(path, alpha_max)) {
    if (!genus_zero_predicted(family, path.params, wt.alpha, wt.beta, wt.n)) continue;
    out.push_back(GenusZeroSolution{family, path.params, wt.alpha, wt.beta, wt.n, assemble(path, wt)});
  }
  return out;
}

// ------------------------------------------------------------------ reducible

std::vector<ReducibleSurgery> reducible_surgeries(int w, int u) {
  const LinkParams lp = LinkParams::from_ws(w, u);
  const i64 base = static_cast<i64>(u) - w;
  const bool pos = lp.s_positive();
  const std::string d1_family = pos ? "c2" : "d2";
  std::vector<std::string> odd_pair = {d1_family};
  const std::array<const char*, 2> composites =
      pos ? std::array<const char*, 2>{"c25", "c27"} : std::array<const char*, 2>{"d25", "d27"};
  for (const char* f : composites) {
    if (in_catalog(lp, f)) odd_pair.emplace_back(f);
  }
  std::vector<ReducibleSurgery> out;
  out.push_back({base + 1, base - 1, odd_pair});
  out.push_back({base, base, {d1_family}});
  if (w == 1 && u == -2) out.push_back({-1, -6, {"d26"}});
  return out;
}

// --------------------------------------------------------- curves on a torus

i64 pairing(const CurveClass& x, const CurveClass& y) { return sub(mul(x.l, y.m), mul(x.m, y.l)); }

CurveClass operator+(const CurveClass& x, const CurveClass& y) { return {add(x.l, y.l), add(x.m, y.m)}; }

CurveClass operator*(i64 k, const CurveClass& x) { return {mul(k, x.l), mul(k, x.m)}; }

// ------------------------------------------------------------------- surgery

std::string to_string(SurgeryKind kind) {
  switch (kind) {
    case SurgeryKind::Reducible: return "Reducible";
    case SurgeryKind::TorusKnotInLensSpace: return "TorusKnotInLensSpace";
    case SurgeryKind::CableOfTorusKnot: return "CableOfTorusKnot";
    case SurgeryKind::TorusKnotInS3: return "TorusKnotInS3";
    case SurgeryKind::Trefoil: return "Trefoil";
    case SurgeryKind::CoreDegenerate: return "CoreDegenerate";
    case SurgeryKind::None: return "None";
  }
  throw InternalError("unknown surgery kind");
}

IntPair normalize_pair(IntPair p) {
  auto sign_fix = [](IntPair q) {
    if (q.a < 0 || (q.a == 0 && q.b < 0)) return IntPair{neg(q.a), neg(q.b)};
    return q;
  };
  const IntPair x = sign_fix(p);
  const IntPair y = sign_fix(IntPair{p.b, p.a});
  return std::tie(x.a, x.b) <= std::tie(y.a, y.b) ? x : y;
}

bool equivalent_pairs(IntPair x, IntPair y) { return normalize_pair(x) == normalize_pair(y); }

namespace {

const CurveClass kL{1, 0};
const CurveClass kM{0, 1};

// Records the cable data of `knot` relative to the filled core (meridian mu)
// and to the dual core (meridian L).
void place(SurgeryClassification& out, const CurveClass& knot, const CurveClass& mu, const std::string& name) {
  const i64 k_mu = pairing(knot, mu);
  const i64 k_m = pairing(knot, kM);
  const i64 k_l = pairing(knot, kL);
  out.cable_of_core = IntPair{k_mu, k_m};
  out.cable_of_dual_core = IntPair{k_l, neg(k_m)};
  out.checks.push_back({name + ".mu", k_mu});
  out.checks.push_back({name + ".M", k_m});
  out.checks.push_back({name + ".L", k_l});
  out.checks.push_back({"M.mu", pairing(kM, mu)});
}

// A curve on the Heegaard torus meeting either meridian at most once is
// isotopic to a core, so it is no genuine torus knot.
bool degenerate(const SurgeryClassification& out) {
  return checked::abs(out.cable_of_core->a) <= 1 || checked::abs(out.cable_of_dual_core->a) <= 1;
}

// Knot in a torus position after surgery: a torus knot in the lens space,
// and in S^3 the torus pair (sigma K.mu, -K.L) with sigma = L.mu.
void torus_knot(SurgeryClassification& out, const CurveClass& knot, const CurveClass& mu) {
  place(out, knot, mu, "knot");
  const i64 sigma = pairing(kL, mu);
  if (checked::abs(out.gamma) == 1) {
    out.kind = SurgeryKind::TorusKnotInS3;
    out.torus_pair = IntPair{mul(sigma, pairing(knot, mu)), neg(pairing(knot, kL))};
  } else {
    out.kind = SurgeryKind::TorusKnotInLensSpace;
  }
  if (degenerate(out)) {
    out.kind = SurgeryKind::CoreDegenerate;
  }
}

void mirror_payload(SurgeryClassification& out) {
  auto flip = [](std::optional<IntPair>& p) {
    if (p) p->b = neg(p->b);
  };
  flip(out.cable_of_core);
  flip(out.cable_of_dual_core);
  flip(out.torus_pair);
  if (out.cable_k) out.cable_k = neg(*out.cable_k);
  out.mirror = !out.mirror;
}

}  // namespace

SurgeryClassification surgery_knot(int w, int u, i64 gamma) {
  const LinkParams lp = LinkParams::from_ws(w, u);
  SurgeryClassification out;
  out.w = w;
  out.u = u;
  out.gamma = gamma;
  const i64 base = static_cast<i64>(u) - w;
  const i64 two_u1 = lp.s();
  const CurveClass mu{1, gamma};  // the new meridian L + gamma M

  if (gamma == base) {
    out.lens_p = gamma;
    const CurveClass knot{-2, neg(two_u1)};
    torus_knot(out, knot, mu);
    out.note = gamma == 0 ? "S^2 x S^1" : "";
    return out;
  }

  if (gamma == base + 1 || gamma == base - 1) {
    const i64 eps = gamma - base;
    out.lens_p = gamma;
    // Companion on the boundary torus: K = -L - ((2u+1) + eps)/2 M.
    const CurveClass companion{-1, neg(add(two_u1, eps) / 2)};

    if (w == 1 && eps == 1) {
      // The companion is a core; the knot slides onto the torus as 2K - mu.
      torus_knot(out, 2 * companion + CurveClass{-1, neg(gamma)}, mu);
      if (u == -2) {
        SurgeryClassification alt = out;
        alt.checks.clear();
        torus_knot(alt, 2 * companion + CurveClass{-1, 0}, mu);
        out.note = "the slide 2K - L gives the alternative position (" +
                   std::to_string(alt.cable_of_core->a) + ", " + std::to_string(alt.cable_of_core->b) +
                   ") of C";
      }
      return out;
    }
    if (u == -2 && eps == 1) {
      // The companion is the dual core; the knot slides onto the torus as 2K - L.
      torus_knot(out, 2 * companion + CurveClass{-1, 0}, mu);
      return out;
    }
    if (u == 1 && eps == -1) {
      // Mirror image of the (w, eps) = (1, 1) case for L([3, 2w+1]).
      out = surgery_knot(1, w, neg(gamma));
      out.w = w;
      out.u = u;
      out.gamma = gamma;
      out.lens_p = gamma;
      mirror_payload(out);
      out.note = "mirror of L([3, " + std::to_string(2 * w + 1) + "]) at slope " + std::to_string(-gamma);
      return out;
    }

    out.kind = SurgeryKind::CableOfTorusKnot;
    place(out, companion, mu, "companion");
    if (degenerate(out)) {
      out.kind = SurgeryKind::CoreDegenerate;
      return out;
    }
    if (checked::abs(gamma) == 1) {
      const i64 sigma = pairing(kL, mu);
      const IntPair tp{mul(sigma, pairing(companion, mu)), neg(pairing(companion, kL))};
      out.torus_pair = tp;
      // The cabling annulus has slope p q; a single -eps crossing adds -eps.
      out.cable_k = sub(mul(2, mul(tp.a, tp.b)), eps);
    } else {
      out.note = "k undetermined in a lens space";
    }
    return out;
  }

  if (w == 1 && u == -2 && gamma == -1) {
    out.kind = SurgeryKind::Trefoil;
    out.lens_p = gamma;
    out.note = "chirality not determined";
    return out;
  }

  out.kind = SurgeryKind::None;
  return out;
}

SurgeryClassification surgery_knot(int w, int u, const Rational& gamma) {
  if (gamma.is_integer()) return surgery_knot(w, u, gamma.num());
  LinkParams::from_ws(w, u);
  SurgeryClassification out;
  out.w = w;
  out.u = u;
  out.kind = SurgeryKind::None;
  out.note = "slope " + gamma.str() + " is not integral; the classification covers integral slopes only";
  return out;
}

// ---------------------------------------------------------- torus knots in S3

Rational normalize_link_fraction(const Rational& x) {
  if (x.is_infinite()) throw DomainError("link.fraction", "1/0 is not a link fraction");
  if (x.den() % 2 != 0) throw DomainError("link.two_component", "odd denominator gives a knot");
  // Shift the numerator into (-q/2, q/2].
  const i64 q = x.den();
  i64 p = x.num() % q;
  if (p <= -q / 2) p += q;
  if (p > q / 2) p -= q;
  const Rational y = Rational::make(p, q);
  if (checked::abs(y.num()) <= 1) throw DomainError("link.non_torus", "torus links are excluded");
  return y;
}

namespace {

// Both forms of [r, s] under L([r, s]) = L([-s, -r]).
std::vector<std::pair<i64, i64>> link_forms(const Rational& x) {
  std::vector<std::pair<i64, i64>> out;
  for (const auto& e : expansions_as(x, ExpansionPattern::OddOdd)) {
    out.emplace_back(e[0], e[1]);
    out.emplace_back(neg(e[1]), neg(e[0]));
  }
  return out;
}

}  // namespace

std::vector<TorusKnotSurgery> torus_knot_surgeries(const Rational& p) {
  const Rational x = normalize_link_fraction(p);
  if (expansions_as(x, ExpansionPattern::OddOdd).empty()) {
    throw DomainError("link.odd_odd", "fraction " + x.str() + " has no [odd, odd] expansion");
  }
  std::vector<TorusKnotSurgery> out;
  for (bool mirrored : {false, true}) {
    const Rational y = mirrored ? -x : x;
    for (auto [r, s] : link_forms(y)) {
      TorusKnotSurgery t;
      if (r == s + 2 && s >= 3) {
        t = {1, {r, s}, 1, {s, neg(r)}, false, "via-mirror"};
      } else if (r == 3 && s == 3) {
        t = {2, {r, s}, 1, {2, -5}, false, "direct"};
      } else if (r == -3 && s == 3) {
        t = {3, {r, s}, -1, {2, -3}, false, "unresolved"};
      } else {
        continue;
      }
      if (mirrored) {
        t.gamma = neg(t.gamma);
        t.torus_pair.b = neg(t.torus_pair.b);
        t.mirror = true;
      }
      const bool seen = std::any_of(out.begin(), out.end(), [&](const TorusKnotSurgery& o) {
        return o.family == t.family && o.mirror == t.mirror;
      });
      if (!seen) out.push_back(t);
    }
  }
  return out;
}

// ----------------------------------------------------------------- satellite

std::string to_string(SatelliteStatus status) {
  switch (status) {
    case SatelliteStatus::Satellite: return "satellite";
    case SatelliteStatus::Candidate: return "candidate";
    case SatelliteStatus::NotSatellite: return "not-satellite";
  }
  throw InternalError("unknown satellite status");
}

SatelliteResult satellite_candidates(const Rational& p, const Rational& gamma) {
  const Rational x = normalize_link_fraction(p);
  SatelliteResult result;
  for (bool mirrored : {false, true}) {
    const Rational y = mirrored ? -x : x;
    const Rational g = mirrored ? -gamma : gamma;
    for (auto [r, s] : link_forms(y)) {
      if (r < 3) continue;
      const i64 w = (r - 1) / 2;
      const i64 u = checked::floor_div(s - 1, 2);
      if (w < 2 || !(u >= 2 || u <= -3)) continue;
      const bool hit = g.is_integer() && (g.num() == u - w + 1 || g.num() == u - w - 1);
      if (hit) {
        return {SatelliteStatus::Satellite, {r, s}, mirrored,
                "cable of a torus knot in the (" + std::to_string(g.num()) + ", 1) lens space"};
      }
      if (result.expansion.empty()) {
        result.expansion = {r, s};
        result.mirror = mirrored;
        result.note = "slope is not -w+u+-1 = " + std::to_string(u - w + 1) + " or " + std::to_string(u - w - 1);
      }
    }
  }
  if (!result.expansion.empty()) return result;
  for (const auto& e : expansions_as(x, ExpansionPattern::EvenAnyEven)) {
    // [2w, v, 2u] with |w|, |v|, |u| >= 2.
    if (checked::abs(e[0]) >= 4 && checked::abs(e[1]) >= 2 && checked::abs(e[2]) >= 4) {
      return {SatelliteStatus::Candidate, e, false, "three-quotient family; satellite not decided"};
    }
  }
  result.note = "no expansion of the required shape";
  return result;
}

// ---------------------------------------------------------------- all-B path

AllBInvariants all_B_invariants(int m) {
  if (m < 1) throw DomainError("all_b.m", "m must be >= 1");
  AllBInvariants out;
  out.chi = -2 * static_cast<i64>(m) + 2;
  out.genus = m - 1;
  return out;
}

}  // namespace twobridge
