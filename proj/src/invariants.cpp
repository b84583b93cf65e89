// SPDX-License-Identifier: MIT

#include "twobridge/invariants.hpp"

#include <algorithm>

#include "twobridge/checked.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

Weights Weights::make(i64 alpha, i64 beta, i64 n) {
  if (alpha < 1) throw DomainError("weights.alpha_positive", "alpha must be >= 1");
  if (beta < 0) throw DomainError("weights.beta_nonnegative", "beta must be >= 0");
  if (alpha < beta) throw DomainError("weights.alpha_ge_beta", "alpha must be >= beta");
  if (n < 0) throw DomainError("weights.n_range", "n must be >= 0");
  Weights w;
  w.alpha = alpha;
  w.beta = beta;
  w.n = n;
  return w;
}

i64 Weights::branching(std::size_t edge_index) const {
  auto it = n_map.find(edge_index);
  return it == n_map.end() ? n : it->second;
}

void validate_weights(const EdgePath& path, const Weights& weights) {
  const i64 a = weights.alpha;
  const i64 b = weights.beta;
  if (a < 1) throw DomainError("weights.alpha_positive", "alpha must be >= 1");
  if (b < 0) throw DomainError("weights.beta_nonnegative", "beta must be >= 0");
  if (a < b) throw DomainError("weights.alpha_ge_beta", "alpha must be >= beta");
  if (path.regime == Regime::D1 && a != b) {
    throw DomainError("weights.regime_d1", "paths in D1 need alpha = beta");
  }
  if (path.regime == Regime::Dinf && b != 0) {
    throw DomainError("weights.regime_dinf", "paths in Dinf need beta = 0");
  }
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const PathEdge& e = path.edges[i];
    if (e.label == EdgeLabel::B && (a - b) % 2 != 0) {
      throw DomainError("weights.b_parity", "a B-edge needs alpha = beta (mod 2)");
    }
    if (e.label == EdgeLabel::C && !e.t1_diagonal && a == b) {
      throw DomainError("weights.c_edge_alpha_gt_beta", "a C-edge away from t = 1 needs alpha > beta");
    }
    if (e.t1_diagonal) {
      const i64 n = weights.branching(i);
      if (n < 0 || n > b) throw DomainError("weights.n_range", "branching number must lie in [0, beta]");
    }
  }
}

bool same_invariants(const SurfaceData& x, const SurfaceData& y) {
  return x.slope1 == y.slope1 && x.slope2 == y.slope2 && x.chi == y.chi && x.b1 == y.b1 &&
         x.b2 == y.b2 && x.two_gprime == y.two_gprime;
}

namespace {

const Rational kZero = Rational::make(0, 1);
const Rational kOne = Rational::make(1, 1);
const Rational kHalf = Rational::make(1, 2);

bool is(const Rational& x, const Rational& v) { return compare(x, v) == 0; }
bool below(const Rational& x, const Rational& v) { return compare(x, v) < 0; }
bool above(const Rational& x, const Rational& v) { return compare(x, v) > 0; }

// Contribution rows keyed by the label and the pole x = -d/c of the matrix.
std::pair<i64, i64> table_row(EdgeLabel label, const Rational& x, i64 a, i64 b) {
  const bool inf = x.is_infinite();
  const i64 amb = sub(a, b);
  switch (label) {
    case EdgeLabel::A:
      if (inf || is(x, kZero)) return {0, 0};
      return below(x, kZero) ? std::pair<i64, i64>{b, b} : std::pair<i64, i64>{neg(b), neg(b)};
    case EdgeLabel::B:
      if (inf || is(x, kZero)) return {0, 0};
      return below(x, kZero) ? std::pair<i64, i64>{neg(amb), 0} : std::pair<i64, i64>{amb, 0};
    case EdgeLabel::C:
      if (!inf && above(x, kZero) && below(x, kOne)) return {mul(-2, b), 0};
      if (!inf && (is(x, kZero) || is(x, kOne))) return {neg(b), b};
      return {0, mul(2, b)};
    case EdgeLabel::D:
      if (inf || is(x, kHalf)) return {0, amb};
      if (above(x, kHalf)) return {amb, amb};
      return {neg(amb), amb};
  }
  throw InternalError("no contribution row matches");
}

// The t = 1 diagonal, which depends on the branching number n.
std::pair<i64, i64> diagonal_row(const Rational& x, i64 b, i64 n) {
  const bool inf = x.is_infinite();
  if (!inf && (is(x, kZero) || is(x, kOne))) {
    const i64 v = sub(b, mul(2, n));
    return {v, neg(v)};
  }
  if (!inf && above(x, kZero) && below(x, kOne)) return {mul(-2, n), mul(-2, sub(b, n))};
  return {mul(2, sub(b, n)), mul(2, n)};
}

std::optional<Rational> reduce(const SlopePair& p) {
  if (p.l == 0 && p.m == 0) return std::nullopt;
  return Rational::make(p.m, p.l);
}

// Fills the derived fields from the raw pairs and the longitude constant.
void finish(SurfaceData& d, i64 ell) {
  d.raw_slope1 = {d.weights.alpha, d.i1};
  d.raw_slope2 = {d.weights.beta, d.i2};
  d.slope1 = {d.weights.alpha, sub(d.i1, mul(ell, d.weights.alpha))};
  d.slope2 = {d.weights.beta, sub(d.i2, mul(ell, d.weights.beta))};
  d.reduced1 = reduce(d.slope1);
  d.reduced2 = reduce(d.slope2);
  d.meridional = d.weights.beta == 0;
}

}  // namespace

std::pair<i64, i64> edge_contribution(const PathEdge& edge, const Weights& weights, std::size_t edge_index) {
  const Rational x = edge.matrix.neg_d_over_c();
  std::pair<i64, i64> c = edge.t1_diagonal
                              ? diagonal_row(x, weights.beta, weights.branching(edge_index))
                              : table_row(edge.label, x, weights.alpha, weights.beta);
  if (!edge.orientation_matched) c = {neg(c.first), neg(c.second)};
  return c;
}

i64 edge_euler(EdgeLabel label, const Weights& weights) {
  const i64 a = weights.alpha;
  const i64 b = weights.beta;
  switch (label) {
    case EdgeLabel::A:
    case EdgeLabel::C:
      return a;
    case EdgeLabel::B:
      if ((a - b) % 2 != 0) throw DomainError("weights.b_parity", "a B-edge needs alpha = beta (mod 2)");
      return add(mul(2, b), sub(a, b) / 2);
    case EdgeLabel::D:
      return mul(2, b);
  }
  throw InternalError("unknown edge label");
}

i64 longitude_correction(i64 r, i64 s) {
  const LinkParams lp = LinkParams::from_rs(r, s);
  const i64 half = sub(r, s) / 2;
  return lp.s_positive() ? half : sub(half, 2);
}

i64 gcm(i64 x, i64 y) { return checked::gcd(x, y); }

SurfaceData assemble(const EdgePath& path, const Weights& weights) {
  validate_weights(path, weights);
  SurfaceData d;
  d.family = path.name;
  d.params = path.params;
  d.weights = weights;
  i64 chi = 0;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const auto [c1, c2] = edge_contribution(path.edges[i], weights, i);
    d.i1 = add(d.i1, c1);
    d.i2 = add(d.i2, c2);
    chi = add(chi, edge_euler(path.edges[i].label, weights));
  }
  const i64 joins = static_cast<i64>(path.edges.size()) - 1;
  d.chi = sub(chi, mul(joins, add(weights.alpha, weights.beta)));
  finish(d, longitude_correction(path.params.r(), path.params.s()));
  d.b1 = gcm(d.slope1.l, d.slope1.m);
  d.b2 = gcm(d.slope2.l, d.slope2.m);
  d.two_gprime = sub(sub(sub(2, d.chi), d.b1), d.b2);
  return d;
}

const std::vector<std::string>& closed_form_families() {
  static const std::vector<std::string> kFamilies = {"c2",  "c14", "c16", "c24", "c25", "d2",  "d06",
                                                      "d14", "d16", "d24", "d25", "d26", "d27"};
  return kFamilies;
}

bool has_closed_form(const std::string& family) {
  const auto& f = closed_form_families();
  return std::find(f.begin(), f.end(), family) != f.end();
}

namespace {

struct Row {
  SlopePair s1;
  SlopePair s2;
  i64 chi;
  i64 b1;
  i64 b2;
  i64 genus_term;  // 2g' = genus_term + 2 - b1 - b2
};

// The tables, transcribed as printed.  In the rows below W = w, U = u, and
// the meridional entries are already corrected to the preferred longitude.
Row printed_row(const std::string& f, i64 w, i64 u, i64 a, i64 b, i64 n) {
  const i64 wmu = sub(w, u);
  const i64 wpu1 = add(add(w, u), 1);
  const i64 wmu1 = sub(wmu, 1);
  const i64 wmu2 = sub(wmu, 2);
  const i64 apb = add(a, b);
  const i64 amb = sub(a, b);
  if (f == "c2" || f == "d2") {
    return {{b, add(mul(neg(add(wmu, 1)), b), mul(2, n))},
            {b, sub(mul(neg(wmu1), b), mul(2, n))},
            neg(b),
            gcm(b, mul(2, n)),
            gcm(b, mul(2, n)),
            b};
  }
  if (f == "c14" || f == "d14") {
    return {{a, add(mul(add(u, 1), a), mul(w, b))},
            {b, add(mul(w, a), mul(add(u, 1), b))},
            neg(mul(w, apb)),
            gcm(a, mul(w, b)),
            gcm(b, mul(w, a)),
            mul(w, apb)};
  }
  if (f == "c16") {
    return {{a, mul(wpu1, b)},
            {b, mul(wpu1, a)},
            sub(mul(neg(add(w, u)), amb), mul(mul(2, w), b)),
            gcm(a, mul(wpu1, b)),
            gcm(b, mul(wpu1, a)),
            add(mul(add(w, u), amb), mul(mul(2, w), b))};
  }
  if (f == "c24" || f == "d24") {
    return {{a, sub(mul(add(u, 1), a), mul(w, b))},
            {b, add(mul(neg(w), a), mul(sub(u, 1), b))},
            sub(mul(neg(w), amb), b),
            gcm(a, mul(w, b)),
            gcm(b, mul(w, a)),
            add(mul(w, amb), b)};
  }
  if (f == "c25" || f == "d25") {
    return {{a, mul(neg(wmu1), a)}, {b, mul(neg(add(wmu, 1)), b)}, neg(a), a, b, a};
  }
  if (f == "d06") {
    return {{a, mul(wpu1, b)},
            {b, mul(wmu1, a)},
            mul(neg(wmu2), apb),
            gcm(a, mul(wpu1, b)),
            gcm(b, mul(wmu1, a)),
            mul(wmu2, apb)};
  }
  if (f == "d16") {
    return {{a, mul(wpu1, b)},
            {b, mul(wpu1, a)},
            sub(mul(neg(wmu2), amb), mul(mul(2, w), b)),
            gcm(a, mul(wpu1, b)),
            gcm(b, mul(wpu1, a)),
            add(mul(wmu2, amb), mul(mul(2, w), b))};
  }
  if (f == "d26") {
    return {{a, mul(neg(wmu1), b)},
            {b, sub(mul(neg(wmu1), a), mul(2, b))},
            add(mul(neg(wmu2), amb), b),
            gcm(a, mul(wmu1, b)),
            gcm(b, mul(wmu1, a)),
            add(mul(wmu2, amb), b)};
  }
  if (f == "d27") {
    return {{a, mul(neg(add(wmu, 1)), a)}, {b, mul(neg(wmu1), b)}, neg(a), a, b, a};
  }
  throw DomainError("closed_form.family", "no tabulated row for '" + f + "'");
}

}  // namespace

SurfaceData closed_form(const std::string& family, int w, int u, i64 alpha, i64 beta, i64 n) {
  if (!has_closed_form(family)) {
    throw DomainError("closed_form.family", "no tabulated row for '" + family + "'");
  }
  const EdgePath path = path_edges_unchecked(family, w, u);
  Weights weights = Weights::make(alpha, beta, n);
  validate_weights(path, weights);
  const Row row = printed_row(family, w, u, alpha, beta, n);
  const i64 ell = longitude_correction(path.params.r(), path.params.s());
  SurfaceData d;
  d.family = family;
  d.params = path.params;
  d.weights = weights;
  d.slope1 = row.s1;
  d.slope2 = row.s2;
  d.raw_slope1 = {row.s1.l, add(row.s1.m, mul(ell, alpha))};
  d.raw_slope2 = {row.s2.l, add(row.s2.m, mul(ell, beta))};
  d.i1 = d.raw_slope1.m;
  d.i2 = d.raw_slope2.m;
  d.reduced1 = reduce(d.slope1);
  d.reduced2 = reduce(d.slope2);
  d.meridional = beta == 0;
  d.chi = row.chi;
  d.b1 = row.b1;
  d.b2 = row.b2;
  d.two_gprime = sub(add(row.genus_term, 2), add(row.b1, row.b2));
  return d;
}

SurfaceData swap_components(const SurfaceData& data) {
  SurfaceData d = data;
  std::swap(d.weights.alpha, d.weights.beta);
  std::swap(d.i1, d.i2);
  std::swap(d.raw_slope1, d.raw_slope2);
  std::swap(d.slope1, d.slope2);
  std::swap(d.reduced1, d.reduced2);
  std::swap(d.b1, d.b2);
  d.meridional = d.weights.beta == 0;
  return d;
}

SurfaceData mirror_data(const SurfaceData& data) {
  SurfaceData d = data;
  d.i1 = neg(d.i1);
  d.i2 = neg(d.i2);
  d.raw_slope1.m = neg(d.raw_slope1.m);
  d.raw_slope2.m = neg(d.raw_slope2.m);
  d.slope1.m = neg(d.slope1.m);
  d.slope2.m = neg(d.slope2.m);
  d.reduced1 = reduce(d.slope1);
  d.reduced2 = reduce(d.slope2);
  return d;
}

std::vector<Weights> weight_grid(const EdgePath& path, i64 alpha_max, i64 beta_min) {
  bool has_b = false;
  bool has_c = false;
  bool has_diagonal = false;
  for (const auto& e : path.edges) {
    has_b = has_b || e.label == EdgeLabel::B;
    has_c = has_c || (e.label == EdgeLabel::C && !e.t1_diagonal);
    has_diagonal = has_diagonal || e.t1_diagonal;
  }
  std::vector<Weights> out;
  for (i64 a = 1; a <= alpha_max; ++a) {
    i64 lo = std::max<i64>(beta_min, 0);
    i64 hi = a;
    if (path.regime == Regime::D1) lo = hi = a;
    if (path.regime == Regime::Dinf) lo = hi = 0;
    if (path.regime == Regime::Dt && has_c) hi = a - 1;
    for (i64 b = lo; b <= hi; ++b) {
      if (has_b && (a - b) % 2 != 0) continue;
      const i64 n_hi = has_diagonal ? b : 0;
      for (i64 n = 0; n <= n_hi; ++n) out.push_back(Weights::make(a, b, n));
    }
  }
  return out;
}

}  // namespace twobridge
