// SPDX-License-Identifier: MIT
//
// Per-edge contribution engine, Euler characteristic, slope assembly with the
// preferred-longitude correction, boundary-circle counts, generalized genus,
// and the tabulated closed forms for the surface families.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/farey.hpp"
#include "twobridge/paths.hpp"

namespace twobridge {

// Sheet counts of a carried surface.  alpha sheets meet the first component,
// beta the second; n is the branching number at a branching sector.
struct Weights {
  i64 alpha = 1;
  i64 beta = 0;
  // Branching number used by every branching edge without an override.
  i64 n = 0;
  // Per-edge overrides keyed by the edge index within the path.
  std::map<std::size_t, i64> n_map;

  // Checks alpha >= 1, 0 <= beta <= alpha.  Throws DomainError.
  static Weights make(i64 alpha, i64 beta, i64 n = 0);

  i64 branching(std::size_t edge_index) const;

  friend bool operator==(const Weights&, const Weights&) = default;
};

// Checks the weights against every edge and the regime of the path:
// D1 needs alpha = beta, Dinf needs beta = 0, a B-edge needs
// alpha = beta (mod 2), a Dt C-edge needs alpha > beta, and the t = 1
// diagonal needs 0 <= n <= beta.  Throws DomainError naming the invariant.
void validate_weights(const EdgePath& path, const Weights& weights);

// Integer pair (longitudinal, meridional) on a boundary torus.
struct SlopePair {
  i64 l = 0;
  i64 m = 0;

  friend bool operator==(const SlopePair&, const SlopePair&) = default;
};

struct SurfaceData {
  std::string family;
  LinkParams params;
  Weights weights;
  i64 i1 = 0;  // pairing with the construction longitude of each component
  i64 i2 = 0;
  SlopePair raw_slope1;  // (alpha, i1)
  SlopePair raw_slope2;  // (beta, i2)
  SlopePair slope1;      // meridional entry corrected to the preferred longitude
  SlopePair slope2;
  // m/l in lowest terms (1/0 for a meridional pair); absent for (0, 0).
  std::optional<Rational> reduced1;
  std::optional<Rational> reduced2;
  i64 chi = 0;
  i64 b1 = 0;  // boundary circles on each component
  i64 b2 = 0;
  i64 two_gprime = 0;  // twice the generalized genus
  // beta = 0: the second component only meets meridian discs, so the data
  // does not come from a non-trivial surgery on it.
  bool meridional = false;

  double gprime() const { return static_cast<double>(two_gprime) / 2.0; }
};

// Field-by-field equality of the computed invariants (slopes, chi, b1, b2,
// g').  The weights, family and parameters are not compared.
bool same_invariants(const SurfaceData& x, const SurfaceData& y);

// Contribution (i1, i2) of one edge, signs flipped for reversed edges.
std::pair<i64, i64> edge_contribution(const PathEdge& edge, const Weights& weights,
                                      std::size_t edge_index = 0);

// Euler characteristic of the piece over one edge.
i64 edge_euler(EdgeLabel label, const Weights& weights);

// The constant l with preferred longitude of slope (1, l) on both components.
i64 longitude_correction(i64 r, i64 s);

// GCM(x, y): gcd with GCM(x, 0) = |x|.
i64 gcm(i64 x, i64 y);

SurfaceData assemble(const EdgePath& path, const Weights& weights);

// Families with a closed-form row in the summary tables.
const std::vector<std::string>& closed_form_families();
bool has_closed_form(const std::string& family);

// Evaluates the printed summary-table formulas verbatim.  Throws DomainError
// for a family outside the tables.
SurfaceData closed_form(const std::string& family, int w, int u, i64 alpha, i64 beta, i64 n = 0);

// Exchanges the roles of the two components.
SurfaceData swap_components(const SurfaceData& data);

// Reflection of the data in the mirror image: negates every meridional entry
// and the pairings, keeping chi and the circle counts.
SurfaceData mirror_data(const SurfaceData& data);

// Every valid weight vector for the path with alpha <= alpha_max and
// beta >= beta_min, in increasing (alpha, beta, n) order.  For Dinf paths
// the only beta is 0.
std::vector<Weights> weight_grid(const EdgePath& path, i64 alpha_max, i64 beta_min = 1);

}  // namespace twobridge
