// SPDX-License-Identifier: MIT
//
// Genus-zero solution sets, reducible surgeries, torus and cable knots
// obtained by integral surgery on one component, and satellite recognition.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twobridge/farey.hpp"
#include "twobridge/invariants.hpp"

namespace twobridge {

// ---------------------------------------------------------------- genus zero

struct GenusZeroSolution {
  std::string family;
  LinkParams params;
  i64 alpha = 0;
  i64 beta = 0;
  i64 n = 0;
  SurfaceData witness;  // assembled data; two_gprime == 0
};

// Closed-form membership: does the family carry a generalized-genus-zero
// surface at these weights?  Encodes the case analysis for every family and
// does not evaluate the surface itself.
bool genus_zero_predicted(const std::string& family, const LinkParams& lp, i64 alpha, i64 beta, i64 n);

// Human-readable solution set for the family at (w, u), e.g. "beta = 2".
std::string genus_zero_rule(const std::string& family, const LinkParams& lp);

// All predicted solutions with alpha <= alpha_max, each with its assembled
// witness.  The family must be minimal for (w, u).
std::vector<GenusZeroSolution> genus_zero_solutions(const std::string& family, int w, int u, i64 alpha_max);

// ------------------------------------------------------------------ reducible

struct ReducibleSurgery {
  i64 gamma1 = 0;
  i64 gamma2 = 0;
  // The families whose genus-zero surfaces realize the pair.
  std::vector<std::string> families;

  friend bool operator==(const ReducibleSurgery& x, const ReducibleSurgery& y) {
    return x.gamma1 == y.gamma1 && x.gamma2 == y.gamma2;
  }
};

// Slope pairs (gamma1, gamma2) for which surgery on both components is
// reducible.  The mirror link has the negated pairs.
std::vector<ReducibleSurgery> reducible_surgeries(int w, int u);

// --------------------------------------------------------- curves on a torus

// a L + b M on the boundary torus of the second component; L . M = +1.
struct CurveClass {
  i64 l = 0;
  i64 m = 0;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

i64 pairing(const CurveClass& x, const CurveClass& y);
CurveClass operator+(const CurveClass& x, const CurveClass& y);
CurveClass operator*(i64 k, const CurveClass& x);

// ------------------------------------------------------------------- surgery

enum class SurgeryKind {
  Reducible,
  TorusKnotInLensSpace,
  CableOfTorusKnot,
  TorusKnotInS3,
  Trefoil,
  CoreDegenerate,
  None,
};

std::string to_string(SurgeryKind kind);

struct IntPair {
  i64 a = 0;
  i64 b = 0;

  friend bool operator==(const IntPair&, const IntPair&) = default;
};

// Representative of (a, b) under (a, b) ~ (b, a) ~ (-a, -b): a > 0 and, when
// both orders qualify, the lexicographically smaller one.
IntPair normalize_pair(IntPair p);
bool equivalent_pairs(IntPair x, IntPair y);

// A named intersection number used to derive a payload.
struct PairingCheck {
  std::string name;
  i64 value = 0;
};

struct SurgeryClassification {
  SurgeryKind kind = SurgeryKind::None;
  int w = 1;
  int u = 1;
  i64 gamma = 0;
  // The filled manifold is the (lens_p, 1) lens space: S^3 when |lens_p| = 1
  // and S^2 x S^1 when lens_p = 0.
  std::optional<i64> lens_p;
  // Position of the knot (torus-knot kinds) or of the companion (cable kind)
  // on the boundary torus: cable data relative to the filled core C and to
  // the dual core C'.
  std::optional<IntPair> cable_of_core;
  std::optional<IntPair> cable_of_dual_core;
  // S^3 torus knot type of the knot (torus kinds) or the companion (cable).
  std::optional<IntPair> torus_pair;
  // The k of a (2, k)-cable in S^3; absent when undetermined.
  std::optional<i64> cable_k;
  // The payload describes the mirror image of a computed partner.
  bool mirror = false;
  std::vector<PairingCheck> checks;
  std::string note;

  bool has_payload() const { return kind != SurgeryKind::None; }
};

// Integral gamma-surgery on the second component of L([2w+1, 2u+1]).
SurgeryClassification surgery_knot(int w, int u, i64 gamma);

// Same, for a rational slope; non-integral slopes give None with a note.
SurgeryClassification surgery_knot(int w, int u, const Rational& gamma);

// ---------------------------------------------------------- torus knots in S3

struct TorusKnotSurgery {
  int family = 0;                // 1: [p+2, p], 2: [3, 3], 3: [-3, 3]
  std::vector<i64> expansion;    // the matched [r, s]
  i64 gamma = 0;
  IntPair torus_pair;            // as stated, mirrored when `mirror`
  bool mirror = false;           // the input is the mirror of the family
  // How the statement relates to surgery_knot: "direct", "via-mirror" or
  // "unresolved".
  std::string consistency;
};

// Normalizes x into (-1/2, 1/2] by an integer shift.  Throws DomainError
// for knots (odd denominator) and torus links (numerator +-1 or 0).
Rational normalize_link_fraction(const Rational& x);

std::vector<TorusKnotSurgery> torus_knot_surgeries(const Rational& p);

// ----------------------------------------------------------------- satellite

enum class SatelliteStatus { Satellite, Candidate, NotSatellite };

std::string to_string(SatelliteStatus status);

struct SatelliteResult {
  SatelliteStatus status = SatelliteStatus::NotSatellite;
  std::vector<i64> expansion;  // matched partial quotients, if any
  bool mirror = false;         // matched after passing to the mirror image
  std::string note;
};

SatelliteResult satellite_candidates(const Rational& p, const Rational& gamma);

// ---------------------------------------------------------------- all-B path

struct AllBInvariants {
  i64 alpha = 2;
  i64 beta = 0;
  i64 chi = 0;
  i64 genus = 0;
  i64 boundary_circles = 2;  // all on the first component
  bool integral_slope = true;
};

AllBInvariants all_B_invariants(int m);

}  // namespace twobridge
