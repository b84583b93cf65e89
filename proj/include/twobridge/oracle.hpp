// SPDX-License-Identifier: MIT
//
// Brute-force verification harness.  Every surface is evaluated through
// per-edge assembly only; the closed forms and the genus-zero case analysis
// are the things under test, never the means of checking.

#pragma once

#include <string>
#include <vector>

#include "twobridge/farey.hpp"
#include "twobridge/invariants.hpp"

namespace twobridge {

struct SweepSpec {
  std::vector<int> w_values;
  std::vector<int> u_values;
  i64 alpha_max = 24;
  // Upper bound on alpha for the symmetry relations.
  i64 symmetry_alpha_max = 12;
  // Empty means every family.
  std::vector<std::string> families;

  // w in 1..6, u in 1..6 and -7..-2.
  static SweepSpec defaults(i64 alpha_max);

  bool wants(const std::string& family) const;
};

// Throws DomainError for alpha_max < 2, w < 1 or u in {-1, 0}.
void validate_spec(const SweepSpec& spec);

struct WeightPoint {
  std::string family;
  int w = 0;
  int u = 0;
  i64 alpha = 0;
  i64 beta = 0;
  i64 n = 0;

  std::string str() const;
  friend auto operator<=>(const WeightPoint&, const WeightPoint&) = default;
};

struct GenusZeroReport {
  std::vector<WeightPoint> brute;      // g' = 0 found by assembly
  std::vector<WeightPoint> predicted;  // from the case analysis
  std::vector<WeightPoint> missing;    // predicted, not found
  std::vector<WeightPoint> extra;      // found, not predicted
  // Witnesses violating chi >= -(alpha + beta) + 2.
  std::vector<WeightPoint> lemma_violations;
  std::size_t evaluated = 0;

  bool ok() const { return missing.empty() && extra.empty() && lemma_violations.empty(); }
};

// Sweeps every minimal non-Dinf family with beta >= 1.
GenusZeroReport verify_genus_zero(const SweepSpec& spec);

// A known misprint in the tables, with the corrected expression.
struct Erratum {
  std::string name;
  std::string family;
  std::string field;
  std::string printed;
  std::string corrected;
};

const std::vector<Erratum>& known_errata();

struct ClosedFormMismatch {
  WeightPoint at;
  std::string field;  // first differing field
  std::string assembled;
  std::string closed;
  std::string erratum;  // empty when unexplained
};

struct ClosedFormGroup {
  std::string family;
  std::string field;
  std::string erratum;
  std::size_t count = 0;
  std::vector<ClosedFormMismatch> examples;  // at most a few
};

struct ClosedFormReport {
  std::size_t compared = 0;
  std::vector<ClosedFormGroup> groups;
  std::size_t unexplained = 0;
  // Erratum cells where assembly disagrees with the corrected expression.
  std::size_t correction_failures = 0;

  bool ok() const { return unexplained == 0 && correction_failures == 0; }
};

ClosedFormReport verify_closed_forms(const SweepSpec& spec);

struct RelationResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SymmetryReport {
  std::vector<RelationResult> relations;

  bool ok() const;
};

SymmetryReport verify_symmetries(const SweepSpec& spec);

// Field-by-field comparison order used in the closed-form report.
std::string first_difference(const SurfaceData& x, const SurfaceData& y, std::string* lhs, std::string* rhs);

}  // namespace twobridge
