// SPDX-License-Identifier: MIT
//
// Printed contribution tables for the sides of each quadrilateral, used as
// fixtures by the unit tests and the acceptance binary.  Each row gives the
// (i1, i2) pair for the first quadrilateral of a fan and for every later one,
// together with the printed condition on -d/c.

#pragma once

#include <string>
#include <vector>

#include "twobridge/farey.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/paths.hpp"

namespace twobridge::fixtures {

// Entries are small integer combinations of alpha and beta.
enum class Cell { Zero, Beta, NegBeta, TwoBeta, NegTwoBeta, Diff, NegDiff };

inline i64 value(Cell c, i64 a, i64 b) {
  switch (c) {
    case Cell::Zero: return 0;
    case Cell::Beta: return b;
    case Cell::NegBeta: return -b;
    case Cell::TwoBeta: return 2 * b;
    case Cell::NegTwoBeta: return -2 * b;
    case Cell::Diff: return a - b;
    case Cell::NegDiff: return -(a - b);
  }
  return 0;
}

// Printed range for -d/c; Any means the column shows a dash.
enum class Range { Any, Infinite, Half, HalfToOne, OneToInfinite, ZeroToOne, ZeroToHalf, ZeroToHalfClosed };

inline bool in_range(Range range, const Rational& x) {
  const Rational half = Rational::make(1, 2);
  const Rational one = Rational::make(1, 1);
  const Rational zero = Rational::make(0, 1);
  switch (range) {
    case Range::Any: return true;
    case Range::Infinite: return x.is_infinite();
    case Range::Half: return x == half;
    case Range::HalfToOne: return !x.is_infinite() && compare(half, x) < 0 && compare(x, one) < 0;
    case Range::OneToInfinite: return !x.is_infinite() && compare(one, x) < 0;
    case Range::ZeroToOne: return !x.is_infinite() && compare(zero, x) < 0 && compare(x, one) < 0;
    case Range::ZeroToHalf: return !x.is_infinite() && compare(zero, x) < 0 && compare(x, half) < 0;
    case Range::ZeroToHalfClosed: return !x.is_infinite() && compare(zero, x) < 0 && compare(x, half) <= 0;
  }
  return false;
}

struct Column {
  Range range;
  Cell i1;
  Cell i2;
};

struct Row {
  EdgeLabel label;
  int side;
  Column first;  // first quadrilateral of the fan
  Column later;  // every later quadrilateral
};

struct Table {
  std::string name;
  Sequence sequence;
  bool s_positive;
  std::vector<Row> rows;
};

inline const std::vector<Table>& side_tables() {
  using C = Cell;
  using R = Range;
  using L = EdgeLabel;
  static const std::vector<Table> kTables = {
      {"first fan",
       Sequence::First,
       true,
       {
           {L::A, 0, {R::Infinite, C::Zero, C::Zero}, {R::Any, C::Beta, C::Beta}},
           {L::B, 0, {R::Infinite, C::Zero, C::Zero}, {R::Any, C::NegDiff, C::Zero}},
           {L::C, 0, {R::Infinite, C::Zero, C::TwoBeta}, {R::Any, C::Zero, C::TwoBeta}},
           {L::D, 0, {R::Infinite, C::Zero, C::Diff}, {R::Any, C::NegDiff, C::Diff}},
           {L::A, 1, {R::Infinite, C::Zero, C::Zero}, {R::Any, C::Beta, C::Beta}},
           {L::B, 1, {R::Infinite, C::Zero, C::Zero}, {R::Any, C::NegDiff, C::Zero}},
           {L::A, 2, {R::Half, C::NegBeta, C::NegBeta}, {R::HalfToOne, C::NegBeta, C::NegBeta}},
           {L::B, 2, {R::Half, C::Diff, C::Zero}, {R::HalfToOne, C::Diff, C::Zero}},
           {L::C, 2, {R::Half, C::NegTwoBeta, C::Zero}, {R::HalfToOne, C::NegTwoBeta, C::Zero}},
           {L::D, 2, {R::Half, C::Zero, C::Diff}, {R::HalfToOne, C::Diff, C::Diff}},
           {L::A, 3, {R::Any, C::Beta, C::Beta}, {R::Any, C::Beta, C::Beta}},
           {L::B, 3, {R::Any, C::NegDiff, C::Zero}, {R::Any, C::NegDiff, C::Zero}},
       }},
      {"second fan, s > 0",
       Sequence::Second,
       true,
       {
           {L::A, 0, {R::Any, C::Beta, C::Beta}, {R::OneToInfinite, C::NegBeta, C::NegBeta}},
           {L::B, 0, {R::Any, C::NegDiff, C::Zero}, {R::OneToInfinite, C::Diff, C::Zero}},
           {L::C, 0, {R::Any, C::Zero, C::TwoBeta}, {R::OneToInfinite, C::Zero, C::TwoBeta}},
           {L::D, 0, {R::Any, C::NegDiff, C::Diff}, {R::OneToInfinite, C::Diff, C::Diff}},
           {L::A, 1, {R::Any, C::Beta, C::Beta}, {R::ZeroToOne, C::NegBeta, C::NegBeta}},
           {L::B, 1, {R::Any, C::NegDiff, C::Zero}, {R::ZeroToOne, C::Diff, C::Zero}},
           {L::A, 2, {R::HalfToOne, C::NegBeta, C::NegBeta}, {R::ZeroToHalf, C::NegBeta, C::NegBeta}},
           {L::B, 2, {R::HalfToOne, C::Diff, C::Zero}, {R::ZeroToHalf, C::Diff, C::Zero}},
           {L::C, 2, {R::HalfToOne, C::NegTwoBeta, C::Zero}, {R::ZeroToHalf, C::NegTwoBeta, C::Zero}},
           {L::D, 2, {R::HalfToOne, C::Diff, C::Diff}, {R::ZeroToHalf, C::NegDiff, C::Diff}},
           {L::A, 3, {R::Any, C::Beta, C::Beta}, {R::Any, C::Beta, C::Beta}},
           {L::B, 3, {R::Any, C::NegDiff, C::Zero}, {R::Any, C::NegDiff, C::Zero}},
       }},
      {"second fan, s < 0",
       Sequence::Second,
       false,
       {
           {L::A, 0, {R::Any, C::Beta, C::Beta}, {R::HalfToOne, C::NegBeta, C::NegBeta}},
           {L::B, 0, {R::Any, C::NegDiff, C::Zero}, {R::HalfToOne, C::Diff, C::Zero}},
           {L::C, 0, {R::Any, C::Zero, C::TwoBeta}, {R::HalfToOne, C::NegTwoBeta, C::Zero}},
           {L::D, 0, {R::Any, C::NegDiff, C::Diff}, {R::HalfToOne, C::Diff, C::Diff}},
           {L::A, 1, {R::Any, C::Beta, C::Beta}, {R::Any, C::Beta, C::Beta}},
           {L::B, 1, {R::Any, C::NegDiff, C::Zero}, {R::Any, C::NegDiff, C::Zero}},
           {L::A, 2, {R::HalfToOne, C::NegBeta, C::NegBeta}, {R::Any, C::Beta, C::Beta}},
           {L::B, 2, {R::HalfToOne, C::Diff, C::Zero}, {R::Any, C::NegDiff, C::Zero}},
           {L::C, 2, {R::HalfToOne, C::NegTwoBeta, C::Zero}, {R::Any, C::Zero, C::TwoBeta}},
           {L::D, 2, {R::HalfToOne, C::Diff, C::Diff}, {R::Any, C::NegDiff, C::Diff}},
           {L::A, 3, {R::ZeroToHalfClosed, C::NegBeta, C::NegBeta}, {R::Any, C::Beta, C::Beta}},
           {L::B, 3, {R::ZeroToHalfClosed, C::Diff, C::Zero}, {R::Any, C::NegDiff, C::Zero}},
       }},
  };
  return kTables;
}

// Weight samples spanning 1 < t < infinity, t = infinity and t = 1 (the last
// only for labels other than C, whose t = 1 edge is the diagonal).
struct Sample {
  i64 alpha;
  i64 beta;
};
inline const std::vector<Sample>& samples() {
  static const std::vector<Sample> kSamples = {{7, 3}, {9, 1}, {6, 0}, {5, 5}, {11, 7}};
  return kSamples;
}

struct CellFailure {
  std::string where;
  std::string detail;
};

inline std::string side_name(const Row& row) {
  return std::string(1, to_char(row.label)) + "'" + std::to_string(row.side);
}

// Compares every printed cell against edge_contribution over w in [1, 6]
// and both signs of s, returning the cells that disagree (one entry per
// table, row and column).
inline std::vector<CellFailure> check_side_tables(std::size_t* evaluated = nullptr) {
  std::vector<CellFailure> failures;
  std::size_t count = 0;
  for (const auto& table : side_tables()) {
    for (const auto& row : table.rows) {
      for (bool first_column : {true, false}) {
        const Column& col = first_column ? row.first : row.later;
        std::string detail;
        for (int w = 1; w <= 6 && detail.empty(); ++w) {
          for (int u : {1, 2, 3, 6, -2, -3, -7}) {
            if ((u > 0) != table.s_positive && table.sequence == Sequence::Second) continue;
            const LinkParams lp = LinkParams::from_ws(w, u);
            const int last = table.sequence == Sequence::First ? w + 1 : lp.second_length();
            for (int idx = first_column ? 1 : 2; idx <= (first_column ? 1 : last); ++idx) {
              PathEdge edge;
              edge.label = row.label;
              edge.matrix = edge_matrix(lp, table.sequence, idx, row.side);
              edge.orientation_matched = true;
              edge.tag = PositionTag{table.sequence, idx, row.side};
              const Rational x = edge.matrix.neg_d_over_c();
              if (!in_range(col.range, x)) {
                detail = "-d/c = " + x.str() + " outside the printed range at w=" + std::to_string(w) +
                         " u=" + std::to_string(u) + " index " + std::to_string(idx);
              }
              for (const auto& smp : samples()) {
                if (row.label == EdgeLabel::C && smp.alpha == smp.beta) continue;
                if (row.label == EdgeLabel::B && (smp.alpha - smp.beta) % 2 != 0) continue;
                ++count;
                const auto got = edge_contribution(edge, Weights::make(smp.alpha, smp.beta));
                const i64 e1 = value(col.i1, smp.alpha, smp.beta);
                const i64 e2 = value(col.i2, smp.alpha, smp.beta);
                if (detail.empty() && (got.first != e1 || got.second != e2)) {
                  detail = "(" + std::to_string(got.first) + ", " + std::to_string(got.second) +
                           ") computed, (" + std::to_string(e1) + ", " + std::to_string(e2) +
                           ") printed at alpha=" + std::to_string(smp.alpha) + " beta=" + std::to_string(smp.beta) +
                           " w=" + std::to_string(w) + " u=" + std::to_string(u);
                }
              }
            }
          }
        }
        if (!detail.empty()) {
          failures.push_back({table.name + " " + side_name(row) + (first_column ? " first" : " later"), detail});
        }
      }
    }
  }
  if (evaluated) *evaluated = count;
  return failures;
}

// The t = 1 diagonal from 1/r to 0/1 contributes (2(beta - n), 2n).
inline std::vector<CellFailure> check_diagonal_table(std::size_t* evaluated = nullptr) {
  std::vector<CellFailure> failures;
  std::size_t count = 0;
  for (int w = 1; w <= 6; ++w) {
    for (int u : {1, 3, -2, -4}) {
      const LinkParams lp = LinkParams::from_ws(w, u);
      PathEdge edge;
      edge.label = EdgeLabel::C;
      edge.matrix = GMatrix::make(1, 0, lp.r() - 1, 1);
      edge.orientation_matched = true;
      edge.t1_diagonal = true;
      for (i64 beta = 1; beta <= 6; ++beta) {
        for (i64 n = 0; n <= beta; ++n) {
          ++count;
          const auto got = edge_contribution(edge, Weights::make(beta, beta, n));
          if (got.first != 2 * (beta - n) || got.second != 2 * n) {
            failures.push_back({"diagonal C'", "beta=" + std::to_string(beta) + " n=" + std::to_string(n)});
          }
        }
      }
    }
  }
  if (evaluated) *evaluated = count;
  return failures;
}

}  // namespace twobridge::fixtures
