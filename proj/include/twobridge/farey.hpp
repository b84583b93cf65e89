// SPDX-License-Identifier: MIT
//
// Exact rationals on the extended line, the level-2 congruence subgroup G of
// PSL2(Z) acting on them, continued fractions, and the chain of ideal
// quadrilaterals that connects 1/0 to the target fraction [r,s].

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twobridge {

using i64 = std::int64_t;

// Reduced fraction num/den with den >= 0.  The single point at infinity is
// stored as 1/0; 0 is stored as 0/1.
class Rational {
 public:
  constexpr Rational() = default;

  // Reduces p/q.  Throws DomainError for 0/0.
  static Rational make(i64 p, i64 q);
  static Rational integer(i64 n) { return make(n, 1); }
  static Rational infinity() { return make(1, 0); }

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // "p/q" with the infinite point rendered as "1/0".
  std::string str() const;
  // Parses "p/q", "p" or "1/0".
  static Rational parse(const std::string& text);

  // Structural equality; both operands are always in reduced form.
  friend bool operator==(const Rational&, const Rational&) = default;
  // Lexicographic order on (num, den); used only for canonical containers.
  friend auto operator<=>(const Rational&, const Rational&) = default;

 private:
  constexpr Rational(i64 p, i64 q) : num_(p), den_(q) {}
  i64 num_ = 0;
  i64 den_ = 1;
};

// Numeric comparison on R u {inf}; the infinite point compares above every
// finite value.  Returns -1, 0 or +1.
int compare(const Rational& a, const Rational& b);

// Field operations on finite values.  Division by zero and any use of the
// infinite point throw DomainError.
Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator-(const Rational& a);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);

// Farey determinant p*s - q*r of the two column vectors.
i64 farey_det(const Rational& x, const Rational& y);

// Element (a b; c d) of G: determinant +1 and c even.
class GMatrix {
 public:
  // Validates both invariants; throws DomainError otherwise.
  static GMatrix make(i64 a, i64 b, i64 c, i64 d);
  static GMatrix identity() { return GMatrix(1, 0, 0, 1); }

  i64 a() const { return a_; }
  i64 b() const { return b_; }
  i64 c() const { return c_; }
  i64 d() const { return d_; }

  // The pole -d/c of the Moebius map; 1/0 when c = 0.
  Rational neg_d_over_c() const;

  friend bool operator==(const GMatrix&, const GMatrix&) = default;

 private:
  GMatrix(i64 a, i64 b, i64 c, i64 d) : a_(a), b_(b), c_(c), d_(d) {}
  i64 a_, b_, c_, d_;
};

GMatrix operator*(const GMatrix& x, const GMatrix& y);

// Image (a p + b q) / (c p + d q) of the vertex p/q.
Rational apply(const GMatrix& m, const Rational& v);

// 1/(a1 + 1/(a2 + ...)) for non-zero partial quotients.
Rational from_partial_quotients(const std::vector<i64>& quotients);

// Shapes accepted by expand_as.
enum class ExpansionPattern {
  OddOdd,       // [r, s] with r and s odd
  EvenAnyEven,  // [a, b, c] with a and c even, b any non-zero integer
};

// Inverse of from_partial_quotients restricted to a pattern.  Returns the
// first expansion in a fixed deterministic order, or nullopt.
std::optional<std::vector<i64>> expand_as(const Rational& p, ExpansionPattern pattern);

// Every expansion of p with the given pattern (there are at most a handful).
std::vector<std::vector<i64>> expansions_as(const Rational& p, ExpansionPattern pattern);

// Which of the two fans of quadrilaterals a quadrilateral belongs to.
enum class Sequence { First, Second };

std::string to_string(Sequence seq);

// Validated link parameters.  r = 2w + 1 with w >= 1 and s = 2u + 1 with
// u >= 1 or u <= -2, i.e. r >= 3 odd and |s| >= 3 odd.
struct LinkParams {
  int w = 1;
  int u = 1;

  static LinkParams from_ws(int w, int u);
  static LinkParams from_rs(i64 r, i64 s);

  i64 r() const { return 2 * static_cast<i64>(w) + 1; }
  i64 s() const { return 2 * static_cast<i64>(u) + 1; }
  bool s_positive() const { return u > 0; }
  // u' = -u - 1 for s < 0; only meaningful when s < 0.
  int u_prime() const { return -u - 1; }
  // Number of quadrilaterals in the second fan, counting the shared one.
  int second_length() const { return s_positive() ? u + 1 : u_prime() + 1; }
  // The target vertex [r, s] = s / (r s + 1).
  Rational target() const;

  friend bool operator==(const LinkParams&, const LinkParams&) = default;
};

struct Quad {
  Sequence sequence;
  int index;                         // 1-based within its fan
  std::array<Rational, 4> vertices;  // cyclic order as listed in the fan
};

// The chain of quadrilaterals from 1/0 to [r,s].  The last quadrilateral of
// the first fan is also the first of the second fan; it is stored once, and
// `split_index` is the position (0-based) of the first quadrilateral that
// belongs only to the second fan.
struct QuadSequence {
  LinkParams params;
  std::vector<Quad> quads;
  std::size_t split_index = 0;
};

QuadSequence quad_sequence(i64 r, i64 s);

// Matrix of the quadrilateral `quad_index` of the given fan that carries the
// model quadrilateral <0/1, 1/0, 1/1, 1/2> onto it.
GMatrix quad_base(const LinkParams& lp, Sequence seq, int quad_index);

// The side matrix for side k in {0,1,2,3}: carries the model edge of each
// label onto side k of the quadrilateral.  Throws DomainError for an index
// outside the fan.
GMatrix edge_matrix(const LinkParams& lp, Sequence seq, int quad_index, int k);

}  // namespace twobridge
