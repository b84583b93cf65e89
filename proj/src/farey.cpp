// SPDX-License-Identifier: MIT

#include "twobridge/farey.hpp"

#include <charconv>
#include <sstream>

#include "twobridge/checked.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

using checked::add;
using checked::mul;
using checked::sub;

Rational Rational::make(i64 p, i64 q) {
  if (p == 0 && q == 0) throw DomainError("rational.defined", "0/0 is not a vertex");
  if (q == 0) return Rational(1, 0);
  if (q < 0) {
    p = checked::neg(p);
    q = checked::neg(q);
  }
  const i64 g = checked::gcd(p, q);
  return Rational(p / g, q / g);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_ << '/' << den_;
  return os.str();
}

namespace {

i64 parse_int(const std::string& text, const std::string& whole) {
  i64 value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("rational.syntax", "cannot parse '" + whole + "' as p/q");
  }
  return value;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return make(parse_int(text, text), 1);
  return make(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

int compare(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return 0;
    return a.is_infinite() ? 1 : -1;
  }
  const i64 lhs = mul(a.num(), b.den());
  const i64 rhs = mul(b.num(), a.den());
  return (lhs > rhs) - (lhs < rhs);
}

namespace {

void require_finite(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    throw DomainError("rational.finite", "arithmetic on the infinite point");
  }
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  require_finite(a, b);
  return Rational::make(add(mul(a.num(), b.den()), mul(b.num(), a.den())), mul(a.den(), b.den()));
}

Rational operator-(const Rational& a) {
  require_finite(a, a);
  return Rational::make(checked::neg(a.num()), a.den());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  require_finite(a, b);
  return Rational::make(mul(a.num(), b.num()), mul(a.den(), b.den()));
}

Rational operator/(const Rational& a, const Rational& b) {
  require_finite(a, b);
  if (b.num() == 0) throw DomainError("rational.division", "division by zero");
  return Rational::make(mul(a.num(), b.den()), mul(a.den(), b.num()));
}

i64 farey_det(const Rational& x, const Rational& y) {
  return sub(mul(x.num(), y.den()), mul(x.den(), y.num()));
}

GMatrix GMatrix::make(i64 a, i64 b, i64 c, i64 d) {
  if (sub(mul(a, d), mul(b, c)) != 1) {
    throw DomainError("gmatrix.determinant", "ad - bc must be +1");
  }
  if (c % 2 != 0) throw DomainError("gmatrix.even_c", "lower-left entry must be even");
  return GMatrix(a, b, c, d);
}

Rational GMatrix::neg_d_over_c() const { return Rational::make(checked::neg(d_), c_); }

GMatrix operator*(const GMatrix& x, const GMatrix& y) {
  return GMatrix::make(add(mul(x.a(), y.a()), mul(x.b(), y.c())),
                       add(mul(x.a(), y.b()), mul(x.b(), y.d())),
                       add(mul(x.c(), y.a()), mul(x.d(), y.c())),
                       add(mul(x.c(), y.b()), mul(x.d(), y.d())));
}

Rational apply(const GMatrix& m, const Rational& v) {
  const i64 p = v.num();
  const i64 q = v.den();
  return Rational::make(add(mul(m.a(), p), mul(m.b(), q)), add(mul(m.c(), p), mul(m.d(), q)));
}

Rational from_partial_quotients(const std::vector<i64>& quotients) {
  if (quotients.empty()) throw DomainError("partial_quotients.nonempty", "empty quotient list");
  for (i64 a : quotients) {
    if (a == 0) throw DomainError("partial_quotients.nonzero", "partial quotients must be non-zero");
  }
  // Evaluate a_k + 1/(...) from the innermost quotient outwards, keeping the
  // running value as an exact fraction; the final value is its reciprocal.
  Rational x = Rational::integer(quotients.back());
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    if (x.num() == 0) throw DomainError("partial_quotients.defined", "intermediate division by zero");
    x = Rational::integer(*it) + Rational::make(x.den(), x.num());
  }
  if (x.num() == 0) throw DomainError("partial_quotients.defined", "final division by zero");
  return Rational::make(x.den(), x.num());
}

namespace {

bool odd(i64 x) { return x % 2 != 0; }
bool even_nonzero(i64 x) { return x != 0 && x % 2 == 0; }

// Solutions of y = 1/(b + 1/c) for finite non-zero y = n/d.  Writing
// 1/y = d/n = b + 1/c forces d - b n = e with e = +-1, so b = (d - e)/n and
// c = n e.  Returns pairs (b, c) with e = +1 first.
std::vector<std::pair<i64, i64>> two_term(const Rational& y) {
  std::vector<std::pair<i64, i64>> out;
  if (y.is_infinite() || y.num() == 0) return out;
  const i64 n = y.num();
  const i64 d = y.den();
  for (i64 e : {i64{1}, i64{-1}}) {
    const i64 top = sub(d, e);
    if (top % n != 0) continue;
    const i64 b = top / n;
    const i64 c = mul(n, e);
    if (b != 0) out.emplace_back(b, c);
  }
  return out;
}

}  // namespace

std::vector<std::vector<i64>> expansions_as(const Rational& p, ExpansionPattern pattern) {
  std::vector<std::vector<i64>> out;
  if (p.is_infinite() || p.num() == 0) return out;
  if (pattern == ExpansionPattern::OddOdd) {
    for (auto [r, s] : two_term(p)) {
      if (odd(r) && odd(s)) out.push_back({r, s});
    }
    return out;
  }
  // 1/p = a + y with y = [b, c].  Because |numerator(y)| must divide
  // |den(y)| -+ 1, a lies within distance 2 of 1/p; the five candidates
  // around floor(1/p) cover every solution.
  const Rational inv = Rational::make(p.den(), p.num());
  const i64 base = checked::floor_div(inv.num(), inv.den());
  for (i64 delta = -2; delta <= 2; ++delta) {
    const i64 a = add(base, delta);
    if (!even_nonzero(a)) continue;
    const Rational y = inv - Rational::integer(a);
    for (auto [b, c] : two_term(y)) {
      if (even_nonzero(c)) out.push_back({a, b, c});
    }
  }
  return out;
}

std::optional<std::vector<i64>> expand_as(const Rational& p, ExpansionPattern pattern) {
  auto all = expansions_as(p, pattern);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::string to_string(Sequence seq) { return seq == Sequence::First ? "first" : "second"; }

LinkParams LinkParams::from_ws(int w, int u) {
  if (w < 1) throw DomainError("link.w_range", "w must be >= 1 (r = 2w+1 >= 3)");
  if (u == 0 || u == -1) throw DomainError("link.u_range", "u must be >= 1 or <= -2 (|s| >= 3)");
  return LinkParams{w, u};
}

LinkParams LinkParams::from_rs(i64 r, i64 s) {
  if (r % 2 == 0 || s % 2 == 0) throw DomainError("link.odd", "r and s must both be odd");
  if (r < 3) throw DomainError("link.r_range", "r must be >= 3");
  if (s > -3 && s < 3) throw DomainError("link.s_range", "|s| must be >= 3");
  if (r > 2'000'001 || s > 2'000'001 || s < -2'000'001) {
    throw DomainError("link.size", "|r|, |s| above 2*10^6 + 1 are not supported");
  }
  return from_ws(static_cast<int>((r - 1) / 2), static_cast<int>(checked::floor_div(s - 1, 2)));
}

Rational LinkParams::target() const { return Rational::make(s(), add(mul(r(), s()), 1)); }

namespace {

// [r, k] = k / (r k + 1).
Rational bracket(i64 r, i64 k) { return Rational::make(k, add(mul(r, k), 1)); }

}  // namespace

QuadSequence quad_sequence(i64 r, i64 s) {
  QuadSequence out;
  out.params = LinkParams::from_rs(r, s);
  const int w = out.params.w;
  for (int i = 1; i <= w + 1; ++i) {
    const i64 ii = i;
    out.quads.push_back(Quad{Sequence::First, i,
                             {Rational::make(0, 1), Rational::make(1, 2 * ii - 2),
                              Rational::make(1, 2 * ii - 1), Rational::make(1, 2 * ii)}});
  }
  out.split_index = out.quads.size();
  const Rational apex = Rational::make(1, r);
  const int n2 = out.params.second_length();
  for (int j = 2; j <= n2; ++j) {
    const i64 jj = j;
    std::array<Rational, 4> v;
    if (s > 0) {
      v = {apex, bracket(r, 2 * jj - 3), bracket(r, 2 * jj - 2), bracket(r, 2 * jj - 1)};
    } else {
      v = {apex, bracket(r, -2 * jj + 3), bracket(r, -2 * jj + 2), bracket(r, -2 * jj + 1)};
    }
    out.quads.push_back(Quad{Sequence::Second, j, v});
  }
  return out;
}

GMatrix quad_base(const LinkParams& lp, Sequence seq, int quad_index) {
  if (seq == Sequence::First) {
    if (quad_index < 1 || quad_index > lp.w + 1) {
      throw DomainError("edge_matrix.index", "first-fan index out of range");
    }
    return GMatrix::make(1, 0, 2 * static_cast<i64>(quad_index) - 2, 1);
  }
  if (quad_index < 1 || quad_index > lp.second_length()) {
    throw DomainError("edge_matrix.index", "second-fan index out of range");
  }
  const i64 r = lp.r();
  const i64 j = quad_index;
  // Both fans around 1/r share one closed form: the s > 0 fan uses
  // x = 2j - 3, the s < 0 fan uses x = -2j + 1.
  const i64 x = lp.s_positive() ? 2 * j - 3 : -2 * j + 1;
  const i64 y = lp.s_positive() ? 2 * j - 2 : -2 * j + 2;
  return GMatrix::make(-x, y, checked::neg(add(mul(x, r), 1)), add(mul(y, r), 1));
}

GMatrix edge_matrix(const LinkParams& lp, Sequence seq, int quad_index, int k) {
  static const std::array<GMatrix, 4> kSide = {
      GMatrix::identity(), GMatrix::make(1, 1, 0, 1), GMatrix::make(1, -1, 2, -1),
      GMatrix::make(1, 0, 2, 1)};
  if (k < 0 || k > 3) throw DomainError("edge_matrix.side", "side index must be 0..3");
  return quad_base(lp, seq, quad_index) * kSide[static_cast<std::size_t>(k)];
}

}  // namespace twobridge
