// SPDX-License-Identifier: MIT
//
// Catalog of minimal edge-paths.  The catalog is checked against an
// independent depth-first enumeration of minimal paths in each diagram.

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "twobridge/error.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/paths.hpp"

using namespace twobridge;

namespace {

std::vector<std::string> names(i64 r, i64 s, Regime regime) { return catalog(r, s, regime); }

// Label letters without orientation signs.
std::string letters(const EdgePath& p) {
  std::string out;
  for (const auto& e : p.edges) out += to_char(e.label);
  return out;
}

// ---------------------------------------------------------------- enumerator
//
// Builds every edge of the diagram from the side matrices, then enumerates
// simple paths from 1/0 to the target in which no two consecutive edges bound
// a common face.  In D1 and D_inf a face is a Farey triangle, detected by
// adjacency of the outer endpoints; in D_t the faces come from the model.

struct Diagram {
  std::map<Node, std::set<Node>> adjacent;
  std::map<std::pair<Node, Node>, std::set<Face>> faces;

  void add(const EdgeGeometry& g) {
    adjacent[g.from].insert(g.to);
    adjacent[g.to].insert(g.from);
    for (const auto& f : g.faces) {
      faces[{g.from, g.to}].insert(f);
      faces[{g.to, g.from}].insert(f);
    }
  }

  bool share_face(const Node& a, const Node& b, const Node& c, Regime regime) const {
    if (regime != Regime::Dt) {
      auto it = adjacent.find(a);
      return it != adjacent.end() && it->second.count(c) > 0;
    }
    const auto& f1 = faces.at({a, b});
    const auto& f2 = faces.at({b, c});
    return std::any_of(f1.begin(), f1.end(), [&](const Face& f) { return f2.count(f) > 0; });
  }
};

Diagram build_diagram(const LinkParams& lp, Regime regime) {
  Diagram d;
  std::vector<std::pair<Sequence, int>> quads;
  for (int i = 1; i <= lp.w + 1; ++i) quads.push_back({Sequence::First, i});
  for (int j = 2; j <= lp.second_length(); ++j) quads.push_back({Sequence::Second, j});
  auto add = [&](EdgeLabel label, std::initializer_list<int> sides, const Sequence seq, int idx) {
    for (int k : sides) d.add(edge_geometry(regime, label, edge_matrix(lp, seq, idx, k), true));
  };
  for (auto [seq, idx] : quads) {
    switch (regime) {
      case Regime::D1:
        add(EdgeLabel::A, {0, 1, 2, 3}, seq, idx);
        add(EdgeLabel::C, {0}, seq, idx);
        break;
      case Regime::Dinf:
        add(EdgeLabel::B, {0, 1, 2, 3}, seq, idx);
        add(EdgeLabel::D, {0, 2}, seq, idx);
        break;
      case Regime::Dt:
        add(EdgeLabel::A, {0, 1, 2, 3}, seq, idx);
        add(EdgeLabel::B, {0, 1, 2, 3}, seq, idx);
        add(EdgeLabel::C, {0, 2}, seq, idx);
        add(EdgeLabel::D, {0, 2}, seq, idx);
        break;
    }
  }
  return d;
}

std::set<std::vector<Node>> enumerate_minimal(const LinkParams& lp, Regime regime) {
  const Diagram d = build_diagram(lp, regime);
  const Node target = Node::point(lp.target());
  std::set<std::vector<Node>> out;
  std::vector<Node> path{Node::point(Rational::infinity())};
  auto dfs = [&](auto&& self) -> void {
    const Node v = path.back();
    if (v == target) {
      out.insert(path);
      return;
    }
    auto it = d.adjacent.find(v);
    if (it == d.adjacent.end()) return;
    for (const Node& next : it->second) {
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      if (path.size() >= 2 && d.share_face(path[path.size() - 2], v, next, regime)) continue;
      path.push_back(next);
      self(self);
      path.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

const std::vector<std::pair<i64, i64>> kLinks = {{3, 3},  {5, 3},  {3, 5},  {5, 5},  {5, 7},  {7, 3},
                                                 {3, -3}, {5, -3}, {3, -5}, {5, -5}, {7, -5}, {5, -7}};

}  // namespace

TEST_CASE("catalog examples") {
  CHECK(names(5, 3, Regime::D1) == std::vector<std::string>{"c1", "c2", "c3"});
  CHECK(names(3, 5, Regime::Dinf) == std::vector<std::string>{"c4", "c6", "c7", "c8"});
  CHECK(names(3, -3, Regime::Dt) == std::vector<std::string>{"d06", "d16", "d26", "d27", "d36"});
  CHECK_THROWS_AS(names(4, 3, Regime::D1), DomainError);
}

TEST_CASE("catalog sizes before exclusions") {
  for (auto [r, s] : kLinks) {
    const bool pos = s > 0;
    CHECK(catalog_entries(r, s, Regime::D1).size() == (pos ? 3u : 4u));
    CHECK(catalog_entries(r, s, Regime::Dinf).size() == 5u);
    CHECK(catalog_entries(r, s, Regime::Dt).size() == (pos ? 8u : 10u));
  }
}

TEST_CASE("documented exclusions") {
  auto excluded = [](i64 r, i64 s, Regime regime) {
    std::set<std::string> out;
    for (const auto& e : catalog_entries(r, s, regime)) {
      if (!e.minimal) out.insert(e.name);
    }
    return out;
  };
  CHECK(excluded(3, 5, Regime::Dinf) == std::set<std::string>{"c5"});
  CHECK(excluded(3, 5, Regime::Dt) == std::set<std::string>{"c25"});
  CHECK(excluded(5, 5, Regime::Dt).empty());
  CHECK(excluded(3, -3, Regime::Dinf) == std::set<std::string>{"d4", "d5", "d8"});
  CHECK(excluded(3, -3, Regime::Dt) == std::set<std::string>{"d14", "d24", "d25", "d28", "d38"});
  CHECK(excluded(5, -3, Regime::Dinf) == std::set<std::string>{"d4", "d5"});
  CHECK(excluded(3, -5, Regime::Dinf) == std::set<std::string>{"d5", "d8"});
  // The mirror image of the r = 3 rule for c5 and c25 (see the enumeration below).
  CHECK(excluded(5, 3, Regime::Dinf) == std::set<std::string>{"c7"});
  CHECK(excluded(5, 3, Regime::Dt) == std::set<std::string>{"c27"});
  for (auto [r, s] : kLinks) {
    for (const auto& e : catalog_entries(r, s, Regime::Dt)) {
      if (e.minimal) continue;
      CHECK(e.exclusion_reason.find("follows") != std::string::npos);
    }
  }
}

TEST_CASE("the catalog equals an exhaustive enumeration of minimal paths") {
  for (auto [r, s] : kLinks) {
    const LinkParams lp = LinkParams::from_rs(r, s);
    for (Regime regime : {Regime::D1, Regime::Dinf, Regime::Dt}) {
      CAPTURE(r);
      CAPTURE(s);
      CAPTURE(to_string(regime));
      std::set<std::vector<Node>> from_catalog;
      const auto minimal = catalog(r, s, regime);
      for (const auto& name : minimal) from_catalog.insert(path_vertices(path_edges(name, lp.w, lp.u)));
      CHECK(from_catalog.size() == minimal.size());
      CHECK(from_catalog == enumerate_minimal(lp, regime));
    }
  }
}

TEST_CASE("every path runs from 1/0 to the link fraction") {
  for (auto [r, s] : kLinks) {
    const LinkParams lp = LinkParams::from_rs(r, s);
    for (Regime regime : {Regime::D1, Regime::Dinf, Regime::Dt}) {
      for (const auto& entry : catalog_entries(r, s, regime)) {
        const EdgePath p = path_edges_unchecked(entry.name, lp.w, lp.u);
        const auto v = path_vertices(p);
        CHECK(v.front() == Node::point(Rational::infinity()));
        CHECK(v.back() == Node::point(from_partial_quotients({r, s})));
        CHECK(is_minimal(p) == entry.minimal);
        CHECK(first_face_violation(p).has_value() == !entry.minimal);
        for (const auto& e : p.edges) {
          if (e.t1_diagonal) continue;
          CHECK(e.matrix == edge_matrix(lp, e.tag.sequence, e.tag.quad, e.tag.k));
        }
      }
    }
  }
}

TEST_CASE("path_edges examples") {
  for (int w = 1; w <= 4; ++w) {
    for (int u : {1, 2, 3, -2, -3, -4}) {
      const EdgePath c2 = path_edges(u > 0 ? "c2" : "d2", w, u);
      CHECK(letters(c2) == "ACA");
      CHECK(c2.edges[1].t1_diagonal);
      const auto v = path_vertices(c2);
      CHECK(v[1] == Node::point(Rational::make(0, 1)));
      CHECK(v[2] == Node::point(Rational::make(1, 2 * w + 1)));
    }
  }
  const EdgePath c16 = path_edges("c16", 1, 1);
  CHECK(letters(c16) == "ADAADDA");
  const EdgePath d26 = path_edges("d26", 1, -2);
  CHECK(letters(d26) == "ADCDA");
  std::vector<bool> matched;
  for (const auto& e : d26.edges) matched.push_back(e.orientation_matched);
  CHECK(matched == std::vector<bool>{true, false, false, false, false});
  CHECK(d26.generators == std::pair<int, int>{2, 6});
  CHECK_THROWS_AS(path_edges("c5", 1, 2), DomainError);
  CHECK_THROWS_AS(path_edges("d5", 1, 2), DomainError);
  CHECK_THROWS_AS(path_edges("x9", 1, 2), DomainError);
}

TEST_CASE("the c16 and d26 edge lists follow the worked tables") {
  for (int w = 1; w <= 6; ++w) {
    for (int u = 1; u <= 6; ++u) {
      // A'1, D'2, -A'2 in quad 1..w; A'1, D'2 in quad w+1; D'2 for j = 2..u+1; -A'2 at j = u+1.
      std::string expected;
      for (int i = 1; i <= w; ++i) expected += "ADA";
      expected += "AD";
      for (int j = 2; j <= u + 1; ++j) expected += "D";
      expected += "A";
      const EdgePath p = path_edges("c16", w, u);
      CHECK(letters(p) == expected);
      CHECK(p.edges.back().tag.sequence == Sequence::Second);
      CHECK(p.edges.back().tag.quad == u + 1);
      CHECK_FALSE(p.edges.back().orientation_matched);
    }
    for (int u = -7; u <= -2; ++u) {
      const int up = -u - 1;
      // A'0, -D'0 in quad 1; -D'0 for i = 2..w; -C'0 at w+1; -D'2 for j = 2..u'+1; -A'1.
      std::string expected = "AD";
      for (int i = 2; i <= w; ++i) expected += "D";
      expected += "C";
      for (int j = 2; j <= up + 1; ++j) expected += "D";
      expected += "A";
      CHECK(letters(path_edges("d26", w, u)) == expected);
    }
  }
}

TEST_CASE("edge counts follow the closed forms") {
  for (int w = 1; w <= 6; ++w) {
    for (int u = 1; u <= 6; ++u) {
      CHECK(path_edges("c1", w, u).edges.size() == static_cast<std::size_t>(2 * w + 2));
      CHECK(path_edges("c2", w, u).edges.size() == 3u);
      CHECK(path_edges("c3", w, u).edges.size() == static_cast<std::size_t>(2 * u + 2));
      CHECK(path_edges("c6", w, u).edges.size() == static_cast<std::size_t>(w + u + 1));
    }
    for (int u = -7; u <= -2; ++u) {
      const int up = -u - 1;
      CHECK(path_edges("d0", w, u).edges.size() == static_cast<std::size_t>(2 * w + 2 * up));
      CHECK(path_edges("d26", w, u).edges.size() == static_cast<std::size_t>(w + up + 3));
      CHECK(path_edges("d06", w, u).edges.size() == static_cast<std::size_t>(3 * (w + up)));
    }
  }
}

TEST_CASE("paths of L([r,s]) and L([s,r]) correspond by reversal") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"c3", "c1"}, {"c38", "c14"}, {"c36", "c16"}, {"c28", "c24"}, {"c27", "c25"}};
  for (int w = 2; w <= 5; ++w) {
    for (int u = 2; u <= 5; ++u) {
      for (const auto& [lhs, rhs] : pairs) {
        std::string rev = letters(path_edges(rhs, u, w));
        std::reverse(rev.begin(), rev.end());
        CHECK(letters(path_edges(lhs, w, u)) == rev);
      }
    }
  }
}

TEST_CASE("the all-B path") {
  for (int m = 1; m <= 8; ++m) {
    const EdgePath p = all_b_path(m);
    CHECK(p.edges.size() == static_cast<std::size_t>(2 * m));
    CHECK(letters(p) == std::string(2 * m, 'B'));
    const auto v = path_vertices(p);
    CHECK(v.front() == Node::point(Rational::infinity()));
    CHECK(v.back() == Node::point(Rational::make(1, 2 * m)));
  }
  CHECK_THROWS_AS(all_b_path(0), DomainError);
}
