// SPDX-License-Identifier: MIT

#include "twobridge/paths.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twobridge/error.hpp"

namespace twobridge {

char to_char(EdgeLabel label) { return "ABCD"[static_cast<int>(label)]; }

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::D1: return "D1";
    case Regime::Dinf: return "Dinf";
    case Regime::Dt: return "Dt";
  }
  throw InternalError("unknown regime");
}

Regime parse_regime(const std::string& text) {
  if (text == "D1") return Regime::D1;
  if (text == "Dinf") return Regime::Dinf;
  if (text == "Dt") return Regime::Dt;
  throw DomainError("regime.name", "expected D1, Dinf or Dt, got '" + text + "'");
}

std::string EdgePath::label_string() const {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ',';
    if (!e.orientation_matched) out += '-';
    out += to_char(e.label);
  }
  return out;
}

Node Node::mid(const Rational& x, const Rational& y) {
  return x < y ? Node{x, y, true} : Node{y, x, true};
}

std::string Node::str() const {
  if (!midpoint) return a.str();
  return "mid(" + a.str() + "," + b.str() + ")";
}

namespace {

const Rational kInf = Rational::infinity();
const Rational kZero = Rational::make(0, 1);
const Rational kOne = Rational::make(1, 1);
const Rational kHalf = Rational::make(1, 2);
const Rational kMinusOne = Rational::make(-1, 1);
const Rational kMinusHalf = Rational::make(-1, 2);

// Model edges before the G-action.  In Dt the vertices are midpoints of
// Farey edges; in D1 and Dinf they are rational points.
struct ModelVertex {
  Rational x;
  Rational y;
  bool midpoint;
};

struct ModelEdge {
  ModelVertex from;
  ModelVertex to;
  std::vector<std::vector<ModelVertex>> faces;
};

ModelVertex pt(const Rational& v) { return {v, v, false}; }
ModelVertex md(const Rational& x, const Rational& y) { return {x, y, true}; }

// Triangle at corner v of the quadrilateral tiling in Dt: v and the two
// midpoints on the edges from v to x and to y.
std::vector<ModelVertex> corner(const Rational& v, const Rational& x, const Rational& y) {
  return {pt(v), md(v, x), md(v, y)};
}

// The rectangle of the model quadrilateral <0/1, 1/0, 1/1, 1/2>.
std::vector<ModelVertex> model_rectangle() {
  return {md(kZero, kInf), md(kInf, kOne), md(kOne, kHalf), md(kHalf, kZero)};
}

const ModelEdge& model_edge(Regime regime, EdgeLabel label) {
  static const std::map<std::pair<Regime, EdgeLabel>, ModelEdge> kModels = [] {
    std::map<std::pair<Regime, EdgeLabel>, ModelEdge> m;
    m[{Regime::Dt, EdgeLabel::A}] = {pt(kInf), md(kInf, kZero),
                                     {corner(kInf, kZero, kOne), corner(kInf, kZero, kMinusOne)}};
    m[{Regime::Dt, EdgeLabel::B}] = {pt(kZero), md(kInf, kZero),
                                     {corner(kZero, kInf, kHalf), corner(kZero, kInf, kMinusHalf)}};
    m[{Regime::Dt, EdgeLabel::C}] = {md(kInf, kOne), md(kInf, kZero),
                                     {corner(kInf, kZero, kOne), model_rectangle()}};
    m[{Regime::Dt, EdgeLabel::D}] = {md(kZero, kHalf), md(kInf, kZero),
                                     {corner(kZero, kInf, kHalf), model_rectangle()}};
    // D1 triangulates each quadrilateral by the 0/1 - 1/1 diagonal.
    m[{Regime::D1, EdgeLabel::A}] = {pt(kInf), pt(kZero),
                                     {{pt(kInf), pt(kZero), pt(kOne)},
                                      {pt(kInf), pt(kZero), pt(kMinusOne)}}};
    m[{Regime::D1, EdgeLabel::C}] = {pt(kOne), pt(kZero),
                                     {{pt(kZero), pt(kOne), pt(kInf)},
                                      {pt(kZero), pt(kOne), pt(kHalf)}}};
    // Dinf triangulates each quadrilateral by the 1/0 - 1/2 diagonal.
    m[{Regime::Dinf, EdgeLabel::B}] = {pt(kZero), pt(kInf),
                                       {{pt(kZero), pt(kInf), pt(kHalf)},
                                        {pt(kZero), pt(kInf), pt(kMinusHalf)}}};
    m[{Regime::Dinf, EdgeLabel::D}] = {pt(kHalf), pt(kInf),
                                       {{pt(kInf), pt(kHalf), pt(kOne)},
                                        {pt(kInf), pt(kHalf), pt(kZero)}}};
    return m;
  }();
  auto it = kModels.find({regime, label});
  if (it == kModels.end()) {
    throw DomainError("edge.label_regime",
                      std::string("label ") + to_char(label) + " does not occur in " + to_string(regime));
  }
  return it->second;
}

Node image(const GMatrix& m, const ModelVertex& v) {
  if (!v.midpoint) return Node::point(apply(m, v.x));
  return Node::mid(apply(m, v.x), apply(m, v.y));
}

}  // namespace

EdgeGeometry edge_geometry(Regime regime, EdgeLabel label, const GMatrix& m, bool matched) {
  const ModelEdge& model = model_edge(regime, label);
  EdgeGeometry g;
  g.from = image(m, model.from);
  g.to = image(m, model.to);
  if (!matched) std::swap(g.from, g.to);
  for (const auto& f : model.faces) {
    Face face;
    for (const auto& v : f) face.push_back(image(m, v));
    std::sort(face.begin(), face.end());
    g.faces.push_back(std::move(face));
  }
  return g;
}

EdgeGeometry edge_geometry(Regime regime, const PathEdge& edge) {
  return edge_geometry(regime, edge.label, edge.matrix, edge.orientation_matched);
}

namespace {

struct FamilyInfo {
  std::string name;
  Regime regime;
  std::optional<std::pair<int, int>> generators;
};

const std::vector<FamilyInfo>& family_table(bool s_positive) {
  static const std::vector<FamilyInfo> kPos = {
      {"c1", Regime::D1, {}},           {"c2", Regime::D1, {}},           {"c3", Regime::D1, {}},
      {"c4", Regime::Dinf, {}},         {"c5", Regime::Dinf, {}},         {"c6", Regime::Dinf, {}},
      {"c7", Regime::Dinf, {}},         {"c8", Regime::Dinf, {}},         {"c14", Regime::Dt, {{1, 4}}},
      {"c16", Regime::Dt, {{1, 6}}},    {"c24", Regime::Dt, {{2, 4}}},    {"c25", Regime::Dt, {{2, 5}}},
      {"c27", Regime::Dt, {{2, 7}}},    {"c28", Regime::Dt, {{2, 8}}},    {"c36", Regime::Dt, {{3, 6}}},
      {"c38", Regime::Dt, {{3, 8}}}};
  static const std::vector<FamilyInfo> kNeg = {
      {"d0", Regime::D1, {}},           {"d1", Regime::D1, {}},           {"d2", Regime::D1, {}},
      {"d3", Regime::D1, {}},           {"d4", Regime::Dinf, {}},         {"d5", Regime::Dinf, {}},
      {"d6", Regime::Dinf, {}},         {"d7", Regime::Dinf, {}},         {"d8", Regime::Dinf, {}},
      {"d06", Regime::Dt, {{0, 6}}},    {"d14", Regime::Dt, {{1, 4}}},    {"d16", Regime::Dt, {{1, 6}}},
      {"d24", Regime::Dt, {{2, 4}}},    {"d25", Regime::Dt, {{2, 5}}},    {"d26", Regime::Dt, {{2, 6}}},
      {"d27", Regime::Dt, {{2, 7}}},    {"d28", Regime::Dt, {{2, 8}}},    {"d36", Regime::Dt, {{3, 6}}},
      {"d38", Regime::Dt, {{3, 8}}}};
  return s_positive ? kPos : kNeg;
}

const FamilyInfo* find_family(const std::string& name) {
  for (bool sign : {true, false}) {
    for (const auto& f : family_table(sign)) {
      if (f.name == name) return &f;
    }
  }
  return nullptr;
}

// Reason a single-regime path is not minimal for (w, u), or empty.
std::string base_exclusion(char family, int index, const LinkParams& lp) {
  const bool r3 = lp.w == 1;
  if (family == 'c') {
    const bool s3 = lp.u == 1;
    if (index == 5 && r3) return "c5 is not minimal when r = 3";
    if (index == 7 && s3) return "c7 is not minimal when s = 3";
    return {};
  }
  const bool s_minus3 = lp.u == -2;
  if (index == 5 && r3) return "d5 is not minimal when r = 3";
  if (index == 5 && s_minus3) return "d5 is not minimal when s = -3";
  if (index == 8 && r3) return "d8 is not minimal when r = 3";
  if (index == 4 && s_minus3) return "d4 is not minimal when s = -3";
  return {};
}

std::string exclusion_reason(const FamilyInfo& f, const LinkParams& lp) {
  const char family = f.name[0];
  if (f.generators) {
    // A composite path is minimal exactly when its second generator is.
    const std::string inner = base_exclusion(family, f.generators->second, lp);
    if (inner.empty()) return {};
    return f.name + " follows " + family + std::to_string(f.generators->second) + " (" + inner + ")";
  }
  const int index = std::stoi(f.name.substr(1));
  return base_exclusion(family, index, lp);
}

PathEdge make_edge(const LinkParams& lp, EdgeLabel label, Sequence seq, int quad, int k, bool matched) {
  PathEdge e;
  e.label = label;
  e.matrix = edge_matrix(lp, seq, quad, k);
  e.orientation_matched = matched;
  e.tag = PositionTag{seq, quad, k};
  return e;
}

// Builder for the catalog definitions: `f(...)` is an edge in the first fan,
// `g(...)` one in the second; a trailing `false` reverses it.
struct Builder {
  const LinkParams& lp;
  std::vector<PathEdge> edges;

  Builder& f(EdgeLabel l, int i, int k, bool m = true) {
    edges.push_back(make_edge(lp, l, Sequence::First, i, k, m));
    return *this;
  }
  Builder& g(EdgeLabel l, int j, int k, bool m = true) {
    edges.push_back(make_edge(lp, l, Sequence::Second, j, k, m));
    return *this;
  }
  // The t = 1 diagonal of the shared quadrilateral, from 0/1 to 1/r.
  Builder& t1_diagonal() {
    PathEdge e;
    e.label = EdgeLabel::C;
    e.matrix = quad_base(lp, Sequence::First, lp.w + 1);
    e.orientation_matched = false;
    e.tag = PositionTag{Sequence::First, lp.w + 1, 0};
    e.t1_diagonal = true;
    edges.push_back(e);
    return *this;
  }
};

constexpr EdgeLabel A = EdgeLabel::A;
constexpr EdgeLabel B = EdgeLabel::B;
constexpr EdgeLabel C = EdgeLabel::C;
constexpr EdgeLabel D = EdgeLabel::D;
constexpr bool kRev = false;

std::vector<PathEdge> build_positive(const std::string& name, const LinkParams& lp) {
  const int w = lp.w;
  const int W = w + 1;      // the shared quadrilateral
  const int U = lp.u + 1;   // last quadrilateral of the second fan
  Builder b{lp, {}};
  // Zig-zag of A-edges through the first fan, 1/0 - 1/1 - ... - 1/(r-1).
  auto zigzag = [&] {
    for (int i = 1; i <= w; ++i) b.f(A, i, 1).f(A, i, 2, kRev);
  };
  // The A, D, -A triangles of the first fan.
  auto tri_first = [&] {
    for (int i = 1; i <= w; ++i) b.f(A, i, 1).f(D, i, 2).f(A, i, 2, kRev);
  };
  auto tri_second = [&] {
    for (int j = 2; j <= U; ++j) b.g(A, j, 0).g(D, j, 0, kRev).g(A, j, 3, kRev);
  };
  if (name == "c1") {
    zigzag();
    b.f(A, W, 1).g(A, U, 2, kRev);
  } else if (name == "c2") {
    b.f(A, 1, 0).t1_diagonal().g(A, U, 2, kRev);
  } else if (name == "c3") {
    b.f(A, 1, 0).f(A, W, 3, kRev);
    for (int j = 2; j <= U; ++j) b.g(A, j, 0).g(A, j, 3, kRev);
  } else if (name == "c4") {
    for (int i = 1; i <= w; ++i) b.f(D, i, 2);
    b.f(B, W, 1, kRev).g(B, U, 2);
  } else if (name == "c5") {
    b.f(B, 1, 0, kRev).f(B, W, 0).f(B, W, 1, kRev).g(B, U, 2);
  } else if (name == "c6") {
    for (int i = 1; i <= W; ++i) b.f(D, i, 2);
    for (int j = 2; j <= U; ++j) b.g(D, j, 2);
  } else if (name == "c7") {
    b.f(B, 1, 0, kRev).f(B, W, 3).f(B, W, 2, kRev).g(B, U, 2);
  } else if (name == "c8") {
    b.f(B, 1, 0, kRev).f(B, W, 3);
    for (int j = 2; j <= U; ++j) b.g(D, j, 0, kRev);
  } else if (name == "c14") {
    tri_first();
    b.f(A, W, 1).f(B, W, 1, kRev).g(B, U, 2).g(A, U, 2, kRev);
  } else if (name == "c16") {
    tri_first();
    b.f(A, W, 1).f(D, W, 2);
    for (int j = 2; j <= U; ++j) b.g(D, j, 2);
    b.g(A, U, 2, kRev);
  } else if (name == "c24") {
    b.f(A, 1, 0);
    for (int i = 1; i <= w; ++i) b.f(D, i, 0, kRev);
    b.f(C, W, 0, kRev).f(B, W, 1, kRev).g(B, U, 2).g(A, U, 2, kRev);
  } else if (name == "c25") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 0).f(C, W, 0, kRev).f(B, W, 1, kRev).g(B, U, 2).g(A, U, 2, kRev);
  } else if (name == "c27") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 3).f(C, W, 2).f(B, W, 2, kRev).g(B, U, 2).g(A, U, 2, kRev);
  } else if (name == "c28") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 3).f(C, W, 2);
    for (int j = 2; j <= U; ++j) b.g(D, j, 2);
    b.g(A, U, 2, kRev);
  } else if (name == "c36") {
    b.f(A, 1, 0);
    for (int i = 1; i <= W; ++i) b.f(D, i, 0, kRev);
    b.f(A, W, 3, kRev);
    tri_second();
  } else if (name == "c38") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 3).f(A, W, 3, kRev);
    tri_second();
  } else {
    throw DomainError("path.name", "unknown path '" + name + "' for s > 0");
  }
  return std::move(b.edges);
}

std::vector<PathEdge> build_negative(const std::string& name, const LinkParams& lp) {
  const int w = lp.w;
  const int W = w + 1;
  const int U = lp.u_prime() + 1;
  Builder b{lp, {}};
  auto zigzag = [&] {
    for (int i = 1; i <= w; ++i) b.f(A, i, 1).f(A, i, 2, kRev);
  };
  auto zigzag_second = [&] {
    for (int j = 2; j <= U; ++j) b.g(A, j, 3).g(A, j, 0, kRev);
  };
  auto tri_first = [&] {
    for (int i = 1; i <= w; ++i) b.f(A, i, 1).f(D, i, 2).f(A, i, 2, kRev);
  };
  auto tri_second = [&] {
    for (int j = 2; j <= U; ++j) b.g(A, j, 3).g(D, j, 0).g(A, j, 0, kRev);
  };
  if (name == "d0") {
    zigzag();
    zigzag_second();
  } else if (name == "d1") {
    zigzag();
    b.f(A, W, 1).g(A, U, 1, kRev);
  } else if (name == "d2") {
    b.f(A, 1, 0).t1_diagonal().g(A, U, 1, kRev);
  } else if (name == "d3") {
    b.f(A, 1, 0).f(A, W, 0, kRev);
    zigzag_second();
  } else if (name == "d4") {
    for (int i = 1; i <= w; ++i) b.f(D, i, 2);
    b.f(B, W, 1, kRev).g(B, U, 1);
  } else if (name == "d5") {
    b.f(B, 1, 0, kRev).f(B, W, 0).f(B, W, 1, kRev).g(B, U, 1);
  } else if (name == "d6") {
    for (int i = 1; i <= w; ++i) b.f(D, i, 0, kRev);
    for (int j = 2; j <= U; ++j) b.g(D, j, 2, kRev);
  } else if (name == "d7") {
    b.f(B, 1, 0, kRev).f(B, W, 3).f(B, W, 2, kRev).g(B, U, 1);
  } else if (name == "d8") {
    b.f(B, 1, 0, kRev).f(B, W, 0);
    for (int j = 2; j <= U; ++j) b.g(D, j, 0);
  } else if (name == "d06") {
    tri_first();
    tri_second();
  } else if (name == "d14") {
    tri_first();
    b.f(A, W, 1).f(B, W, 1, kRev).g(B, U, 1).g(A, U, 1, kRev);
  } else if (name == "d16") {
    tri_first();
    b.f(A, W, 1);
    for (int j = 2; j <= U; ++j) b.g(D, j, 2, kRev);
    b.g(A, U, 1, kRev);
  } else if (name == "d24") {
    b.f(A, 1, 0);
    for (int i = 1; i <= w; ++i) b.f(D, i, 0, kRev);
    b.f(C, W, 0, kRev).f(B, W, 1, kRev).g(B, U, 1).g(A, U, 1, kRev);
  } else if (name == "d25") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 0).f(C, W, 0, kRev).f(B, W, 1, kRev).g(B, U, 1).g(A, U, 1, kRev);
  } else if (name == "d26") {
    b.f(A, 1, 0);
    for (int i = 1; i <= w; ++i) b.f(D, i, 0, kRev);
    b.f(C, W, 0, kRev);
    for (int j = 2; j <= U; ++j) b.g(D, j, 2, kRev);
    b.g(A, U, 1, kRev);
  } else if (name == "d27") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 3).f(C, W, 2).f(B, W, 2, kRev).g(B, U, 1).g(A, U, 1, kRev);
  } else if (name == "d28") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 0).f(C, W, 0, kRev);
    for (int j = 2; j <= U; ++j) b.g(D, j, 2, kRev);
    b.g(A, U, 1, kRev);
  } else if (name == "d36") {
    b.f(A, 1, 0);
    for (int i = 1; i <= w; ++i) b.f(D, i, 0, kRev);
    b.f(A, W, 0, kRev);
    tri_second();
  } else if (name == "d38") {
    b.f(A, 1, 0).f(B, 1, 0, kRev).f(B, W, 0).f(A, W, 0, kRev);
    tri_second();
  } else {
    throw DomainError("path.name", "unknown path '" + name + "' for s < 0");
  }
  return std::move(b.edges);
}

}  // namespace

const std::vector<std::string>& family_names(bool s_positive) {
  static const auto make = [](bool sign) {
    std::vector<std::string> out;
    for (const auto& f : family_table(sign)) out.push_back(f.name);
    return out;
  };
  static const std::vector<std::string> kPos = make(true);
  static const std::vector<std::string> kNeg = make(false);
  return s_positive ? kPos : kNeg;
}

std::optional<Regime> family_regime(const std::string& name) {
  const FamilyInfo* f = find_family(name);
  if (!f) return std::nullopt;
  return f->regime;
}

std::vector<CatalogEntry> catalog_entries(i64 r, i64 s, Regime regime) {
  const LinkParams lp = LinkParams::from_rs(r, s);
  std::vector<CatalogEntry> out;
  for (const auto& f : family_table(lp.s_positive())) {
    if (f.regime != regime) continue;
    CatalogEntry e{f.name, f.regime, true, exclusion_reason(f, lp)};
    e.minimal = e.exclusion_reason.empty();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> catalog(i64 r, i64 s, Regime regime) {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries(r, s, regime)) {
    if (e.minimal) out.push_back(e.name);
  }
  return out;
}

bool in_catalog(const LinkParams& lp, const std::string& name) {
  const FamilyInfo* f = find_family(name);
  if (!f) return false;
  if ((f->name[0] == 'c') != lp.s_positive()) return false;
  return exclusion_reason(*f, lp).empty();
}

EdgePath path_edges_unchecked(const std::string& name, int w, int u) {
  const LinkParams lp = LinkParams::from_ws(w, u);
  const FamilyInfo* f = find_family(name);
  if (!f) throw DomainError("path.name", "unknown path '" + name + "'");
  if ((f->name[0] == 'c') != lp.s_positive()) {
    throw DomainError("path.sign", "path '" + name + "' belongs to the other sign of s");
  }
  EdgePath p;
  p.name = name;
  p.regime = f->regime;
  p.params = lp;
  p.generators = f->generators;
  p.edges = lp.s_positive() ? build_positive(name, lp) : build_negative(name, lp);
  return p;
}

EdgePath path_edges(const std::string& name, int w, int u) {
  EdgePath p = path_edges_unchecked(name, w, u);
  const FamilyInfo* f = find_family(name);
  const std::string reason = exclusion_reason(*f, p.params);
  if (!reason.empty()) throw DomainError("path.minimal", reason);
  return p;
}

std::vector<Node> path_vertices(const EdgePath& path) {
  std::vector<Node> out;
  for (const auto& e : path.edges) {
    const EdgeGeometry g = edge_geometry(path.regime, e);
    if (out.empty()) {
      out.push_back(g.from);
    } else if (!(out.back() == g.from)) {
      throw InternalError("path " + path.name + " does not chain at " + out.back().str());
    }
    out.push_back(g.to);
  }
  return out;
}

std::optional<std::size_t> first_face_violation(const EdgePath& path) {
  std::vector<EdgeGeometry> geo;
  geo.reserve(path.edges.size());
  for (const auto& e : path.edges) geo.push_back(edge_geometry(path.regime, e));
  for (std::size_t i = 0; i + 1 < geo.size(); ++i) {
    for (const auto& f : geo[i].faces) {
      if (std::find(geo[i + 1].faces.begin(), geo[i + 1].faces.end(), f) != geo[i + 1].faces.end()) {
        return i;
      }
    }
  }
  return std::nullopt;
}

bool is_minimal(const EdgePath& path) { return !first_face_violation(path).has_value(); }

EdgePath all_b_path(int m) {
  if (m < 1) throw DomainError("all_b.m", "m must be >= 1");
  const LinkParams lp = LinkParams::from_ws(m, 1);
  Builder b{lp, {}};
  for (int i = 1; i <= m; ++i) b.f(B, i, 1, kRev).f(B, i, 2);
  EdgePath p;
  p.name = "allB" + std::to_string(2 * m);
  p.regime = Regime::Dinf;
  p.params = lp;
  p.edges = std::move(b.edges);
  return p;
}

}  // namespace twobridge
