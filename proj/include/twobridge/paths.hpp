// SPDX-License-Identifier: MIT
//
// Catalog of minimal edge-paths from 1/0 to [r,s] in the three diagram
// regimes, their expansion into matrix-tagged edges, and the face model used
// to test minimality (no two consecutive edges on one face).

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/farey.hpp"

namespace twobridge {

enum class EdgeLabel { A, B, C, D };

// D1 is the t = 1 diagram (labels A, C); Dinf is t = 0 or infinity (labels
// B, D); Dt is any other t (all four labels).
enum class Regime { D1, Dinf, Dt };

char to_char(EdgeLabel label);
std::string to_string(Regime regime);
Regime parse_regime(const std::string& text);

// Where an edge sits: side k of quadrilateral `quad` in fan `sequence`.
struct PositionTag {
  Sequence sequence = Sequence::First;
  int quad = 1;
  int k = 0;

  friend bool operator==(const PositionTag&, const PositionTag&) = default;
};

struct PathEdge {
  EdgeLabel label = EdgeLabel::A;
  GMatrix matrix = GMatrix::identity();
  // False means the path runs against the model orientation; every
  // contribution then changes sign.
  bool orientation_matched = true;
  PositionTag tag;
  // The t = 1 diagonal of the shared quadrilateral; its matrix is the quad's
  // base matrix rather than a side matrix and it uses the n-dependent rule.
  bool t1_diagonal = false;
};

struct EdgePath {
  std::string name;
  Regime regime = Regime::Dt;
  LinkParams params;
  std::vector<PathEdge> edges;
  // Composite paths cij record their generator pair (i, j).
  std::optional<std::pair<int, int>> generators;

  // Compact label string such as "A,D,-A".
  std::string label_string() const;
};

// A vertex of the diagram: a rational point, or (Dt only) the midpoint that
// the rectangle adds on the Farey edge {a, b}.  Midpoints store a < b.
struct Node {
  Rational a;
  Rational b;
  bool midpoint = false;

  static Node point(const Rational& v) { return Node{v, v, false}; }
  static Node mid(const Rational& x, const Rational& y);

  std::string str() const;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

// A 2-cell of the diagram as its sorted vertex set (triangle or rectangle).
using Face = std::vector<Node>;

struct EdgeGeometry {
  Node from;  // along the path direction
  Node to;
  std::vector<Face> faces;  // the two faces the edge bounds
};

// Image of the model edge of the given label and regime under `m`, oriented
// along the model when `matched` holds and reversed otherwise.
EdgeGeometry edge_geometry(Regime regime, EdgeLabel label, const GMatrix& m, bool matched);
EdgeGeometry edge_geometry(Regime regime, const PathEdge& edge);

// All path names for the sign of s, in catalog order.
const std::vector<std::string>& family_names(bool s_positive);

// Regime a named path lives in, or nullopt for an unknown name.
std::optional<Regime> family_regime(const std::string& name);

struct CatalogEntry {
  std::string name;
  Regime regime;
  bool minimal = true;
  std::string exclusion_reason;  // empty when minimal
};

// Every named path for (r, s) in the regime, minimal or not.
std::vector<CatalogEntry> catalog_entries(i64 r, i64 s, Regime regime);

// Names of the minimal paths for (r, s) in the regime.
std::vector<std::string> catalog(i64 r, i64 s, Regime regime);

// True when `name` is a minimal path for the link.
bool in_catalog(const LinkParams& lp, const std::string& name);

// Concrete edge list of a named path.  Throws DomainError when the name is
// unknown, belongs to the other sign of s, or is not minimal for (w, u).
EdgePath path_edges(const std::string& name, int w, int u);

// Same, without the minimality filter (used to exhibit the exceptions).
EdgePath path_edges_unchecked(const std::string& name, int w, int u);

// Vertex sequence of a path; throws InternalError if the edges do not chain.
std::vector<Node> path_vertices(const EdgePath& path);

// Index of the first consecutive pair sharing a face, or nullopt.
std::optional<std::size_t> first_face_violation(const EdgePath& path);

// No two consecutive edges on one face.
bool is_minimal(const EdgePath& path);

// A chain of 2m B-edges along the first fan in Dinf, from 1/0 to 1/(2m).
EdgePath all_b_path(int m);

}  // namespace twobridge
