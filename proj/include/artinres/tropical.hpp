#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace artinres {

/// Element of N^r, or of Z^r when used as a group element.
class MonoidElt {
 public:
  MonoidElt() = default;
  explicit MonoidElt(std::size_t rank) : v_(rank, 0) {}
  explicit MonoidElt(std::vector<std::int64_t> v) : v_(std::move(v)) {}
  static MonoidElt generator(std::size_t rank, std::size_t i);

  std::size_t rank() const { return v_.size(); }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  const std::vector<std::int64_t>& entries() const { return v_; }

  bool is_zero() const;
  /// All entries non-negative.
  bool in_monoid() const;

  MonoidElt& operator+=(const MonoidElt& o);
  MonoidElt& operator-=(const MonoidElt& o);
  friend MonoidElt operator+(MonoidElt a, const MonoidElt& b) { return a += b; }
  friend MonoidElt operator-(MonoidElt a, const MonoidElt& b) { return a -= b; }
  MonoidElt operator*(std::int64_t k) const;

  friend bool operator==(const MonoidElt&, const MonoidElt&) = default;
  friend auto operator<=>(const MonoidElt&, const MonoidElt&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> v_;
};

/// Partial order of the monoid: a <= b iff b - a lies in N^r.
bool leq(const MonoidElt& a, const MonoidElt& b);
bool lt(const MonoidElt& a, const MonoidElt& b);
bool comparable(const MonoidElt& a, const MonoidElt& b);

struct Vertex {
  std::string id;
  int genus = 0;
};

/// Edges are stored with a <= b; slopes refer to the direction a -> b.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  MonoidElt length;
};

struct Leg {
  std::size_t vertex = 0;
  int marking = 0;
};

class TropicalCurve {
 public:
  /// Validates connectivity, ranks and non-zero lengths. Throws
  /// InvalidArgument.
  TropicalCurve(std::size_t rank, std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Leg> legs = {});

  std::size_t rank() const { return rank_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::optional<std::size_t> find_vertex(const std::string& id) const;
  /// Throws InvalidArgument.
  std::size_t vertex_index(const std::string& id) const;
  /// Edge indices incident to v (loops listed once).
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }
  /// Number of half-edges at v, loops counted twice.
  int valence(std::size_t v) const;
  int num_legs(std::size_t v) const;
  std::size_t other_end(std::size_t edge, std::size_t v) const;

  int first_betti() const;
  int genus() const;

 private:
  std::size_t rank_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Values per vertex, slope per edge (direction a -> b) and per leg.
struct PLFunction {
  std::vector<MonoidElt> values;
  std::vector<std::int64_t> edge_slopes;
  std::vector<std::int64_t> leg_slopes;
};

/// Throws InvalidPL when some edge violates f(b) - f(a) = m(e) l(e), or a
/// leg slope is negative.
void validate_pl(const TropicalCurve& curve, const PLFunction& f);

struct Subgraph {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;

  bool contains_vertex(std::size_t v) const;
};

/// The genus-one vertex or the unique cycle. Throws WrongGenus.
Subgraph core(const TropicalCurve& curve);

/// Distance from the core. Throws WrongGenus.
PLFunction lambda(const TropicalCurve& curve);

struct RadialCheck {
  bool aligned = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

RadialCheck is_radially_aligned(const TropicalCurve& curve);

struct Subdivision {
  TropicalCurve curve;
  /// For each vertex of the new curve: the original vertex index, or
  /// nullopt for inserted vertices.
  std::vector<std::optional<std::size_t>> original_vertex;
  /// For each edge of the new curve, the original edge it is part of.
  std::vector<std::size_t> original_edge;
  std::size_t inserted() const;
};

/// Inserts a genus-0 vertex on every edge crossing one of the given values of
/// lambda. Throws NonAligned when a level cannot be placed on an edge.
Subdivision subdivide_at_levels(const TropicalCurve& curve, const std::vector<MonoidElt>& levels);

/// Subdivides at every value lambda(v) <= delta.
Subdivision semistable_modification(const TropicalCurve& curve, const MonoidElt& delta);

struct AlignmentReport {
  Subgraph core;
  PLFunction lambda;
  MonoidElt delta;
  /// delta = 0: the circle is the core itself.
  bool degenerate = false;
  /// The semistable modification the layers live on.
  Subdivision modified;
  /// lambda on the modified curve.
  PLFunction modified_lambda;
  /// Vertex indices of the modified curve, L_0 = core first.
  std::vector<std::vector<std::size_t>> layers;
  /// t_i = lambda(L_i) - lambda(L_{i-1}) for i = 1..m.
  std::vector<MonoidElt> parameters;
  /// t = t_1 ... t_m, written additively.
  MonoidElt total;
};

/// Checks the stable central alignment with radius lambda(v) and builds the
/// layers. Throws NotRadiallyAligned or NotStable.
AlignmentReport check_central_alignment(const TropicalCurve& curve, std::size_t v);
AlignmentReport check_central_alignment(const TropicalCurve& curve, const MonoidElt& delta);

/// Degree of O(f) on each component: sum of outgoing slopes at v.
std::vector<std::int64_t> multidegree(const TropicalCurve& curve, const PLFunction& f);

/// Graphviz rendering; inserted vertices are dashed.
std::string to_dot(const Subdivision& sub, const PLFunction& lam);
std::string to_dot(const TropicalCurve& curve);

}  // namespace artinres
