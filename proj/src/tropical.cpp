#include "artinres/tropical.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "artinres/error.hpp"

namespace artinres {

MonoidElt MonoidElt::generator(std::size_t rank, std::size_t i) {
  MonoidElt m(rank);
  m.v_.at(i) = 1;
  return m;
}

bool MonoidElt::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

bool MonoidElt::in_monoid() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x >= 0; });
}

MonoidElt& MonoidElt::operator+=(const MonoidElt& o) {
  if (o.rank() != rank()) fail(ErrorKind::InvalidArgument, "monoid ranks differ");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

MonoidElt& MonoidElt::operator-=(const MonoidElt& o) {
  if (o.rank() != rank()) fail(ErrorKind::InvalidArgument, "monoid ranks differ");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

MonoidElt MonoidElt::operator*(std::int64_t k) const {
  MonoidElt m(*this);
  for (auto& x : m.v_) x *= k;
  return m;
}

std::string MonoidElt::to_string() const {
  if (v_.size() == 1) return std::to_string(v_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
  return s + ")";
}

bool leq(const MonoidElt& a, const MonoidElt& b) { return (b - a).in_monoid(); }
bool lt(const MonoidElt& a, const MonoidElt& b) { return a != b && leq(a, b); }
bool comparable(const MonoidElt& a, const MonoidElt& b) { return leq(a, b) || leq(b, a); }

// ---------------------------------------------------------------------------

TropicalCurve::TropicalCurve(std::size_t rank, std::vector<Vertex> vertices, std::vector<Edge> edges,
                             std::vector<Leg> legs)
    : rank_(rank), vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)) {
  if (vertices_.empty()) fail(ErrorKind::InvalidArgument, "curve has no vertices");
  std::set<std::string> ids;
  for (const auto& v : vertices_) {
    if (v.genus < 0) fail(ErrorKind::InvalidArgument, "negative genus at " + v.id);
    if (!ids.insert(v.id).second) fail(ErrorKind::InvalidArgument, "duplicate vertex id " + v.id);
  }
  incident_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    Edge& edge = edges_[e];
    if (edge.a >= vertices_.size() || edge.b >= vertices_.size()) {
      fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
    }
    if (edge.length.rank() != rank_) fail(ErrorKind::InvalidArgument, "edge length has the wrong rank");
    if (!edge.length.in_monoid() || edge.length.is_zero()) {
      fail(ErrorKind::InvalidArgument, "edge lengths must be non-zero monoid elements");
    }
    if (edge.a > edge.b) std::swap(edge.a, edge.b);
    incident_[edge.a].push_back(e);
    if (edge.b != edge.a) incident_[edge.b].push_back(e);
  }
  std::set<int> markings;
  for (const auto& leg : legs_) {
    if (leg.vertex >= vertices_.size()) fail(ErrorKind::InvalidArgument, "leg vertex out of range");
    if (!markings.insert(leg.marking).second) fail(ErrorKind::InvalidArgument, "duplicate leg marking");
  }
  // Connectivity.
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (auto e : incident_[v]) {
      const std::size_t w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    fail(ErrorKind::InvalidArgument, "curve is not connected");
  }
}

std::optional<std::size_t> TropicalCurve::find_vertex(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t TropicalCurve::vertex_index(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) fail(ErrorKind::InvalidArgument, "no vertex with id " + id);
  return *v;
}

int TropicalCurve::valence(std::size_t v) const {
  int n = 0;
  for (auto e : incident_[v]) n += edges_[e].a == edges_[e].b ? 2 : 1;
  return n;
}

int TropicalCurve::num_legs(std::size_t v) const {
  return static_cast<int>(std::count_if(legs_.begin(), legs_.end(), [v](const Leg& l) { return l.vertex == v; }));
}

std::size_t TropicalCurve::other_end(std::size_t edge, std::size_t v) const {
  const Edge& e = edges_[edge];
  return e.a == v ? e.b : e.a;
}

int TropicalCurve::first_betti() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1;
}

int TropicalCurve::genus() const {
  int g = first_betti();
  for (const auto& v : vertices_) g += v.genus;
  return g;
}

// ---------------------------------------------------------------------------

void validate_pl(const TropicalCurve& curve, const PLFunction& f) {
  if (f.values.size() != curve.num_vertices() || f.edge_slopes.size() != curve.edges().size() ||
      f.leg_slopes.size() != curve.legs().size()) {
    fail(ErrorKind::InvalidPL, "PL function does not match the curve");
  }
  for (const auto& v : f.values) {
    if (v.rank() != curve.rank()) fail(ErrorKind::InvalidPL, "value has the wrong rank");
  }
  for (std::size_t e = 0; e < curve.edges().size(); ++e) {
    const Edge& edge = curve.edges()[e];
    if (f.values[edge.b] - f.values[edge.a] != edge.length * f.edge_slopes[e]) {
      fail(ErrorKind::InvalidPL, "slope mismatch on edge " + curve.vertices()[edge.a].id + "-" +
                                     curve.vertices()[edge.b].id);
    }
  }
  for (auto s : f.leg_slopes) {
    if (s < 0) fail(ErrorKind::InvalidPL, "leg slopes must be non-negative");
  }
}

bool Subgraph::contains_vertex(std::size_t v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Subgraph core(const TropicalCurve& curve) {
  if (curve.genus() != 1) fail(ErrorKind::WrongGenus, "curve has genus " + std::to_string(curve.genus()));
  Subgraph out;
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) {
    if (curve.vertices()[v].genus == 1) {
      out.vertices.push_back(v);
      return out;
    }
  }
  // b_1 = 1: prune leaves until only the cycle remains.
  std::vector<bool> removed(curve.num_vertices(), false);
  std::vector<int> degree(curve.num_vertices());
  std::deque<std::size_t> leaves;
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) {
    degree[v] = curve.valence(v);
    if (degree[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const std::size_t v = leaves.front();
    leaves.pop_front();
    if (removed[v]) continue;
    removed[v] = true;
    for (auto e : curve.incident(v)) {
      const std::size_t w = curve.other_end(e, v);
      if (!removed[w] && --degree[w] == 1) leaves.push_back(w);
    }
  }
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) {
    if (!removed[v]) out.vertices.push_back(v);
  }
  for (std::size_t e = 0; e < curve.edges().size(); ++e) {
    if (!removed[curve.edges()[e].a] && !removed[curve.edges()[e].b]) out.edges.push_back(e);
  }
  return out;
}

PLFunction lambda(const TropicalCurve& curve) {
  const Subgraph c = core(curve);
  PLFunction f;
  f.values.assign(curve.num_vertices(), MonoidElt(curve.rank()));
  f.edge_slopes.assign(curve.edges().size(), 0);
  f.leg_slopes.assign(curve.legs().size(), 0);
  std::vector<bool> seen(curve.num_vertices(), false);
  std::deque<std::size_t> queue;
  for (auto v : c.vertices) {
    seen[v] = true;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (auto e : curve.incident(v)) {
      const std::size_t w = curve.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      f.values[w] = f.values[v] + curve.edges()[e].length;
      f.edge_slopes[e] = curve.edges()[e].a == v ? 1 : -1;
      queue.push_back(w);
    }
  }
  return f;
}

RadialCheck is_radially_aligned(const TropicalCurve& curve) {
  const PLFunction f = lambda(curve);
  for (std::size_t i = 0; i < curve.num_vertices(); ++i) {
    for (std::size_t j = i + 1; j < curve.num_vertices(); ++j) {
      if (!comparable(f.values[i], f.values[j])) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

std::size_t Subdivision::inserted() const {
  return static_cast<std::size_t>(std::count(original_vertex.begin(), original_vertex.end(), std::nullopt));
}

Subdivision subdivide_at_levels(const TropicalCurve& curve, const std::vector<MonoidElt>& levels_in) {
  const PLFunction f = lambda(curve);
  std::vector<MonoidElt> levels = levels_in;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Vertex> vertices = curve.vertices();
  std::vector<std::optional<std::size_t>> original(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) original[v] = v;
  std::set<std::string> used;
  for (const auto& v : vertices) used.insert(v.id);
  int counter = 0;
  auto fresh_id = [&]() {
    std::string id;
    do {
      id = "s" + std::to_string(++counter);
    } while (used.count(id) != 0);
    used.insert(id);
    return id;
  };

  std::vector<Edge> edges;
  std::vector<std::size_t> original_edge;
  for (std::size_t e = 0; e < curve.edges().size(); ++e) {
    const Edge& edge = curve.edges()[e];
    if (edge.a == edge.b || f.edge_slopes[e] == 0) {
      edges.push_back(edge);
      original_edge.push_back(e);
      continue;
    }
    const std::size_t parent = f.edge_slopes[e] > 0 ? edge.a : edge.b;
    const std::size_t child = curve.other_end(e, parent);
    const MonoidElt& lo = f.values[parent];
    const MonoidElt& hi = f.values[child];
    std::vector<MonoidElt> cuts;
    for (const auto& c : levels) {
      if (lt(lo, c)) {
        if (leq(hi, c)) continue;
        if (!lt(c, hi)) {
          fail(ErrorKind::NonAligned, "level " + c.to_string() + " cannot be placed on edge " +
                                          curve.vertices()[parent].id + "-" + curve.vertices()[child].id);
        }
        cuts.push_back(c);
      } else if (lt(c, hi) && !leq(c, lo)) {
        fail(ErrorKind::NonAligned, "level " + c.to_string() + " crosses edge " + curve.vertices()[parent].id +
                                        "-" + curve.vertices()[child].id + " at an incomparable point");
      }
    }
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      if (!lt(cuts[i - 1], cuts[i])) fail(ErrorKind::NonAligned, "incomparable levels on one edge");
    }
    std::size_t prev = parent;
    MonoidElt prev_value = lo;
    for (const auto& c : cuts) {
      const std::size_t fresh = vertices.size();
      vertices.push_back(Vertex{fresh_id(), 0});
      original.push_back(std::nullopt);
      edges.push_back(Edge{prev, fresh, c - prev_value});
      original_edge.push_back(e);
      prev = fresh;
      prev_value = c;
    }
    edges.push_back(Edge{prev, child, hi - prev_value});
    original_edge.push_back(e);
  }
  return Subdivision{TropicalCurve(curve.rank(), std::move(vertices), std::move(edges), curve.legs()),
                     std::move(original), std::move(original_edge)};
}

Subdivision semistable_modification(const TropicalCurve& curve, const MonoidElt& delta) {
  const PLFunction f = lambda(curve);
  std::vector<MonoidElt> levels;
  for (const auto& v : f.values) {
    if (leq(v, delta)) levels.push_back(v);
  }
  return subdivide_at_levels(curve, levels);
}

AlignmentReport check_central_alignment(const TropicalCurve& curve, std::size_t v) {
  if (v >= curve.num_vertices()) fail(ErrorKind::InvalidArgument, "vertex index out of range");
  return check_central_alignment(curve, lambda(curve).values[v]);
}

AlignmentReport check_central_alignment(const TropicalCurve& curve, const MonoidElt& delta) {
  AlignmentReport report{core(curve), lambda(curve), delta, delta.is_zero(), {curve, {}, {}}, {}, {}, {}, {}};
  const auto& lam = report.lambda.values;
  if (std::find(lam.begin(), lam.end(), delta) == lam.end()) {
    fail(ErrorKind::InvalidArgument, "radius " + delta.to_string() + " is not a value of lambda");
  }

  std::vector<std::size_t> inside;
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) {
    if (leq(lam[v], delta)) inside.push_back(v);
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      if (!comparable(lam[inside[i]], lam[inside[j]])) {
        fail(ErrorKind::NotRadiallyAligned, "lambda(" + curve.vertices()[inside[i]].id + ") = " +
                                                lam[inside[i]].to_string() + " and lambda(" +
                                                curve.vertices()[inside[j]].id + ") = " +
                                                lam[inside[j]].to_string() + " are incomparable");
      }
    }
  }
  for (auto v : inside) {
    if (lam[v] == delta) continue;
    const int special = curve.valence(v) + curve.num_legs(v);
    const int needed = curve.vertices()[v].genus == 0 ? 3 : 1;
    if (special < needed) {
      fail(ErrorKind::NotStable, "vertex " + curve.vertices()[v].id + " is unstable inside the circle");
    }
  }

  std::vector<MonoidElt> levels;
  for (auto v : inside) levels.push_back(lam[v]);
  std::sort(levels.begin(), levels.end(), [](const MonoidElt& a, const MonoidElt& b) { return lt(a, b); });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  report.modified = subdivide_at_levels(curve, levels);
  report.modified_lambda = lambda(report.modified.curve);
  const TropicalCurve& mod = report.modified.curve;
  const auto& mlam = report.modified_lambda.values;
  std::vector<int> layer_of(mod.num_vertices(), -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < mod.num_vertices(); ++v) {
      if (mlam[v] == levels[i]) {
        layer.push_back(v);
        layer_of[v] = static_cast<int>(i);
      }
    }
    report.layers.push_back(std::move(layer));
    if (i > 0) report.parameters.push_back(levels[i] - levels[i - 1]);
  }
  report.total = MonoidElt(curve.rank());
  for (const auto& t : report.parameters) report.total += t;

  // Nodes between consecutive layers all carry t_i.
  for (const auto& edge : mod.edges()) {
    const int la = layer_of[edge.a], lb = layer_of[edge.b];
    if (la < 0 || lb < 0 || la == lb) continue;
    const int hi = std::max(la, lb);
    if (std::abs(la - lb) != 1 || edge.length != report.parameters[static_cast<std::size_t>(hi) - 1]) {
      fail(ErrorKind::NonAligned, "edge " + mod.vertices()[edge.a].id + "-" + mod.vertices()[edge.b].id +
                                      " does not join consecutive layers with length t_i");
    }
  }
  return report;
}

std::vector<std::int64_t> multidegree(const TropicalCurve& curve, const PLFunction& f) {
  validate_pl(curve, f);
  std::vector<std::int64_t> deg(curve.num_vertices(), 0);
  for (std::size_t e = 0; e < curve.edges().size(); ++e) {
    const Edge& edge = curve.edges()[e];
    if (edge.a == edge.b) continue;
    deg[edge.a] += f.edge_slopes[e];
    deg[edge.b] -= f.edge_slopes[e];
  }
  for (std::size_t l = 0; l < curve.legs().size(); ++l) deg[curve.legs()[l].vertex] += f.leg_slopes[l];
  return deg;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Subdivision& sub, const PLFunction& lam) {
  const TropicalCurve& curve = sub.curve;
  std::ostringstream os;
  os << "graph tropical {\n";
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) {
    const Vertex& vx = curve.vertices()[v];
    std::string label = quote(vx.id);
    label.insert(label.size() - 1, "\\ng=" + std::to_string(vx.genus) + "\\nlambda=" + lam.values[v].to_string());
    os << "  " << quote(vx.id) << " [label=" << label;
    if (!sub.original_vertex[v]) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : curve.edges()) {
    os << "  " << quote(curve.vertices()[e.a].id) << " -- " << quote(curve.vertices()[e.b].id)
       << " [label=" << quote(e.length.to_string()) << "];\n";
  }
  for (const auto& leg : curve.legs()) {
    const std::string name = "leg" + std::to_string(leg.marking);
    os << "  " << quote(name) << " [shape=point];\n";
    os << "  " << quote(curve.vertices()[leg.vertex].id) << " -- " << quote(name) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const TropicalCurve& curve) {
  Subdivision trivial{curve, {}, {}};
  for (std::size_t v = 0; v < curve.num_vertices(); ++v) trivial.original_vertex.push_back(v);
  for (std::size_t e = 0; e < curve.edges().size(); ++e) trivial.original_edge.push_back(e);
  return to_dot(trivial, lambda(curve));
}

}  // namespace artinres
