#include "artinres/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "artinres/error.hpp"

namespace artinres::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::Parse, what); }

void check_keys(const json& j, const std::string& ctx, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) parse_fail(ctx + ": expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) parse_fail(ctx + ": missing field \"" + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) parse_fail(ctx + ": unknown field \"" + key + "\"");
  }
}

void check_version(const json& j, const std::string& ctx) {
  if (!j.contains("version")) parse_fail(ctx + ": missing field \"version\"");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != kFormatVersion) {
    parse_fail(ctx + ": unsupported version " + j["version"].dump());
  }
}

int get_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) parse_fail(ctx + ": expected an integer, got " + j.dump());
  return j.get<int>();
}

int parse_int_key(const std::string& s, const std::string& ctx) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    parse_fail(ctx + ": bad integer key \"" + s + "\"");
  }
  if (pos != s.size()) parse_fail(ctx + ": bad integer key \"" + s + "\"");
  return v;
}

std::string id_from_json(const json& j, const std::string& ctx) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  parse_fail(ctx + ": vertex id must be a string or an integer");
}

MonoidElt monoid_from_json(const json& j, std::size_t rank, const std::string& ctx) {
  if (!j.is_array() || j.size() != rank) parse_fail(ctx + ": expected " + std::to_string(rank) + " entries");
  std::vector<std::int64_t> v;
  for (const auto& x : j) v.push_back(get_int(x, ctx));
  return MonoidElt(std::move(v));
}

json monoid_to_json(const MonoidElt& m) { return json(m.entries()); }

json ids_to_json(const TropicalCurve& curve, const std::vector<std::size_t>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(curve.vertices()[v].id);
  return out;
}

}  // namespace

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    parse_fail(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

RingDescriptor ring_from_json(const json& j) {
  check_keys(j, "ring", {"field", "vars", "ideal"});
  Field field = Field::rationals();
  const json& f = j["field"];
  if (f.is_string() && f.get<std::string>() == "Q") {
    field = Field::rationals();
  } else if (f.is_object()) {
    check_keys(f, "ring.field", {"Fp"});
    const int p = get_int(f["Fp"], "ring.field.Fp");
    if (p < 2) parse_fail("ring.field: bad characteristic");
    field = Field::prime(static_cast<std::uint64_t>(p));
  } else {
    parse_fail("ring.field: expected \"Q\" or {\"Fp\": p}");
  }
  if (!j["vars"].is_array()) parse_fail("ring.vars: expected an array");
  std::vector<std::string> vars;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) parse_fail("ring.vars: expected strings");
    vars.push_back(v.get<std::string>());
  }
  if (!j["ideal"].is_array()) parse_fail("ring.ideal: expected an array");
  std::vector<Exponents> ideal;
  for (const auto& g : j["ideal"]) {
    if (!g.is_array()) parse_fail("ring.ideal: generators are exponent arrays");
    Exponents e;
    for (const auto& x : g) e.push_back(get_int(x, "ring.ideal"));
    ideal.push_back(std::move(e));
  }
  return RingDescriptor::make(field, std::move(vars), std::move(ideal));
}

json to_json(const RingDescriptor& ring) {
  json j;
  const Field f = ring.field();
  j["field"] = f.is_rational() ? json("Q") : json{{"Fp", f.characteristic()}};
  j["vars"] = ring.var_names();
  j["ideal"] = ring.ideal();
  return j;
}

RingElement element_from_json(const json& j, const RingDescriptor& ring) {
  if (!j.is_object()) parse_fail("element: expected an object of monomial coefficients");
  RingElement a(ring);
  for (const auto& [key, value] : j.items()) {
    Exponents e;
    if (!key.empty()) {
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) e.push_back(parse_int_key(part, "element"));
    }
    if (e.size() != ring.num_vars()) parse_fail("element: monomial \"" + key + "\" has the wrong arity");
    for (int x : e) {
      if (x < 0) parse_fail("element: negative exponent in \"" + key + "\"");
    }
    Scalar c(ring.field());
    if (value.is_string()) {
      c = Scalar::parse(ring.field(), value.get<std::string>());
    } else if (value.is_number_integer()) {
      c = Scalar(ring.field(), value.get<long>());
    } else {
      parse_fail("element: coefficient must be a string or an integer");
    }
    a += RingElement::monomial(ring, e, c);
  }
  return a;
}

json to_json(const RingElement& a) {
  json j = json::object();
  for (const auto& [e, c] : a.terms()) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    j[key] = c.to_string();
  }
  return j;
}

LaurentSeries series_from_json(const json& j, const RingDescriptor& ring) {
  check_keys(j, "series", {"coeffs"}, {"prec"});
  Precision prec = Precision::exact();
  if (j.contains("prec")) {
    const json& p = j["prec"];
    if (p.is_string() && p.get<std::string>() == "inf") {
      prec = Precision::exact();
    } else {
      prec = Precision::at(get_int(p, "series.prec"));
    }
  }
  if (!j["coeffs"].is_object()) parse_fail("series.coeffs: expected an object");
  std::map<int, RingElement> terms;
  for (const auto& [key, value] : j["coeffs"].items()) {
    const int e = parse_int_key(key, "series.coeffs");
    if (!prec.covers(e)) parse_fail("series: coefficient of x^" + key + " at or beyond the precision");
    terms.emplace(e, element_from_json(value, ring));
  }
  return LaurentSeries::from_terms(ring, terms, prec);
}

json to_json(const LaurentSeries& s) {
  json coeffs = json::object();
  for (const auto& [e, c] : s.terms()) coeffs[std::to_string(e)] = to_json(c);
  return {{"coeffs", coeffs}, {"prec", s.is_exact() ? json("inf") : json(s.precision().raw())}};
}

TropicalCurve curve_from_json(const json& j) {
  check_keys(j, "curve", {"monoid_rank", "vertices", "edges"}, {"legs"});
  const int rank = get_int(j["monoid_rank"], "curve.monoid_rank");
  if (rank < 1) parse_fail("curve.monoid_rank must be positive");
  std::vector<Vertex> vertices;
  std::map<std::string, std::size_t> index;
  if (!j["vertices"].is_array()) parse_fail("curve.vertices: expected an array");
  for (const auto& v : j["vertices"]) {
    check_keys(v, "curve.vertices[]", {"id", "genus"});
    Vertex vx{id_from_json(v["id"], "curve.vertices[]"), get_int(v["genus"], "curve.vertices[].genus")};
    if (index.count(vx.id)) parse_fail("curve: duplicate vertex id " + vx.id);
    index[vx.id] = vertices.size();
    vertices.push_back(std::move(vx));
  }
  auto lookup = [&](const json& id, const std::string& ctx) {
    const std::string s = id_from_json(id, ctx);
    auto it = index.find(s);
    if (it == index.end()) parse_fail(ctx + ": unknown vertex " + s);
    return it->second;
  };
  std::vector<Edge> edges;
  if (!j["edges"].is_array()) parse_fail("curve.edges: expected an array");
  for (const auto& e : j["edges"]) {
    check_keys(e, "curve.edges[]", {"ends", "length"});
    if (!e["ends"].is_array() || e["ends"].size() != 2) parse_fail("curve.edges[].ends: expected two ids");
    edges.push_back(Edge{lookup(e["ends"][0], "curve.edges[]"), lookup(e["ends"][1], "curve.edges[]"),
                         monoid_from_json(e["length"], static_cast<std::size_t>(rank), "curve.edges[].length")});
  }
  std::vector<Leg> legs;
  if (j.contains("legs")) {
    if (!j["legs"].is_array()) parse_fail("curve.legs: expected an array");
    for (const auto& l : j["legs"]) {
      check_keys(l, "curve.legs[]", {"vertex", "marking"});
      legs.push_back(Leg{lookup(l["vertex"], "curve.legs[]"), get_int(l["marking"], "curve.legs[].marking")});
    }
  }
  return TropicalCurve(static_cast<std::size_t>(rank), std::move(vertices), std::move(edges), std::move(legs));
}

json to_json(const TropicalCurve& curve) {
  json vertices = json::array();
  for (const auto& v : curve.vertices()) vertices.push_back({{"id", v.id}, {"genus", v.genus}});
  json edges = json::array();
  for (const auto& e : curve.edges()) {
    edges.push_back({{"ends", {curve.vertices()[e.a].id, curve.vertices()[e.b].id}},
                     {"length", monoid_to_json(e.length)}});
  }
  json legs = json::array();
  for (const auto& l : curve.legs()) legs.push_back({{"vertex", curve.vertices()[l.vertex].id}, {"marking", l.marking}});
  return {{"monoid_rank", curve.rank()}, {"vertices", vertices}, {"edges", edges}, {"legs", legs}};
}

DifferentialFile differential_file_from_json(const json& j) {
  check_keys(j, "differential file", {"version", "ring", "differential"});
  check_version(j, "differential file");
  RingDescriptor ring = ring_from_json(j["ring"]);
  return {ring, Differential(series_from_json(j["differential"], ring))};
}

json to_json(const DifferentialFile& f) {
  return {{"version", kFormatVersion}, {"ring", to_json(f.ring)}, {"differential", to_json(f.form.coefficient())}};
}

JetRecord jet_from_json(const json& j, const RingDescriptor& ring, int jet_order) {
  check_keys(j, "jet", {"constant", "tails"}, {"level"});
  JetRecord rec{std::nullopt, JetFunction{RingElement(ring), {}, jet_order}};
  RingDescriptor r = ring;
  if (j.contains("level")) {
    rec.level = get_int(j["level"], "jet.level");
    if (*rec.level < 0) parse_fail("jet.level must be non-negative");
    r = TowerLevel(ring, *rec.level).quotient();
  }
  rec.jet.constant = element_from_json(j["constant"], r);
  if (!j["tails"].is_object()) parse_fail("jet.tails: expected an object keyed by branch");
  for (const auto& [branch, cs] : j["tails"].items()) {
    if (!cs.is_array()) parse_fail("jet.tails." + branch + ": expected an array");
    if (static_cast<int>(cs.size()) > jet_order - 1) {
      parse_fail("jet.tails." + branch + ": more coefficients than the jet order allows");
    }
    auto& out = rec.jet.tails[branch];
    for (const auto& c : cs) out.push_back(element_from_json(c, r));
    out.resize(static_cast<std::size_t>(std::max(jet_order - 1, 0)), RingElement(r));
  }
  return rec;
}

json to_json(const JetRecord& rec) {
  json tails = json::object();
  for (const auto& [b, cs] : rec.jet.tails) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(to_json(c));
    tails[b] = arr;
  }
  json j{{"constant", to_json(rec.jet.constant)}, {"tails", tails}};
  if (rec.level) j["level"] = *rec.level;
  return j;
}

CurveModel Scenario::model() const {
  return CurveModel(ring, curve, curve.vertex_index(vertex), parameters, charts, jet_order);
}

Scenario scenario_from_json(const json& j) {
  check_keys(j, "scenario", {"version", "ring", "curve", "vertex", "parameters", "charts"}, {"jet_order", "jets"});
  check_version(j, "scenario");
  Scenario s{ring_from_json(j["ring"]), curve_from_json(j["curve"]), id_from_json(j["vertex"], "scenario.vertex"),
             {}, {}, 4, {}};
  if (!s.curve.find_vertex(s.vertex)) parse_fail("scenario.vertex: unknown vertex " + s.vertex);
  if (j.contains("jet_order")) s.jet_order = get_int(j["jet_order"], "scenario.jet_order");
  if (!j["parameters"].is_object()) parse_fail("scenario.parameters: expected an object");
  for (const auto& [name, value] : j["parameters"].items()) {
    s.parameters.emplace(name, element_from_json(value, s.ring));
  }
  if (!j["charts"].is_array()) parse_fail("scenario.charts: expected an array");
  for (const auto& c : j["charts"]) {
    check_keys(c, "scenario.charts[]", {"branch", "gamma"});
    if (!c["gamma"].is_object()) parse_fail("scenario.charts[].gamma: expected an object");
    std::map<int, RingElement> gamma;
    for (const auto& [key, value] : c["gamma"].items()) {
      gamma.emplace(parse_int_key(key, "scenario.charts[].gamma"), element_from_json(value, s.ring));
    }
    s.charts.emplace_back(id_from_json(c["branch"], "scenario.charts[].branch"), std::move(gamma), s.jet_order);
  }
  if (j.contains("jets")) {
    if (!j["jets"].is_array()) parse_fail("scenario.jets: expected an array");
    for (const auto& jet : j["jets"]) s.jets.push_back(jet_from_json(jet, s.ring, s.jet_order));
  }
  return s;
}

json to_json(const Scenario& s) {
  json params = json::object();
  for (const auto& [k, v] : s.parameters) params[k] = to_json(v);
  json charts = json::array();
  for (const auto& c : s.charts) {
    json gamma = json::object();
    for (const auto& [e, g] : c.gamma()) gamma[std::to_string(e)] = to_json(g);
    charts.push_back({{"branch", c.branch()}, {"gamma", gamma}});
  }
  json j{{"version", kFormatVersion}, {"ring", to_json(s.ring)}, {"curve", to_json(s.curve)},
         {"vertex", s.vertex},         {"parameters", params},    {"charts", charts},
         {"jet_order", s.jet_order}};
  if (!s.jets.empty()) {
    json jets = json::array();
    for (const auto& jet : s.jets) jets.push_back(to_json(jet));
    j["jets"] = jets;
  }
  return j;
}

RingDescriptor ring_file_from_json(const json& j) {
  check_keys(j, "ring file", {"version", "ring"});
  check_version(j, "ring file");
  return ring_from_json(j["ring"]);
}

CurveFile curve_file_from_json(const json& j) {
  check_keys(j, "curve file", {"version", "curve"}, {"vertex"});
  check_version(j, "curve file");
  CurveFile f{curve_from_json(j["curve"]), std::nullopt};
  if (j.contains("vertex")) {
    f.vertex = id_from_json(j["vertex"], "curve file.vertex");
    if (!f.curve.find_vertex(*f.vertex)) parse_fail("curve file.vertex: unknown vertex " + *f.vertex);
  }
  return f;
}

json to_json(const CurveFile& f) {
  json j{{"version", kFormatVersion}, {"curve", to_json(f.curve)}};
  if (f.vertex) j["vertex"] = *f.vertex;
  return j;
}

JetRecord jet_file_from_json(const json& j, const RingDescriptor& ring, int jet_order) {
  check_keys(j, "jet file", {"version", "jet"});
  check_version(j, "jet file");
  return jet_from_json(j["jet"], ring, jet_order);
}

json to_json(const AlignmentReport& r) {
  const TropicalCurve& mod = r.modified.curve;
  json layers = json::array();
  for (const auto& layer : r.layers) layers.push_back(ids_to_json(mod, layer));
  json params = json::array();
  for (std::size_t i = 0; i < r.parameters.size(); ++i) {
    params.push_back({{"symbol", "t" + std::to_string(i + 1)}, {"value", monoid_to_json(r.parameters[i])}});
  }
  json inserted = json::array();
  json lam = json::object();
  for (std::size_t v = 0; v < mod.num_vertices(); ++v) {
    if (!r.modified.original_vertex[v]) inserted.push_back(mod.vertices()[v].id);
    lam[mod.vertices()[v].id] = monoid_to_json(r.modified_lambda.values[v]);
  }
  std::string product;
  for (std::size_t i = 0; i < r.parameters.size(); ++i) product += (i ? "*t" : "t") + std::to_string(i + 1);
  return {{"core", ids_to_json(mod, r.core.vertices)},
          {"delta", monoid_to_json(r.delta)},
          {"degenerate", r.degenerate},
          {"layers", layers},
          {"parameters", params},
          {"t", {{"symbol", product.empty() ? "1" : product}, {"value", monoid_to_json(r.total)}}},
          {"inserted", inserted},
          {"lambda", lam}};
}

json to_json(const SingularityReport& r) {
  return {{"m", r.m},           {"delta", r.delta}, {"genus", r.genus},
          {"class", r.class_name()}, {"model", r.model()}, {"jet_order", r.jet_order}};
}

}  // namespace artinres::io
