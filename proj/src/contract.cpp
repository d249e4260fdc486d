#include "artinres/contract.hpp"

#include <algorithm>

#include "artinres/error.hpp"

namespace artinres {

namespace {

void require_jet_order(int j) {
  if (j < 2) fail(ErrorKind::JetTooShort, "jet order " + std::to_string(j) + " is below 2");
}

LaurentSeries exact_series(const RingDescriptor& ring, const std::map<int, RingElement>& terms) {
  return LaurentSeries::from_terms(ring, terms);
}

std::optional<std::size_t> neighbor_in_layer(const TropicalCurve& curve, std::size_t v,
                                             const std::vector<std::size_t>& layer) {
  for (auto e : curve.incident(v)) {
    const std::size_t w = curve.other_end(e, v);
    if (std::find(layer.begin(), layer.end(), w) != layer.end()) return w;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

NodeChart::NodeChart(std::string branch, std::map<int, RingElement> gamma, int jet_order)
    : branch_(std::move(branch)), jet_order_(jet_order) {
  require_jet_order(jet_order);
  auto lead = gamma.find(-2);
  if (lead == gamma.end() || !lead->second.is_unit()) {
    fail(ErrorKind::ChartInvariant, "chart on " + branch_ + ": gamma_{-2} must be a unit");
  }
  const RingDescriptor ring = lead->second.ring();
  for (auto& [e, c] : gamma) {
    if (!(c.ring() == ring)) fail(ErrorKind::MixedRings, "chart coefficients from different rings");
    if (e < -2) fail(ErrorKind::ChartInvariant, "chart on " + branch_ + " has a pole of order above two");
    if (e == -1 && !c.is_zero()) {
      fail(ErrorKind::ChartInvariant, "chart on " + branch_ + " has an x^-1 term");
    }
    if (e != -1 && e < jet_order - 2 && !c.is_zero()) gamma_.emplace(e, c);
  }
}

LaurentSeries NodeChart::series() const {
  return LaurentSeries::from_terms(ring(), gamma_, Precision::at(jet_order_ - 2));
}

NodeChart NodeChart::truncated(int level) const {
  std::map<int, RingElement> g;
  for (const auto& [e, c] : gamma_) g.emplace(e, truncate(c, level));
  return NodeChart(branch_, std::move(g), jet_order_);
}

bool NodeChart::operator==(const NodeChart& o) const {
  return branch_ == o.branch_ && jet_order_ == o.jet_order_ && gamma_ == o.gamma_;
}

// ---------------------------------------------------------------------------

JetFunction JetFunction::constant_jet(const RingElement& c, const std::vector<std::string>& branches,
                                      int jet_order) {
  JetFunction f{c, {}, jet_order};
  for (const auto& b : branches) {
    f.tails[b] = std::vector<RingElement>(static_cast<std::size_t>(std::max(jet_order - 1, 0)), RingElement(c.ring()));
  }
  return f;
}

LaurentSeries JetFunction::on_branch(const std::string& branch) const {
  std::map<int, RingElement> terms{{0, constant}};
  auto it = tails.find(branch);
  if (it != tails.end()) {
    for (std::size_t k = 0; k < it->second.size(); ++k) terms.emplace(static_cast<int>(k) + 1, it->second[k]);
  }
  return LaurentSeries::from_terms(ring(), terms, Precision::at(jet_order));
}

JetFunction JetFunction::truncated(int level) const {
  JetFunction f{truncate(constant, level), {}, jet_order};
  for (const auto& [b, cs] : tails) {
    auto& out = f.tails[b];
    for (const auto& c : cs) out.push_back(truncate(c, level));
  }
  return f;
}

bool JetFunction::operator==(const JetFunction& o) const {
  return jet_order == o.jet_order && constant == o.constant && tails == o.tails;
}

JetFunction operator+(const JetFunction& a, const JetFunction& b) {
  if (a.jet_order != b.jet_order) fail(ErrorKind::InvalidArgument, "jet orders differ");
  JetFunction f{a.constant + b.constant, a.tails, a.jet_order};
  for (const auto& [br, cs] : b.tails) {
    auto& out = f.tails[br];
    out.resize(std::max(out.size(), cs.size()), RingElement(a.ring()));
    for (std::size_t k = 0; k < cs.size(); ++k) out[k] += cs[k];
  }
  return f;
}

JetFunction operator*(const JetFunction& a, const JetFunction& b) {
  if (a.jet_order != b.jet_order) fail(ErrorKind::InvalidArgument, "jet orders differ");
  JetFunction f{a.constant * b.constant, {}, a.jet_order};
  std::vector<std::string> branches;
  for (const auto& [br, cs] : a.tails) branches.push_back(br);
  for (const auto& [br, cs] : b.tails) {
    if (!a.tails.count(br)) branches.push_back(br);
  }
  for (const auto& br : branches) {
    const LaurentSeries prod = a.on_branch(br) * b.on_branch(br);
    auto& out = f.tails[br];
    for (int k = 1; k < a.jet_order; ++k) out.push_back(prod.coeff(k));
  }
  return f;
}

std::string TwistedValue::to_string() const { return "[" + twist.to_string() + "] " + payload.to_string(); }

// ---------------------------------------------------------------------------

std::vector<std::string> outer_branch_ids(const AlignmentReport& report) {
  std::vector<std::string> out;
  if (report.layers.size() < 2) return out;
  for (auto v : report.layers.back()) out.push_back(report.modified.curve.vertices()[v].id);
  return out;
}

CurveModel::CurveModel(RingDescriptor ring, TropicalCurve curve, std::size_t vertex,
                       std::map<std::string, RingElement> params, std::vector<NodeChart> charts, int jet_order)
    : ring_(std::move(ring)),
      curve_(std::move(curve)),
      vertex_(vertex),
      alignment_(check_central_alignment(curve_, vertex)),
      params_(std::move(params)),
      charts_(std::move(charts)),
      jet_order_(jet_order) {
  require_jet_order(jet_order_);
  for (int i = 1; i <= layer_count(); ++i) {
    const RingElement& t = parameter(i);
    if (!(t.ring() == ring_)) fail(ErrorKind::MixedRings, "parameter t" + std::to_string(i) + " from another ring");
  }
  const auto outer = outer_branch_ids(alignment_);
  for (const auto& c : charts_) {
    if (!(c.ring() == ring_)) fail(ErrorKind::MixedRings, "chart on " + c.branch() + " from another ring");
    if (std::find(outer.begin(), outer.end(), c.branch()) == outer.end()) {
      fail(ErrorKind::ChartInvariant, "chart on " + c.branch() + ", which is not an outer branch");
    }
  }
  for (const auto& b : outer) {
    const auto n = std::count_if(charts_.begin(), charts_.end(), [&](const NodeChart& c) { return c.branch() == b; });
    if (n != 1) fail(ErrorKind::ChartInvariant, "outer branch " + b + " needs exactly one chart");
  }
}

const RingElement& CurveModel::parameter(int i) const {
  auto it = params_.find("t" + std::to_string(i));
  if (it == params_.end()) fail(ErrorKind::UnassignedParameter, "t" + std::to_string(i) + " has no value");
  return it->second;
}

RingElement CurveModel::parameter_product(int i) const {
  RingElement p = RingElement::constant(ring_, 1);
  for (int k = 1; k <= i; ++k) p = p * parameter(k);
  return p;
}

std::vector<std::string> CurveModel::outer_branches() const {
  std::vector<std::string> out;
  for (const auto& c : charts_) out.push_back(c.branch());
  return out;
}

const NodeChart& CurveModel::chart(const std::string& branch) const {
  for (const auto& c : charts_) {
    if (c.branch() == branch) return c;
  }
  fail(ErrorKind::ChartInvariant, "no chart on branch " + branch);
}

bool CurveModel::injectivity_flag() const {
  for (int i = 1; i <= layer_count(); ++i) {
    if (parameter(i).terms().size() != 1) return false;
  }
  return true;
}

CurveModel CurveModel::truncated(int level) const {
  const TowerLevel tl(ring_, level);
  std::map<std::string, RingElement> params;
  for (const auto& [k, v] : params_) params.emplace(k, tl.apply(v));
  std::vector<NodeChart> charts;
  for (const auto& c : charts_) charts.push_back(c.truncated(level));
  return CurveModel(tl.quotient(), curve_, vertex_, std::move(params), std::move(charts), jet_order_);
}

// ---------------------------------------------------------------------------

TwistedValue res_twisted(const CurveModel& model, const NodeChart& chart, const JetFunction& f) {
  require_jet_order(f.jet_order);
  require_jet_order(chart.jet_order());
  const Differential w(f.on_branch(chart.branch()) * chart.series());
  const auto& mod = model.alignment().modified.curve;
  const std::size_t v = mod.vertex_index(chart.branch());
  return {model.alignment().modified_lambda.values[v], residue(w)};
}

RingElement untwist(const TwistedValue& v, const CurveModel& model) {
  const auto& layers = model.alignment().layers;
  const auto& lam = model.alignment().modified_lambda.values;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (!layers[i].empty() && lam[layers[i].front()] == v.twist) {
      return v.payload * model.parameter_product(static_cast<int>(i));
    }
  }
  fail(ErrorKind::InvalidArgument, "twist " + v.twist.to_string() + " is not a layer value");
}

TwistedValue res_m(const CurveModel& model, const JetFunction& f) {
  require_jet_order(f.jet_order);
  TwistedValue total{model.alignment().delta, RingElement(model.ring())};
  for (const auto& chart : model.charts()) total.payload += res_twisted(model, chart, f).payload;
  return total;
}

bool is_in_contraction(const CurveModel& model, const JetFunction& f) { return res_m(model, f).payload.is_zero(); }

JetFunction split(const CurveModel& model, const RingElement& a) {
  if (!annihilates(a, model.t())) {
    fail(ErrorKind::NotInAnnihilator, a.to_string() + " does not annihilate t = " + model.t().to_string());
  }
  JetFunction f = JetFunction::constant_jet(RingElement(model.ring()), model.outer_branches(), model.jet_order());
  if (!model.charts().empty()) {
    const NodeChart& first = model.charts().front();
    f.tails[first.branch()].at(0) = a * first.leading().invert();
  }
  return f;
}

RingElement core_total_residue(const CurveModel& model, const JetFunction& f) {
  const AlignmentReport& rep = model.alignment();
  const TropicalCurve& mod = rep.modified.curve;
  const int m = model.layer_count();
  std::vector<RingElement> acc(mod.num_vertices(), RingElement(model.ring()));
  if (m == 0) return RingElement(model.ring());

  // Residue on the branch side of each outer node, and its negative on the
  // inner side.
  for (const auto& chart : model.charts()) {
    const std::size_t branch = mod.vertex_index(chart.branch());
    const RingElement r = untwist(res_twisted(model, chart, f), model);
    const auto inner = neighbor_in_layer(mod, branch, rep.layers[static_cast<std::size_t>(m) - 1]);
    if (!inner) fail(ErrorKind::NonAligned, "outer branch " + chart.branch() + " has no inner neighbor");
    acc[*inner] -= r;
  }
  // A genus-0 component has total residue 0, so its inner node carries
  // minus the sum of the others; crossing the node flips the sign again.
  for (int i = m - 1; i >= 1; --i) {
    for (auto w : rep.layers[static_cast<std::size_t>(i)]) {
      const auto parent = neighbor_in_layer(mod, w, rep.layers[static_cast<std::size_t>(i) - 1]);
      if (!parent) fail(ErrorKind::NonAligned, "vertex " + mod.vertices()[w].id + " has no inner neighbor");
      const RingElement inner_side = -acc[w];
      acc[*parent] -= inner_side;
    }
  }
  RingElement total(model.ring());
  for (auto v : rep.layers.front()) total += acc[v];
  return total;
}

LiftResult lift(const CurveModel& model, const JetFunction& f, const CurveModel& next) {
  const int n = model.ring().nilpotency_bound() - 1;
  const TowerLevel tl(next.ring(), n);
  if (!(tl.quotient() == model.ring())) {
    fail(ErrorKind::IncompatibleCharts, "next level ring does not reduce to " + model.ring().to_string());
  }
  const CurveModel down = next.truncated(n);
  if (down.parameters() != model.parameters() || down.charts().size() != model.charts().size()) {
    fail(ErrorKind::IncompatibleCharts, "parameters or chart sets differ after truncation");
  }
  for (const auto& c : model.charts()) {
    if (!(down.chart(c.branch()) == c)) {
      fail(ErrorKind::IncompatibleCharts, "chart on " + c.branch() + " does not truncate to the level-n chart");
    }
  }

  const TwistedValue res = res_m(model, f);
  if (!res.payload.is_zero()) return Obstruction{res.payload, core_total_residue(model, f)};

  JetFunction up{tl.lift(f.constant), {}, f.jet_order};
  for (const auto& [b, cs] : f.tails) {
    auto& out = up.tails[b];
    for (const auto& c : cs) out.push_back(tl.lift(c));
  }
  if (next.charts().empty()) return up;

  // Per node: absorb the change of gamma_{-2} into c_1.
  for (const auto& chart : next.charts()) {
    auto& c1 = up.tails.at(chart.branch()).at(0);
    const RingElement v = chart.leading() - tl.lift(model.chart(chart.branch()).leading());
    c1 -= v * c1 * chart.leading().invert();
  }
  // What is left of sum gamma c_1 lies in m^{n+1}; put it on the first node.
  RingElement e(next.ring());
  for (const auto& chart : next.charts()) e += chart.leading() * up.tails.at(chart.branch()).at(0);
  const NodeChart& first = next.charts().front();
  up.tails.at(first.branch()).at(0) -= e * first.leading().invert();
  return up;
}

SingularityPresentation contraction_ring(const CurveModel& model, int jet_order) {
  if (model.ring().dimension() != 1) {
    fail(ErrorKind::NotResidueLevel, "contraction ring needs the residue field, have " + model.ring().to_string());
  }
  if (model.charts().empty()) fail(ErrorKind::InvalidArgument, "no outer nodes to contract");
  Functional zero_sum;
  for (std::size_t i = 0; i < model.charts().size(); ++i) {
    zero_sum.emplace(std::make_pair(static_cast<int>(i), 1), model.charts()[i].leading().constant_term());
  }
  return SingularityPresentation::from_conditions(model.ring().field(), static_cast<int>(model.charts().size()),
                                                  jet_order, {zero_sum});
}

NodeResidues node_residues(const NodeGerm& germ) {
  const RingDescriptor& ring = germ.t.ring();
  const LaurentSeries xp = exact_series(ring, germ.x_part);
  const LaurentSeries yp = exact_series(ring, germ.y_part);
  const LaurentSeries reg = exact_series(ring, germ.regular);
  const LaurentSeries t_over = LaurentSeries::monomial(germ.t, -1);  // t z^{-1}

  // On X: y = t x^{-1}.
  const LaurentSeries h_x = xp + compose_polynomial(yp, t_over);
  const Differential w_x(h_x * LaurentSeries::x_power(ring, -1) + reg);

  // On Y: x = t y^{-1}, dx/x = -dy/y and dx = -t y^{-2} dy.
  const LaurentSeries h_y = compose_polynomial(xp, t_over) + yp;
  const Differential w_y(-(h_y * LaurentSeries::x_power(ring, -1)) +
                         compose_polynomial(reg, t_over) * LaurentSeries::monomial(-germ.t, -2));
  return {residue(w_x), residue(w_y)};
}

}  // namespace artinres
