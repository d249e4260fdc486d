#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artinres/artin.hpp"
#include "artinres/laurent.hpp"
#include "artinres/singular.hpp"
#include "artinres/tropical.hpp"

namespace artinres {

/// The differential near an outer node, written on the branch R:
/// [t](g_{-2} x^{-2} + g_0 + g_1 x + ...) dx.
class NodeChart {
 public:
  /// Throws ChartInvariant if g_{-2} is not a unit or a g_{-1} term is
  /// present.
  NodeChart(std::string branch, std::map<int, RingElement> gamma, int jet_order);

  const std::string& branch() const { return branch_; }
  const std::map<int, RingElement>& gamma() const { return gamma_; }
  const RingElement& leading() const { return gamma_.at(-2); }
  int jet_order() const { return jet_order_; }
  const RingDescriptor& ring() const { return gamma_.at(-2).ring(); }

  /// The bracketed series, known below x^{J-2}.
  LaurentSeries series() const;
  NodeChart truncated(int level) const;

  bool operator==(const NodeChart& o) const;

 private:
  std::string branch_;
  std::map<int, RingElement> gamma_;
  int jet_order_;
};

/// f = c + c_1 x + c_2 x^2 + ... on every outer branch, with a shared
/// constant.
struct JetFunction {
  RingElement constant;
  /// branch -> (c_1, ..., c_{J-1}).
  std::map<std::string, std::vector<RingElement>> tails;
  int jet_order = 4;

  static JetFunction constant_jet(const RingElement& c, const std::vector<std::string>& branches, int jet_order);

  const RingDescriptor& ring() const { return constant.ring(); }
  /// c + c_1 x + ..., known below x^J.
  LaurentSeries on_branch(const std::string& branch) const;
  JetFunction truncated(int level) const;

  bool operator==(const JetFunction& o) const;
  friend JetFunction operator+(const JetFunction& a, const JetFunction& b);
  friend JetFunction operator*(const JetFunction& a, const JetFunction& b);
};

/// [t_u] a, an element of O_S(-u).
struct TwistedValue {
  MonoidElt twist;
  RingElement payload;

  bool operator==(const TwistedValue& o) const { return twist == o.twist && payload == o.payload; }
  std::string to_string() const;
};

/// Base ring, aligned tropical curve, values of the smoothing parameters and
/// the charts at the outer nodes.
class CurveModel {
 public:
  /// Parameters are keyed "t1".."tm". Throws UnassignedParameter,
  /// ChartInvariant (missing or foreign charts) and the alignment errors.
  CurveModel(RingDescriptor ring, TropicalCurve curve, std::size_t vertex, std::map<std::string, RingElement> params,
             std::vector<NodeChart> charts, int jet_order = 4);

  const RingDescriptor& ring() const { return ring_; }
  const TropicalCurve& curve() const { return curve_; }
  std::size_t vertex() const { return vertex_; }
  const AlignmentReport& alignment() const { return alignment_; }
  int jet_order() const { return jet_order_; }
  int layer_count() const { return static_cast<int>(alignment_.layers.size()) - 1; }

  const std::map<std::string, RingElement>& parameters() const { return params_; }
  /// t_i, i = 1..m.
  const RingElement& parameter(int i) const;
  /// t_1 ... t_i.
  RingElement parameter_product(int i) const;
  /// t = t_1 ... t_m.
  RingElement t() const { return parameter_product(layer_count()); }

  /// Branch ids of the outer nodes, in chart order.
  std::vector<std::string> outer_branches() const;
  const std::vector<NodeChart>& charts() const { return charts_; }
  const NodeChart& chart(const std::string& branch) const;

  /// Every t_i is a scalar multiple of a single standard monomial.
  bool injectivity_flag() const;

  /// The same model over A / m^{level+1}.
  CurveModel truncated(int level) const;

 private:
  RingDescriptor ring_;
  TropicalCurve curve_;
  std::size_t vertex_;
  AlignmentReport alignment_;
  std::map<std::string, RingElement> params_;
  std::vector<NodeChart> charts_;
  int jet_order_;
};

/// The outer branches of a centrally aligned curve: vertices of L_m joined to
/// L_{m-1}, as ids of the semistable modification.
std::vector<std::string> outer_branch_ids(const AlignmentReport& report);

/// Res of f times the chart at its node, twisted by lambda of the branch.
/// Throws JetTooShort when the jet order is below 2.
TwistedValue res_twisted(const CurveModel& model, const NodeChart& chart, const JetFunction& f);
RingElement untwist(const TwistedValue& v, const CurveModel& model);
TwistedValue res_m(const CurveModel& model, const JetFunction& f);
bool is_in_contraction(const CurveModel& model, const JetFunction& f);

/// Jet with res_m = [t] a. Throws NotInAnnihilator unless a t = 0.
JetFunction split(const CurveModel& model, const RingElement& a);

/// Total residue on the core after passing every node between the layers.
RingElement core_total_residue(const CurveModel& model, const JetFunction& f);

struct Obstruction {
  RingElement payload;
  RingElement core_residue;
};

using LiftResult = std::variant<JetFunction, Obstruction>;

/// Lifts f from the model at level n to next, the model one level up.
/// Throws IncompatibleCharts when next does not truncate to model.
LiftResult lift(const CurveModel& model, const JetFunction& f, const CurveModel& next);

/// Presentation of the contracted singularity. The model must live over the
/// residue field. Throws NotResidueLevel.
SingularityPresentation contraction_ring(const CurveModel& model, int jet_order);

/// h = x_part(x) + y_part(y) on A[[x,y]]/(xy - t) and the differential
/// h dx/x + r(x) dx.
struct NodeGerm {
  RingElement t;
  std::map<int, RingElement> x_part;   // exponents >= 0
  std::map<int, RingElement> y_part;   // exponents >= 1
  std::map<int, RingElement> regular;  // exponents >= 0
};

struct NodeResidues {
  RingElement on_x;
  RingElement on_y;
};

/// Residues of the germ restricted to the two branches xy = t.
NodeResidues node_residues(const NodeGerm& germ);

}  // namespace artinres
