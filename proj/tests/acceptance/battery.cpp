#include "battery.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "artinres/contract.hpp"
#include "artinres/error.hpp"
#include "artinres/io.hpp"
#include "artinres/random.hpp"
#include "artinres/resinv.hpp"
#include "artinres/singular.hpp"
#include "oracles.hpp"

namespace battery {

using namespace artinres;
using artinres::random::Rng;
namespace rnd = artinres::random;

namespace {

// A failed check inside a criterion.
struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<NodeChart> random_charts(const std::vector<std::string>& branches, const std::vector<RingElement>& leading,
                                     int jet_order, Rng& rng, bool tails) {
  std::vector<NodeChart> out;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const RingDescriptor& ring = leading[i].ring();
    std::map<int, RingElement> g{{-2, leading[i]}};
    if (tails) {
      g.emplace(0, rnd::element(ring, rng));
      g.emplace(1, rnd::element(ring, rng));
    }
    out.emplace_back(branches[i], std::move(g), jet_order);
  }
  return out;
}

CurveModel make_model(const RingDescriptor& ring, const TropicalCurve& curve, const std::string& delta_vertex,
                      const std::vector<RingElement>& params, const std::vector<RingElement>& leading, int jet_order,
                      Rng& rng, bool tails = true) {
  const std::size_t v = curve.vertex_index(delta_vertex);
  const auto branches = outer_branch_ids(check_central_alignment(curve, v));
  std::map<std::string, RingElement> p;
  for (std::size_t i = 0; i < params.size(); ++i) p.emplace("t" + std::to_string(i + 1), params[i]);
  return CurveModel(ring, curve, v, std::move(p), random_charts(branches, leading, jet_order, rng, tails), jet_order);
}

std::vector<RingElement> random_units(const RingDescriptor& ring, std::size_t n, Rng& rng) {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rnd::unit(ring, rng));
  return out;
}

RingElement nonzero_nilpotent(const RingDescriptor& ring, Rng& rng) {
  if (ring.dimension() == 1) return RingElement(ring);
  RingElement t = rnd::nilpotent(ring, rng);
  while (t.is_zero()) t = rnd::nilpotent(ring, rng);
  return t;
}

// Makes the residue condition hold by adjusting c_1 on the first branch.
void force_membership(const CurveModel& model, JetFunction& f) {
  const auto& charts = model.charts();
  RingElement rest(model.ring());
  for (std::size_t i = 1; i < charts.size(); ++i) rest += charts[i].leading() * f.tails.at(charts[i].branch()).at(0);
  f.tails.at(charts[0].branch()).at(0) = -(rest * charts[0].leading().invert());
}

// ---------------------------------------------------------------------------

std::string residue_invariance(Rng& rng) {
  const std::vector<RingDescriptor> rings{
      RingDescriptor::truncated_polynomial(Field::rationals(), 4),
      RingDescriptor::truncated_polynomial(Field::prime(2), 3),
      RingDescriptor::truncated_polynomial(Field::prime(5), 3),
  };
  int oracle_checks = 0;
  for (const auto& ring : rings) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Differential w(rnd::series(ring, -4, 3, rng));
      const LaurentSeries phi = rnd::automorphism(ring, 2, 3, rng);
      const RingElement got = residue(pullback(w, phi, Precision::at(0)));
      expect(got == residue(w), "residue changed under " + phi.to_string() + " over " + ring.to_string());
      if (trial < 40) {
        const auto ref = oracle::pullback_residue(w.coefficient(), phi);
        for (std::size_t k = 0; k < ref.size(); ++k) {
          expect(got.coeff(Exponents{static_cast<int>(k)}) == ref[k], "pullback residue differs from the oracle");
        }
        ++oracle_checks;
      }
    }
  }
  return "3000 pairs, " + std::to_string(oracle_checks) + " oracle cross-checks";
}

std::string node_sign_rule(Rng& rng) {
  const std::vector<RingDescriptor> rings{
      RingDescriptor::truncated_polynomial(Field::rationals(), 3),
      RingDescriptor::truncated_polynomial(Field::prime(5), 3),
  };
  int count = 0;
  for (bool zero_t : {true, false}) {
    for (int trial = 0; trial < 200; ++trial) {
      const RingDescriptor& ring = rings[static_cast<std::size_t>(trial) % rings.size()];
      NodeGerm g{zero_t ? RingElement(ring) : nonzero_nilpotent(ring, rng), {}, {}, {}};
      for (int e = 0; e <= 3; ++e) g.x_part.emplace(e, rnd::element(ring, rng));
      for (int e = 1; e <= 3; ++e) g.y_part.emplace(e, rnd::element(ring, rng));
      for (int e = 0; e <= 2; ++e) g.regular.emplace(e, rnd::element(ring, rng));
      const NodeResidues r = node_residues(g);
      expect(r.on_x == -r.on_y, "branch residues " + r.on_x.to_string() + " and " + r.on_y.to_string());
      ++count;
    }
  }
  return std::to_string(count) + " germs";
}

std::string derivation_property(Rng& rng) {
  const RingDescriptor ring = RingDescriptor::truncated_polynomial(Field::prime(5), 3);
  const RingElement u = RingElement::variable(ring, 0);
  const CurveModel model =
      make_model(ring, oracle::tacnode_curve(), "R1", {u, u}, random_units(ring, 2, rng), 4, rng);
  const auto branches = model.outer_branches();
  for (int trial = 0; trial < 500; ++trial) {
    const JetFunction f = rnd::jet(ring, branches, 4, rng);
    const JetFunction g = rnd::jet(ring, branches, 4, rng);
    const RingElement lhs = res_m(model, f * g).payload;
    const RingElement rhs = f.constant * res_m(model, g).payload + g.constant * res_m(model, f).payload;
    expect(lhs == rhs, "Leibniz fails: " + lhs.to_string() + " vs " + rhs.to_string());
  }
  return "500 jet pairs";
}

std::string splitting(Rng& rng) {
  const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
  std::size_t elements = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const RingDescriptor ring = rnd::ring(fields[static_cast<std::size_t>(trial) % fields.size()], rng);
    const bool tacnode = trial % 2 == 1;
    std::vector<RingElement> params{nonzero_nilpotent(ring, rng)};
    if (tacnode) params.push_back(rnd::nilpotent(ring, rng));
    const CurveModel model = make_model(ring, tacnode ? oracle::tacnode_curve() : oracle::star_curve(2), "R1", params,
                                        random_units(ring, 2, rng), 4, rng);
    for (const auto& a : annihilator(model.t())) {
      const TwistedValue got = res_m(model, split(model, a));
      expect(got == TwistedValue{model.alignment().delta, a}, "res_m(split(a)) = " + got.to_string());
      ++elements;
    }
  }
  return "20 rings, " + std::to_string(elements) + " annihilator basis elements";
}

std::string tacnode_reproduction(Rng& rng) {
  const RingDescriptor ring = RingDescriptor::truncated_polynomial(Field::prime(5), 3);
  const RingElement u = RingElement::variable(ring, 0);
  const std::vector<std::vector<RingElement>> gammas{
      random_units(ring, 2, rng),
      {RingElement::constant(ring, 1), RingElement::constant(ring, 1)},
      {RingElement::constant(ring, 2), RingElement::constant(ring, 3)},
  };
  int members = 0, checked = 0;
  for (const auto& gamma : gammas) {
    const CurveModel model = make_model(ring, oracle::tacnode_curve(), "R1", {u, u}, gamma, 4, rng);
    expect(model.t() == u * u, "t should be u^2");
    const auto& charts = model.charts();
    for (long a = 0; a < 5; ++a) {
      for (long b = 0; b < 5; ++b) {
        JetFunction f = rnd::jet(ring, model.outer_branches(), 4, rng);
        const RingElement c1 = RingElement::constant(ring, a), c2 = RingElement::constant(ring, b);
        f.tails.at(charts[0].branch()).at(0) = c1;
        f.tails.at(charts[1].branch()).at(0) = c2;
        const bool predicate = (charts[0].leading() * c1 + charts[1].leading() * c2).is_zero();
        const bool member = is_in_contraction(model, f);
        expect(member == predicate, "verdict differs at c1 = (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        members += member;
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " c1 pairs, " + std::to_string(members) + " members";
}

std::string singularity_table(Rng& rng) {
  const RingDescriptor k = RingDescriptor::residue_field(Field::prime(5));
  const char* expected[] = {"cusp", "tacnode", "3-lines", "4-lines"};
  std::ostringstream detail;
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const CurveModel model =
          make_model(k, oracle::star_curve(n), "R1", {RingElement(k)}, random_units(k, static_cast<std::size_t>(n), rng),
                     2, rng, false);
      std::optional<SingularityReport> report;
      for (int N = 2; N + 1 <= 6 && !report; ++N) {
        try {
          report = classify_genus_one(contraction_ring(model, N));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotStabilized) throw;
        }
      }
      expect(report.has_value(), "delta not stabilized by jet order 6 for n = " + std::to_string(n));
      expect(report->m == n && report->delta == n && report->genus == 1,
             "n = " + std::to_string(n) + " gave (" + std::to_string(report->m) + ", " + std::to_string(report->delta) +
                 ", " + std::to_string(report->genus) + ")");
      expect(report->class_name() == expected[n - 1], "n = " + std::to_string(n) + " classified as " + report->class_name());
      if (trial == 0) detail << (n > 1 ? ", " : "") << report->class_name() << " at N=" << report->jet_order;
    }
  }
  return detail.str();
}

std::string tower_equivalence(Rng& rng) {
  const RingDescriptor top = RingDescriptor::truncated_polynomial(Field::prime(2), 3);
  const RingElement u = RingElement::variable(top, 0);
  struct Config {
    RingElement t;
    int level;
  };
  // t = u^2 at level 1 is left out: a tower stopping at u^3 cannot see past
  // the first order of t there, so the brute-force side is not an oracle.
  const std::vector<Config> configs{{u * u, 0}, {u, 0}, {u, 1}};
  std::vector<RingElement> units;
  for (const auto& a : oracle::all_elements(top)) {
    if (a.is_unit()) units.push_back(a);
  }
  long jets = 0, members = 0;
  for (const auto& cfg : configs) {
    for (const auto& g1 : units) {
      for (const auto& g2 : units) {
        const CurveModel full = make_model(top, oracle::star_curve(2), "R1", {cfg.t}, {g1, g2}, 2, rng, false);
        const CurveModel model = full.truncated(cfg.level);
        const auto& branches = model.outer_branches();
        const auto elements = oracle::all_elements(model.ring());
        for (const auto& c : elements) {
          for (const auto& c1 : elements) {
            for (const auto& c2 : elements) {
              JetFunction f{c, {{branches[0], {c1}}, {branches[1], {c2}}}, 2};
              const bool member = is_in_contraction(model, f);
              const bool liftable = oracle::tower_liftable(top, cfg.level, cfg.t, full.chart(branches[0]).leading(),
                                                           full.chart(branches[1]).leading(), {c, c1, c2});
              expect(member == liftable, "sets differ at t = " + cfg.t.to_string() + ", level " +
                                             std::to_string(cfg.level) + ", jet " + c.to_string() + ", " +
                                             c1.to_string() + ", " + c2.to_string());
              ++jets;
              members += member;
            }
          }
        }
      }
    }
  }
  return std::to_string(jets) + " jets over 3 configurations, " + std::to_string(members) + " in both sets";
}

std::string constructive_lift(Rng& rng) {
  const std::vector<RingDescriptor> rings{
      RingDescriptor::truncated_polynomial(Field::prime(5), 4),
      RingDescriptor::truncated_polynomial(Field::rationals(), 3),
      RingDescriptor::make(Field::prime(3), 2, {{2, 0}, {0, 2}}),
  };
  int steps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const RingDescriptor& ring = rings[static_cast<std::size_t>(trial) % rings.size()];
    const bool tacnode = trial % 2 == 0;
    std::vector<RingElement> params{nonzero_nilpotent(ring, rng)};
    if (tacnode) params.push_back(nonzero_nilpotent(ring, rng));
    const std::size_t n = tacnode ? 2 : 3;
    const CurveModel top = make_model(ring, tacnode ? oracle::tacnode_curve() : oracle::star_curve(3), "R1", params,
                                      random_units(ring, n, rng), 4, rng);
    const int top_level = ring.nilpotency_bound() - 1;
    CurveModel model = top.truncated(0);
    JetFunction f = rnd::jet(model.ring(), model.outer_branches(), 4, rng);
    force_membership(model, f);
    expect(is_in_contraction(model, f), "level-0 jet not in the contraction");
    for (int level = 0; level < top_level; ++level) {
      const CurveModel next = top.truncated(level + 1);
      const LiftResult r = lift(model, f, next);
      expect(std::holds_alternative<JetFunction>(r), "lift obstructed at level " + std::to_string(level));
      const JetFunction up = std::get<JetFunction>(r);
      expect(is_in_contraction(next, up), "lift leaves the contraction at level " + std::to_string(level + 1));
      expect(up.truncated(level) == f, "lift does not reduce to the jet at level " + std::to_string(level));
      model = next;
      f = up;
      ++steps;
    }
  }
  return "100 jets, " + std::to_string(steps) + " lift steps";
}

std::string log_and_char_p(Rng& rng) {
  // (a) d log in characteristic 0.
  const RingDescriptor q = RingDescriptor::truncated_polynomial(Field::rationals(), 3);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentSeries u = rnd::nil_unit(q, 2, 3, rng);
    const Differential lhs = d(char0_log(u, Precision::at(6)));
    const Differential rhs = d_log(u, Precision::at(6));
    expect(lhs.precision().covers(0) && rhs.precision().covers(0), "log precision too low");
    expect(lhs.agrees_with(rhs), "d log u differs: " + lhs.to_string() + " vs " + rhs.to_string());
  }
  // (b) splitting a nil-unit in characteristic p.
  for (std::uint64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      const RingDescriptor ring = rnd::ring(Field::prime(p), rng);
      LaurentSeries u = rnd::nil_unit(ring, 2, 3, rng);
      u = u.scaled(u.coeff(0).invert());
      const NilUnitSplit s = split_nil_unit(u, Precision::at(4));
      const LaurentSeries gu = s.g * u;
      expect(gu.precision().covers(0), "g u known only below x^" + gu.precision().to_string());
      const LaurentSeries rhs = LaurentSeries::constant(RingElement::constant(ring, 1)) + s.f.shifted(-1);
      expect(gu.agrees_with(rhs), "g u = " + gu.to_string() + " but f = " + s.f.to_string());
      for (const auto& [e, c] : s.f.terms()) expect(e <= 0 && c.is_nilpotent(), "f is not a nilpotent x^-1 polynomial");
    }
  }
  // (c) canonical form against the residue.
  for (int trial = 0; trial < 500; ++trial) {
    const RingDescriptor ring = rnd::ring(Field::prime(trial % 2 == 0 ? 2 : 3), rng);
    const Differential w(rnd::series(ring, -4, 4, rng));
    expect(canonical_form_char_p(w) == residue(w), "canonical form differs from the residue of " + w.to_string());
  }
  // (d) p-adic order bound through iterated p-th powers.
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t p = trial % 2 == 0 ? 2 : 3;
    IntLaurentSeries u = rnd::int_series(-2, 2, 4, rng);
    for (int r = 0; r < 3; ++r) {
      expect(verify_ord_bound(u, r, p), "order bound fails at r = " + std::to_string(r));
      u = u.pow(static_cast<unsigned>(p));
    }
  }
  return "log 200, split 600, canonical form 500, order bound 100";
}

std::string layer_extraction(Rng&) {
  const TropicalCurve curve = oracle::fig_layers1();
  const AlignmentReport rep = check_central_alignment(curve, curve.vertex_index("R2"));
  const auto& ids = rep.modified.curve.vertices();
  std::vector<std::vector<std::string>> layers;
  for (const auto& layer : rep.layers) {
    auto& names = layers.emplace_back();
    for (auto v : layer) names.push_back(ids[v].id);
    std::sort(names.begin(), names.end());
  }
  const std::vector<std::vector<std::string>> want{{"E"}, {"R1"}, {"R2", "R3"}};
  expect(layers == want, "unexpected layers");
  expect(rep.parameters.size() == 2 && rep.parameters[0] == MonoidElt({1, 0}) && rep.parameters[1] == MonoidElt({0, 1}),
         "unexpected smoothing parameters");
  expect(rep.total == MonoidElt({1, 1}), "t is not t1 t2");
  expect(io::to_json(rep).at("t").at("symbol") == "t1*t2", "t symbol is not t1*t2");

  const TropicalCurve semi = oracle::fig_semistable();
  const PLFunction lam = lambda(semi);
  const Subdivision sub = semistable_modification(semi, lam.values[semi.vertex_index("v2")]);
  expect(sub.inserted() == 1, "expected one inserted vertex, got " + std::to_string(sub.inserted()));
  const std::string dot = to_dot(sub, lambda(sub.curve));
  std::size_t dashed = 0;
  for (auto pos = dot.find("dashed"); pos != std::string::npos; pos = dot.find("dashed", pos + 1)) ++dashed;
  expect(dashed == 1, "DOT marks " + std::to_string(dashed) + " vertices as inserted");
  return "layers [E] [R1] [R2 R3], t = t1*t2, one inserted vertex";
}

std::string multidegree_conservation(Rng& rng) {
  std::size_t vertices = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const TropicalCurve c = rnd::aligned_curve(rng);
    const PLFunction lam = lambda(c);
    validate_pl(c, lam);
    std::int64_t sum = 0;
    for (auto m : multidegree(c, lam)) sum += m;
    expect(sum == 0, "multidegree sums to " + std::to_string(sum));
    vertices += c.num_vertices();
  }
  return "100 curves, " + std::to_string(vertices) + " vertices";
}

struct Entry {
  int id;
  const char* name;
  double limit;
  std::function<std::string(Rng&)> body;
};

}  // namespace

std::vector<CriterionResult> run_battery(std::uint64_t seed) {
  const std::vector<Entry> entries{
      {1, "residue invariance", 30, residue_invariance},
      {2, "node sign rule", 5, node_sign_rule},
      {3, "derivation property", 5, derivation_property},
      {4, "splitting", 5, splitting},
      {5, "tacnode reproduction", 5, tacnode_reproduction},
      {6, "singularity table", 10, singularity_table},
      {7, "tower lifting equivalence", 60, tower_equivalence},
      {8, "constructive lift", 10, constructive_lift},
      {9, "log and char-p algorithms", 60, log_and_char_p},
      {10, "tropical layer extraction", 1, layer_extraction},
      {11, "multidegree conservation", 5, multidegree_conservation},
  };
  std::vector<CriterionResult> out;
  for (const auto& s : entries) {
    Rng rng(seed + static_cast<std::uint64_t>(s.id));
    CriterionResult r{s.id, s.name, false, "", 0, s.limit};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = s.body(rng);
      r.pass = true;
    } catch (const Failure& f) {
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && r.seconds >= r.limit) {
      r.pass = false;
      r.detail += " (over the time limit)";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.limit);
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + " (" + timing + ") " +
         r.detail;
}

}  // namespace battery
