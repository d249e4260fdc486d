#include <algorithm>
#include <numeric>

#include "artinres/random.hpp"
#include "artinres/tropical.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

namespace {

MonoidElt m1(std::int64_t a) { return MonoidElt(std::vector<std::int64_t>{a}); }
MonoidElt m2(std::int64_t a, std::int64_t b) { return MonoidElt(std::vector<std::int64_t>{a, b}); }

std::vector<std::string> ids(const TropicalCurve& c, std::vector<std::size_t> vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(c.vertices()[v].id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("tropical") {
  TEST_CASE("monoid order") {
    CHECK(leq(m2(1, 0), m2(1, 1)));
    CHECK(lt(m2(1, 0), m2(1, 1)));
    CHECK_FALSE(comparable(m2(1, 0), m2(0, 1)));
    CHECK(m2(1, 2).to_string() == "(1,2)");
    CHECK(m1(5).to_string() == "5");
  }

  TEST_CASE("cores") {
    const auto star = oracle::star_curve(2);
    CHECK(ids(star, core(star).vertices) == std::vector<std::string>{"E"});

    const TropicalCurve cycle(1, {{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}},
                              {{0, 1, m1(1)}, {1, 2, m1(1)}, {2, 0, m1(1)}, {2, 3, m1(2)}});
    CHECK(ids(cycle, core(cycle).vertices) == std::vector<std::string>{"a", "b", "c"});
    CHECK(core(cycle).edges.size() == 3);
    CHECK(cycle.genus() == 1);

    const TropicalCurve g2(1, {{"a", 2}, {"b", 0}}, {{0, 1, m1(1)}});
    CHECK(error_of([&] { return core(g2); }) == ErrorKind::WrongGenus);
    CHECK(error_of([] { return TropicalCurve(1, {{"a", 1}, {"b", 0}}, {{0, 1, m1(0)}}); }) ==
          ErrorKind::InvalidArgument);
  }

  TEST_CASE("radius function") {
    const auto c = oracle::fig_layers1();
    const auto lam = lambda(c);
    CHECK(lam.values[c.vertex_index("E")] == m2(0, 0));
    CHECK(lam.values[c.vertex_index("R1")] == m2(1, 0));
    CHECK(lam.values[c.vertex_index("R2")] == m2(1, 1));
    CHECK(lam.values[c.vertex_index("R3")] == m2(1, 1));
    validate_pl(c, lam);

    const TropicalCurve path(1, {{"E", 1}, {"a", 0}, {"b", 0}}, {{0, 1, m1(2)}, {1, 2, m1(3)}});
    CHECK(lambda(path).values[2] == m1(5));
  }

  TEST_CASE("radial alignment") {
    CHECK(is_radially_aligned(oracle::tacnode_curve()).aligned);
    CHECK(is_radially_aligned(oracle::fig_layers1()).aligned);
    const TropicalCurve bad(2, {{"E", 1}, {"A", 0}, {"B", 0}}, {{0, 1, m2(1, 0)}, {0, 2, m2(0, 1)}});
    const auto check = is_radially_aligned(bad);
    CHECK_FALSE(check.aligned);
    REQUIRE(check.counterexample.has_value());
    CHECK(check.counterexample->first == 1);
    CHECK(check.counterexample->second == 2);
    const TropicalCurve wide(2, {{"E", 1}, {"A", 0}, {"B", 0}, {"C", 0}},
                             {{0, 1, m2(1, 0)}, {0, 2, m2(0, 1)}, {1, 3, m2(0, 1)}});
    CHECK(error_of([&] { return check_central_alignment(wide, 3); }) == ErrorKind::NotRadiallyAligned);
  }

  TEST_CASE("central alignment and layers") {
    const auto c = oracle::fig_layers1();
    const auto rep = check_central_alignment(c, c.vertex_index("R2"));
    const auto& mod = rep.modified.curve;
    REQUIRE(rep.layers.size() == 3);
    CHECK(ids(mod, rep.layers[0]) == std::vector<std::string>{"E"});
    CHECK(ids(mod, rep.layers[1]) == std::vector<std::string>{"R1"});
    CHECK(ids(mod, rep.layers[2]) == std::vector<std::string>{"R2", "R3"});
    CHECK(rep.delta == m2(1, 1));
    CHECK(rep.total == m2(1, 1));
    CHECK_FALSE(rep.degenerate);

    const auto zero = check_central_alignment(c, c.vertex_index("E"));
    CHECK(zero.degenerate);
    CHECK(zero.layers.size() == 1);

    // A genus-0 vertex of valence 2 strictly inside the circle.
    const TropicalCurve unstable(1, {{"E", 1}, {"M", 0}, {"R", 0}}, {{0, 1, m1(1)}, {1, 2, m1(1)}});
    CHECK(error_of([&] { return check_central_alignment(unstable, 2); }) == ErrorKind::NotStable);
    CHECK(error_of([&] { return check_central_alignment(c, m2(2, 2)); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("semistable modification") {
    const auto c = oracle::fig_semistable();
    const auto sub = semistable_modification(c, lambda(c).values[c.vertex_index("v2")]);
    CHECK(sub.inserted() == 1);
    const auto lam = lambda(sub.curve);
    for (std::size_t v = 0; v < sub.curve.num_vertices(); ++v) {
      if (!sub.original_vertex[v]) CHECK(lam.values[v] == lambda(c).values[c.vertex_index("v1")]);
    }
    const std::string dot = to_dot(sub, lam);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot == to_dot(sub, lam));

    const auto star = oracle::star_curve(3);
    CHECK(semistable_modification(star, m1(1)).inserted() == 0);

    const TropicalCurve edge(1, {{"E", 1}, {"R", 0}}, {{0, 1, m1(5)}});
    const auto split = subdivide_at_levels(edge, {m1(2), m1(3)});
    std::vector<std::int64_t> lengths;
    for (const auto& e : split.curve.edges()) lengths.push_back(e.length[0]);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<std::int64_t>{1, 2, 2});

    const TropicalCurve skew(2, {{"E", 1}, {"R", 0}}, {{0, 1, m2(2, 1)}});
    CHECK(error_of([&] { return subdivide_at_levels(skew, {m2(3, 0)}); }) == ErrorKind::NonAligned);
  }

  TEST_CASE("multidegree") {
    const auto c = oracle::fig_layers1();
    const auto md = multidegree(c, lambda(c));
    CHECK(md[c.vertex_index("E")] == 1);
    CHECK(md[c.vertex_index("R1")] == 1);
    CHECK(md[c.vertex_index("R2")] == -1);
    CHECK(md[c.vertex_index("R3")] == -1);

    PLFunction flat{std::vector<MonoidElt>(c.num_vertices(), m2(0, 0)), std::vector<std::int64_t>(c.edges().size(), 0),
                    {}};
    for (auto d : multidegree(c, flat)) CHECK(d == 0);

    PLFunction wrong = lambda(c);
    wrong.edge_slopes[0] = 2;
    CHECK(error_of([&] { validate_pl(c, wrong); }) == ErrorKind::InvalidPL);
  }

  TEST_CASE("random aligned curves") {
    artinres::random::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      const auto c = artinres::random::aligned_curve(rng);
      const auto lam = lambda(c);
      validate_pl(c, lam);
      CHECK(is_radially_aligned(c).aligned);
      const auto md = multidegree(c, lam);
      CHECK(std::accumulate(md.begin(), md.end(), std::int64_t{0}) == 0);

      // Subdividing at every vertex level keeps genus, b1 and edge totals.
      const auto sub = subdivide_at_levels(c, lam.values);
      CHECK(sub.curve.genus() == c.genus());
      CHECK(sub.curve.first_betti() == c.first_betti());
      std::vector<MonoidElt> totals(c.edges().size(), MonoidElt(c.rank()));
      for (std::size_t e = 0; e < sub.curve.edges().size(); ++e) {
        totals[sub.original_edge[e]] += sub.curve.edges()[e].length;
      }
      for (std::size_t e = 0; e < c.edges().size(); ++e) CHECK(totals[e] == c.edges()[e].length);
    }
  }

  TEST_CASE("layers partition the disc") {
    artinres::random::Rng rng(32);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
      const auto c = artinres::random::aligned_curve(rng);
      const auto lam = lambda(c);
      const std::size_t v = static_cast<std::size_t>(trial) % c.num_vertices();
      std::optional<AlignmentReport> found;
      try {
        found = check_central_alignment(c, v);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotStable);
        continue;
      }
      ++checked;
      const AlignmentReport& rep = *found;
      const auto& mod = rep.modified.curve;
      std::vector<int> seen(mod.num_vertices(), 0);
      for (const auto& layer : rep.layers) {
        for (auto w : layer) {
          ++seen[w];
          CHECK(leq(rep.modified_lambda.values[w], rep.delta));
          CHECK(rep.modified_lambda.values[w] == rep.modified_lambda.values[layer.front()]);
        }
      }
      for (std::size_t w = 0; w < mod.num_vertices(); ++w) {
        CHECK(seen[w] == (leq(rep.modified_lambda.values[w], rep.delta) ? 1 : 0));
      }
    }
    CHECK(checked > 0);
  }
}
