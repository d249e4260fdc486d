#include <set>

#include "artinres/random.hpp"
#include "artinres/singular.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace th;

namespace {

const Field F2 = Field::prime(2);

SingularityPresentation cusp(Field f, int n) {
  return SingularityPresentation::from_conditions(f, 1, n, {{{{0, 1}, Scalar(f, 1)}}});
}

SingularityPresentation tacnode(Field f, int n) {
  return SingularityPresentation::from_conditions(f, 2, n, {{{{0, 1}, Scalar(f, 1)}, {{1, 1}, Scalar(f, 1)}}});
}

}  // namespace

TEST_SUITE("singular") {
  TEST_CASE("delta invariants") {
    CHECK(delta_invariant(cusp(Field::rationals(), 4)) == 1);
    CHECK(delta_invariant(node_presentation(Field::rationals(), 4)) == 1);
    CHECK(delta_invariant(tacnode(Field::rationals(), 5)) == 2);
    CHECK(cusp(Field::rationals(), 4).subalgebra_dimension(4) == 3);
  }

  TEST_CASE("invariant triples") {
    const auto c = classify_genus_one(cusp(Field::rationals(), 4));
    CHECK(c.m == 1);
    CHECK(c.delta == 1);
    CHECK(c.genus == 1);
    CHECK(c.class_name() == "cusp");
    CHECK(c.model() == "V(y^2-x^3)");

    const auto t = classify_genus_one(tacnode(Field::prime(5), 5));
    CHECK((t.m == 2 && t.delta == 2 && t.genus == 1));
    CHECK(t.cls == GenusOneClass::Tacnode);

    const auto n = node_presentation(Field::rationals(), 4);
    CHECK(branch_count(n) == 2);
    CHECK(genus(n) == 0);
    CHECK(classify_genus_one(n).cls == GenusOneClass::NotGenusOne);
    CHECK(classify_genus_one(n).class_name() == "not-genus-one");
  }

  TEST_CASE("lines") {
    const auto p = lines_presentation(Field::rationals(), 3, 4);
    const auto r = classify_genus_one(p);
    CHECK(r.m == 3);
    CHECK(r.delta == 3);
    CHECK(r.genus == 1);
    CHECK(r.class_name() == "3-lines");
    // Genus by direct count: delta - m + 1.
    const int dim = 3 * p.jet_order() - static_cast<int>(p.subalgebra_dimension(p.jet_order()));
    CHECK(dim - 3 + 1 == 1);
    CHECK(classify_genus_one(lines_presentation(Field::prime(5), 4, 4)).class_name() == "4-lines");
  }

  TEST_CASE("stabilization") {
    CHECK(error_of([] { return delta_invariant(cusp(Field::rationals(), 1)); }) == ErrorKind::NotStabilized);
    const auto deep = SingularityPresentation::from_conditions(Field::rationals(), 1, 3,
                                                               {{{{0, 3}, Scalar(Field::rationals(), 1)}}});
    CHECK(error_of([&] { return delta_invariant(deep); }) == ErrorKind::NotStabilized);
    // Products of lower terms reach x^3, so the condition cuts nothing.
    CHECK(delta_invariant(deep.with_jet_order(5)) == 0);
  }

  TEST_CASE("delta does not depend on the unit weights") {
    artinres::random::Rng rng(51);
    const auto k = RingDescriptor::residue_field(Field::prime(7));
    for (int n = 1; n <= 4; ++n) {
      std::set<int> seen;
      for (int trial = 0; trial < 5; ++trial) {
        Functional f;
        for (int b = 0; b < n; ++b) f.emplace(std::make_pair(b, 1), artinres::random::nonzero_scalar(k, rng));
        seen.insert(delta_invariant(SingularityPresentation::from_conditions(Field::prime(7), n, 5, {f})));
      }
      CHECK(seen == std::set<int>{n});
    }
  }

  TEST_CASE("dimension counts against brute force over F2") {
    artinres::random::Rng rng(52);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
      const int branches = 1 + trial % 3, N = 3 + trial % 2;
      std::vector<Functional> conds;
      std::vector<std::uint32_t> masks;
      for (int k = 0; k < 2; ++k) {
        Functional f;
        std::uint32_t mask = 0;
        for (int b = 0; b < branches; ++b) {
          for (int deg = 1; deg < N; ++deg) {
            if (coin(rng)) {
              f.emplace(std::make_pair(b, deg), Scalar(F2, 1));
              mask |= 1u << (b * N + deg);
            }
          }
        }
        if (mask) {
          conds.push_back(f);
          masks.push_back(mask);
        }
      }
      const auto p = SingularityPresentation::from_conditions(F2, branches, N, conds);
      const int codim = branches * N - static_cast<int>(p.subalgebra_dimension(N));
      CHECK(codim == oracle::delta_f2(branches, N, masks));
    }

    for (int n = 3; n <= 4; ++n) {
      const auto p = lines_presentation(F2, n, 3);
      std::vector<std::uint32_t> gens;
      for (const auto& g : p.generators()) {
        std::uint32_t mask = 0;
        for (std::size_t b = 0; b < g.size(); ++b) {
          for (const auto& [deg, v] : g[b]) {
            if (!v.is_zero() && deg < 3) mask |= 1u << (b * 3 + static_cast<std::size_t>(deg));
          }
        }
        gens.push_back(mask);
      }
      CHECK(n * 3 - static_cast<int>(p.subalgebra_dimension(3)) == oracle::delta_f2(n, 3, {}, gens, true));
    }
  }
}
