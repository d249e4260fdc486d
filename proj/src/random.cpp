#include "artinres/random.hpp"

namespace artinres::random {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Scalar scalar(const RingDescriptor& ring, Rng& rng) {
  const Field f = ring.field();
  if (f.is_rational()) return Scalar(f, mpq_class(uniform(rng, -5, 5), uniform(rng, 1, 4)));
  return Scalar(f, static_cast<long>(std::uniform_int_distribution<std::uint64_t>(0, f.characteristic() - 1)(rng)));
}

Scalar nonzero_scalar(const RingDescriptor& ring, Rng& rng) {
  Scalar s = scalar(ring, rng);
  while (s.is_zero()) s = scalar(ring, rng);
  return s;
}

RingElement element(const RingDescriptor& ring, Rng& rng) {
  RingElement a(ring);
  for (std::size_t i = 0; i < ring.dimension(); ++i) {
    if (uniform(rng, 0, 2) != 0) a.set_coeff(i, scalar(ring, rng));
  }
  return a;
}

RingElement unit(const RingDescriptor& ring, Rng& rng) {
  RingElement a = element(ring, rng);
  a.set_coeff(0, nonzero_scalar(ring, rng));
  return a;
}

RingElement nilpotent(const RingDescriptor& ring, Rng& rng) {
  RingElement a = element(ring, rng);
  a.set_coeff(0, Scalar(ring.field()));
  return a;
}

RingDescriptor ring(Field field, Rng& rng) {
  if (uniform(rng, 0, 1) == 0) return RingDescriptor::truncated_polynomial(field, uniform(rng, 1, 4));
  const int a = uniform(rng, 1, 3), b = uniform(rng, 1, 3);
  std::vector<Exponents> ideal{{a, 0}, {0, b}};
  if (uniform(rng, 0, 1) == 0) ideal.push_back({1, 1});
  return RingDescriptor::make(field, 2, ideal);
}

LaurentSeries series(const RingDescriptor& ring, int low, int high, Rng& rng) {
  std::map<int, RingElement> terms;
  for (int e = low; e <= high; ++e) {
    if (uniform(rng, 0, 2) != 0) terms.emplace(e, element(ring, rng));
  }
  return LaurentSeries::from_terms(ring, terms);
}

LaurentSeries automorphism(const RingDescriptor& ring, int depth, int height, Rng& rng) {
  std::map<int, RingElement> terms;
  for (int e = -depth; e <= 0; ++e) terms.emplace(e, nilpotent(ring, rng));
  terms.emplace(1, unit(ring, rng));
  for (int e = 2; e <= height; ++e) terms.emplace(e, element(ring, rng));
  return LaurentSeries::from_terms(ring, terms);
}

LaurentSeries nil_unit(const RingDescriptor& ring, int depth, int height, Rng& rng) {
  std::map<int, RingElement> terms;
  for (int e = -depth; e < 0; ++e) terms.emplace(e, nilpotent(ring, rng));
  terms.emplace(0, unit(ring, rng));
  for (int e = 1; e <= height; ++e) terms.emplace(e, element(ring, rng));
  return LaurentSeries::from_terms(ring, terms);
}

IntLaurentSeries int_series(int low, int high, int bound, Rng& rng) {
  IntLaurentSeries s;
  for (int e = low; e <= high; ++e) s.set(e, mpz_class(uniform(rng, -bound, bound)));
  return s;
}

TropicalCurve aligned_curve(Rng& rng, int max_vertices) {
  // Lengths are positive multiples of one direction g, so lambda is a chain.
  const std::size_t rank = static_cast<std::size_t>(uniform(rng, 1, 3));
  std::vector<std::int64_t> dir(rank);
  for (auto& x : dir) x = uniform(rng, 0, 2);
  dir[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rank) - 1))] += 1;
  const MonoidElt g(dir);
  auto length = [&] { return g * uniform(rng, 1, 3); };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  const int cycle = uniform(rng, 0, 3);  // 0: genus-one vertex
  if (cycle == 0) {
    vertices.push_back({"v0", 1});
  } else {
    for (int i = 0; i < cycle; ++i) vertices.push_back({"v" + std::to_string(i), 0});
    for (int i = 0; i < cycle; ++i) {
      edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % cycle), length()});
    }
  }
  const int total = uniform(rng, static_cast<int>(vertices.size()), std::max<int>(max_vertices, vertices.size()));
  while (static_cast<int>(vertices.size()) < total) {
    const std::size_t parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vertices.size()) - 1));
    const std::size_t child = vertices.size();
    vertices.push_back({"v" + std::to_string(child), 0});
    edges.push_back({parent, child, length()});
  }
  return TropicalCurve(rank, std::move(vertices), std::move(edges));
}

JetFunction jet(const RingDescriptor& ring, const std::vector<std::string>& branches, int jet_order, Rng& rng) {
  JetFunction f{element(ring, rng), {}, jet_order};
  for (const auto& b : branches) {
    auto& cs = f.tails[b];
    for (int k = 1; k < jet_order; ++k) cs.push_back(element(ring, rng));
  }
  return f;
}

}  // namespace artinres::random
