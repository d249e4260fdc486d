#pragma once

#include <random>
#include <string>
#include <vector>

#include "artinres/contract.hpp"
#include "artinres/laurent.hpp"
#include "artinres/resinv.hpp"
#include "artinres/tropical.hpp"

namespace artinres::random {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240521;

/// Small numerators and denominators over Q, uniform residues over F_p.
Scalar scalar(const RingDescriptor& ring, Rng& rng);
Scalar nonzero_scalar(const RingDescriptor& ring, Rng& rng);
RingElement element(const RingDescriptor& ring, Rng& rng);
RingElement unit(const RingDescriptor& ring, Rng& rng);
RingElement nilpotent(const RingDescriptor& ring, Rng& rng);

/// k[u]/(u^n) or a two-variable monomial quotient, over the given field.
RingDescriptor ring(Field field, Rng& rng);

/// Exact series with support in [low, high].
LaurentSeries series(const RingDescriptor& ring, int low, int high, Rng& rng);
/// Exact x -> phi(x) with nu(phi) = 1: nilpotent coefficients below x, a unit
/// at x and arbitrary terms above.
LaurentSeries automorphism(const RingDescriptor& ring, int depth, int height, Rng& rng);
/// Exact nil-unit with nilpotent tail down to x^{-depth} and terms up to
/// x^height.
LaurentSeries nil_unit(const RingDescriptor& ring, int depth, int height, Rng& rng);

IntLaurentSeries int_series(int low, int high, int bound, Rng& rng);

/// Genus-one tropical curve without legs whose lambda values form a chain.
TropicalCurve aligned_curve(Rng& rng, int max_vertices = 9);

JetFunction jet(const RingDescriptor& ring, const std::vector<std::string>& branches, int jet_order, Rng& rng);

}  // namespace artinres::random
