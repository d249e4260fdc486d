#pragma once

// Term-level kernels shared by the series modules.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <vector>

#include "artinres/error.hpp"
#include "artinres/laurent.hpp"

namespace artinres::detail {

using Terms = std::map<int, RingElement>;
constexpr std::int64_t kUnbounded = INT64_MAX;

inline Precision clamp_precision(std::int64_t v) {
  if (v >= INT_MAX) return Precision::exact();
  if (v <= INT_MIN) return Precision::at(INT_MIN);
  return Precision::at(static_cast<int>(v));
}

inline std::int64_t raw64(Precision p) { return p.is_exact() ? kUnbounded : p.raw(); }

// a * b on stored terms only, dropping exponents >= bound.
inline Terms mul_terms(const Terms& a, const Terms& b, std::int64_t bound) {
  Terms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      const std::int64_t e = static_cast<std::int64_t>(ea) + eb;
      if (e >= bound) break;
      RingElement prod = ca * cb;
      if (prod.is_zero()) continue;
      auto it = out.find(static_cast<int>(e));
      if (it == out.end()) {
        out.emplace(static_cast<int>(e), std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

inline void add_into(Terms& acc, const Terms& t, int shift, std::int64_t bound) {
  for (const auto& [e, c] : t) {
    const std::int64_t target = static_cast<std::int64_t>(e) + shift;
    if (target >= bound) break;
    auto it = acc.find(static_cast<int>(target));
    if (it == acc.end()) {
      acc.emplace(static_cast<int>(target), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

inline Terms truncate_terms(Terms t, std::int64_t bound) {
  if (bound >= INT_MAX) return t;
  t.erase(t.lower_bound(static_cast<int>(bound)), t.end());
  return t;
}

inline Terms scale_terms(const Terms& t, const RingElement& c) {
  Terms out;
  for (const auto& [e, a] : t) {
    RingElement prod = a * c;
    if (!prod.is_zero()) out.emplace(e, std::move(prod));
  }
  return out;
}

// Least non-positive exponent in the support of a nil-unit.
inline int negative_slope(const LaurentSeries& w) {
  auto low = w.lowest_exponent();
  return low ? std::min(*low, 0) : 0;
}

inline bool only_constant(const LaurentSeries& w) {
  return w.terms().size() == 1 && w.terms().begin()->first == 0;
}

// Powers w^1..w^count computed on stored terms, truncated at bound. Terms
// dropped this way cannot come back below bound + (N-1) * slope, where N is
// the nilpotency bound, because every negative coefficient is nilpotent.
inline std::vector<Terms> raw_powers(const Terms& base, int count, std::int64_t bound) {
  std::vector<Terms> out;
  Terms current;
  for (int i = 1; i <= count; ++i) {
    current = i == 1 ? truncate_terms(base, bound) : mul_terms(current, base, bound);
    out.push_back(current);
  }
  return out;
}

// w^{-1} for a nil-unit w, on stored terms, truncated at bound.
inline Terms raw_inverse(const LaurentSeries& w, std::int64_t bound) {
  const RingElement a0_inv = w.terms().at(0).invert();
  if (only_constant(w)) return truncate_terms(Terms{{0, a0_inv}}, bound);
  if (bound == kUnbounded) fail(ErrorKind::InsufficientPrecision, "inverse is an infinite series");

  // w = a0 (1 + eps) with eps having no constant term.
  Terms eps = scale_terms(w.terms(), a0_inv);
  eps.erase(0);
  Terms minus_eps;
  for (const auto& [e, c] : eps) minus_eps.emplace(e, -c);

  const RingDescriptor& ring = w.ring();
  Terms sum{{0, RingElement::constant(ring, 1)}};
  Terms power = sum;
  const int slack = (ring.nilpotency_bound() - 1) * (1 - negative_slope(w));
  const std::int64_t max_j = bound + slack + 1;
  for (std::int64_t j = 1; j <= max_j; ++j) {
    power = mul_terms(power, minus_eps, bound);
    if (power.empty()) break;
    add_into(sum, power, 0, bound);
  }
  return scale_terms(sum, a0_inv);
}

}  // namespace artinres::detail
