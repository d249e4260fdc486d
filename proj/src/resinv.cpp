#include "artinres/resinv.hpp"

#include <algorithm>
#include <vector>

#include "artinres/error.hpp"
#include "terms.hpp"

namespace artinres {

using namespace detail;

void IntLaurentSeries::set(int exponent, const mpz_class& value) {
  if (value == 0) {
    coeffs.erase(exponent);
  } else {
    coeffs[exponent] = value;
  }
}

IntLaurentSeries operator*(const IntLaurentSeries& a, const IntLaurentSeries& b) {
  auto window = [](Precision p, const IntLaurentSeries& other) -> std::int64_t {
    if (p.is_exact()) return kUnbounded;
    if (other.coeffs.empty()) return other.prec.is_exact() ? kUnbounded : std::int64_t{p.raw()} + other.prec.raw();
    return std::int64_t{p.raw()} + other.coeffs.begin()->first;
  };
  const std::int64_t bound = std::min(window(a.prec, b), window(b.prec, a));
  IntLaurentSeries out;
  out.prec = clamp_precision(bound);
  for (const auto& [ea, ca] : a.coeffs) {
    for (const auto& [eb, cb] : b.coeffs) {
      if (std::int64_t{ea} + eb >= bound) break;
      out.coeffs[ea + eb] += ca * cb;
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntLaurentSeries IntLaurentSeries::pow(unsigned e) const {
  IntLaurentSeries result;
  result.coeffs[0] = 1;
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::optional<unsigned> ord_p(const mpz_class& n, std::uint64_t p) {
  if (n == 0) return std::nullopt;
  mpz_class m = abs(n);
  unsigned k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------

PnForm::PnForm(LaurentSeries s, int level, std::uint64_t p) : s_(std::move(s)), level_(level), p_(p) {
  if (level < 0) fail(ErrorKind::InvalidArgument, "level must be non-negative");
  if (p_ == 0) p_ = s_.ring().field().characteristic();
  if (level > 0 && p_ == 0) fail(ErrorKind::WrongCharacteristic, "p^{-n} d with n > 0 needs a prime");
  if (p_ != 0) Field::prime(p_);
  modulus_ = 1;
  for (int i = 0; i < level; ++i) modulus_ *= static_cast<long>(p_);
  for (const auto& [e, c] : s_.terms()) {
    if (e % modulus_ != 0) {
      fail(ErrorKind::SupportNotDivisible,
           "exponent " + std::to_string(e) + " is not divisible by " + std::to_string(modulus_));
    }
  }
}

Differential p_minus_n_d(const PnForm& s) {
  const RingDescriptor& ring = s.series().ring();
  std::map<int, RingElement> out;
  for (const auto& [e, c] : s.series().terms()) {
    const long q = e / s.modulus();
    RingElement term = c.scaled(Scalar(ring.field(), q));
    if (!term.is_zero()) out.emplace(e - 1, std::move(term));
  }
  return Differential(LaurentSeries::from_terms(ring, out, s.series().precision() - 1));
}

LaurentSeries char0_log(const LaurentSeries& u, Precision target) {
  const RingDescriptor& ring = u.ring();
  if (!ring.field().is_rational()) fail(ErrorKind::WrongCharacteristic, "formal logarithm needs characteristic 0");
  if (!is_nil_unit(u)) fail(ErrorKind::NotNilUnit, "expected a nil-unit, got " + u.to_string());

  const RingElement a0_inv = u.terms().at(0).invert();
  Terms v = scale_terms(u.terms(), a0_inv);
  v.erase(0);
  const bool has_positive = !v.empty() && v.rbegin()->first > 0;

  const int spread = (ring.nilpotency_bound() - 1) * negative_slope(u);
  Precision result = target;
  if (!u.is_exact()) result = min(result, u.precision() + spread);
  if (result.is_exact() && has_positive) fail(ErrorKind::InsufficientPrecision, "log is an infinite series");

  const std::int64_t bound = raw64(result);
  const std::int64_t inner = bound == kUnbounded ? kUnbounded : bound - spread;
  // Without positive part v is nilpotent; otherwise the powers leave the
  // window once i exceeds inner plus the nilpotent slack.
  const std::int64_t max_i = has_positive ? inner + (ring.nilpotency_bound() - 1) * (1 - negative_slope(u)) + 1
                                          : ring.nilpotency_bound();
  Terms acc;
  Terms power{{0, RingElement::constant(ring, 1)}};
  for (std::int64_t i = 1; i <= max_i; ++i) {
    power = mul_terms(power, v, inner);
    if (power.empty()) break;
    Scalar coeff = Scalar(ring.field(), static_cast<long>(i)).inverse();
    if (i % 2 == 0) coeff = -coeff;
    add_into(acc, scale_terms(power, RingElement::constant(ring, coeff)), 0, bound);
  }
  return LaurentSeries::from_terms(ring, acc, result);
}

NilUnitSplit split_nil_unit(const LaurentSeries& u, Precision target) {
  const RingDescriptor& ring = u.ring();
  if (!is_nil_unit(u)) fail(ErrorKind::NotNilUnit, "expected a nil-unit, got " + u.to_string());
  if (!u.terms().at(0).constant_term().is_one() || u.terms().at(0).terms().size() != 1) {
    fail(ErrorKind::NotNilUnit, "nil-unit must have constant term 1");
  }

  const int depth = -negative_slope(u);
  if (u.is_exact() && u.highest_exponent().value_or(0) == 0) {
    // Already of the form 1 + x^{-1} f.
    const LaurentSeries one = LaurentSeries::constant(RingElement::constant(ring, 1));
    return {one, (u - one).shifted(1), one};
  }
  const int slack = (ring.nilpotency_bound() - 1) * depth;
  // Output precision of g; at least depth so that f is determined.
  Precision g_prec = target;
  if (!u.is_exact()) g_prec = min(g_prec, u.precision() - slack);
  if (g_prec.is_exact()) fail(ErrorKind::InsufficientPrecision, "g is an infinite series");
  const int needed = std::max(g_prec.raw(), depth + 1);
  if (!u.is_exact() && needed + slack > u.precision().raw()) {
    fail(ErrorKind::InsufficientPrecision, "u is known only below x^" + u.precision().to_string());
  }
  // Unknowns c_1..c_K of g_raw = 1 + sum c_m x^m. Rows m = 1..K read
  // (g_raw u)_m = 0. Entries below the diagonal are a_{m-j} with j < m,
  // the diagonal is a_0 = 1 and entries above lie in the nilpotent ideal J
  // spanned by the negative coefficients.
  const int K = needed - 1 + slack;
  auto a = [&](int e) { return u.coeff(e); };
  std::vector<RingElement> c(static_cast<std::size_t>(K) + 1, RingElement(ring));
  c[0] = RingElement::constant(ring, 1);
  // Every pass multiplies the error by an element of J, so nilpotency-bound
  // many passes settle the system.
  for (int round = 0; round <= ring.nilpotency_bound(); ++round) {
    bool changed = false;
    for (int m = 1; m <= K; ++m) {
      RingElement rhs(ring);
      for (int j = 0; j <= K; ++j) {
        if (j == m || m - j < -depth) continue;
        rhs -= c[j] * a(m - j);
      }
      if (!(rhs == c[m])) {
        c[m] = rhs;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::map<int, RingElement> raw;
  for (int m = 0; m < needed; ++m) raw.emplace(m, c[m]);
  LaurentSeries g_raw = LaurentSeries::from_terms(ring, raw, Precision::at(needed));

  // Constant and negative part of g_raw u only involve c_0..c_depth.
  RingElement e(ring);
  std::map<int, RingElement> tail;
  for (int m = -depth; m <= 0; ++m) {
    RingElement sum(ring);
    for (int j = 0; j <= m + depth; ++j) sum += c[j] * a(m - j);
    if (m == 0) {
      e = sum;
    } else {
      tail.emplace(m + 1, sum);
    }
  }
  const RingElement e_inv = e.invert();
  NilUnitSplit out{g_raw.scaled(e_inv).truncated(g_prec),
                   LaurentSeries::from_terms(ring, tail).scaled(e_inv), g_raw.truncated(g_prec)};
  return out;
}

RingElement canonical_form_char_p(const Differential& w) {
  const RingDescriptor& ring = w.ring();
  const std::uint64_t p = ring.field().characteristic();
  if (p == 0) fail(ErrorKind::WrongCharacteristic, "canonical form needs characteristic p");
  if (!w.precision().covers(-1)) {
    fail(ErrorKind::InsufficientPrecision, "canonical form needs precision >= 0, have " + w.precision().to_string());
  }
  // g dx = sum b_m x^m dlog x with b_m = g_{m-1}.
  Differential rest = w;
  while (true) {
    auto it = std::find_if(rest.coefficient().terms().begin(), rest.coefficient().terms().end(),
                           [](const auto& kv) { return kv.first != -1; });
    if (it == rest.coefficient().terms().end()) break;
    const int m = it->first + 1;
    long q = m;
    int n = 0;
    while (q % static_cast<long>(p) == 0) {
      q /= static_cast<long>(p);
      ++n;
    }
    // b_m x^m dlog x = p^{-n} d(b_m q^{-1} (x^{p^n})^q).
    const RingElement coeff = it->second.scaled(Scalar(ring.field(), q).inverse());
    const Differential image = p_minus_n_d(PnForm(LaurentSeries::monomial(coeff, m), n, p));
    rest = rest - image;
  }
  return rest.coefficient().coeff(-1);
}

bool verify_ord_bound(const IntLaurentSeries& u, int r, std::uint64_t p) {
  Field::prime(p);
  auto satisfies = [p](int n, const mpz_class& a, int bound) {
    const auto oa = ord_p(a, p);
    const auto on = ord_p(mpz_class(n), p);
    if (!oa || !on) return true;
    return static_cast<long>(*oa) + static_cast<long>(*on) >= bound;
  };
  for (const auto& [n, a] : u.coeffs) {
    if (!satisfies(n, a, r)) {
      fail(ErrorKind::PreconditionFailed, "coefficient of x^" + std::to_string(n) + " violates the order bound");
    }
  }
  const IntLaurentSeries up = u.pow(static_cast<unsigned>(p));
  return std::all_of(up.coeffs.begin(), up.coeffs.end(),
                     [&](const auto& kv) { return satisfies(kv.first, kv.second, r + 1); });
}

}  // namespace artinres
