#include "artinres/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "artinres/error.hpp"
#include "terms.hpp"

namespace artinres {

namespace {

using namespace detail;

std::string coeff_string(const RingElement& c) {
  const auto terms = c.terms();
  std::string s = c.to_string();
  if (terms.size() > 1) s = "(" + s + ")";
  return s;
}

}  // namespace

int Precision::value() const {
  if (is_exact()) fail(ErrorKind::InvalidArgument, "exact precision has no finite value");
  return v_;
}

Precision Precision::operator+(int k) const {
  if (is_exact()) return *this;
  return clamp_precision(static_cast<std::int64_t>(v_) + k);
}

std::string Precision::to_string() const { return is_exact() ? "inf" : std::to_string(v_); }

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(RingDescriptor ring, Precision prec) : ring_(std::move(ring)), prec_(prec) {}

LaurentSeries LaurentSeries::monomial(const RingElement& coeff, int exponent, Precision prec) {
  LaurentSeries s(coeff.ring(), prec);
  if (prec.covers(exponent)) s.set_coeff(exponent, coeff);
  return s;
}

LaurentSeries LaurentSeries::x_power(const RingDescriptor& ring, int exponent) {
  return monomial(RingElement::constant(ring, 1), exponent);
}

LaurentSeries LaurentSeries::constant(const RingElement& c) { return monomial(c, 0); }

LaurentSeries LaurentSeries::from_terms(const RingDescriptor& ring, const std::map<int, RingElement>& terms,
                                        Precision prec) {
  LaurentSeries s(ring, prec);
  for (const auto& [e, c] : terms) {
    if (!(c.ring() == ring)) fail(ErrorKind::MixedRings, "coefficient from another ring");
    if (prec.covers(e) && !c.is_zero()) s.terms_.emplace(e, c);
  }
  return s;
}

RingElement LaurentSeries::coeff(int exponent) const {
  if (!prec_.covers(exponent)) {
    fail(ErrorKind::InsufficientPrecision,
         "coefficient of x^" + std::to_string(exponent) + " is beyond precision " + prec_.to_string());
  }
  auto it = terms_.find(exponent);
  return it == terms_.end() ? RingElement(ring_) : it->second;
}

void LaurentSeries::set_coeff(int exponent, const RingElement& value) {
  if (!(value.ring() == ring_)) fail(ErrorKind::MixedRings, "coefficient from another ring");
  if (!prec_.covers(exponent)) {
    fail(ErrorKind::InsufficientPrecision, "cannot set x^" + std::to_string(exponent) + " beyond precision");
  }
  if (value.is_zero()) {
    terms_.erase(exponent);
  } else {
    terms_.insert_or_assign(exponent, value);
  }
}

std::optional<int> LaurentSeries::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentSeries::highest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

int LaurentSeries::valuation_bound() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return prec_.raw();
}

LaurentSeries LaurentSeries::truncated(Precision p) const {
  if (prec_ <= p) return *this;
  LaurentSeries s(ring_, p);
  s.terms_ = truncate_terms(terms_, raw64(p));
  return s;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries s(ring_, prec_ + k);
  for (const auto& [e, c] : terms_) s.terms_.emplace(e + k, c);
  return s;
}

LaurentSeries LaurentSeries::scaled(const RingElement& c) const {
  LaurentSeries s(ring_, prec_);
  s.terms_ = scale_terms(terms_, c);
  return s;
}

void LaurentSeries::check_same(const LaurentSeries& other) const {
  if (!(ring_ == other.ring_)) {
    fail(ErrorKind::MixedRings, "series over " + ring_.to_string() + " and " + other.ring_.to_string());
  }
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s(ring_, prec_);
  for (const auto& [e, c] : terms_) s.terms_.emplace(e, -c);
  return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  check_same(other);
  prec_ = min(prec_, other.prec_);
  terms_ = truncate_terms(std::move(terms_), raw64(prec_));
  add_into(terms_, other.terms_, 0, raw64(prec_));
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) { return *this += -other; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  a.check_same(b);
  auto shifted_window = [](Precision p, int v) -> std::int64_t {
    if (p.is_exact() || v == INT_MAX) return kUnbounded;
    return static_cast<std::int64_t>(p.raw()) + v;
  };
  const std::int64_t bound =
      std::min(shifted_window(a.prec_, b.valuation_bound()), shifted_window(b.prec_, a.valuation_bound()));
  LaurentSeries s(a.ring_, clamp_precision(bound));
  s.terms_ = mul_terms(a.terms_, b.terms_, bound);
  return s;
}

bool LaurentSeries::operator==(const LaurentSeries& other) const {
  return ring_ == other.ring_ && prec_ == other.prec_ && terms_ == other.terms_;
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  if (!(ring_ == other.ring_)) return false;
  const Precision p = min(prec_, other.prec_);
  return truncate_terms(terms_, raw64(p)) == truncate_terms(other.terms_, raw64(p));
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.to_string();
      continue;
    }
    if (!c.is_unit() || !c.constant_term().is_one() || c.terms().size() > 1) os << coeff_string(c) << "*";
    os << "x";
    if (e != 1) os << "^" << e;
  }
  if (!prec_.is_exact()) {
    if (!first) os << " + ";
    os << "O(x^" << prec_.raw() << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Differential Differential::dlog_x(const RingDescriptor& ring) {
  return Differential(LaurentSeries::x_power(ring, -1));
}

std::string Differential::to_string() const { return "(" + g_.to_string() + ") dx"; }

// ---------------------------------------------------------------------------

LaurentSeries derivative(const LaurentSeries& s) {
  std::map<int, RingElement> out;
  const Field field = s.ring().field();
  for (const auto& [e, c] : s.terms()) {
    RingElement term = c.scaled(Scalar(field, static_cast<long>(e)));
    if (!term.is_zero()) out.emplace(e - 1, std::move(term));
  }
  return LaurentSeries::from_terms(s.ring(), out, s.precision() - 1);
}

Differential d(const LaurentSeries& s) { return Differential(derivative(s)); }

RingElement residue(const Differential& w) {
  if (!w.precision().covers(-1)) {
    fail(ErrorKind::InsufficientPrecision, "residue needs precision >= 0, have " + w.precision().to_string());
  }
  return w.coefficient().coeff(-1);
}

bool is_laurent_unit(const LaurentSeries& s) {
  for (const auto& [e, c] : s.terms()) {
    if (c.is_unit()) return true;
  }
  return false;
}

int nu(const LaurentSeries& s) {
  // In a local ring every non-unit is nilpotent, so the first unit
  // coefficient decides.
  for (const auto& [e, c] : s.terms()) {
    if (c.is_unit()) return e;
  }
  fail(ErrorKind::NotALaurentUnit, "no unit coefficient below precision " + s.precision().to_string());
}

UnitDecomposition unit_decompose(const LaurentSeries& s) {
  const int n = nu(s);
  return {n, s.shifted(-n)};
}

bool is_nil_unit(const LaurentSeries& s) {
  if (!s.precision().covers(0)) return false;
  auto it = s.terms().find(0);
  if (it == s.terms().end() || !it->second.is_unit()) return false;
  for (const auto& [e, c] : s.terms()) {
    if (e >= 0) break;
    if (c.is_unit()) return false;
  }
  return true;
}

EndomorphismKind validate_endomorphism(const LaurentSeries& phi) {
  const int n = nu(phi);
  if (n == 1) return EndomorphismKind::Automorphism;
  if (n > 1) return EndomorphismKind::Endomorphism;
  return EndomorphismKind::Invalid;
}

LaurentSeries nil_unit_power(const LaurentSeries& w, int k, Precision target) {
  if (!is_nil_unit(w)) fail(ErrorKind::NotNilUnit, "expected a nil-unit, got " + w.to_string());
  const RingDescriptor& ring = w.ring();
  if (k == 0) return LaurentSeries::constant(RingElement::constant(ring, 1)).truncated(target);

  const int slope = negative_slope(w);
  const int spread = (ring.nilpotency_bound() - 1) * slope;  // <= 0
  Precision result = target;
  if (!w.is_exact()) result = min(result, w.precision() + spread);
  const bool finite = w.is_exact() && (k > 0 || only_constant(w));
  if (result.is_exact() && !finite) {
    fail(ErrorKind::InsufficientPrecision, "power " + std::to_string(k) + " is an infinite series");
  }

  const std::int64_t bound = raw64(result);
  const std::int64_t inner = bound == kUnbounded ? kUnbounded : bound - spread;
  const Terms base = k > 0 ? w.terms() : raw_inverse(w, inner);
  const Terms power = raw_powers(base, std::abs(k), inner).back();
  return LaurentSeries::from_terms(ring, power, result);
}

LaurentSeries inverse(const LaurentSeries& s, Precision target) {
  auto [n, w] = unit_decompose(s);
  return nil_unit_power(w, -1, target + n).shifted(-n);
}

LaurentSeries substitute(const LaurentSeries& s, const LaurentSeries& phi, Precision target) {
  if (!(s.ring() == phi.ring())) fail(ErrorKind::MixedRings, "substitute across rings");
  if (validate_endomorphism(phi) == EndomorphismKind::Invalid) {
    fail(ErrorKind::InvalidArgument, "x -> " + phi.to_string() + " is not a continuous endomorphism");
  }
  const RingDescriptor& ring = s.ring();
  auto [k, w] = unit_decompose(phi);
  const int spread = (ring.nilpotency_bound() - 1) * negative_slope(w);

  // Certified window.
  Precision result = target;
  if (!s.is_exact()) {
    result = min(result, clamp_precision(static_cast<std::int64_t>(k) * s.precision().raw() + spread));
  }
  int low = 0, high = 0;
  for (const auto& [i, c] : s.terms()) {
    low = std::min(low, i);
    high = std::max(high, i);
    if (i != 0 && !w.is_exact()) {
      result = min(result, clamp_precision(static_cast<std::int64_t>(k) * i + w.precision().raw() + spread));
    }
  }
  if (result.is_exact() && low < 0 && !(w.is_exact() && only_constant(w))) {
    fail(ErrorKind::InsufficientPrecision, "substitution needs a finite target precision");
  }

  const std::int64_t bound = raw64(result);
  const std::int64_t inner =
      bound == kUnbounded ? kUnbounded : bound - static_cast<std::int64_t>(k) * low - spread;
  const std::vector<Terms> pos = raw_powers(w.terms(), high, inner);
  const std::vector<Terms> neg = low < 0 ? raw_powers(raw_inverse(w, inner), -low, inner) : std::vector<Terms>{};

  Terms acc;
  for (const auto& [i, c] : s.terms()) {
    if (i == 0) {
      add_into(acc, Terms{{0, c}}, 0, bound);
      continue;
    }
    const Terms& power = i > 0 ? pos[i - 1] : neg[-i - 1];
    add_into(acc, scale_terms(power, c), k * i, bound);
  }
  return LaurentSeries::from_terms(ring, acc, result);
}

Differential pullback(const Differential& w, const LaurentSeries& phi, Precision target) {
  const LaurentSeries dphi = derivative(phi);
  if (dphi.is_zero() && dphi.is_exact()) return Differential(LaurentSeries(w.ring()));
  const int v = dphi.valuation_bound();
  const Precision inner = target.is_exact() ? target : target - v;
  const LaurentSeries g = substitute(w.coefficient(), phi, inner);
  return Differential((g * dphi).truncated(target));
}

Differential d_log(const LaurentSeries& s, Precision target) {
  auto [n, w] = unit_decompose(s);
  const RingDescriptor& ring = s.ring();
  LaurentSeries result = LaurentSeries::monomial(RingElement::constant(ring, n), -1);
  const LaurentSeries dw = derivative(w);
  if (!(dw.is_zero() && dw.is_exact())) {
    const int v = dw.valuation_bound();
    const Precision inner = target.is_exact() ? target : target - v;
    result += dw * nil_unit_power(w, -1, inner);
  }
  return Differential(result.truncated(target));
}

LaurentSeries compose_polynomial(const LaurentSeries& p, const LaurentSeries& value) {
  if (!(p.ring() == value.ring())) fail(ErrorKind::MixedRings, "compose across rings");
  if (!p.is_exact()) fail(ErrorKind::InvalidArgument, "compose_polynomial needs an exact polynomial");
  if (p.lowest_exponent().value_or(0) < 0) {
    fail(ErrorKind::InvalidArgument, "compose_polynomial needs non-negative exponents");
  }
  LaurentSeries result(p.ring());
  for (int e = p.highest_exponent().value_or(0); e >= 0; --e) {
    result = result * value;
    auto it = p.terms().find(e);
    if (it != p.terms().end()) result += LaurentSeries::constant(it->second);
  }
  return result;
}

}  // namespace artinres
