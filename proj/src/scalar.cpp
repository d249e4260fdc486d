#include "artinres/scalar.hpp"

#include <charconv>

#include "artinres/error.hpp"

namespace artinres {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NotALaurentUnit: return "NotALaurentUnit";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::NotNilUnit: return "NotNilUnit";
    case ErrorKind::SupportNotDivisible: return "SupportNotDivisible";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::WrongGenus: return "WrongGenus";
    case ErrorKind::NotRadiallyAligned: return "NotRadiallyAligned";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NonAligned: return "NonAligned";
    case ErrorKind::InvalidPL: return "InvalidPL";
    case ErrorKind::JetTooShort: return "JetTooShort";
    case ErrorKind::UnassignedParameter: return "UnassignedParameter";
    case ErrorKind::NotInAnnihilator: return "NotInAnnihilator";
    case ErrorKind::IncompatibleCharts: return "IncompatibleCharts";
    case ErrorKind::NotResidueLevel: return "NotResidueLevel";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::ChartInvariant: return "ChartInvariant";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    fail(ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar::Scalar(Field field) : field_(field) {
  if (field_.is_rational()) value_ = mpq_class(0);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational()) {
    value_ = mpq_class(value);
  } else {
    const long p = field_.characteristic();
    value_ = static_cast<std::uint64_t>(((value % p) + p) % p);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = q;
    return;
  }
  const auto p = field_.characteristic();
  const std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) fail(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
  value_ = reduce(value.get_num(), p) * inverse_mod(den, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    fail(ErrorKind::Parse, "bad coefficient literal '" + s + "'");
  }
  if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (const auto* m = std::get_if<std::uint64_t>(&value_)) return *m == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* m = std::get_if<std::uint64_t>(&value_)) return *m == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    fail(ErrorKind::MixedRings, "scalars over " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (auto* m = std::get_if<std::uint64_t>(&r.value_)) {
    *m = *m == 0 ? 0 : field_.characteristic() - *m;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same(other);
  if (auto* m = std::get_if<std::uint64_t>(&value_)) {
    *m = (*m + std::get<std::uint64_t>(other.value_)) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same(other);
  if (auto* m = std::get_if<std::uint64_t>(&value_)) {
    const auto p = field_.characteristic();
    *m = (*m + p - std::get<std::uint64_t>(other.value_)) % p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same(other);
  if (auto* m = std::get_if<std::uint64_t>(&value_)) {
    *m = *m * std::get<std::uint64_t>(other.value_) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::NotAUnit, "zero has no inverse");
  Scalar r(field_);
  if (const auto* m = std::get_if<std::uint64_t>(&value_)) {
    r.value_ = inverse_mod(*m, field_.characteristic());
  } else {
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  }
  return r;
}

bool Scalar::operator==(const Scalar& other) const {
  return field_ == other.field_ && value_ == other.value_;
}

mpq_class Scalar::to_rational() const {
  if (const auto* m = std::get_if<std::uint64_t>(&value_)) return mpq_class(static_cast<unsigned long>(*m));
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (const auto* m = std::get_if<std::uint64_t>(&value_)) return std::to_string(*m);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace artinres
