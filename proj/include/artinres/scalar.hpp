#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace artinres {

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An element of a Field. Rationals are exact (GMP); F_p elements are
/// canonical residues in [0, p).
class Scalar {
 public:
  explicit Scalar(Field field = Field::rationals());
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  /// Accepts "n", "-n" and "n/d".
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Throws NotAUnit on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& other) const;

  /// Rational value; for F_p the canonical representative.
  mpq_class to_rational() const;
  std::string to_string() const;

 private:
  void check_same(const Scalar& other) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace artinres
