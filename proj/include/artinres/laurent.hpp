#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>

#include "artinres/artin.hpp"

namespace artinres {

/// Truncation order of a series. Coefficients at exponents >= value() are
/// unknown. The exact sentinel stands for a finite (polynomial) series.
class Precision {
 public:
  static constexpr Precision exact() { return Precision(kInf); }
  static constexpr Precision at(int v) { return Precision(v); }

  constexpr bool is_exact() const { return v_ == kInf; }
  /// Raw value; INT_MAX when exact.
  constexpr int raw() const { return v_; }
  int value() const;

  /// Saturating shift.
  Precision operator+(int k) const;
  Precision operator-(int k) const { return *this + (-k); }

  friend constexpr bool operator==(Precision a, Precision b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(Precision a, Precision b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Precision a, Precision b) { return a.v_ <= b.v_; }
  /// True iff exponent e is inside the known window.
  constexpr bool covers(int e) const { return e < v_; }

  std::string to_string() const;

 private:
  static constexpr int kInf = INT_MAX;
  constexpr explicit Precision(int v) : v_(v) {}
  int v_;
};

inline Precision min(Precision a, Precision b) { return a < b ? a : b; }

/// Element of A((x)) known up to a precision.
class LaurentSeries {
 public:
  explicit LaurentSeries(RingDescriptor ring, Precision prec = Precision::exact());

  static LaurentSeries monomial(const RingElement& coeff, int exponent, Precision prec = Precision::exact());
  static LaurentSeries x_power(const RingDescriptor& ring, int exponent);
  static LaurentSeries constant(const RingElement& c);
  static LaurentSeries from_terms(const RingDescriptor& ring, const std::map<int, RingElement>& terms,
                                  Precision prec = Precision::exact());

  const RingDescriptor& ring() const { return ring_; }
  Precision precision() const { return prec_; }
  bool is_exact() const { return prec_.is_exact(); }
  const std::map<int, RingElement>& terms() const { return terms_; }

  /// Throws InsufficientPrecision for exponents outside the window.
  RingElement coeff(int exponent) const;
  void set_coeff(int exponent, const RingElement& value);

  bool is_zero() const { return terms_.empty(); }
  std::optional<int> lowest_exponent() const;
  std::optional<int> highest_exponent() const;
  /// Lower bound for the valuation: lowest stored exponent, else the
  /// precision (INT_MAX for the exact zero).
  int valuation_bound() const;

  /// Drops everything at or above p and lowers the precision to p.
  LaurentSeries truncated(Precision p) const;
  /// x^k * s.
  LaurentSeries shifted(int k) const;
  LaurentSeries scaled(const RingElement& c) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  /// Same terms and same precision.
  bool operator==(const LaurentSeries& other) const;
  /// Equal on the common known window.
  bool agrees_with(const LaurentSeries& other) const;

  std::string to_string() const;

 private:
  void check_same(const LaurentSeries& other) const;

  RingDescriptor ring_;
  Precision prec_;
  std::map<int, RingElement> terms_;
};

/// g dx.
class Differential {
 public:
  explicit Differential(LaurentSeries coefficient) : g_(std::move(coefficient)) {}

  /// dx / x.
  static Differential dlog_x(const RingDescriptor& ring);

  const LaurentSeries& coefficient() const { return g_; }
  const RingDescriptor& ring() const { return g_.ring(); }
  Precision precision() const { return g_.precision(); }

  Differential operator-() const { return Differential(-g_); }
  friend Differential operator+(const Differential& a, const Differential& b) {
    return Differential(a.g_ + b.g_);
  }
  friend Differential operator-(const Differential& a, const Differential& b) {
    return Differential(a.g_ - b.g_);
  }
  /// f * (g dx).
  friend Differential operator*(const LaurentSeries& f, const Differential& w) {
    return Differential(f * w.g_);
  }

  bool operator==(const Differential& other) const { return g_ == other.g_; }
  bool agrees_with(const Differential& other) const { return g_.agrees_with(other.g_); }

  std::string to_string() const;

 private:
  LaurentSeries g_;
};

struct UnitDecomposition {
  int valuation = 0;
  LaurentSeries nil_unit;
};

enum class EndomorphismKind { Invalid, Endomorphism, Automorphism };

LaurentSeries derivative(const LaurentSeries& s);
/// df = f' dx.
Differential d(const LaurentSeries& s);

/// Coefficient of x^{-1} dx. Throws InsufficientPrecision when precision < 0.
RingElement residue(const Differential& w);

bool is_laurent_unit(const LaurentSeries& s);
/// Throws NotALaurentUnit.
int nu(const LaurentSeries& s);
UnitDecomposition unit_decompose(const LaurentSeries& s);
/// Constant coefficient a unit and every negative coefficient nilpotent.
bool is_nil_unit(const LaurentSeries& s);

EndomorphismKind validate_endomorphism(const LaurentSeries& phi);

/// Inverse of a Laurent unit, truncated at target. Throws
/// InsufficientPrecision when the inverse is an infinite series and target
/// is exact.
LaurentSeries inverse(const LaurentSeries& s, Precision target = Precision::exact());

/// s^k for a nil-unit s (k may be negative), certified up to the returned
/// precision and never beyond target.
LaurentSeries nil_unit_power(const LaurentSeries& w, int k, Precision target = Precision::exact());

/// s(phi(x)). phi must define an endomorphism.
LaurentSeries substitute(const LaurentSeries& s, const LaurentSeries& phi, Precision target = Precision::exact());

/// phi^*(g dx) = g(phi) phi' dx.
Differential pullback(const Differential& w, const LaurentSeries& phi, Precision target = Precision::exact());

/// ds / s for a Laurent unit s.
Differential d_log(const LaurentSeries& s, Precision target = Precision::exact());

/// p(value) for a series p with no negative exponents; precision follows the
/// generic product rule.
LaurentSeries compose_polynomial(const LaurentSeries& p, const LaurentSeries& value);

}  // namespace artinres
