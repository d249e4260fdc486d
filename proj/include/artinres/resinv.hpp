#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "artinres/laurent.hpp"

namespace artinres {

/// Laurent series with integer coefficients, used to check the p-adic
/// order estimates behind residue invariance in characteristic p.
struct IntLaurentSeries {
  std::map<int, mpz_class> coeffs;  // zero coefficients are not stored
  Precision prec = Precision::exact();

  void set(int exponent, const mpz_class& value);
  friend IntLaurentSeries operator*(const IntLaurentSeries& a, const IntLaurentSeries& b);
  IntLaurentSeries pow(unsigned e) const;
};

/// p-adic order; nullopt stands for +infinity (the order of 0).
std::optional<unsigned> ord_p(const mpz_class& n, std::uint64_t p);

/// A series in A((x^{p^n})), the domain of the derivation p^{-n} d.
class PnForm {
 public:
  /// p defaults to the characteristic of the coefficient field. Throws
  /// SupportNotDivisible if some exponent is not a multiple of p^n.
  PnForm(LaurentSeries s, int level, std::uint64_t p = 0);

  const LaurentSeries& series() const { return s_; }
  int level() const { return level_; }
  std::uint64_t prime() const { return p_; }
  long modulus() const { return modulus_; }

 private:
  LaurentSeries s_;
  int level_;
  std::uint64_t p_;
  long modulus_;
};

/// log(u) = F(v) with u = a_0 (1 + v), F(v) = sum (-1)^{i+1} v^i / i. Needs
/// characteristic 0 and a nil-unit u. The constant a_0 is divided out first,
/// so d(char0_log(u)) = d_log(u).
LaurentSeries char0_log(const LaurentSeries& u, Precision target = Precision::exact());

struct NilUnitSplit {
  /// g u = 1 + x^{-1} f.
  LaurentSeries g;
  /// Polynomial in x^{-1} with nilpotent coefficients.
  LaurentSeries f;
  /// Solution of the banded system with constant term 1; g is this series
  /// divided by the unit e = (g_raw u)_0.
  LaurentSeries g_raw;
};

/// Solves the banded system for g by elimination. u must be a nil-unit with
/// constant term 1.
NilUnitSplit split_nil_unit(const LaurentSeries& u, Precision target = Precision::exact());

/// x^{p^n q} -> q x^{p^n q - 1} dx, termwise.
Differential p_minus_n_d(const PnForm& s);

/// Reduces w modulo the images of all p^{-n} d and returns the surviving
/// coefficient of dlog x. Characteristic p only.
RingElement canonical_form_char_p(const Differential& w);

/// Checks ord_p(b_n) + ord_p(n) >= r + 1 for u^p = sum b_n x^n, given
/// ord_p(a_n) + ord_p(n) >= r for u. Throws PreconditionFailed when the
/// hypothesis fails.
bool verify_ord_bound(const IntLaurentSeries& u, int r, std::uint64_t p);

}  // namespace artinres
