#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artinres/scalar.hpp"

namespace artinres {

using Exponents = std::vector<int>;

/// Presentation of a local artinian algebra A = k[u_1..u_r]/I with I a
/// monomial ideal containing a pure power of every variable.
///
/// The handle is cheap to copy; the standard-monomial basis and the
/// multiplication table are computed once at construction and shared.
class RingDescriptor {
 public:
  /// Throws NotArtinian if some variable has no pure power in the ideal.
  static RingDescriptor make(Field field, std::vector<std::string> vars, std::vector<Exponents> ideal);
  /// Variables are named u, v, w (or u1..ur beyond three).
  static RingDescriptor make(Field field, std::size_t num_vars, std::vector<Exponents> ideal);
  /// k[u]/(u^n).
  static RingDescriptor truncated_polynomial(Field field, int n, std::string var = "u");
  /// The residue field itself (no variables).
  static RingDescriptor residue_field(Field field);

  Field field() const;
  std::size_t num_vars() const;
  const std::vector<std::string>& var_names() const;
  /// Minimal monomial generators, sorted.
  const std::vector<Exponents>& ideal() const;

  std::size_t dimension() const;
  /// Standard monomials ordered by total degree; index 0 is the monomial 1.
  const std::vector<Exponents>& basis() const;
  int degree(std::size_t basis_index) const;
  std::optional<std::size_t> index_of(const Exponents& monomial) const;
  /// Least N with m^N = 0.
  int nilpotency_bound() const;
  /// Basis index of basis[i] * basis[j], or -1 when the product lies in I.
  int product_index(std::size_t i, std::size_t j) const;

  bool contains(const Exponents& monomial) const;

  std::string to_string() const;

  bool operator==(const RingDescriptor& other) const;

 private:
  struct Data;
  explicit RingDescriptor(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Element of a RingDescriptor, stored as a dense coefficient vector over the
/// standard-monomial basis.
class RingElement {
 public:
  explicit RingElement(RingDescriptor ring);

  static RingElement constant(const RingDescriptor& ring, const Scalar& value);
  static RingElement constant(const RingDescriptor& ring, long value);
  /// Zero if the monomial lies in the ideal.
  static RingElement monomial(const RingDescriptor& ring, const Exponents& exps, const Scalar& coeff);
  static RingElement variable(const RingDescriptor& ring, std::size_t index);

  const RingDescriptor& ring() const { return ring_; }
  Field field() const { return ring_.field(); }
  const Scalar& coeff(std::size_t basis_index) const { return coeffs_[basis_index]; }
  Scalar coeff(const Exponents& monomial) const;
  void set_coeff(std::size_t basis_index, const Scalar& value);
  const Scalar& constant_term() const { return coeffs_[0]; }

  bool is_zero() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }
  bool is_nilpotent() const { return coeffs_[0].is_zero(); }
  /// Least e with a^e = 0. Throws NotNilpotent for units.
  int nilpotency_index() const;
  /// Least total degree in the support, i.e. the largest j with a in m^j.
  /// Returns the nilpotency bound for zero.
  int order() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement scaled(const Scalar& s) const;
  RingElement pow(unsigned e) const;

  /// Throws NotAUnit.
  RingElement invert() const;

  bool operator==(const RingElement& other) const;

  std::vector<std::pair<Exponents, Scalar>> terms() const;
  std::string to_string() const;

 private:
  void check_same(const RingElement& other) const;

  RingDescriptor ring_;
  std::vector<Scalar> coeffs_;
};

bool is_unit(const RingElement& a);
bool is_nilpotent(const RingElement& a);
int nilpotency_index(const RingElement& a);
RingElement invert(const RingElement& a);

/// k-basis of Ann_A(t), computed as the kernel of multiplication by t.
std::vector<RingElement> annihilator(const RingElement& t);

/// True iff a * t == 0.
bool annihilates(const RingElement& a, const RingElement& t);

/// The quotient A -> A_n = A / m^{n+1}.
class TowerLevel {
 public:
  TowerLevel(RingDescriptor source, int level);

  const RingDescriptor& source() const { return source_; }
  const RingDescriptor& quotient() const { return quotient_; }
  int level() const { return level_; }

  RingElement apply(const RingElement& a) const;
  /// Canonical set-theoretic section: keeps the same standard monomials.
  RingElement lift(const RingElement& b) const;

 private:
  RingDescriptor source_;
  int level_;
  RingDescriptor quotient_;
};

/// Image of a in A / m^{n+1}.
RingElement truncate(const RingElement& a, int level);

}  // namespace artinres
