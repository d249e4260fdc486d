#pragma once

#include <initializer_list>
#include <utility>

#include "artinres/artin.hpp"
#include "artinres/error.hpp"
#include "artinres/laurent.hpp"
#include "doctest.h"

namespace th {

using namespace artinres;

inline RingDescriptor qu(int n) { return RingDescriptor::truncated_polynomial(Field::rationals(), n); }
inline RingDescriptor fu(std::uint64_t p, int n) { return RingDescriptor::truncated_polynomial(Field::prime(p), n); }

/// Element from (exponents, numerator, denominator) triples.
struct Term {
  Exponents e;
  long num;
  long den = 1;
};

inline RingElement el(const RingDescriptor& r, std::initializer_list<Term> terms) {
  RingElement a(r);
  for (const auto& t : terms) a += RingElement::monomial(r, t.e, Scalar(r.field(), mpq_class(t.num, t.den)));
  return a;
}

inline RingElement c(const RingDescriptor& r, long v) { return RingElement::constant(r, v); }

inline LaurentSeries ser(const RingDescriptor& r, std::initializer_list<std::pair<const int, RingElement>> terms,
                         Precision p = Precision::exact()) {
  return LaurentSeries::from_terms(r, std::map<int, RingElement>(terms), p);
}

inline LaurentSeries x(const RingDescriptor& r, int e = 1) { return LaurentSeries::x_power(r, e); }

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace th

namespace doctest {
template <>
struct StringMaker<artinres::ErrorKind> {
  static String convert(artinres::ErrorKind k) { return String(std::string(artinres::to_string(k)).c_str()); }
};
template <>
struct StringMaker<artinres::RingElement> {
  static String convert(const artinres::RingElement& a) { return String(a.to_string().c_str()); }
};
template <>
struct StringMaker<artinres::LaurentSeries> {
  static String convert(const artinres::LaurentSeries& a) { return String(a.to_string().c_str()); }
};
}  // namespace doctest
