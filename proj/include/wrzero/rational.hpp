#pragma once

// Exact rational scalar used throughout the library.  The scalar itself is
// GMP's mpq_class (arbitrary precision, always kept in canonical form); this
// header adds string conversions and the NumTraits glue that lets Eigen dense
// matrices carry rational entries.

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace wrzero {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p/q", or a plain decimal such as "0.25" (converted exactly,
// so 0.1 becomes 1/10).  Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view text);

// Canonical "p" or "p/q" rendering with positive denominator.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace wrzero

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
