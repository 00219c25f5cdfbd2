#ifndef LIETAB_RATIONAL_HPP
#define LIETAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace lietab {

/// Exact arbitrary-precision rational, always stored in lowest terms.
using Rational = mpq_class;

inline bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p" or "p/q"; denominator always positive.
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

}  // namespace lietab

#endif
