#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "posbraid/errors.hpp"

namespace posbraid {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline Rational half(long numerator) {
  Rational q(Integer(numerator), Integer(2));
  q.canonicalize();
  return q;
}

}  // namespace posbraid
