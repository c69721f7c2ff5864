#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace vlpbw {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Binomial coefficient C(top, k) for any integer top and k >= 0.
inline Integer binomial(std::int64_t top, std::int64_t k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= Integer(static_cast<long>(top - i));
    den *= Integer(static_cast<long>(i + 1));
  }
  return num / den;
}

inline Rational make_rational(std::int64_t value) { return Rational(static_cast<long>(value)); }

}  // namespace vlpbw
