#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace genlab {

/// Exact arbitrary-precision rational. All probabilities in the library use it.
using Rational = mpq_class;
using Natural = mpz_class;

/// 2^{-k}.
Rational pow2_neg(std::uint64_t k);

/// 2^k as a big natural.
Natural pow2(std::uint64_t k);

/// Parses "p/q", "p" or "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" is written as "p/1").
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace genlab
