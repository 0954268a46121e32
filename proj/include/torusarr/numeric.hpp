#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace torusarr {

using Int = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

/// p/q in canonical form; mpq arithmetic is only defined on canonical operands.
Rational ratio(const Int& p, const Int& q);

Int floor(const Rational& q);
Int ceil(const Rational& q);

// Representative of q modulo 1 in [0, 1).
Rational frac(const Rational& q);

Int sign(const Int& v);

// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational& q);

// Accepts "p/q", "p" and an optional leading sign; throws ParseError.
Rational parse_rational(std::string_view text);
Int parse_int(std::string_view text);

IntVec make_int_vec(std::initializer_list<long> values);
RatVec to_rational(std::span<const Int> v);

std::string to_string(std::span<const Int> v);
std::string to_string(std::span<const Rational> v);

} // namespace torusarr
