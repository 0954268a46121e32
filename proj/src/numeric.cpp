#include "torusarr/numeric.hpp"

#include "torusarr/error.hpp"

#include <cctype>
#include <sstream>

namespace torusarr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::NonPrimitive: return "NonPrimitive";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::ZeroNormal: return "ZeroNormal";
  case ErrorCode::DuplicateSubtorus: return "DuplicateSubtorus";
  case ErrorCode::NotUnimodular: return "NotUnimodular";
  case ErrorCode::ParallelNormals: return "ParallelNormals";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ResourceLimit: return "ResourceLimit";
  case ErrorCode::InvalidParams: return "InvalidParams";
  case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
  case ErrorCode::BadOffsets: return "BadOffsets";
  case ErrorCode::NotFeasible: return "NotFeasible";
  case ErrorCode::TheoremViolation: return "TheoremViolation";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational ratio(const Int& p, const Int& q) {
  if (q == 0)
    fail(ErrorCode::InvalidInput, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Int floor(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil(const Rational& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) {
  Rational r = q - Rational(floor(q));
  r.canonicalize();
  return r;
}

Int sign(const Int& v) { return Int(sgn(v)); }

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

Int literal_to_int(std::string_view s) {
  if (s[0] == '+')
    s.remove_prefix(1);
  return Int(std::string(s), 10);
}

} // namespace

Int parse_int(std::string_view text) {
  if (!is_integer_literal(text))
    fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return literal_to_int(text);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  Int d = literal_to_int(den);
  if (d == 0)
    fail(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational q(literal_to_int(num), d);
  q.canonicalize();
  return q;
}

IntVec make_int_vec(std::initializer_list<long> values) {
  IntVec v;
  v.reserve(values.size());
  for (long x : values)
    v.emplace_back(x);
  return v;
}

RatVec to_rational(std::span<const Int> v) {
  return RatVec(v.begin(), v.end());
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << to_fraction_string(v[i]);
  os << ')';
  return os.str();
}

} // namespace torusarr
