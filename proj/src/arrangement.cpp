#include "torusarr/arrangement.hpp"

#include "torusarr/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace torusarr {

namespace {

bool is_sign_normalized(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0)
      return x > 0;
  return false;
}

// Primitive normal with a positive leading entry; the offset follows the sign flip.
Subtorus normalize_integral(IntVec a, Rational c) {
  Int g = lattice::gcd_vec(a);
  if (g == 0)
    fail(ErrorCode::ZeroNormal, "all coefficients are zero");
  for (Int& x : a)
    x /= g;
  c /= Rational(g);
  if (!is_sign_normalized(a)) {
    for (Int& x : a)
      x = -x;
    c = -c;
  }
  return Subtorus(std::move(a), frac(c));
}

} // namespace

Subtorus::Subtorus(IntVec normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  offset_.canonicalize();
  if (normal_.empty())
    fail(ErrorCode::InvalidInput, "subtorus normal is empty");
  if (!lattice::is_primitive(normal_))
    fail(ErrorCode::InvalidInput, "subtorus normal " + to_string(normal_) + " is not primitive");
  if (!is_sign_normalized(normal_))
    fail(ErrorCode::InvalidInput, "subtorus normal " + to_string(normal_) + " has a negative leading entry");
  if (offset_ < 0 || offset_ >= 1)
    fail(ErrorCode::InvalidInput, "subtorus offset " + to_fraction_string(offset_) + " outside [0,1)");
}

std::strong_ordering operator<=>(const Subtorus& a, const Subtorus& b) {
  if (a.normal_.size() != b.normal_.size())
    return a.normal_.size() <=> b.normal_.size();
  for (std::size_t i = 0; i < a.normal_.size(); ++i) {
    int c = cmp(a.normal_[i], b.normal_[i]);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int c = cmp(a.offset_, b.offset_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Subtorus subtorus_from_equation(std::span<const Rational> coeffs, const Rational& c) {
  if (coeffs.empty())
    fail(ErrorCode::ZeroNormal, "empty coefficient vector");
  Int scale = 1;
  for (const Rational& q : coeffs)
    scale = lcm(scale, q.get_den());
  IntVec a;
  a.reserve(coeffs.size());
  for (const Rational& q : coeffs) {
    Rational scaled = q * Rational(scale);
    a.push_back(scaled.get_num());
  }
  return normalize_integral(std::move(a), c * Rational(scale));
}

Subtorus subtorus_from_equation(std::span<const Int> coeffs, const Rational& c) {
  if (coeffs.empty())
    fail(ErrorCode::ZeroNormal, "empty coefficient vector");
  return normalize_integral(IntVec(coeffs.begin(), coeffs.end()), c);
}

Subtorus coordinate_subtorus(std::size_t dim, std::size_t axis, const Rational& offset) {
  if (axis >= dim)
    fail(ErrorCode::InvalidInput, "axis out of range");
  IntVec a(dim);
  a[axis] = 1;
  return Subtorus(std::move(a), frac(offset));
}

void validate(const Arrangement& arr) {
  if (arr.dim < 1)
    fail(ErrorCode::DimensionMismatch, "arrangement dimension must be >= 1");
  std::map<Subtorus, std::size_t> seen;
  for (std::size_t i = 0; i < arr.tori.size(); ++i) {
    const Subtorus& s = arr.tori[i];
    if (s.dim() != arr.dim)
      fail(ErrorCode::DimensionMismatch, "subtorus " + std::to_string(i + 1) + " has " +
                                             std::to_string(s.dim()) + " coefficients in dimension " +
                                             std::to_string(arr.dim));
    auto [it, inserted] = seen.emplace(s, i);
    if (!inserted) {
      std::ostringstream os;
      os << "subtori " << it->second + 1 << " and " << i + 1 << " coincide: " << s;
      fail(ErrorCode::DuplicateSubtorus, os.str());
    }
  }
}

std::size_t max_parallel_count(const Arrangement& arr) {
  std::map<IntVec, std::size_t> classes;
  std::size_t m = 0;
  for (const Subtorus& s : arr.tori)
    m = std::max(m, ++classes[s.normal()]);
  return m;
}

Arrangement transform(const Arrangement& arr, const lattice::UnimodularMatrix& m) {
  if (m.dim() != arr.dim)
    fail(ErrorCode::DimensionMismatch, "matrix size does not match arrangement dimension");
  Arrangement out{arr.dim, {}};
  out.tori.reserve(arr.tori.size());
  for (const Subtorus& s : arr.tori)
    out.tori.push_back(normalize_integral(lattice::covector_times(s.normal(), m.matrix()), s.offset()));
  return out;
}

Arrangement translate(const Arrangement& arr, std::span<const Rational> t) {
  if (t.size() != arr.dim)
    fail(ErrorCode::DimensionMismatch, "translation vector has the wrong length");
  Arrangement out{arr.dim, {}};
  for (const Subtorus& s : arr.tori) {
    Rational c = s.offset();
    for (std::size_t i = 0; i < arr.dim; ++i)
      c -= Rational(s.normal()[i]) * t[i];
    out.tori.emplace_back(s.normal(), frac(c));
  }
  return out;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok)
    out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

Arrangement parse_tarr(std::string_view text) {
  Arrangement arr;
  bool have_dim = false;
  std::size_t line_no = 0;
  std::istringstream is{std::string(text)};
  std::string raw;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty())
      continue;
    if (!have_dim) {
      if (tokens.size() != 2 || tokens[0] != "dim")
        parse_fail(line_no, "expected 'dim <d>'");
      Int d;
      try {
        d = parse_int(tokens[1]);
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
      if (d < 1 || d > 64)
        parse_fail(line_no, "dimension must be in [1, 64]");
      arr.dim = d.get_ui();
      have_dim = true;
      continue;
    }
    auto colon = std::find(tokens.begin(), tokens.end(), ":");
    if (colon == tokens.end() || std::next(colon) == tokens.end() || std::next(colon, 2) != tokens.end())
      parse_fail(line_no, "expected 'a1 ... ad : p/q'");
    std::size_t ncoef = static_cast<std::size_t>(colon - tokens.begin());
    if (ncoef != arr.dim)
      fail(ErrorCode::DimensionMismatch, "line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(arr.dim) + " coefficients, got " +
                                              std::to_string(ncoef));
    try {
      IntVec a;
      for (auto it = tokens.begin(); it != colon; ++it)
        a.push_back(parse_int(*it));
      arr.tori.push_back(subtorus_from_equation(std::span<const Int>(a), parse_rational(tokens.back())));
    } catch (const Error& e) {
      parse_fail(line_no, e.what());
    }
  }
  if (!have_dim)
    fail(ErrorCode::ParseError, "missing 'dim <d>' header");
  validate(arr);
  return arr;
}

Arrangement read_tarr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tarr(buf.str());
}

std::string format_tarr(const Arrangement& arr) {
  std::ostringstream os;
  os << "dim " << arr.dim << '\n';
  for (const Subtorus& s : arr.tori) {
    for (const Int& x : s.normal())
      os << x << ' ';
    os << ": " << to_fraction_string(s.offset()) << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Subtorus& s) {
  os << to_string(s.normal()) << " . x = " << to_fraction_string(s.offset());
  return os;
}

} // namespace torusarr
