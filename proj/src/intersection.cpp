#include "torusarr/intersection.hpp"

#include "torusarr/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

namespace torusarr::intersection {

namespace {

void require_primitive(std::span<const Int> v) {
  if (!lattice::is_primitive(v))
    fail(ErrorCode::NonPrimitive, "normal " + to_string(v) + " is not primitive");
}

// Machine-word version of the fold in components_pair. Any Bezout chain gives the same value,
// so a native extended Euclid is fine. Returns nullopt when an input or an intermediate value
// leaves the int64 range; the caller then redoes the work in GMP.
std::optional<std::int64_t> components_small(std::span<const Int> a, std::span<const Int> b, std::size_t lead) {
  constexpr std::size_t kMaxDim = 16;
  const std::size_t d = a.size();
  if (d > kMaxDim)
    return std::nullopt;
  std::int64_t pa[kMaxDim], pb[kMaxDim], u[kMaxDim];
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t src = i == 0 ? lead : (i <= lead ? i - 1 : i);
    if (!a[src].fits_slong_p() || !b[src].fits_slong_p())
      return std::nullopt;
    pa[i] = a[src].get_si();
    pb[i] = b[src].get_si();
    // Keeps negation and the products below well defined.
    if (pa[i] == INT64_MIN || pb[i] == INT64_MIN)
      return std::nullopt;
  }
  auto mul = [](std::int64_t x, std::int64_t y, std::int64_t& r) { return !__builtin_mul_overflow(x, y, &r); };
  auto add = [](std::int64_t x, std::int64_t y, std::int64_t& r) { return !__builtin_add_overflow(x, y, &r); };
  auto sub = [](std::int64_t x, std::int64_t y, std::int64_t& r) { return !__builtin_sub_overflow(x, y, &r); };

  std::int64_t g = pa[0] < 0 ? -pa[0] : pa[0];
  u[0] = pa[0] < 0 ? -1 : 1;
  std::int64_t result = 0;
  for (std::size_t j = 1; j < d; ++j) {
    std::int64_t along = 0, p;
    for (std::size_t i = 0; i < j; ++i)
      if (!mul(pb[i], u[i], p) || !add(along, p, along))
        return std::nullopt;
    // Extended Euclid on (g, a_j) with g >= 0.
    std::int64_t r0 = g, r1 = pa[j], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1, tmp;
      tmp = r0 - q * r1, r0 = r1, r1 = tmp;
      if (!mul(q, s1, p) || !sub(s0, p, tmp))
        return std::nullopt;
      s0 = s1, s1 = tmp;
      if (!mul(q, t1, p) || !sub(t0, p, tmp))
        return std::nullopt;
      t0 = t1, t1 = tmp;
    }
    if (r0 < 0)
      r0 = -r0, s0 = -s0, t0 = -t0;
    const std::int64_t next = r0;
    std::int64_t lhs, rhs, term;
    if (!mul(pa[j], along, lhs) || !mul(pb[j], g, rhs) || !sub(lhs, rhs, term))
      return std::nullopt;
    if (next == 0 || term % next != 0)
      fail(ErrorCode::Internal, "non-exact division in the nested gcd formula");
    result = std::gcd(result, term / next);
    for (std::size_t i = 0; i < j; ++i)
      if (!mul(u[i], s0, u[i]))
        return std::nullopt;
    u[j] = t0;
    g = next;
  }
  return result;
}

} // namespace

Int components_coordinate(std::span<const Int> b) {
  if (b.size() < 2)
    fail(ErrorCode::InvalidInput, "intersection needs dimension >= 2");
  require_primitive(b);
  Int g = lattice::gcd_vec(b.subspan(1));
  if (g == 0)
    fail(ErrorCode::ParallelNormals, "normal " + to_string(b) + " is parallel to x_1 = 0");
  return g;
}

namespace {

// The formula proper; the caller guarantees a_1 != 0 and a chain built from a.
Int evaluate_formula(std::span<const Int> a, std::span<const Int> b, const lattice::BezoutChain& chain) {
  const std::size_t d = a.size();
  Int result = 0, along, term;
  Int prev_gcd = abs(a[0]);
  for (std::size_t j = 1; j < d; ++j) {
    // b expressed along the direction that combines a_1..a_j into prev_gcd.
    if (j == 1) {
      along = b[0];
      if (a[0] < 0)
        along = -along;
    } else {
      along = 0;
      const IntVec& u = chain.coeffs[j - 2];
      for (std::size_t i = 0; i < j; ++i)
        mpz_addmul(along.get_mpz_t(), b[i].get_mpz_t(), u[i].get_mpz_t());
    }
    const Int& next_gcd = chain.gcds[j - 1];
    mpz_mul(term.get_mpz_t(), a[j].get_mpz_t(), along.get_mpz_t());
    mpz_submul(term.get_mpz_t(), b[j].get_mpz_t(), prev_gcd.get_mpz_t());
    if (next_gcd == 0 || !mpz_divisible_p(term.get_mpz_t(), next_gcd.get_mpz_t()))
      fail(ErrorCode::Internal, "non-exact division " + term.get_str() + " / " + next_gcd.get_str() +
                                    " in the nested gcd formula");
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), next_gcd.get_mpz_t());
    mpz_gcd(result.get_mpz_t(), result.get_mpz_t(), term.get_mpz_t());
    prev_gcd = next_gcd;
  }
  return result;
}

} // namespace

Int nested_gcd_formula(std::span<const Int> a, std::span<const Int> b, const lattice::BezoutChain& chain) {
  const std::size_t d = a.size();
  if (d < 2 || b.size() != d)
    fail(ErrorCode::DimensionMismatch, "nested gcd formula needs equal lengths >= 2");
  if (a[0] == 0)
    fail(ErrorCode::InvalidInput, "nested gcd formula needs a_1 != 0");
  if (!chain.certifies(a))
    fail(ErrorCode::InvalidInput, "Bezout chain does not certify " + to_string(a));
  return evaluate_formula(a, b, chain);
}

Int components_pair(std::span<const Int> a, std::span<const Int> b) {
  const std::size_t d = a.size();
  if (b.size() != d)
    fail(ErrorCode::DimensionMismatch, "normals have different lengths");
  if (d < 2)
    fail(ErrorCode::InvalidInput, "intersection needs dimension >= 2");
  require_primitive(a);
  require_primitive(b);

  // Stable move of the first nonzero entry of a to the front, applied to both vectors.
  const std::size_t lead = static_cast<std::size_t>(
      std::find_if(a.begin(), a.end(), [](const Int& x) { return x != 0; }) - a.begin());
  auto at = [lead](std::span<const Int> v, std::size_t i) -> const Int& {
    return v[i == 0 ? lead : (i <= lead ? i - 1 : i)];
  };

  if (auto small = components_small(a, b, lead)) {
    if (*small == 0)
      fail(ErrorCode::ParallelNormals, "normals " + to_string(a) + " and " + to_string(b) + " are parallel");
    return Int(static_cast<long>(*small));
  }

  // Same fold as bezout_chain, but keeping only the current certificate u. Scratch values are
  // reused across calls so the hot loop does not allocate.
  thread_local IntVec u;
  thread_local Int g, next, s, t, along, term, result;
  u.resize(d);
  g = abs(a[lead]);
  u[0] = a[lead] < 0 ? -1 : 1;
  result = 0;
  for (std::size_t j = 1; j < d; ++j) {
    const Int& aj = at(a, j);
    const Int& bj = at(b, j);
    along = 0;
    for (std::size_t i = 0; i < j; ++i)
      mpz_addmul(along.get_mpz_t(), at(b, i).get_mpz_t(), u[i].get_mpz_t());
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), aj.get_mpz_t());
    mpz_mul(term.get_mpz_t(), aj.get_mpz_t(), along.get_mpz_t());
    mpz_submul(term.get_mpz_t(), bj.get_mpz_t(), g.get_mpz_t());
    if (!mpz_divisible_p(term.get_mpz_t(), next.get_mpz_t()))
      fail(ErrorCode::Internal, "non-exact division " + term.get_str() + " / " + next.get_str() +
                                    " in the nested gcd formula");
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), next.get_mpz_t());
    mpz_gcd(result.get_mpz_t(), result.get_mpz_t(), term.get_mpz_t());
    for (std::size_t i = 0; i < j; ++i)
      u[i] *= s;
    u[j] = t;
    g = next;
  }
  if (result == 0)
    fail(ErrorCode::ParallelNormals, "normals " + to_string(a) + " and " + to_string(b) + " are parallel");
  return result;
}

} // namespace torusarr::intersection
