#include "torusarr/theory.hpp"

#include "torusarr/error.hpp"

#include <sstream>

namespace torusarr::theory {

bool FeasibleSet::contains(std::int64_t l) const {
  if (l < 1)
    return false;
  switch (kind) {
  case Kind::AllNaturals: return true;
  case Kind::Singleton: return l == value;
  case Kind::IntervalPlusRay: return (interval_lo <= l && l <= interval_hi) || l >= ray_start;
  }
  return false;
}

std::int64_t FeasibleSet::min() const {
  switch (kind) {
  case Kind::AllNaturals: return 1;
  case Kind::Singleton: return value;
  case Kind::IntervalPlusRay: return std::min(interval_lo, ray_start);
  }
  return 1;
}

std::optional<std::pair<std::int64_t, std::int64_t>> FeasibleSet::gap() const {
  if (kind != Kind::IntervalPlusRay || ray_start <= interval_hi + 1)
    return std::nullopt;
  return std::make_pair(interval_hi + 1, ray_start - 1);
}

std::string FeasibleSet::describe() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::AllNaturals: os << "ℕ"; break;
  case Kind::Singleton: os << '{' << value << '}'; break;
  case Kind::IntervalPlusRay:
    os << '{' << interval_lo << ".." << interval_hi << "} ∪ {l ≥ " << ray_start << '}';
    break;
  }
  return os.str();
}

FeasibleSet feasible_set(std::int64_t d, std::int64_t n) {
  if (d < 1 || n < 1)
    fail(ErrorCode::InvalidParams, "F(T^d, n) needs d >= 1 and n >= 1");
  FeasibleSet s;
  if (n == 1 || d == 1) {
    s.kind = FeasibleSet::Kind::Singleton;
    s.value = n;
  } else if (n <= d) {
    s.kind = FeasibleSet::Kind::AllNaturals;
  } else {
    s.kind = FeasibleSet::Kind::IntervalPlusRay;
    s.interval_lo = n - d + 1;
    s.interval_hi = n;
    s.ray_start = 2 * (n - d);
  }
  return s;
}

bool feasible_contains(std::int64_t d, std::int64_t n, std::int64_t l) {
  return feasible_set(d, n).contains(l);
}

std::int64_t parallel_class_bound(std::int64_t n, std::int64_t m, std::int64_t d) {
  if (m < 0 || m > n)
    fail(ErrorCode::InvalidParams, "parallel class size must satisfy 0 <= m <= n");
  return m * (n - m - d + 2);
}

std::string BoundsReport::describe() const {
  std::ostringstream os;
  os << "d=" << d << " n=" << n << " m=" << m << " f=" << f << "; m(n-m-d+2)=" << parallel_class_bound
     << (parallel_bound_ok ? " ok" : " VIOLATED");
  if (dichotomy_applicable)
    os << "; dichotomy " << (dichotomy_ok ? "ok" : "VIOLATED");
  os << "; f " << (member ? "in" : "NOT in") << " F(T^" << d << "," << n << ") = "
     << feasible_set(d, n).describe();
  return os.str();
}

BoundsReport evaluate_bounds(const Arrangement& arr, std::int64_t f) {
  BoundsReport r;
  r.d = static_cast<std::int64_t>(arr.dim);
  r.n = static_cast<std::int64_t>(arr.size());
  r.m = static_cast<std::int64_t>(max_parallel_count(arr));
  r.f = f;
  if (r.n == 0) {
    // Empty arrangement: the whole torus is one region; nothing to check.
    r.parallel_bound_ok = true;
    r.member = f == 1;
    return r;
  }
  r.parallel_class_bound = parallel_class_bound(r.n, r.m, r.d);
  r.parallel_bound_ok = f >= r.parallel_class_bound;
  r.dichotomy_applicable = r.n > r.d && r.d >= 2;
  if (r.dichotomy_applicable)
    r.dichotomy_ok = f >= 2 * r.n - 2 * r.d || (f <= r.n && r.m >= r.n - r.d + 1);
  r.member = feasible_contains(r.d, r.n, f);
  return r;
}

BoundsReport check_bounds(const Arrangement& arr, std::int64_t f) {
  BoundsReport r = evaluate_bounds(arr, f);
  if (!r.ok())
    fail(ErrorCode::TheoremViolation, "bound check failed: " + r.describe() + "\n" + format_tarr(arr));
  return r;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond)
    fail(ErrorCode::ParamOutOfRange, what);
}

} // namespace

Arrangement construct_family_parallel(std::int64_t d, std::int64_t n, std::int64_t k) {
  require(d >= 1 && d <= 64, "dimension out of range");
  require(0 <= k && k <= d - 1, "k must satisfy 0 <= k <= d-1");
  require(n >= k + 1, "n must be at least k+1");
  const std::size_t dim = static_cast<std::size_t>(d);
  Arrangement arr{dim, {}};
  for (std::int64_t i = 0; i < k; ++i)
    arr.tori.push_back(coordinate_subtorus(dim, static_cast<std::size_t>(i), 0));
  const std::int64_t copies = n - k;
  for (std::int64_t j = 1; j <= copies; ++j)
    arr.tori.push_back(coordinate_subtorus(dim, static_cast<std::size_t>(k), ratio(j, copies + 1)));
  validate(arr);
  return arr;
}

std::int64_t predicted_regions_parallel(std::int64_t, std::int64_t n, std::int64_t k) { return n - k; }

Arrangement construct_family_sheared(std::int64_t d, std::int64_t n, std::int64_t k) {
  require(d >= 2 && d <= 64, "dimension must satisfy 2 <= d <= 64");
  require(n >= d, "n must be at least d");
  require(k >= 0, "k must be nonnegative");
  const std::size_t dim = static_cast<std::size_t>(d);
  Arrangement arr{dim, {}};
  for (std::size_t i = 1; i < dim; ++i)
    arr.tori.push_back(coordinate_subtorus(dim, i, 0));

  IntVec shear(dim);
  shear[0] = -k;
  shear[1] = 1;
  arr.tori.push_back(subtorus_from_equation(std::span<const Int>(shear), Rational(1, 2)));

  // An odd denominator keeps k c_j + 1/2 = (2kj + q) / 2q away from the integers.
  const std::int64_t copies = n - d;
  const std::int64_t q = 2 * copies + 1;
  for (std::int64_t j = 1; j <= copies; ++j) {
    Rational c = ratio(j, q);
    Rational crossing = Rational(k) * c + Rational(1, 2);
    if (crossing.get_den() == 1)
      fail(ErrorCode::BadOffsets, "k c_j + 1/2 is an integer for c_j = " + to_fraction_string(c));
    arr.tori.push_back(coordinate_subtorus(dim, 0, c));
  }
  validate(arr);
  return arr;
}

std::int64_t predicted_regions_sheared(std::int64_t d, std::int64_t n, std::int64_t k) {
  return 2 * n - 2 * d + k;
}

Arrangement construct_for(std::int64_t d, std::int64_t n, std::int64_t f_target, const regions::BuildOptions& opts) {
  FeasibleSet set = feasible_set(d, n);
  if (!set.contains(f_target))
    fail(ErrorCode::NotFeasible, std::to_string(f_target) + " is not in F(T^" + std::to_string(d) + "," +
                                     std::to_string(n) + ") = " + set.describe());
  const std::size_t dim = static_cast<std::size_t>(d);
  Arrangement arr;
  switch (set.kind) {
  case FeasibleSet::Kind::Singleton:
    arr = n == 1 ? Arrangement{dim, {coordinate_subtorus(dim, 0, 0)}} : construct_family_parallel(d, n, 0);
    break;
  case FeasibleSet::Kind::IntervalPlusRay:
    if (f_target >= set.interval_lo && f_target <= set.interval_hi)
      arr = construct_family_parallel(d, n, n - f_target);
    else
      arr = construct_family_sheared(d, n, f_target - set.ray_start);
    break;
  case FeasibleSet::Kind::AllNaturals: {
    // Two geodesic classes in the (x_1, x_2) torus crossing f times, padded with coordinate
    // subtori that only cut the remaining circle factors open.
    arr.dim = dim;
    arr.tori.push_back(coordinate_subtorus(dim, 1, 0));
    IntVec shear(dim);
    shear[0] = -f_target;
    shear[1] = 1;
    arr.tori.push_back(subtorus_from_equation(std::span<const Int>(shear), Rational(1, 2)));
    for (std::int64_t i = 2; i < n; ++i)
      arr.tori.push_back(coordinate_subtorus(dim, static_cast<std::size_t>(i), 0));
    validate(arr);
    break;
  }
  }
  std::size_t f = regions::count_regions(arr, opts);
  if (static_cast<std::int64_t>(f) != f_target)
    fail(ErrorCode::TheoremViolation, "generated arrangement has " + std::to_string(f) + " regions, expected " +
                                          std::to_string(f_target) + "\n" + format_tarr(arr));
  return arr;
}

} // namespace torusarr::theory
