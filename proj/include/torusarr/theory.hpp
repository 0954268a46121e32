#pragma once

#include "torusarr/arrangement.hpp"
#include "torusarr/regions.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace torusarr::theory {

/// The set of region counts attainable by n codimension-one subtori in T^d.
///
///   n = 1:        {1}
///   d = 1:        {n}            (n points on a circle)
///   2 ≤ n ≤ d:    ℕ
///   n > d ≥ 2:    {n-d+1, ..., n} ∪ {l ≥ 2(n-d)}
struct FeasibleSet {
  enum class Kind { AllNaturals, Singleton, IntervalPlusRay };

  Kind kind = Kind::AllNaturals;
  std::int64_t value = 0;       // Singleton
  std::int64_t interval_lo = 0; // IntervalPlusRay
  std::int64_t interval_hi = 0;
  std::int64_t ray_start = 0;

  bool contains(std::int64_t l) const;
  std::int64_t min() const;
  /// Integers strictly between the interval and the ray; nullopt when there are none.
  std::optional<std::pair<std::int64_t, std::int64_t>> gap() const;
  /// "{6..8} ∪ {l ≥ 10}", "ℕ", "{1}".
  std::string describe() const;
};

/// Throws InvalidParams for d < 1 or n < 1.
FeasibleSet feasible_set(std::int64_t d, std::int64_t n);
bool feasible_contains(std::int64_t d, std::int64_t n, std::int64_t l);

/// m(n - m - d + 2); may be nonpositive. Throws InvalidParams unless 0 ≤ m ≤ n.
std::int64_t parallel_class_bound(std::int64_t n, std::int64_t m, std::int64_t d);

struct BoundsReport {
  std::int64_t d = 0, n = 0, m = 0, f = 0;
  std::int64_t parallel_class_bound = 0;
  bool parallel_bound_ok = false;
  bool dichotomy_applicable = false; // n > d ≥ 2
  bool dichotomy_ok = true;          // (f ≥ 2n-2d) or (f ≤ n and m ≥ n-d+1); true when not applicable
  bool member = false;            // f ∈ F(T^d, n)

  bool ok() const { return parallel_bound_ok && dichotomy_ok && member; }
  std::string describe() const;
};

/// Evaluates every bound for a region count f of arr without judging the result.
BoundsReport evaluate_bounds(const Arrangement& arr, std::int64_t f);

/// As evaluate_bounds, but throws TheoremViolation (arrangement and report in the message) when
/// any check fails.
BoundsReport check_bounds(const Arrangement& arr, std::int64_t f);

/// x_i = 0 for the first k axes and n-k parallel copies x_{k+1} = j/(n-k+1); n - k regions.
/// Requires 0 ≤ k ≤ d-1 and n ≥ k+1, else ParamOutOfRange.
Arrangement construct_family_parallel(std::int64_t d, std::int64_t n, std::int64_t k);
std::int64_t predicted_regions_parallel(std::int64_t d, std::int64_t n, std::int64_t k);

/// x_i = 0 for 2 ≤ i ≤ d, x_2 = k x_1 + 1/2, and x_1 = c_j for j = 1..n-d with k c_j + 1/2 never
/// an integer. Requires n ≥ d ≥ 2 and k ≥ 0, else ParamOutOfRange.
Arrangement construct_family_sheared(std::int64_t d, std::int64_t n, std::int64_t k);
/// 2n - 2d + k.
std::int64_t predicted_regions_sheared(std::int64_t d, std::int64_t n, std::int64_t k);

/// An arrangement of n subtori in T^d with exactly f_target regions, confirmed by the region
/// counter before it is returned. Throws NotFeasible when f_target ∉ F(T^d, n).
Arrangement construct_for(std::int64_t d, std::int64_t n, std::int64_t f_target,
                          const regions::BuildOptions& opts = {});

} // namespace torusarr::theory
