#pragma once

// Test-only generators and oracles. Nothing here calls into the region counter or the
// nested-gcd formula, so the oracles stay independent of the code they check.

#include "torusarr/arrangement.hpp"
#include "torusarr/lattice.hpp"
#include "torusarr/regions.hpp"

#include <optional>
#include <random>
#include <set>
#include <utility>

namespace torusarr::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntVec random_vector(Rng& rng, std::size_t d, long lo, long hi) {
  IntVec v(d);
  for (Int& x : v)
    x = uniform(rng, lo, hi);
  return v;
}

inline IntVec random_primitive(Rng& rng, std::size_t d, long bound) {
  for (;;) {
    IntVec v = random_vector(rng, d, -bound, bound);
    if (lattice::gcd_vec(v) == 1)
      return v;
  }
}

/// Product of a few elementary shears I ± E_ij; determinant 1 by construction.
inline lattice::UnimodularMatrix random_unimodular(Rng& rng, std::size_t d, int factors = 3) {
  lattice::IntMatrix m = lattice::IntMatrix::identity(d);
  if (d == 1)
    return lattice::UnimodularMatrix(m);
  for (int f = 0; f < factors; ++f) {
    lattice::IntMatrix e = lattice::IntMatrix::identity(d);
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 2));
    if (j >= i)
      ++j;
    e(i, j) = uniform(rng, 0, 1) ? 1 : -1;
    m = m * e;
  }
  return lattice::UnimodularMatrix(m);
}

inline Rational random_offset(Rng& rng, long max_den) {
  long q = uniform(rng, 1, max_den);
  long p = uniform(rng, 0, q - 1);
  return ratio(p, q);
}

/// n distinct subtori: normal entries uniform in [-coef, coef] (nonzero vector), offsets p/q
/// with q ≤ max_den. Redraws until the lifted sheet count fits under max_sheets.
inline Arrangement random_arrangement(Rng& rng, std::size_t d, std::size_t n, long coef = 3, long max_den = 8,
                                      std::size_t max_sheets = 64) {
  for (;;) {
    Arrangement arr{d, {}};
    std::set<Subtorus> seen;
    while (arr.tori.size() < n) {
      IntVec a = random_vector(rng, d, -coef, coef);
      if (lattice::gcd_vec(a) == 0)
        continue;
      Subtorus s = subtorus_from_equation(std::span<const Int>(a), random_offset(rng, max_den));
      if (seen.insert(s).second)
        arr.tori.push_back(s);
    }
    if (regions::sheet_count(arr) <= max_sheets)
      return arr;
  }
}

/// Points of {a·x ≡ c} ∩ {b·x ≡ e} in ℝ²/ℤ², by enumerating x = M⁻¹(c + k₁, e + k₂) over
/// integer k in [0, |det|)² and reducing mod 1.
inline std::set<std::pair<Rational, Rational>> torus_crossings(const Subtorus& s, const Subtorus& t) {
  const Int& a1 = s.normal()[0];
  const Int& a2 = s.normal()[1];
  const Int& b1 = t.normal()[0];
  const Int& b2 = t.normal()[1];
  Int det = a1 * b2 - a2 * b1;
  std::set<std::pair<Rational, Rational>> pts;
  if (det == 0)
    return pts;
  long span = Int(abs(det)).get_si();
  for (long k1 = 0; k1 < span; ++k1)
    for (long k2 = 0; k2 < span; ++k2) {
      Rational r1 = s.offset() + k1, r2 = t.offset() + k2;
      Rational x = (Rational(b2) * r1 - Rational(a2) * r2) / Rational(det);
      Rational y = (Rational(a1) * r2 - Rational(b1) * r1) / Rational(det);
      pts.emplace(frac(x), frac(y));
    }
  return pts;
}

/// Euler-characteristic count for a generic arrangement of closed geodesics on the 2-torus:
/// χ = 0 gives f = E - V, where V counts crossing points and every geodesic carrying p
/// crossings is cut into p edges. Returns nullopt if fewer than two directions occur or two
/// crossings coincide.
inline std::optional<long> euler_region_count(const Arrangement& arr) {
  if (arr.dim != 2)
    return std::nullopt;
  std::set<IntVec> directions;
  for (const Subtorus& s : arr.tori)
    directions.insert(s.normal());
  if (directions.size() < 2)
    return std::nullopt;
  long vertices = 0, edges = 0;
  std::set<std::pair<Rational, Rational>> all;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const IntVec& a = arr.tori[i].normal();
      const IntVec& b = arr.tori[j].normal();
      long cross = Int(abs(Int(a[0] * b[1] - a[1] * b[0]))).get_si();
      auto pts = torus_crossings(arr.tori[i], arr.tori[j]);
      if (static_cast<long>(pts.size()) != cross)
        return std::nullopt;
      all.insert(pts.begin(), pts.end());
      vertices += cross;
      edges += 2 * cross; // the crossing cuts both geodesics once
    }
  if (static_cast<long>(all.size()) != vertices)
    return std::nullopt;
  return edges - vertices;
}

/// min over integer x with |x_i| ≤ box and a·x ≠ 0 of (a·x)² / |a|²: squared distance from the
/// hyperplane a·x = 0 to the nearest lattice point off it.
inline Rational brute_force_dist_sq(const IntVec& a, long box) {
  const std::size_t d = a.size();
  Int norm_sq = 0;
  for (const Int& x : a)
    norm_sq += x * x;
  std::vector<long> x(d, -box);
  std::optional<Int> best;
  for (;;) {
    Int v = 0;
    for (std::size_t i = 0; i < d; ++i)
      v += a[i] * x[i];
    if (v != 0 && (!best || v * v < *best))
      best = v * v;
    std::size_t i = 0;
    while (i < d && x[i] == box)
      x[i++] = -box;
    if (i == d)
      break;
    ++x[i];
  }
  return ratio(*best, norm_sq);
}

/// All integer vectors with entries in [lo, hi].
template <class F> void for_each_vector(std::size_t d, long lo, long hi, F&& f) {
  IntVec v(d, Int(lo));
  for (;;) {
    f(static_cast<const IntVec&>(v));
    std::size_t i = 0;
    while (i < d && v[i] == hi)
      v[i++] = lo;
    if (i == d)
      return;
    ++v[i];
  }
}

} // namespace torusarr::testing
