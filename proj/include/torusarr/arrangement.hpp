#pragma once

#include "torusarr/lattice.hpp"
#include "torusarr/numeric.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace torusarr {

/// A closed codimension-one subtorus {x : normal·x ≡ offset (mod 1)} of the standard torus
/// ℝ^d/ℤ^d. The normal is primitive with a positive first nonzero entry and the offset lies
/// in [0, 1); under these rules two equations describe the same subtorus iff they compare
/// equal.
class Subtorus {
public:
  /// Takes an already normalized pair; throws InvalidInput otherwise.
  Subtorus(IntVec normal, Rational offset);

  const IntVec& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }
  std::size_t dim() const { return normal_.size(); }

  friend bool operator==(const Subtorus& a, const Subtorus& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }
  friend std::strong_ordering operator<=>(const Subtorus& a, const Subtorus& b);

private:
  IntVec normal_;
  Rational offset_;
};

/// Normalizes Σ coeffs_i x_i = c: clears denominators, divides out the content, fixes the sign
/// and reduces the right-hand side mod 1. Throws ZeroNormal if every coefficient is 0.
Subtorus subtorus_from_equation(std::span<const Rational> coeffs, const Rational& c);
Subtorus subtorus_from_equation(std::span<const Int> coeffs, const Rational& c);

/// Subtorus x_axis ≡ offset (axis is 0-based).
Subtorus coordinate_subtorus(std::size_t dim, std::size_t axis, const Rational& offset);

struct Arrangement {
  std::size_t dim = 0;
  std::vector<Subtorus> tori; // input order is significant for the cell construction

  std::size_t size() const { return tori.size(); }
  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

/// Throws DimensionMismatch or DuplicateSubtorus (naming the 1-based offending pair).
void validate(const Arrangement& arr);

/// Size of the largest parallel class (subtori sharing a normal); 0 when empty.
std::size_t max_parallel_count(const Arrangement& arr);

/// Image under the lattice basis change x = M y. Each normal a becomes aᵀM, renormalized.
Arrangement transform(const Arrangement& arr, const lattice::UnimodularMatrix& m);

/// Translation x -> x - t; offsets become offset - a·t (mod 1).
Arrangement translate(const Arrangement& arr, std::span<const Rational> t);

// .tarr text format:
//   dim <d>
//   a1 a2 ... ad : p/q
// '#' starts a comment; blank lines are ignored. Parsing normalizes and validates.
Arrangement parse_tarr(std::string_view text);
Arrangement read_tarr_file(const std::string& path);
std::string format_tarr(const Arrangement& arr);

std::ostream& operator<<(std::ostream& os, const Subtorus& s);

} // namespace torusarr
