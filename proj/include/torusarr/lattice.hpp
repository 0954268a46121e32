#pragma once

#include "torusarr/numeric.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace torusarr::lattice {

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix whose j-th column is columns[j].
  static IntMatrix from_columns(const std::vector<IntVec>& columns);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec column(std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// Row vector times matrix: (aᵀM)_j = Σ_i a_i M_ij.
IntVec covector_times(std::span<const Int> a, const IntMatrix& m);

/// Square integer matrix with determinant exactly 1.
class UnimodularMatrix {
public:
  /// Throws NotUnimodular unless m is square with det(m) = 1.
  explicit UnimodularMatrix(IntMatrix m);

  static UnimodularMatrix identity(std::size_t n);

  std::size_t dim() const { return m_.rows(); }
  const IntMatrix& matrix() const { return m_; }
  const Int& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

private:
  struct Trusted {};
  UnimodularMatrix(IntMatrix m, Trusted) : m_(std::move(m)) {}
  IntMatrix m_;
};

struct ExtendedGcd {
  Int g; // nonnegative
  Int s;
  Int t; // s*x + t*y == g
};

ExtendedGcd extended_gcd(const Int& x, const Int& y);

/// gcd of absolute values; zero iff every entry is zero. Throws InvalidInput on an empty vector.
Int gcd_vec(std::span<const Int> a);

bool is_primitive(std::span<const Int> a);

/// Prefix gcds of a vector together with integer certificates.
///
/// Entry j (0-based) describes the prefix a_1..a_{j+2}: gcds[j] = gcd(a_1, ..., a_{j+2}) and
/// coeffs[j] holds j+2 integers with Σ_i a_i coeffs[j][i] == gcds[j]. A vector of length d
/// yields d-1 entries.
///
/// Built by left-to-right folding: the certificate for the longer prefix combines the previous
/// prefix gcd with the next entry through one extended Euclid step.
struct BezoutChain {
  std::vector<Int> gcds;
  std::vector<IntVec> coeffs;

  /// Checks the certificate identities and divisibility against a.
  bool certifies(std::span<const Int> a) const;
};

BezoutChain bezout_chain(std::span<const Int> a);

/// Returns M with det M = 1 and aᵀM = (1, 0, ..., 0). Column j of M is the j-th vector of a
/// lattice basis in which the hyperplane a·x = c reads y_1 = c.
///
/// Throws NonPrimitive if gcd(a) != 1, and InvalidInput for d = 1 with a = (-1), where no
/// determinant-one solution exists.
UnimodularMatrix complete_to_unimodular(std::span<const Int> a);

/// Squared metric data of the subtorus a·x = c in the unit cubic lattice.
struct HyperplaneMetrics {
  Rational dist_sq; // squared distance from the hyperplane to the nearest lattice point off it
  Rational vol_sq;  // squared (d-1)-volume of the closed subtorus
};

HyperplaneMetrics hyperplane_metrics(std::span<const Int> a);

/// gcd of all 2x2 minors a_i b_j - a_j b_i (i < j); zero iff a and b are proportional.
Int minors2_gcd(std::span<const Int> a, std::span<const Int> b);

} // namespace torusarr::lattice
