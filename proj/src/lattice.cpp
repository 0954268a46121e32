#include "torusarr/lattice.hpp"

#include "torusarr/error.hpp"

#include <utility>

namespace torusarr::lattice {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  std::size_t rows = columns.empty() ? 0 : columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      fail(ErrorCode::DimensionMismatch, "ragged column list");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorCode::DimensionMismatch, "ragged row list");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Int sign_flip = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a(k, c), a(p, c));
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign_flip * a(n - 1, n - 1);
}

IntVec covector_times(std::span<const Int> a, const IntMatrix& m) {
  if (a.size() != m.rows())
    fail(ErrorCode::DimensionMismatch, "covector length does not match matrix rows");
  IntVec out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < a.size(); ++i)
      out[j] += a[i] * m(i, j);
  return out;
}

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    fail(ErrorCode::NotUnimodular, "matrix is not square");
  Int det = determinant(m_);
  if (det != 1)
    fail(ErrorCode::NotUnimodular, "determinant is " + det.get_str() + ", expected 1");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
  return UnimodularMatrix(IntMatrix::identity(n), Trusted{});
}

UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
  return UnimodularMatrix(a.m_ * b.m_, UnimodularMatrix::Trusted{});
}

ExtendedGcd extended_gcd(const Int& x, const Int& y) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

Int gcd_vec(std::span<const Int> a) {
  if (a.empty())
    fail(ErrorCode::InvalidInput, "gcd of an empty vector");
  Int g = 0;
  for (const Int& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

bool is_primitive(std::span<const Int> a) { return !a.empty() && gcd_vec(a) == 1; }

bool BezoutChain::certifies(std::span<const Int> a) const {
  if (a.empty() || gcds.size() + 1 != a.size() || coeffs.size() != gcds.size())
    return false;
  for (std::size_t j = 0; j < gcds.size(); ++j) {
    if (coeffs[j].size() != j + 2)
      return false;
    Int combo = 0;
    for (std::size_t i = 0; i < j + 2; ++i)
      combo += a[i] * coeffs[j][i];
    if (combo != gcds[j] || gcds[j] != gcd_vec(a.subspan(0, j + 2)))
      return false;
  }
  return true;
}

BezoutChain bezout_chain(std::span<const Int> a) {
  if (a.empty())
    fail(ErrorCode::InvalidInput, "Bezout chain of an empty vector");
  BezoutChain chain;
  Int g = abs(a[0]);
  IntVec u{sign(a[0])};
  for (std::size_t j = 1; j < a.size(); ++j) {
    ExtendedGcd e = extended_gcd(g, a[j]);
    for (Int& c : u)
      c *= e.s;
    u.push_back(e.t);
    g = e.g;
    chain.gcds.push_back(g);
    chain.coeffs.push_back(u);
  }
  return chain;
}

UnimodularMatrix complete_to_unimodular(std::span<const Int> a) {
  if (!is_primitive(a))
    fail(ErrorCode::NonPrimitive, "normal " + to_string(a) + " is not primitive");
  const std::size_t d = a.size();
  if (d == 1) {
    if (a[0] != 1)
      fail(ErrorCode::InvalidInput, "no determinant-one completion of (-1) in dimension 1");
    return UnimodularMatrix::identity(1);
  }

  IntMatrix m = IntMatrix::identity(d);
  IntVec row(a.begin(), a.end());
  // Column operations on (row | m) that fold every entry into the first slot.
  for (std::size_t j = 1; j < d; ++j) {
    if (row[j] == 0)
      continue;
    ExtendedGcd e = extended_gcd(row[0], row[j]);
    Int c0 = row[0] / e.g;
    Int cj = row[j] / e.g;
    // [[s, -cj], [t, c0]] has determinant s*c0 + t*cj = 1.
    for (std::size_t r = 0; r < d; ++r) {
      Int first = m(r, 0) * e.s + m(r, j) * e.t;
      Int other = -m(r, 0) * cj + m(r, j) * c0;
      m(r, 0) = std::move(first);
      m(r, j) = std::move(other);
    }
    row[0] = e.g;
    row[j] = 0;
  }
  if (row[0] == -1) {
    // Negating two columns keeps the determinant and flips the pivot.
    for (std::size_t r = 0; r < d; ++r) {
      m(r, 0) = -m(r, 0);
      m(r, 1) = -m(r, 1);
    }
  }
  return UnimodularMatrix(std::move(m));
}

HyperplaneMetrics hyperplane_metrics(std::span<const Int> a) {
  if (!is_primitive(a))
    fail(ErrorCode::NonPrimitive, "normal " + to_string(a) + " is not primitive");
  Int s = 0;
  for (const Int& x : a)
    s += x * x;
  return {Rational(Int(1), s), Rational(s)};
}

Int minors2_gcd(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size() || a.size() < 2)
    fail(ErrorCode::DimensionMismatch, "minors need two vectors of equal length >= 2");
  Int g = 0, minor;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      mpz_mul(minor.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      mpz_submul(minor.get_mpz_t(), a[j].get_mpz_t(), b[i].get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
    }
  return g;
}

} // namespace torusarr::lattice
