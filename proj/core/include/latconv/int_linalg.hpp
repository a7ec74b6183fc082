#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "latconv/errors.hpp"

namespace latconv {

using Int = std::int64_t;
using Wide = __int128;

// Coordinate magnitude cap for convex hull inputs; keeps every 3x3
// determinant of differences well inside 128-bit intermediates.
inline constexpr Int kCoordCap = Int{1} << 20;

using IntVec = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

inline Int narrow(Wide w) {
  if (w > Wide(INT64_MAX) || w < Wide(INT64_MIN)) throw OverflowError("value exceeds 64 bits");
  return static_cast<Int>(w);
}

inline int sign_of(Wide w) { return w > 0 ? 1 : (w < 0 ? -1 : 0); }

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IntVec negated(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec scaled(const IntVec& a, Int k) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

inline bool is_zero(const IntVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline Wide dot_wide(std::span<const Int> a, std::span<const Int> b) {
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Wide(a[i]) * Wide(b[i]);
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) { return narrow(dot_wide(a, b)); }

inline Int gcd_all(std::span<const Int> v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

// v divided by the gcd of its components; the zero vector is rejected.
inline IntVec primitive(const IntVec& v) {
  Int g = gcd_all(v);
  if (g == 0) throw Error("primitive() of zero vector");
  if (g == 1) return v;
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

inline bool sign_canonical(const IntVec& v) {
  for (Int x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return true;  // zero vector
}

// First nonzero component made positive; extents are negation-invariant.
inline IntVec canonical_sign(const IntVec& v) { return sign_canonical(v) ? v : negated(v); }

inline Int cross2(const IntVec& a, const IntVec& b) {
  return narrow(Wide(a[0]) * b[1] - Wide(a[1]) * b[0]);
}

inline IntVec cross3(const IntVec& a, const IntVec& b) {
  return IntVec{narrow(Wide(a[1]) * b[2] - Wide(a[2]) * b[1]),
                narrow(Wide(a[2]) * b[0] - Wide(a[0]) * b[2]),
                narrow(Wide(a[0]) * b[1] - Wide(a[1]) * b[0])};
}

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ v.size();
    for (Int x : v) {
      std::uint64_t u = static_cast<std::uint64_t>(x) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      u = (u ^ (u >> 30)) * 0xBF58476D1CE4E5B9ull;
      h ^= u ^ (u >> 27);
    }
    return static_cast<std::size_t>(h);
  }
};

// Dense row-major integer matrix.  Transform matrices keep one projection
// vector per row, so a point maps to (row_i . x)_i.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
      : rows_(rows), cols_(cols), a_(std::move(data)) {
    if (a_.size() != rows_ * cols_) throw Error("IntMatrix: data size mismatch");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) throw Error("IntMatrix: no rows");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) throw Error("IntMatrix: no columns");
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Int at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const {
    return IntVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVec column(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  void set_row(std::size_t i, const IntVec& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  std::vector<IntVec> row_list() const {
    std::vector<IntVec> r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
  }

  IntVec apply(const IntVec& x) const {
    IntVec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Wide s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += Wide(at(i, j)) * Wide(x[j]);
      y[i] = narrow(s);
    }
    return y;
  }

  IntMatrix times(const IntMatrix& b) const {
    if (cols_ != b.rows_) throw Error("IntMatrix: shape mismatch");
    IntMatrix r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < b.cols_; ++k) {
        Wide s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += Wide(at(i, j)) * Wide(b.at(j, k));
        r.at(i, k) = narrow(s);
      }
    return r;
  }

  Wide det_wide() const {
    if (rows_ != cols_) throw Error("IntMatrix: determinant of non-square matrix");
    switch (rows_) {
      case 1:
        return at(0, 0);
      case 2:
        return Wide(at(0, 0)) * at(1, 1) - Wide(at(0, 1)) * at(1, 0);
      case 3: {
        Wide c0 = Wide(at(1, 1)) * at(2, 2) - Wide(at(1, 2)) * at(2, 1);
        Wide c1 = Wide(at(1, 0)) * at(2, 2) - Wide(at(1, 2)) * at(2, 0);
        Wide c2 = Wide(at(1, 0)) * at(2, 1) - Wide(at(1, 1)) * at(2, 0);
        return Wide(at(0, 0)) * c0 - Wide(at(0, 1)) * c1 + Wide(at(0, 2)) * c2;
      }
      default:
        throw Error("IntMatrix: determinant beyond 3x3 not supported");
    }
  }

  Int det() const { return narrow(det_wide()); }

  // adj(A) with A * adj(A) = det(A) * I; used for exact rational inverses.
  IntMatrix adjugate() const {
    if (rows_ != cols_) throw Error("IntMatrix: adjugate of non-square matrix");
    if (rows_ == 1) return identity(1);
    if (rows_ == 2) {
      IntMatrix r(2, 2);
      r.at(0, 0) = at(1, 1);
      r.at(0, 1) = -at(0, 1);
      r.at(1, 0) = -at(1, 0);
      r.at(1, 1) = at(0, 0);
      return r;
    }
    if (rows_ == 3) {
      IntMatrix r(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
          std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
          r.at(i, j) =
              narrow(Wide(at(r0, c0)) * at(r1, c1) - Wide(at(r0, c1)) * at(r1, c0));
        }
      return r;
    }
    throw Error("IntMatrix: adjugate beyond 3x3 not supported");
  }

  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Extended gcd: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
inline Int extended_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, x1 = 0;
  Int old_y = 0, y1 = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x1;
    old_x = x1;
    x1 = t;
    t = old_y - q * y1;
    old_y = y1;
    y1 = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

// Nonnegative remainder in [0, n).
inline Int mod_floor(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace latconv
