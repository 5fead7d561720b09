#pragma once

#include "plumb/rational.hpp"

#include <vector>

namespace plumb {

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

inline QMat to_rational(const IMat& m) {
  QMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    r[i].assign(m[i].begin(), m[i].end());
  return r;
}

inline QVec to_rational(const IVec& v) { return QVec(v.begin(), v.end()); }

inline QMat identity_q(int n) {
  QMat m(n, QVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline QVec mat_vec(const IMat& m, const QVec& v) {
  QVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += Rat(m[i][j]) * v[j];
  return r;
}

inline IVec mat_vec(const IMat& m, const IVec& v) {
  IVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec vec_add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline QVec vec_sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline QVec vec_scale(const Rat& c, const QVec& v) {
  QVec r(v);
  for (auto& x : r) x *= c;
  return r;
}

inline bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

inline IVec to_integral(const QVec& v) {
  IVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (boost::multiprecision::denominator(x) != 1)
      throw std::logic_error("to_integral on non-integral vector");
    r.push_back(boost::multiprecision::numerator(x));
  }
  return r;
}

/// Gaussian elimination with partial pivoting over Q; solves M x = b.
/// Throws if M is singular.
inline QVec solve(QMat m, QVec b) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular matrix in solve");
    std::swap(m[col], m[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  QVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

/// Matrix inverse over Q via Gauss-Jordan.  Throws on singular input.
inline QMat inverse(QMat m) {
  const int n = static_cast<int>(m.size());
  QMat inv = identity_q(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular matrix in inverse");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rat d = m[col][col];
    for (int c = 0; c < n; ++c) {
      m[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

/// Determinant over Q (fraction-tracking Gaussian elimination).
inline Rat determinant(QMat m) {
  const int n = static_cast<int>(m.size());
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// LDL^T factorization of a symmetric positive-definite rational matrix A:
/// A = L D L^T with unit lower-triangular L and positive diagonal D.
/// Throws std::logic_error if a non-positive pivot appears.
struct LDLT {
  QMat L;   // unit lower triangular
  QVec D;   // positive pivots
};

inline LDLT ldlt(const QMat& a) {
  const int n = static_cast<int>(a.size());
  LDLT f{identity_q(n), QVec(n, 0)};
  QMat work = a;
  for (int j = 0; j < n; ++j) {
    Rat d = work[j][j];
    for (int k = 0; k < j; ++k) d -= f.D[k] * f.L[j][k] * f.L[j][k];
    if (d <= 0) throw std::logic_error("ldlt: matrix not positive definite");
    f.D[j] = d;
    for (int i = j + 1; i < n; ++i) {
      Rat s = work[i][j];
      for (int k = 0; k < j; ++k) s -= f.D[k] * f.L[i][k] * f.L[j][k];
      f.L[i][j] = s / d;
    }
  }
  return f;
}

}  // namespace plumb
