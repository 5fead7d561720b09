#pragma once

#include "plumb/graph.hpp"
#include "plumb/linalg.hpp"

#include <numeric>

namespace plumb {

/// Intersection matrix of a plumbing graph: diagonal entries are the Euler
/// numbers, off-diagonal entries are 1 exactly when the vertices are joined
/// by an edge.
inline IMat intersection_form(const PlumbingGraph& g) {
  const int n = g.size();
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = g.euler[i];
  for (auto [a, b] : g.edges) {
    m[a][b] = 1;
    m[b][a] = 1;
  }
  return m;
}

struct DefinitenessResult {
  bool negative_definite = false;
  /// On failure, a nonzero integer vector x with x^T M x >= 0.
  IVec witness;
};

namespace detail {

inline IVec integral_witness(const QVec& x) {
  Int mult = 1;
  for (const auto& c : x)
    mult = boost::multiprecision::lcm(mult, boost::multiprecision::denominator(c));
  IVec w;
  w.reserve(x.size());
  for (const auto& c : x) w.push_back(boost::multiprecision::numerator(c * Rat(mult)));
  return w;
}

}  // namespace detail

/// Exact definiteness test by congruence diagonalization with a tracked
/// change of basis.  When the form is not negative definite the returned
/// witness x satisfies x^T M x >= 0, x != 0, verifiable by the caller.
inline DefinitenessResult check_negative_definite(const IMat& m_in) {
  const int n = static_cast<int>(m_in.size());
  QMat w = to_rational(m_in);
  QMat s = identity_q(n);  // column i of s is the current basis vector
  auto basis_col = [&](int j) {
    QVec col(n, 0);
    for (int r = 0; r < n; ++r) col[r] = s[r][j];
    return col;
  };
  for (int j = 0; j < n; ++j) {
    if (w[j][j] > 0) return {false, detail::integral_witness(basis_col(j))};
    if (w[j][j] == 0) {
      int mate = -1;
      for (int i = j + 1; i < n; ++i)
        if (w[i][j] != 0) {
          mate = i;
          break;
        }
      if (mate < 0)  // isotropic vector: the form is degenerate here
        return {false, detail::integral_witness(basis_col(j))};
      // [[0, b], [b, c]] block is indefinite; pick t with 2tb + c > 0.
      const Rat b = w[mate][j], c = w[mate][mate];
      Rat t = 1;
      if (c < 0) t = -c / (2 * boost::multiprecision::abs(b)) + 1;
      if (b < 0) t = -t;
      QVec x = vec_add(vec_scale(t, basis_col(j)), basis_col(mate));
      return {false, detail::integral_witness(x)};
    }
    for (int i = j + 1; i < n; ++i) {
      if (w[i][j] == 0) continue;
      Rat f = w[i][j] / w[j][j];
      for (int c = 0; c < n; ++c) w[i][c] -= f * w[j][c];
      for (int r = 0; r < n; ++r) w[r][i] -= f * w[r][j];
      for (int r = 0; r < n; ++r) s[r][i] -= f * s[r][j];
    }
  }
  return {true, {}};
}

/// Evaluates x^T M x exactly (used to double-check witnesses).
inline Int evaluate_form(const IMat& m, const IVec& x) {
  Int total = 0;
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) total += x[i] * m[i][j] * x[j];
  return total;
}

}  // namespace plumb
