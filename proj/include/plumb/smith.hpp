#pragma once

#include "plumb/linalg.hpp"

namespace plumb {

/// Smith normal form U * A * V = diag(d_1, ..., d_n) with d_i >= 0 and
/// d_i | d_{i+1}.  Only U (row transform) and its inverse are tracked; the
/// column transform is applied but discarded.
struct SmithResult {
  IVec diag;
  IMat u;
  IMat u_inv;
};

inline SmithResult smith_normal_form(IMat a) {
  const int n = static_cast<int>(a.size());
  IMat u(n, IVec(n, 0)), u_inv(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = u_inv[i][i] = 1;

  // Row ops applied to `a` and `u`; the inverse op is applied to `u_inv`
  // on the right so that u * u_inv stays the identity.
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (int r = 0; r < n; ++r) std::swap(u_inv[r][i], u_inv[r][j]);
  };
  auto row_add = [&](int i, int j, const Int& k) {  // row i += k * row j
    for (int c = 0; c < n; ++c) {
      a[i][c] += k * a[j][c];
      u[i][c] += k * u[j][c];
    }
    for (int r = 0; r < n; ++r) u_inv[r][j] -= k * u_inv[r][i];
  };
  auto row_negate = [&](int i) {
    for (int c = 0; c < n; ++c) {
      a[i][c] = -a[i][c];
      u[i][c] = -u[i][c];
    }
    for (int r = 0; r < n; ++r) u_inv[r][i] = -u_inv[r][i];
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };
  auto col_add = [&](int i, int j, const Int& k) {  // col i += k * col j
    for (int r = 0; r < n; ++r) a[r][i] += k * a[r][j];
  };

  for (int t = 0; t < n; ++t) {
    // Find a pivot in the trailing submatrix.
    int pr = -1, pc = -1;
    for (int i = t; i < n && pr < 0; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;  // remaining block is zero
    if (pr != t) row_swap(pr, t);
    if (pc != t) col_swap(pc, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        row_add(i, t, -q);
        if (a[i][t] != 0) {  // remainder became the smaller pivot
          row_swap(i, t);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        col_add(j, t, -q);
        if (a[t][j] != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (clean) {
        // Enforce divisibility of the trailing block by the pivot.
        for (int i = t + 1; i < n && clean; ++i)
          for (int j = t + 1; j < n; ++j)
            if (a[i][j] % a[t][t] != 0) {
              row_add(t, i, 1);
              clean = false;
              break;
            }
      }
    }
    if (a[t][t] < 0) row_negate(t);
  }

  SmithResult result;
  result.diag.resize(n);
  for (int i = 0; i < n; ++i) result.diag[i] = a[i][i];
  result.u = std::move(u);
  result.u_inv = std::move(u_inv);
  return result;
}

}  // namespace plumb
