#pragma once

#include "plumb/form.hpp"
#include "plumb/graph.hpp"
#include "plumb/linalg.hpp"

#include <optional>
#include <set>

namespace plumb {

/// Partial (coordinatewise) order on rational cycles.
inline bool leq(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_effective(const QVec& v) {  // v >= 0
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

enum class OrderVerdict { Equal, LessEq, GreaterEq, Incomparable };

/// Componentwise comparison verdict for the partial order on cycles.
inline OrderVerdict cycle_order(const QVec& a, const QVec& b) {
  bool le = true, ge = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) le = false;
    if (a[i] < b[i]) ge = false;
  }
  if (le && ge) return OrderVerdict::Equal;
  if (le) return OrderVerdict::LessEq;
  if (ge) return OrderVerdict::GreaterEq;
  return OrderVerdict::Incomparable;
}

inline QVec cycle_meet(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline QVec cycle_join(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// All lattice-theoretic data attached to a negative-definite plumbing
/// graph: the intersection form, its inverse, the dual basis, the
/// anticanonical cycle and the Riemann-Roch function chi.
class Lattice {
 public:
  explicit Lattice(const PlumbingGraph& g)
      : graph_(g), n_(g.size()), m_(intersection_form(g)) {
    auto check = check_negative_definite(m_);
    if (!check.negative_definite)
      throw infeasible_error("intersection form is not negative definite");
    m_inv_ = inverse(to_rational(m_));
    // Anticanonical cycle: M * zk = (e_v + 2)_v, the adjunction equations.
    QVec rhs(n_);
    for (int v = 0; v < n_; ++v) rhs[v] = Rat(g.euler[v] + 2);
    zk_ = solve(to_rational(m_), rhs);
  }

  const PlumbingGraph& graph() const { return graph_; }
  int size() const { return n_; }
  const IMat& form() const { return m_; }
  const QMat& form_inverse() const { return m_inv_; }
  const QVec& anticanonical() const { return zk_; }

  /// Intersection pairing (x, y) = x^T M y.
  Rat pairing(const QVec& x, const QVec& y) const {
    Rat s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (m_[i][j] != 0) s += x[i] * Rat(m_[i][j]) * y[j];
    return s;
  }

  /// Column of pairings ((x, E_v))_v = M x.
  QVec pair_with_basis(const QVec& x) const { return mat_vec(m_, x); }

  /// Dual basis element E^*_v, the cycle with (E^*_v, E_w) = -delta_{vw}.
  QVec dual_basis(int v) const {
    QVec col(n_);
    for (int r = 0; r < n_; ++r) col[r] = -m_inv_[r][v];
    return col;
  }

  /// Riemann-Roch: chi(x) = -(x, x - Z_K) / 2.
  Rat chi(const QVec& x) const {
    return -pairing(x, vec_sub(x, zk_)) / 2;
  }

  /// chi twisted to the class of r: chi_r(x) = chi(x + r) - chi(r).
  Rat chi_shifted(const QVec& r, const QVec& x) const {
    return chi(vec_add(r, x)) - chi(r);
  }

  /// Membership of -x' in the dual lattice's effective cone: x is antinef
  /// when (x, E_v) <= 0 for all v (equivalently x lies in the Lipman cone).
  bool is_antinef(const QVec& x) const {
    for (const auto& p : pair_with_basis(x))
      if (p > 0) return false;
    return true;
  }

  /// Laufer closure: the smallest antinef cycle >= x with y - x integral.
  /// Generalized Laufer sequence: repeatedly bump the first coordinate
  /// whose pairing is positive.  Terminates because the form is definite.
  QVec antinef_closure(QVec x) const {
    QVec pairs = pair_with_basis(x);
    while (true) {
      int v = -1;
      for (int i = 0; i < n_; ++i)
        if (pairs[i] > 0) {
          v = i;
          break;
        }
      if (v < 0) return x;
      x[v] += 1;
      for (int i = 0; i < n_; ++i) pairs[i] += Rat(m_[i][v]);
    }
  }

  /// Artin's fundamental cycle: the minimal nonzero antinef integral cycle.
  IVec fundamental_cycle() const {
    QVec e(n_, 0);
    e[0] = 1;
    return to_integral(antinef_closure(e));
  }

  /// Support of a cycle as a vertex index set.
  std::set<int> support(const QVec& x) const {
    std::set<int> s;
    for (int i = 0; i < n_; ++i)
      if (x[i] != 0) s.insert(i);
    return s;
  }

 private:
  PlumbingGraph graph_;
  int n_;
  IMat m_;
  QMat m_inv_;
  QVec zk_;
};

}  // namespace plumb
