#pragma once

#include "plumb/lattice.hpp"

#include <functional>
#include <map>
#include <optional>

namespace plumb {

enum class Region { FullLattice, NonNegOrthant, Box };

/// Minimize chi(shift + l) over integral l ranging in the given region
/// (all of Z^n, the non-negative orthant, or the box 0 <= l <= box).
struct MinQuery {
  QVec shift;
  Region region = Region::NonNegOrthant;
  IVec box;                   // used when region == Box
  bool exclude_zero = false;  // drop l = 0 from the search space
};

struct MinResult {
  Rat value;
  std::vector<IVec> minimizers;  // every l attaining the minimum, sorted
  IVec min_minimizer;            // coordinatewise meet of the minimizers
  IVec max_minimizer;            // coordinatewise join of the minimizers
  bool meet_attained = false;    // whether the meet is itself a minimizer
  size_t enumerated_count = 0;
};

namespace detail {

inline bool all_zero(const IVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

/// Exact branch-and-bound minimizer of the Riemann-Roch function over a
/// shifted sublattice.  chi(y) = chi(Z_K/2) + Q(y - Z_K/2)/2 with
/// Q = -(.,.) positive definite; an LDL^T factorization of -M turns Q into
/// a sum of squares processed one coordinate at a time, pruning any branch
/// whose partial sum already exceeds the incumbent.  Pruning is non-strict
/// so that every tied minimizer is collected.
class ChiMinimizer {
 public:
  explicit ChiMinimizer(const Lattice& lat) : lat_(&lat), n_(lat.size()) {
    QMat a(n_, QVec(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a[i][j] = Rat(-lat.form()[i][j]);
    fact_ = ldlt(a);
    chi_star_ = lat.chi(vec_scale(Rat(1, 2), lat.anticanonical()));
    scale_base_ = 1;
    for (int i = 0; i < n_; ++i) {
      scale_base_ = boost::multiprecision::lcm(
          scale_base_, Int(boost::multiprecision::denominator(fact_.D[i])));
      for (int j = 0; j < i; ++j)
        scale_base_ = boost::multiprecision::lcm(
            scale_base_,
            Int(boost::multiprecision::denominator(fact_.L[i][j])));
    }
  }

  MinResult minimize(const MinQuery& q, size_t max_minimizers = 200000) const {
    const QVec c = vec_sub(q.shift, vec_scale(Rat(1, 2), lat_->anticanonical()));

    // Clear denominators so the whole search runs on integers: with a
    // common scale T (covering L, D, and c), the level term
    // D_j (k + c_j + u_j)^2 scaled by T^5 is (D_j T) ((k - center) T^2)^2,
    // an integer.  Scaled quantities carry the suffix S.
    Int t = scale_base_;
    for (const auto& x : c)
      t = boost::multiprecision::lcm(
          t, Int(boost::multiprecision::denominator(x)));
    const Int t2 = t * t;
    const Int t5 = t2 * t2 * t;
    IVec c2(n_);  // c[v] * T^2
    for (int v = 0; v < n_; ++v)
      c2[v] = boost::multiprecision::numerator(Rat(c[v] * t2));
    IMat lt(n_, IVec(n_, 0));  // L[i][j] * T
    IVec dt(n_);               // D[j] * T
    for (int i = 0; i < n_; ++i) {
      dt[i] = boost::multiprecision::numerator(Rat(fact_.D[i] * t));
      for (int j = 0; j < i; ++j)
        lt[i][j] = boost::multiprecision::numerator(Rat(fact_.L[i][j] * t));
    }

    std::optional<Int> lo;
    if (q.region != Region::FullLattice) lo = 0;
    auto upper = [&](int v) -> std::optional<Int> {
      if (q.region == Region::Box) return q.box[v];
      return std::nullopt;
    };

    IVec start = heuristic_point(q, c);
    // initial pruning threshold from the heuristic incumbent; flooring is
    // safe because an exact tie forces the scaled bound to be integral
    Int bound_s = floor_rat(Rat(2 * (lat_->chi(shifted(q.shift, start)) -
                                     chi_star_) * t5));
    bool have_leaf = false;
    Int best_s = 0;

    std::vector<IVec> best;
    IVec cur(n_, 0);
    IVec dval_s(n_, 0);  // (cur[j] + c[j]) * T, for committed levels

    std::function<void(int, const Int&)> dfs = [&](int level, const Int& partial_s) {
      if (level < 0) {
        if (q.exclude_zero && detail::all_zero(cur)) return;
        if (!have_leaf || partial_s < best_s) {
          best_s = partial_s;
          bound_s = partial_s;
          have_leaf = true;
          best.clear();
        }
        if (partial_s == best_s) {
          if (best.size() >= max_minimizers)
            throw resource_error("minimizer set exceeds limit");
          best.push_back(cur);
        }
        return;
      }
      // Q contribution of this level: D_j * (l_j + c_j + u_j)^2 where u_j
      // collects the already-fixed coordinates through L.
      Int u_s = 0;  // u * T^2
      for (int i = level + 1; i < n_; ++i)
        if (lt[i][level] != 0) u_s += lt[i][level] * dval_s[i];
      const Int center_s = -(c2[level] + u_s);  // center * T^2
      const Int& d_piv = dt[level];

      auto term = [&](const Int& k) {
        Int w = k * t2 - center_s;
        return d_piv * w * w;  // term * T^5
      };
      auto visit = [&](const Int& k) {
        cur[level] = k;
        dval_s[level] = k * t + (c2[level] / t);  // c2 divisible by T
        dfs(level - 1, partial_s + term(k));
      };

      std::optional<Int> hi = upper(level);
      Int down = floor_div(center_s, t2);
      if (hi && down > *hi) down = *hi;
      Int up = down + 1;
      if (lo && up < *lo) up = *lo;
      // The two scans move away from the center, so the quadratic term only
      // grows; the first violation of the bound ends each scan.
      for (Int k = down; !lo || k >= *lo; --k) {
        if (partial_s + term(k) > bound_s) break;
        visit(k);
      }
      for (Int k = up; !hi || k <= *hi; ++k) {
        if (k <= down) { continue; }
        if (partial_s + term(k) > bound_s) break;
        visit(k);
      }
    };

    dfs(n_ - 1, Int(0));

    if (best.empty()) throw infeasible_error("search region contains no lattice point");
    Rat incumbent = chi_star_ + Rat(best_s, 2 * t5);
    std::sort(best.begin(), best.end());
    MinResult r;
    r.value = incumbent;
    r.min_minimizer = best[0];
    r.max_minimizer = best[0];
    for (const auto& m : best)
      for (int i = 0; i < n_; ++i) {
        r.min_minimizer[i] = std::min(r.min_minimizer[i], m[i]);
        r.max_minimizer[i] = std::max(r.max_minimizer[i], m[i]);
      }
    r.meet_attained =
        std::find(best.begin(), best.end(), r.min_minimizer) != best.end();
    r.enumerated_count = best.size();
    r.minimizers = std::move(best);
    return r;
  }

  /// A box certified to contain every minimizer of the query, derived from
  /// the incumbent at a feasible starting point (see certified_box).  For
  /// FullLattice the box bounds |l_v|; otherwise it bounds 0 <= l_v.
  IVec certify_bound(const MinQuery& q) const {
    const QVec c = vec_sub(q.shift, vec_scale(Rat(1, 2), lat_->anticanonical()));
    IVec p = heuristic_point(q, c);
    QVec y = q.shift;
    for (int i = 0; i < n_; ++i) y[i] += Rat(p[i]);
    return certified_box(q.shift, lat_->chi(y));
  }

  const Rat& chi_global_min() const { return chi_star_; }

  /// A box guaranteed to contain every minimizer of the query: any l with
  /// chi(shift + l) <= known_min satisfies, coordinatewise,
  /// |l_v + c_v|^2 <= 2 (known_min - chi*) * (-M^{-1})_vv.
  IVec certified_box(const QVec& shift, const Rat& known_min) const {
    const QVec c = vec_sub(shift, vec_scale(Rat(1, 2), lat_->anticanonical()));
    const Rat r2 = 2 * (known_min - chi_star_);
    IVec box(n_);
    for (int v = 0; v < n_; ++v) {
      Rat bound2 = r2 * (-lat_->form_inverse()[v][v]);
      Int radius =
          bound2 <= 0
              ? Int(0)
              : ceil_sqrt(ceil_rat(bound2));
      Rat absc = boost::multiprecision::abs(c[v]);
      Int b = radius + ceil_rat(absc);
      if (b < 1) b = 1;
      box[v] = b;
    }
    return box;
  }

 private:
  static Int floor_div(const Int& a, const Int& b) {  // b > 0
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) q -= 1;
    return q;
  }

  QVec shifted(const QVec& shift, const IVec& l) const {
    QVec y = shift;
    for (int i = 0; i < n_; ++i) y[i] += Rat(l[i]);
    return y;
  }

  /// A feasible starting point near the continuous minimum, used to seed
  /// the incumbent so the first descent is already tightly bounded.
  IVec heuristic_point(const MinQuery& q, const QVec& c) const {
    IVec p(n_);
    for (int v = 0; v < n_; ++v) {
      Int k = floor_rat(-c[v] + Rat(1, 2));
      if (q.region != Region::FullLattice && k < 0) k = 0;
      if (q.region == Region::Box && k > q.box[v]) k = q.box[v];
      p[v] = k;
    }
    if (q.exclude_zero && detail::all_zero(p)) {
      bool moved = false;
      for (int v = 0; v < n_ && !moved; ++v) {
        if (q.region == Region::Box && q.box[v] < 1) continue;
        p[v] = 1;
        moved = true;
      }
      if (!moved) throw infeasible_error("search region contains no lattice point");
    }
    return p;
  }

  const Lattice* lat_;
  int n_;
  LDLT fact_;
  Rat chi_star_;
  Int scale_base_;  // lcm of the denominators appearing in L and D
};

/// Memoizing frontend keyed by the full query; the series module issues the
/// same shifted minimizations across an inclusion-exclusion sum.
class ChiMinCache {
 public:
  explicit ChiMinCache(const Lattice& lat) : engine_(lat) {}

  const MinResult& get(const MinQuery& q) {
    std::string key = key_of(q);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(std::move(key), engine_.minimize(q)).first->second;
  }

  const ChiMinimizer& engine() const { return engine_; }

 private:
  static std::string key_of(const MinQuery& q) {
    std::string key;
    for (const auto& x : q.shift) key += to_string(x) + ",";
    key += "|" + std::to_string(static_cast<int>(q.region));
    key += "|";
    for (const auto& b : q.box) key += to_string(b) + ",";
    key += q.exclude_zero ? "|x" : "|.";
    return key;
  }

  ChiMinimizer engine_;
  std::map<std::string, MinResult> memo_;
};

}  // namespace plumb
