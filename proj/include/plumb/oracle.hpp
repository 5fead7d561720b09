#pragma once

#include "plumb/chi_min.hpp"
#include "plumb/lattice.hpp"

namespace plumb {
namespace oracle {

/// Lexicographic stream of every integer point in [lo, hi].  Guarded by a
/// point-count cap so runaway boxes fail cleanly instead of spinning.
class BoxEnumerator {
 public:
  BoxEnumerator(IVec lo, IVec hi, Int max_points = Int(100000000))
      : lo_(std::move(lo)), hi_(std::move(hi)), cur_(lo_) {
    Int volume = 1;
    for (size_t i = 0; i < lo_.size(); ++i) {
      if (lo_[i] > hi_[i]) throw std::logic_error("enumerate_box: lo > hi");
      volume *= hi_[i] - lo_[i] + 1;
      if (volume > max_points)
        throw resource_error("box of " + to_string(volume) +
                             "+ points exceeds the enumeration cap");
    }
  }

  bool next(IVec& out) {
    if (done_) return false;
    out = cur_;
    int pos = static_cast<int>(cur_.size()) - 1;
    while (pos >= 0) {
      cur_[pos] += 1;
      if (cur_[pos] <= hi_[pos]) break;
      cur_[pos] = lo_[pos];
      --pos;
    }
    if (pos < 0) done_ = true;
    return true;
  }

 private:
  IVec lo_, hi_, cur_;
  bool done_ = false;
};

/// Exhaustive reference minimizer with the same contract as the engine;
/// `bound` clips the region to a finite box (symmetric about 0 for the
/// full-lattice region).  Deliberately naive: no pruning, direct chi calls.
inline MinResult brute_min_chi(const Lattice& lat, const MinQuery& q, const IVec& bound,
                               Int max_points = Int(100000000)) {
  const int n = lat.size();
  IVec lo(n, 0), hi = bound;
  if (q.region == Region::FullLattice)
    for (int i = 0; i < n; ++i) lo[i] = -bound[i];
  if (q.region == Region::Box)
    for (int i = 0; i < n; ++i) hi[i] = std::min(hi[i], q.box[i]);

  // clear denominators once so the per-point work is pure integer
  // arithmetic: with w = D(shift + l) and k = D*Z_K,
  // chi(shift + l) = -w^T M (w - k) / (2 D^2)
  const IMat m = intersection_form(lat.graph());
  const QVec& zk = lat.anticanonical();
  Int d = 1;
  for (const auto& c : q.shift)
    d = boost::multiprecision::lcm(d, Int(boost::multiprecision::denominator(c)));
  for (const auto& c : zk)
    d = boost::multiprecision::lcm(d, Int(boost::multiprecision::denominator(c)));
  IVec shift_d(n), k_d(n);
  for (int i = 0; i < n; ++i) {
    shift_d[i] = boost::multiprecision::numerator(Rat(q.shift[i] * d));
    k_d[i] = boost::multiprecision::numerator(Rat(zk[i] * d));
  }

  BoxEnumerator points(lo, hi, max_points);
  MinResult r;
  bool first = true;
  Int best = 0;
  IVec l, w(n), u(n);
  while (points.next(l)) {
    if (q.exclude_zero && detail::all_zero(l)) continue;
    for (int i = 0; i < n; ++i) {
      w[i] = shift_d[i] + d * l[i];
      u[i] = w[i] - k_d[i];
    }
    Int t = 0;
    for (int i = 0; i < n; ++i) {
      Int row = 0;
      for (int j = 0; j < n; ++j)
        if (m[i][j] != 0) row += m[i][j] * u[j];
      t -= w[i] * row;
    }
    if (first || t < best) {
      best = t;
      r.minimizers.clear();
      first = false;
    }
    if (t == best) r.minimizers.push_back(l);
  }
  if (first) throw infeasible_error("brute_min_chi: empty region");
  r.value = Rat(best, 2 * d * d);
  std::sort(r.minimizers.begin(), r.minimizers.end());
  r.min_minimizer = r.minimizers[0];
  r.max_minimizer = r.minimizers[0];
  for (const auto& m : r.minimizers)
    for (int i = 0; i < n; ++i) {
      r.min_minimizer[i] = std::min(r.min_minimizer[i], m[i]);
      r.max_minimizer[i] = std::max(r.max_minimizer[i], m[i]);
    }
  r.meet_attained = std::find(r.minimizers.begin(), r.minimizers.end(),
                              r.min_minimizer) != r.minimizers.end();
  r.enumerated_count = r.minimizers.size();
  return r;
}

/// Reference fundamental cycle: the coordinatewise-least antinef positive
/// integral cycle in the box, asserted to dominate nothing else antinef.
inline IVec brute_fundamental_cycle(const Lattice& lat, const IVec& bound,
                                    Int max_points = Int(100000000)) {
  const int n = lat.size();
  std::vector<IVec> antinef;
  BoxEnumerator points(IVec(n, 0), bound, max_points);
  IVec l;
  while (points.next(l)) {
    if (detail::all_zero(l)) continue;
    QVec lq(l.begin(), l.end());
    if (lat.is_antinef(lq)) antinef.push_back(l);
  }
  if (antinef.empty()) throw infeasible_error("no antinef point in box");
  IVec best = antinef[0];
  for (const auto& a : antinef) {
    bool a_le = true;
    for (int i = 0; i < n; ++i)
      if (a[i] > best[i]) a_le = false;
    if (a_le) best = a;
  }
  for (const auto& a : antinef)  // uniqueness of the minimum
    for (int i = 0; i < n; ++i)
      if (a[i] < best[i])
        throw std::logic_error("brute_fundamental_cycle: minimum not unique");
  return best;
}

/// Reference analytic-semigroup slice: integral points l in [0, bound] with
/// chi(l) < chi(l + m) for every 0 < m <= inner_bound (plus l = 0).  The
/// caller supplies an inner box already known to contain any violating m.
inline std::vector<IVec> brute_semigroup(const Lattice& lat, const IVec& bound,
                                         const IVec& inner_bound,
                                         Int max_points = Int(100000000)) {
  const int n = lat.size();
  std::vector<IVec> members;
  BoxEnumerator outer(IVec(n, 0), bound, max_points);
  IVec l;
  while (outer.next(l)) {
    QVec lq(l.begin(), l.end());
    if (detail::all_zero(l)) {
      members.push_back(l);
      continue;
    }
    Rat base = lat.chi(lq);
    bool ok = true;
    BoxEnumerator inner(IVec(n, 0), inner_bound, max_points);
    IVec m;
    while (ok && inner.next(m)) {
      if (detail::all_zero(m)) continue;
      QVec y = lq;
      for (int i = 0; i < n; ++i) y[i] += Rat(m[i]);
      if (lat.chi(y) <= base) ok = false;
    }
    if (ok) members.push_back(l);
  }
  return members;
}

}  // namespace oracle
}  // namespace plumb
