#pragma once

#include "plumb/chi_min.hpp"
#include "plumb/discriminant.hpp"
#include "plumb/lattice.hpp"

#include <map>
#include <utility>

namespace plumb {

enum class SeriesKind { Hilbert, Poincare };

/// Finite window of an equivariant series: coefficients indexed by
/// (discriminant class label, integral offset l0), the exponent being
/// l' = r_h + l0.
struct SeriesTruncation {
  SeriesKind kind;
  IVec bound;
  std::map<std::pair<IVec, IVec>, Int> coefficients;
};

/// Coefficients of the multivariable Hilbert and Poincare series of the
/// divisorial filtration for the generic structure.  Every coefficient is
/// a difference of chi minima over the non-negative orthant; the shifted
/// minimizations repeat heavily across the inclusion-exclusion sums, so
/// they run through a memoizing cache.
class SeriesEngine {
 public:
  explicit SeriesEngine(const Lattice& lat)
      : lat_(&lat), disc_(lat), cache_(lat), n_(lat.size()) {
    MinQuery q;
    q.shift = QVec(n_, 0);
    q.region = Region::NonNegOrthant;
    q.exclude_zero = true;
    non_rational_ = (cache_.get(q).value != 1);
  }

  const DiscriminantGroup& discriminant() const { return disc_; }

  /// Hilbert coefficient at l' = r_h + l0.  Offsets with negative
  /// coordinates reduce through the antinef closure first.
  Int hilbert_coefficient(QVec l_prime) {
    validate_dual(l_prime);
    QVec r = disc_.reduce(l_prime);
    QVec l0 = vec_sub(l_prime, r);
    for (const auto& c : l0)
      if (c < 0) {
        l_prime = lat_->antinef_closure(l_prime);
        l0 = vec_sub(l_prime, r);
        break;
      }
    Rat value = min_over_orthant(l_prime) - min_over_orthant(r);
    if (is_zero(r) && !is_zero(l0) && non_rational_) value += 1;
    return boost::multiprecision::numerator(value);
  }

  /// Poincare coefficient at l' >= 0: 1 at the origin, otherwise the
  /// inclusion-exclusion over all vertex subsets I (including the empty
  /// one) of (-1)^{|I|+1} min_{l>=0} chi(l' + E_I + l).
  Int poincare_coefficient(const QVec& l_prime) {
    validate_dual(l_prime);
    if (!is_effective(l_prime))
      throw parse_error("poincare_coefficient requires l' >= 0");
    if (is_zero(l_prime)) return 1;
    if (n_ > 25) throw resource_error("inclusion-exclusion over 2^n subsets infeasible");
    Rat total = 0;
    for (unsigned long mask = 0; mask < (1ul << n_); ++mask) {
      QVec shift = l_prime;
      int bits = 0;
      for (int v = 0; v < n_; ++v)
        if (mask & (1ul << v)) {
          shift[v] += 1;
          ++bits;
        }
      Rat term = min_over_orthant(shift);
      total += (bits % 2 == 0) ? -term : term;
    }
    return boost::multiprecision::numerator(total);
  }

  SeriesTruncation series_truncation(SeriesKind kind, const IVec& bound,
                                     const Int& class_limit = Int(100000)) {
    for (const auto& b : bound)
      if (b < 0) throw parse_error("series bound must be >= 0");
    SeriesTruncation t;
    t.kind = kind;
    t.bound = bound;
    for (const auto& label : disc_.all_classes(class_limit)) {
      QVec r = disc_.representative(label);
      IVec l0(n_, 0);
      while (true) {
        QVec l_prime = r;
        for (int i = 0; i < n_; ++i) l_prime[i] += Rat(l0[i]);
        Int c = (kind == SeriesKind::Hilbert) ? hilbert_coefficient(l_prime)
                                              : poincare_coefficient(l_prime);
        t.coefficients[{label, l0}] = c;
        int pos = n_ - 1;
        while (pos >= 0) {
          l0[pos] += 1;
          if (l0[pos] <= bound[pos]) break;
          l0[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
    return t;
  }

  /// The defining identity P(t) = -H(t) * prod_v (1 - t_v^{-1}), checked
  /// coefficientwise on P's window: p(l') = sum_I (-1)^{|I|+1} h(l'+E_I).
  static bool verify_convolution(const SeriesTruncation& h, const SeriesTruncation& p) {
    if (h.kind != SeriesKind::Hilbert || p.kind != SeriesKind::Poincare)
      throw parse_error("verify_convolution expects (Hilbert, Poincare)");
    const int n = static_cast<int>(h.bound.size());
    for (int i = 0; i < n; ++i)
      if (h.bound[i] < p.bound[i] + 1)
        throw infeasible_error("Hilbert window must exceed Poincare window by 1");
    for (const auto& [key, pcoeff] : p.coefficients) {
      const auto& [label, l0] = key;
      Int rhs = 0;
      for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        IVec off = l0;
        int bits = 0;
        for (int v = 0; v < n; ++v)
          if (mask & (1ul << v)) {
            off[v] += 1;
            ++bits;
          }
        auto it = h.coefficients.find({label, off});
        if (it == h.coefficients.end())
          throw infeasible_error("Hilbert window missing required coefficient");
        rhs += (bits % 2 == 0) ? -it->second : it->second;
      }
      if (rhs != pcoeff) return false;
    }
    return true;
  }

 private:
  void validate_dual(const QVec& l_prime) const {
    QVec pairs = mat_vec(lat_->form(), l_prime);
    if (!is_integral(pairs))
      throw parse_error("element is not in the dual lattice");
  }

  Rat min_over_orthant(const QVec& shift) {
    MinQuery q;
    q.shift = shift;
    q.region = Region::NonNegOrthant;
    return cache_.get(q).value;
  }

  const Lattice* lat_;
  DiscriminantGroup disc_;
  ChiMinCache cache_;
  int n_;
  bool non_rational_;
};

}  // namespace plumb
