#pragma once

#include "plumb/lattice.hpp"
#include "plumb/smith.hpp"

namespace plumb {

namespace detail {
inline Int mod_positive(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}
}  // namespace detail

/// The discriminant group H = L' / L of the lattice, presented as
/// Z^n / (M Z^n) through the dual-basis coordinates c = -M l'.  A Smith
/// normal form U M V = diag(d) turns the class of c into the tuple
/// (U c mod d_i)_i, which is the canonical label used throughout.
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(const Lattice& lat)
      : lattice_(&lat), smith_(smith_normal_form(lat.form())) {
    order_ = 1;
    for (const auto& d : smith_.diag) order_ *= d;
  }

  const Int& order() const { return order_; }
  const IVec& invariant_factors() const { return smith_.diag; }

  /// Canonical label of [l'] in H.
  IVec class_of(const QVec& l_prime) const {
    QVec cq = mat_vec(lattice_->form(), l_prime);
    IVec c;
    c.reserve(cq.size());
    for (auto& x : cq) {
      if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error("class_of: argument is not in the dual lattice");
      c.push_back(-boost::multiprecision::numerator(x));
    }
    IVec label = mat_vec(smith_.u, c);
    for (size_t i = 0; i < label.size(); ++i)
      label[i] = detail::mod_positive(label[i], smith_.diag[i]);
    return label;
  }

  /// The unique representative of a class lying in [0, 1)^n
  /// (the fractional part of any dual-lattice element in the class).
  QVec representative(const IVec& label) const {
    const int n = lattice_->size();
    QVec c(n, 0);
    IVec lifted = mat_vec(smith_.u_inv, label);
    for (int i = 0; i < n; ++i) c[i] = Rat(lifted[i]);
    QVec x = mat_vec(lattice_->form_inverse(), c);
    for (auto& xi : x) xi = frac_rat(-xi);
    return x;
  }

  /// Reduced representative of an arbitrary dual-lattice element.
  QVec reduce(const QVec& l_prime) const { return representative(class_of(l_prime)); }

  bool is_trivial_class(const IVec& label) const {
    for (const auto& v : label)
      if (v != 0) return false;
    return true;
  }

  /// All class labels in lexicographic order of the invariant-factor tuple.
  /// Throws when the group order exceeds `limit`.
  std::vector<IVec> all_classes(const Int& limit = Int(1000000)) const {
    if (order_ > limit)
      throw resource_error("discriminant group too large to enumerate: order " +
                           to_string(order_));
    const int n = lattice_->size();
    std::vector<IVec> out;
    IVec cur(n, 0);
    while (true) {
      out.push_back(cur);
      int pos = n - 1;
      while (pos >= 0) {
        cur[pos] += 1;
        if (cur[pos] < smith_.diag[pos]) break;
        cur[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    return out;
  }

 private:
  const Lattice* lattice_;
  SmithResult smith_;
  Int order_;
};

}  // namespace plumb
