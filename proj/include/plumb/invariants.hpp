#pragma once

#include "plumb/chi_min.hpp"
#include "plumb/discriminant.hpp"
#include "plumb/lattice.hpp"

#include <optional>
#include <string>

namespace plumb {

struct Classification {
  bool rational = false;
  bool elliptic = false;
  bool minimally_elliptic = false;
  bool numerically_gorenstein = false;
  bool qgorenstein_generic_admissible = false;
};

struct H1Result {
  Int value;
  bool certified = false;
  std::string hypothesis = "uncertified";
  // one of: coeffs_negative_on_support | computation_sequence_terminal |
  //         adjacency_condition | generic_bundle_formula | uncertified
};

struct SequenceStep {
  QVec l_prime;
  IVec z;
  int chosen_vertex = -1;  // vertex subtracted at this step
};

struct ComputationSequence {
  std::vector<SequenceStep> steps;  // the non-terminal steps, in order
  QVec terminal_l;
  IVec terminal_z;
};

/// Induced subgraph on a sorted vertex index list (used for the
/// vertex-deleted rationality checks).
inline PlumbingGraph induced_subgraph(const PlumbingGraph& g, const std::vector<int>& verts) {
  PlumbingGraph s;
  std::map<int, int> remap;
  for (int v : verts) {
    remap[v] = s.size();
    s.ids.push_back(g.ids[v]);
    s.euler.push_back(g.euler[v]);
  }
  for (auto [a, b] : g.edges) {
    auto ia = remap.find(a), ib = remap.find(b);
    if (ia != remap.end() && ib != remap.end())
      s.edges.emplace_back(ia->second, ib->second);
  }
  detail::build_adjacency(s);
  return s;
}

/// The Theorem-A invariant suite for the generic analytic structure on a
/// fixed graph.  Everything reduces to exact chi minimization.
class InvariantEngine {
 public:
  explicit InvariantEngine(const PlumbingGraph& g)
      : lat_(g), minimizer_(lat_), n_(lat_.size()) {}

  const Lattice& lattice() const { return lat_; }
  const ChiMinimizer& minimizer() const { return minimizer_; }

  /// min_{l > 0, l in L} chi(l): 1 for rational, 0 for elliptic graphs.
  const Rat& min_chi_positive() const {
    if (!min_pos_) {
      MinQuery q;
      q.shift = QVec(n_, 0);
      q.region = Region::NonNegOrthant;
      q.exclude_zero = true;
      min_pos_ = minimizer_.minimize(q);
    }
    return min_pos_->value;
  }

  Int geometric_genus_generic() const {
    Rat pg = 1 - min_chi_positive();
    return boost::multiprecision::numerator(pg);
  }

  Classification classify() const {
    Classification c;
    const Rat& m = min_chi_positive();
    c.rational = (m == 1);
    c.elliptic = (m == 0);
    c.numerically_gorenstein = is_integral(lat_.anticanonical());
    if (c.elliptic) {
      QVec zmin_q = to_rational(lat_.fundamental_cycle());
      bool chi_zmin_zero = (lat_.chi(zmin_q) == 0);
      c.minimally_elliptic = chi_zmin_zero && all_vertex_deleted_rational();
    }
    c.qgorenstein_generic_admissible = c.rational || c.minimally_elliptic;
    return c;
  }

  /// h1 of the structure sheaf of an effective cycle Z > 0; additive over
  /// the connected components of the support.
  Int h1_OZ(const IVec& z) const {
    if (detail::all_zero(z)) throw infeasible_error("h1_OZ requires Z > 0");
    for (const auto& c : z)
      if (c < 0) throw infeasible_error("h1_OZ requires Z >= 0");
    std::set<int> supp;
    for (int v = 0; v < n_; ++v)
      if (z[v] != 0) supp.insert(v);
    Rat total = 0;
    for (const auto& comp : support_components(lat_.graph(), supp)) {
      MinQuery q;
      q.shift = QVec(n_, 0);
      q.region = Region::Box;
      q.box = IVec(n_, 0);
      for (int v : comp) q.box[v] = z[v];
      q.exclude_zero = true;
      total += 1 - minimizer_.minimize(q).value;
    }
    return boost::multiprecision::numerator(total);
  }

  /// h1(Z, L_gen) for a generic line bundle of Chern class l' on Z:
  /// chi(-l') - min_{0 <= l <= Z} chi(-l' + l).  Valid for every analytic
  /// structure, so no certification is involved.
  Int h1_generic_bundle(const IVec& z, const QVec& l_prime) const {
    MinQuery q;
    q.shift = negate(l_prime);
    q.region = Region::Box;
    q.box = z;
    Rat h1 = lat_.chi(q.shift) - minimizer_.minimize(q).value;
    return boost::multiprecision::numerator(h1);
  }

  /// Laufer type computation sequence from (l', Z): repeatedly subtract an
  /// E_w inside the support with (l'_k, E_w) < 0 (least index first) until
  /// the restriction of -l'_t is antinef on |Z_t|.  The terminal pair is
  /// choice-independent.
  ComputationSequence computation_sequence(const IVec& z, const QVec& l_prime,
                                           bool reverse_order = false) const {
    ComputationSequence seq;
    QVec l = l_prime;
    IVec zc = z;
    QVec pairs = lat_.pair_with_basis(l);
    while (true) {
      int w = -1;
      for (int idx = 0; idx < n_; ++idx) {
        int v = reverse_order ? n_ - 1 - idx : idx;
        if (zc[v] > 0 && pairs[v] < 0) {
          w = v;
          break;
        }
      }
      if (w < 0) break;
      seq.steps.push_back({l, zc, w});
      l[w] -= 1;
      zc[w] -= 1;
      for (int i = 0; i < n_; ++i) pairs[i] -= Rat(lat_.form()[i][w]);
    }
    seq.terminal_l = l;
    seq.terminal_z = zc;
    return seq;
  }

  /// h1(Z, O_Z(l')) for the natural bundle on the generic structure.  The
  /// value is the generic-bundle formula; `certified` records whether one
  /// of the sufficient hypotheses provably applies to the natural bundle.
  H1Result h1_natural_on_Z(const IVec& z, const QVec& l_prime) const {
    H1Result r;
    r.value = h1_generic_bundle(z, l_prime);

    std::set<int> supp;
    for (int v = 0; v < n_; ++v)
      if (z[v] != 0) supp.insert(v);

    // (i) strictly negative coefficients on the whole support
    bool all_strict = !supp.empty();
    for (int v : supp)
      if (l_prime[v] >= 0) all_strict = false;
    if (all_strict) {
      r.certified = true;
      r.hypothesis = "coeffs_negative_on_support";
      return r;
    }

    // (ii) non-positive on the support, and each connected component of Z
    // touches a vertex (inside or adjacent) with strictly negative coefficient
    bool nonpos = true;
    for (int v : supp)
      if (l_prime[v] > 0) nonpos = false;
    if (nonpos && !supp.empty()) {
      bool every_comp = true;
      for (const auto& comp : support_components(lat_.graph(), supp)) {
        std::set<int> touching(comp.begin(), comp.end());
        for (int v : comp)
          for (int u : lat_.graph().adj[v]) touching.insert(u);
        bool found = false;
        for (int u : touching)
          if (l_prime[u] < 0) found = true;
        if (!found) every_comp = false;
      }
      if (every_comp) {
        r.certified = true;
        r.hypothesis = "adjacency_condition";
        return r;
      }
    }

    // (iii) the computation-sequence terminal has strictly negative
    // coefficients on its (possibly empty) support
    ComputationSequence seq = computation_sequence(z, l_prime);
    bool terminal_ok = true;
    for (int v = 0; v < n_; ++v)
      if (seq.terminal_z[v] > 0 && seq.terminal_l[v] >= 0) terminal_ok = false;
    if (terminal_ok) {
      r.certified = true;
      r.hypothesis = "computation_sequence_terminal";
      return r;
    }

    return r;
  }

  /// h1 of the natural line bundle O(l') on the whole resolution:
  /// chi(-l') - min_{l >= 0} chi(-l' + l), plus 1 when l' is an effective
  /// integral cycle on a non-rational graph.
  Int h1_natural_global(const QVec& l_prime) const {
    MinQuery q;
    q.shift = negate(l_prime);
    q.region = Region::NonNegOrthant;
    Rat h1 = lat_.chi(q.shift) - minimizer_.minimize(q).value;
    if (is_integral(l_prime) && is_effective(l_prime) && !classify().rational) h1 += 1;
    return boost::multiprecision::numerator(h1);
  }

  /// Geometric genus of the universal abelian cover: sum of h1(O(-r_h))
  /// over all discriminant classes.
  Int pg_universal_abelian_cover(const Int& class_limit = Int(1000000)) const {
    DiscriminantGroup disc(lat_);
    Int total = 0;
    for (const auto& label : disc.all_classes(class_limit))
      total += h1_natural_global(negate(disc.representative(label)));
    return total;
  }

  /// Minimizers of chi over the full lattice (cached; drives the cycle ops).
  const MinResult& full_lattice_minimizers() const {
    if (!full_min_) {
      MinQuery q;
      q.shift = QVec(n_, 0);
      q.region = Region::FullLattice;
      full_min_ = minimizer_.minimize(q);
    }
    return *full_min_;
  }

  /// Z_coh: the minimal positive cycle with h1(O_Z) = p_g; the meet of the
  /// positive chi-minimizers.  Absent for rational graphs.
  std::optional<IVec> cohomological_cycle() const {
    auto pos = positive_full_minimizers();
    if (pos.empty()) return std::nullopt;
    IVec meet = pos[0];
    for (const auto& m : pos)
      for (int i = 0; i < n_; ++i) meet[i] = std::min(meet[i], m[i]);
    return meet;
  }

  /// Z_max: the maximal ideal cycle, the join of the positive
  /// chi-minimizers.  Absent for rational graphs.
  std::optional<IVec> maximal_ideal_cycle() const {
    auto pos = positive_full_minimizers();
    if (pos.empty()) return std::nullopt;
    IVec join = pos[0];
    for (const auto& m : pos)
      for (int i = 0; i < n_; ++i) join[i] = std::max(join[i], m[i]);
    return join;
  }

  /// Z_coh(l'): unique minimal element of the argmin set of chi(-l' + l)
  /// over l >= 0 (or 0 <= l <= Z).  Rejects bundles with vanishing h1.
  IVec cohomological_cycle_of_bundle(const QVec& l_prime,
                                     const std::optional<IVec>& z = std::nullopt) const {
    MinQuery q;
    q.shift = negate(l_prime);
    if (z) {
      q.region = Region::Box;
      q.box = *z;
    } else {
      q.region = Region::NonNegOrthant;
    }
    MinResult r = minimizer_.minimize(q);
    if (lat_.chi(q.shift) - r.value == 0) {
      // the plain difference misses the +1 correction for effective
      // integral Chern classes on non-rational graphs; there the argmin
      // set contains l = 0, which is not a cycle, so exclude it
      if (!(is_integral(l_prime) && is_effective(l_prime) &&
            !classify().rational))
        throw infeasible_error("bundle has h1 = 0: no cohomological cycle");
      q.exclude_zero = true;
      r = minimizer_.minimize(q);
    }
    return r.min_minimizer;
  }

  /// Membership in the analytic semigroup of the generic structure:
  /// l' = 0 or chi(l') < chi(l' + l) for every l > 0.
  bool in_analytic_semigroup(const QVec& l_prime) const {
    if (is_zero(l_prime)) return true;
    MinQuery q;
    q.shift = l_prime;
    q.region = Region::NonNegOrthant;
    q.exclude_zero = true;
    return minimizer_.minimize(q).value > lat_.chi(l_prime);
  }

  static QVec negate(const QVec& v) {
    QVec r(v);
    for (auto& x : r) x = -x;
    return r;
  }

 private:
  std::vector<IVec> positive_full_minimizers() const {
    std::vector<IVec> pos;
    for (const auto& m : full_lattice_minimizers().minimizers) {
      bool positive = !detail::all_zero(m);
      for (const auto& c : m)
        if (c < 0) positive = false;
      if (positive) pos.push_back(m);
    }
    return pos;
  }

  bool all_vertex_deleted_rational() const {
    const PlumbingGraph& g = lat_.graph();
    for (int v = 0; v < n_; ++v) {
      std::set<int> rest;
      for (int u = 0; u < n_; ++u)
        if (u != v) rest.insert(u);
      for (const auto& comp : support_components(g, rest)) {
        PlumbingGraph sub = induced_subgraph(g, comp);
        InvariantEngine sub_engine(sub);
        if (sub_engine.min_chi_positive() != 1) return false;
      }
    }
    return true;
  }

  Lattice lat_;
  ChiMinimizer minimizer_;
  int n_;
  mutable std::optional<MinResult> min_pos_;
  mutable std::optional<MinResult> full_min_;
};

}  // namespace plumb
