#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace plumb;
using testutil::ivec;
using testutil::load;
using testutil::qvec;

namespace {

MinQuery query(const QVec& shift, Region region, bool exclude_zero = false,
               IVec box = {}) {
  MinQuery q;
  q.shift = shift;
  q.region = region;
  q.exclude_zero = exclude_zero;
  q.box = std::move(box);
  return q;
}

}  // namespace

TEST_CASE("A1 minima") {
  Lattice lat(load("a1.graph"));
  ChiMinimizer engine(lat);

  MinResult pos = engine.minimize(query(qvec({0}), Region::NonNegOrthant, true));
  REQUIRE(pos.value == 1);
  REQUIRE(pos.minimizers == std::vector<IVec>{ivec({1})});

  MinResult half = engine.minimize(query({Rat(1, 2)}, Region::FullLattice));
  REQUIRE(half.value == Rat(1, 4));
  REQUIRE(half.minimizers == std::vector<IVec>{ivec({-1}), ivec({0})});
  REQUIRE(half.min_minimizer == ivec({-1}));
  REQUIRE(half.max_minimizer == ivec({0}));
  REQUIRE(half.meet_attained);
}

TEST_CASE("A2 box with excluded zero: meet is not attained") {
  Lattice lat(load("a2.graph"));
  ChiMinimizer engine(lat);
  MinResult r =
      engine.minimize(query(qvec({0, 0}), Region::Box, true, ivec({1, 1})));
  REQUIRE(r.value == 1);
  REQUIRE(r.minimizers ==
          std::vector<IVec>{ivec({0, 1}), ivec({1, 0}), ivec({1, 1})});
  REQUIRE(r.min_minimizer == ivec({0, 0}));
  REQUIRE_FALSE(r.meet_attained);
  REQUIRE(r.max_minimizer == ivec({1, 1}));
}

TEST_CASE("empty region raises") {
  Lattice lat(load("a1.graph"));
  ChiMinimizer engine(lat);
  REQUIRE_THROWS_AS(engine.minimize(query(qvec({0}), Region::Box, true, ivec({0}))),
                    infeasible_error);
}

TEST_CASE("region monotonicity") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-5, 5);
  for (const auto& name : testutil::fixture_names()) {
    Lattice lat(load(name));
    ChiMinimizer engine(lat);
    const int n = lat.size();
    for (int trial = 0; trial < 5; ++trial) {
      QVec shift(n);
      for (int i = 0; i < n; ++i) shift[i] = Rat(num(rng), 2);
      Rat full = engine.minimize(query(shift, Region::FullLattice)).value;
      Rat orthant = engine.minimize(query(shift, Region::NonNegOrthant)).value;
      Rat box = engine.minimize(query(shift, Region::Box, false, IVec(n, 2))).value;
      REQUIRE(full <= orthant);
      REQUIRE(orthant <= box);
    }
  }
}

TEST_CASE("min over the orthant equals min over the lattice (shift 0 and r_h)") {
  for (const auto& name : testutil::fixture_names()) {
    Lattice lat(load(name));
    ChiMinimizer engine(lat);
    DiscriminantGroup disc(lat);
    const int n = lat.size();
    REQUIRE(engine.minimize(query(QVec(n, 0), Region::FullLattice)).value ==
            engine.minimize(query(QVec(n, 0), Region::NonNegOrthant)).value);
    if (disc.order() <= 64) {
      for (const auto& label : disc.all_classes()) {
        QVec r = disc.representative(label);
        REQUIRE(engine.minimize(query(r, Region::FullLattice)).value ==
                engine.minimize(query(r, Region::NonNegOrthant)).value);
      }
    }
  }
}

TEST_CASE("translation covariance of the optimal coset") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-3, 3);
  for (const auto& name : {"a3.graph", "d4.graph", "sigma237.graph"}) {
    Lattice lat(load(name));
    ChiMinimizer engine(lat);
    const int n = lat.size();
    QVec shift(n);
    for (int i = 0; i < n; ++i) shift[i] = Rat(num(rng), 2);
    IVec m(n);
    for (int i = 0; i < n; ++i) m[i] = num(rng);
    QVec shifted = shift;
    for (int i = 0; i < n; ++i) shifted[i] += Rat(m[i]);
    MinResult base = engine.minimize(query(shift, Region::FullLattice));
    MinResult moved = engine.minimize(query(shifted, Region::FullLattice));
    REQUIRE(base.value == moved.value);
    std::vector<IVec> translated;
    for (auto l : base.minimizers) {
      for (int i = 0; i < n; ++i) l[i] -= m[i];
      translated.push_back(l);
    }
    std::sort(translated.begin(), translated.end());
    REQUIRE(translated == moved.minimizers);
  }
}

TEST_CASE("certified box contains the whole minimizer set") {
  for (const auto& name : testutil::fixture_names()) {
    Lattice lat(load(name));
    ChiMinimizer engine(lat);
    const int n = lat.size();
    MinQuery q = query(QVec(n, 0), Region::FullLattice);
    MinResult r = engine.minimize(q);
    IVec box = engine.certified_box(q.shift, r.value);
    for (const auto& m : r.minimizers)
      for (int i = 0; i < n; ++i) {
        REQUIRE(m[i] <= box[i]);
        REQUIRE(m[i] >= -box[i]);
      }
    IVec pre = engine.certify_bound(q);  // a-priori box is at least as large
    for (int i = 0; i < n; ++i) REQUIRE(pre[i] >= box[i]);
  }
}

TEST_CASE("engine agrees with the brute-force oracle on random trees") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int> offset(-2, 2);
  std::uniform_int_distribution<int> region_pick(0, 2);
  int graphs = 0;
  while (graphs < 25) {
    PlumbingGraph g = testutil::random_definite_tree(rng, 5);
    ++graphs;
    Lattice lat(g);
    ChiMinimizer engine(lat);
    DiscriminantGroup disc(lat);
    const int n = lat.size();
    auto classes = disc.all_classes(Int(500));
    std::uniform_int_distribution<size_t> pick(0, classes.size() - 1);
    for (int s = 0; s < 6; ++s) {
      QVec shift = disc.representative(classes[pick(rng)]);
      for (int i = 0; i < n; ++i) shift[i] += offset(rng);
      MinQuery q;
      q.shift = shift;
      int region = region_pick(rng);
      q.region = region == 0   ? Region::FullLattice
                 : region == 1 ? Region::NonNegOrthant
                               : Region::Box;
      if (q.region == Region::Box) q.box = IVec(n, 3);
      MinResult fast = engine.minimize(q);
      IVec box = engine.certified_box(q.shift, fast.value);
      Int volume = 1;
      for (const auto& b : box) volume *= 2 * b + 1;
      if (volume > 2000000) continue;  // oracle too slow here; resample
      MinResult slow = oracle::brute_min_chi(lat, q, box, Int(4000000));
      REQUIRE(fast.value == slow.value);
      REQUIRE(fast.minimizers == slow.minimizers);
      REQUIRE(fast.min_minimizer == slow.min_minimizer);
      REQUIRE(fast.max_minimizer == slow.max_minimizer);
    }
  }
}
