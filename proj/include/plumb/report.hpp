#pragma once

#include "plumb/discriminant.hpp"
#include "plumb/invariants.hpp"
#include "plumb/series.hpp"

#include <json.hpp>

namespace plumb {

using Json = nlohmann::ordered_json;

inline Json json_int(const Int& v) { return Json(to_string(v)); }

inline Json json_rat(const Rat& v) { return Json(to_string(v)); }

inline Json json_cycle(const IVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json json_cycle(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json json_classification(const Classification& c) {
  Json j;
  j["rational"] = c.rational;
  j["elliptic"] = c.elliptic;
  j["minimally_elliptic"] = c.minimally_elliptic;
  j["numerically_gorenstein"] = c.numerically_gorenstein;
  j["qgorenstein_generic_admissible"] = c.qgorenstein_generic_admissible;
  return j;
}

inline Json json_graph(const PlumbingGraph& g) {
  Json j;
  Json verts = Json::array();
  for (int i = 0; i < g.size(); ++i)
    verts.push_back(Json{{"id", g.ids[i]}, {"euler", g.euler[i]}});
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({g.ids[a], g.ids[b]}));
  j["vertices"] = verts;
  j["edges"] = edges;
  return j;
}

inline Json json_discriminant(const DiscriminantGroup& d) {
  Json j;
  j["order"] = json_int(d.order());
  Json factors = Json::array();
  for (const auto& f : d.invariant_factors())
    if (f > 1) factors.push_back(to_string(f));
  j["invariant_factors"] = factors;
  return j;
}

inline Json json_h1(const H1Result& r) {
  Json j;
  j["value"] = json_int(r.value);
  j["certified"] = r.certified;
  j["hypothesis"] = r.hypothesis;
  return j;
}

inline Json json_series(const SeriesTruncation& t, const DiscriminantGroup& disc) {
  Json arr = Json::array();
  for (const auto& [key, coeff] : t.coefficients) {
    const auto& [label, l0] = key;
    QVec exponent = disc.representative(label);
    for (size_t i = 0; i < l0.size(); ++i) exponent[i] += Rat(l0[i]);
    Json entry;
    entry["class"] = json_cycle(label);
    entry["exponent"] = json_cycle(exponent);
    entry["coeff"] = to_string(coeff);
    arr.push_back(entry);
  }
  return arr;
}

/// The `invariants` report core: classification, genus data and the
/// distinguished cycles (absent ones serialized as null).
inline Json json_report(const InvariantEngine& inv) {
  const Lattice& lat = inv.lattice();
  DiscriminantGroup disc(lat);
  Json j;
  j["schema_version"] = 1;
  j["graph"] = json_graph(lat.graph());
  j["negative_definite"] = true;
  j["classification"] = json_classification(inv.classify());
  j["min_chi_positive"] = json_rat(inv.min_chi_positive());
  j["p_g"] = json_int(inv.geometric_genus_generic());
  j["p_g_universal_abelian_cover"] = json_int(inv.pg_universal_abelian_cover());
  j["discriminant_group"] = json_discriminant(disc);
  j["Z_K"] = json_cycle(lat.anticanonical());
  j["Z_min"] = json_cycle(lat.fundamental_cycle());
  auto zcoh = inv.cohomological_cycle();
  auto zmax = inv.maximal_ideal_cycle();
  j["Z_coh"] = zcoh ? json_cycle(*zcoh) : Json(nullptr);
  j["Z_max"] = zmax ? json_cycle(*zmax) : Json(nullptr);
  return j;
}

}  // namespace plumb
