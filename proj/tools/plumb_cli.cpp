// Command-line front end: load a plumbing graph, compute invariants of the
// generic analytic structure, emit text or JSON.

#include "plumb/plumb.hpp"
#include "plumb/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace plumb;

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string chern;
  std::string cycle;
  std::string bound;
  std::string max_points = "100000000";
  bool oracle = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

QVec parse_rat_vector(const std::string& s, int n, const char* what) {
  auto parts = split_commas(s);
  if (static_cast<int>(parts.size()) != n)
    throw parse_error(std::string(what) + " needs " + std::to_string(n) +
                      " comma-separated entries");
  QVec v;
  for (const auto& p : parts) v.push_back(parse_rat(p));
  return v;
}

IVec parse_int_vector(const std::string& s, int n, const char* what) {
  QVec q = parse_rat_vector(s, n, what);
  if (!is_integral(q)) throw parse_error(std::string(what) + " must be integral");
  return to_integral(q);
}

void require_dual(const Lattice& lat, const QVec& l_prime) {
  if (!is_integral(mat_vec(lat.form(), l_prime)))
    throw parse_error("--chern vector is not in the dual lattice");
}

std::string cycle_text(const IVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

std::string cycle_text(const QVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_check(const Options& opt) {
  std::string text = read_input(opt.input);
  PlumbingGraph g = parse_graph(text);
  IMat m = intersection_form(g);
  DefinitenessResult d = check_negative_definite(m);
  Json j;
  j["schema_version"] = 1;
  j["vertices"] = g.size();
  j["edges"] = g.edges.size();
  j["negative_definite"] = d.negative_definite;
  std::ostringstream out;
  out << "vertices: " << g.size() << "\n";
  out << "edges: " << g.edges.size() << "\n";
  out << "negative definite: " << (d.negative_definite ? "yes" : "no") << "\n";
  if (!d.negative_definite) {
    j["witness"] = json_cycle(d.witness);
    j["witness_pairing"] = to_string(evaluate_form(m, d.witness));
    out << "witness: " << cycle_text(d.witness)
        << " with self-pairing " << to_string(evaluate_form(m, d.witness)) << "\n";
  }
  emit(opt, j, out.str());
  return d.negative_definite ? 0 : 2;
}

int cmd_invariants(const Options& opt) {
  PlumbingGraph g = parse_graph(read_input(opt.input));
  InvariantEngine inv(g);
  Json j = json_report(inv);
  std::ostringstream out;
  Classification c = inv.classify();
  out << "p_g: " << to_string(inv.geometric_genus_generic()) << "\n";
  out << "p_g (universal abelian cover): "
      << to_string(inv.pg_universal_abelian_cover()) << "\n";
  out << "min chi over l>0: " << to_string(inv.min_chi_positive()) << "\n";
  out << "rational: " << (c.rational ? "yes" : "no") << "\n";
  out << "elliptic: " << (c.elliptic ? "yes" : "no") << "\n";
  out << "minimally elliptic: " << (c.minimally_elliptic ? "yes" : "no") << "\n";
  out << "numerically Gorenstein: " << (c.numerically_gorenstein ? "yes" : "no") << "\n";
  out << "Q-Gorenstein generic admissible: "
      << (c.qgorenstein_generic_admissible ? "yes" : "no") << "\n";
  DiscriminantGroup disc(inv.lattice());
  out << "discriminant group order: " << to_string(disc.order()) << "\n";
  out << "Z_K: " << cycle_text(inv.lattice().anticanonical()) << "\n";
  out << "Z_min: " << cycle_text(inv.lattice().fundamental_cycle()) << "\n";
  auto zcoh = inv.cohomological_cycle();
  auto zmax = inv.maximal_ideal_cycle();
  out << "Z_coh: " << (zcoh ? cycle_text(*zcoh) : std::string("absent")) << "\n";
  out << "Z_max: " << (zmax ? cycle_text(*zmax) : std::string("absent")) << "\n";
  emit(opt, j, out.str());
  return 0;
}

int cmd_h1(const Options& opt) {
  PlumbingGraph g = parse_graph(read_input(opt.input));
  InvariantEngine inv(g);
  const int n = g.size();
  if (opt.chern.empty()) throw parse_error("h1 requires --chern");
  QVec chern = parse_rat_vector(opt.chern, n, "--chern");
  require_dual(inv.lattice(), chern);

  Json j;
  j["schema_version"] = 1;
  j["chern"] = json_cycle(chern);
  std::ostringstream out;
  if (opt.cycle.empty()) {
    Int value = inv.h1_natural_global(chern);
    j["scope"] = "global";
    j["value"] = json_int(value);
    out << "h1(O(" << cycle_text(chern) << ")) on the resolution: "
        << to_string(value) << "\n";
  } else {
    IVec z = parse_int_vector(opt.cycle, n, "--cycle");
    for (const auto& c : z)
      if (c < 0) throw parse_error("--cycle must be effective");
    if (detail::all_zero(z)) throw infeasible_error("--cycle must be positive");
    H1Result r = inv.h1_natural_on_Z(z, chern);
    Int generic = inv.h1_generic_bundle(z, chern);
    j["scope"] = "cycle";
    j["cycle"] = json_cycle(z);
    j["natural"] = json_h1(r);
    j["generic_bundle"] = json_int(generic);
    out << "h1 on Z=" << cycle_text(z) << " of the natural bundle: "
        << to_string(r.value) << (r.certified ? " (certified: " : " (")
        << r.hypothesis << ")\n";
    out << "generic bundle value: " << to_string(generic) << "\n";
    if (opt.oracle) {
      MinQuery q;
      q.shift = InvariantEngine::negate(chern);
      q.region = Region::Box;
      q.box = z;
      MinResult engine_min = inv.minimizer().minimize(q);
      MinResult brute = oracle::brute_min_chi(inv.lattice(), q, z,
                                              Int(opt.max_points));
      bool match = engine_min.value == brute.value &&
                   engine_min.minimizers == brute.minimizers;
      j["oracle_match"] = match;
      out << "oracle match: " << (match ? "yes" : "NO") << "\n";
      if (!match) {
        emit(opt, j, out.str());
        return 2;
      }
    }
  }
  emit(opt, j, out.str());
  return 0;
}

int cmd_series(const Options& opt, SeriesKind kind) {
  PlumbingGraph g = parse_graph(read_input(opt.input));
  Lattice lat(g);
  const int n = g.size();
  if (opt.bound.empty()) throw parse_error("series commands require --bound");
  IVec bound = parse_int_vector(opt.bound, n, "--bound");
  SeriesEngine series(lat);
  SeriesTruncation t = series.series_truncation(kind, bound);
  Json j;
  j["schema_version"] = 1;
  j["kind"] = (kind == SeriesKind::Hilbert) ? "hilbert" : "poincare";
  j["bound"] = json_cycle(bound);
  j["coefficients"] = json_series(t, series.discriminant());
  std::ostringstream out;
  for (const auto& [key, coeff] : t.coefficients) {
    const auto& [label, l0] = key;
    QVec exponent = series.discriminant().representative(label);
    for (int i = 0; i < n; ++i) exponent[i] += Rat(l0[i]);
    out << "class " << cycle_text(label) << " exponent " << cycle_text(exponent)
        << " coeff " << to_string(coeff) << "\n";
  }
  emit(opt, j, out.str());
  return 0;
}

int cmd_semigroup(const Options& opt) {
  PlumbingGraph g = parse_graph(read_input(opt.input));
  InvariantEngine inv(g);
  const int n = g.size();
  if (opt.chern.empty()) throw parse_error("semigroup requires --chern");
  QVec chern = parse_rat_vector(opt.chern, n, "--chern");
  require_dual(inv.lattice(), chern);
  bool member = inv.in_analytic_semigroup(chern);
  Json j;
  j["schema_version"] = 1;
  j["chern"] = json_cycle(chern);
  j["member"] = member;
  std::ostringstream out;
  out << "in analytic semigroup: " << (member ? "yes" : "no") << "\n";
  if (opt.oracle && !is_zero(chern)) {
    // Re-decide by scanning the box certified to contain any violating l.
    Rat base = inv.lattice().chi(chern);
    IVec box = inv.minimizer().certified_box(chern, base);
    oracle::BoxEnumerator points(IVec(n, 0), box, Int(opt.max_points));
    IVec l;
    bool brute_member = true;
    while (points.next(l)) {
      if (detail::all_zero(l)) continue;
      QVec y = chern;
      for (int i = 0; i < n; ++i) y[i] += Rat(l[i]);
      if (inv.lattice().chi(y) <= base) brute_member = false;
    }
    bool match = (brute_member == member);
    j["oracle_match"] = match;
    out << "oracle match: " << (match ? "yes" : "NO") << "\n";
    emit(opt, j, out.str());
    return match ? 0 : 2;
  }
  emit(opt, j, out.str());
  return 0;
}

int cmd_cycles(const Options& opt) {
  PlumbingGraph g = parse_graph(read_input(opt.input));
  InvariantEngine inv(g);
  const Lattice& lat = inv.lattice();
  Json j;
  j["schema_version"] = 1;
  j["Z_K"] = json_cycle(lat.anticanonical());
  IVec zmin = lat.fundamental_cycle();
  j["Z_min"] = json_cycle(zmin);
  Classification c = inv.classify();
  j["numerically_gorenstein"] = c.numerically_gorenstein;
  auto zcoh = inv.cohomological_cycle();
  auto zmax = inv.maximal_ideal_cycle();
  j["Z_coh"] = zcoh ? json_cycle(*zcoh) : Json(nullptr);
  j["Z_max"] = zmax ? json_cycle(*zmax) : Json(nullptr);
  std::ostringstream out;
  out << "Z_K: " << cycle_text(lat.anticanonical()) << "\n";
  out << "Z_min: " << cycle_text(zmin) << "\n";
  out << "Z_coh: " << (zcoh ? cycle_text(*zcoh) : std::string("absent")) << "\n";
  out << "Z_max: " << (zmax ? cycle_text(*zmax) : std::string("absent")) << "\n";
  out << "numerically Gorenstein: " << (c.numerically_gorenstein ? "yes" : "no") << "\n";
  if (zcoh && zmax && c.numerically_gorenstein) {
    QVec sum(lat.size());
    for (int i = 0; i < lat.size(); ++i) sum[i] = Rat((*zcoh)[i] + (*zmax)[i]);
    bool equal = (sum == lat.anticanonical());
    j["zcoh_plus_zmax_equals_zk"] = equal;
    out << "Z_coh + Z_max = Z_K: " << (equal ? "yes" : "no") << "\n";
  } else {
    j["zcoh_plus_zmax_equals_zk"] = Json(nullptr);
  }
  if (opt.oracle) {
    IVec margin = zmin;
    for (auto& m : margin) m += 1;
    IVec brute = oracle::brute_fundamental_cycle(lat, margin, Int(opt.max_points));
    bool match = (brute == zmin);
    j["oracle_match"] = match;
    out << "oracle match: " << (match ? "yes" : "NO") << "\n";
    emit(opt, j, out.str());
    return match ? 0 : 2;
  }
  emit(opt, j, out.str());
  return 0;
}

int cmd_oracle(const Options& opt) {
  PlumbingGraph g = parse_graph(read_input(opt.input));
  InvariantEngine inv(g);
  const Lattice& lat = inv.lattice();
  const int n = lat.size();
  const Int cap(opt.max_points);
  std::vector<std::string> failures;

  auto diff_min = [&](const MinQuery& q, const char* name) {
    MinResult engine_min = inv.minimizer().minimize(q);
    IVec box = inv.minimizer().certified_box(q.shift, engine_min.value);
    MinResult brute = oracle::brute_min_chi(lat, q, box, cap);
    if (engine_min.value != brute.value || engine_min.minimizers != brute.minimizers)
      failures.push_back(std::string(name) + ": engine/oracle disagree");
  };

  MinQuery q0;
  q0.shift = QVec(n, 0);
  q0.region = Region::NonNegOrthant;
  q0.exclude_zero = true;
  diff_min(q0, "min chi over l>0");
  q0.exclude_zero = false;
  q0.region = Region::FullLattice;
  diff_min(q0, "min chi over L");

  DiscriminantGroup disc(lat);
  if (disc.order() <= 64) {
    for (const auto& label : disc.all_classes()) {
      MinQuery q;
      q.shift = disc.representative(label);
      q.region = Region::NonNegOrthant;
      diff_min(q, "min chi shifted by r_h");
    }
  }

  IVec zmin = lat.fundamental_cycle();
  IVec margin = zmin;
  for (auto& m : margin) m += 1;
  if (oracle::brute_fundamental_cycle(lat, margin, cap) != zmin)
    failures.push_back("fundamental cycle: Laufer/oracle disagree");

  // Semigroup slice: compare the defining inequality, scanned over a
  // certified box, against the engine decision on a small window.
  IVec window(n, 2);
  oracle::BoxEnumerator outer(IVec(n, 0), window, cap);
  IVec l;
  while (outer.next(l)) {
    QVec lq(l.begin(), l.end());
    bool engine_member = inv.in_analytic_semigroup(lq);
    bool brute_member = true;
    if (!detail::all_zero(l)) {
      Rat base = lat.chi(lq);
      IVec box = inv.minimizer().certified_box(lq, base);
      oracle::BoxEnumerator inner(IVec(n, 0), box, cap);
      IVec m;
      while (inner.next(m)) {
        if (detail::all_zero(m)) continue;
        QVec y = lq;
        for (int i = 0; i < n; ++i) y[i] += Rat(m[i]);
        if (lat.chi(y) <= base) brute_member = false;
      }
    }
    if (engine_member != brute_member)
      failures.push_back("semigroup membership at " + cycle_text(l));
  }

  Json j;
  j["schema_version"] = 1;
  j["passed"] = failures.empty();
  Json fj = Json::array();
  for (const auto& f : failures) fj.push_back(f);
  j["failures"] = fj;
  std::ostringstream out;
  if (failures.empty()) {
    out << "all checks passed\n";
  } else {
    for (const auto& f : failures) out << "FAIL: " << f << "\n";
  }
  emit(opt, j, out.str());
  return failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of generic analytic structures on negative-definite plumbing trees"};
  app.require_subcommand(1);

  Options opt;
  if (const char* threads = std::getenv("PLUMB_THREADS")) {
    // Computations run deterministically; the cap is validated and any
    // internal parallelism stays at or below it.
    char* end = nullptr;
    long t = std::strtol(threads, &end, 10);
    if (end == threads || t < 1) {
      std::cerr << "invalid PLUMB_THREADS value\n";
      return 1;
    }
  }

  auto add_common = [&](CLI::App* sub, bool chern = false, bool cycle = false,
                        bool bound = false, bool oracle = false) {
    sub->add_option("input", opt.input, "graph file (default: stdin)");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-points", opt.max_points, "enumeration cap");
    if (chern) sub->add_option("--chern", opt.chern, "rational vector p/q,p/q,...");
    if (cycle) sub->add_option("--cycle", opt.cycle, "integer cycle c1,c2,...");
    if (bound) sub->add_option("--bound", opt.bound, "integer box bound b1,b2,...");
    if (oracle) sub->add_flag("--oracle", opt.oracle, "cross-check by brute force");
  };

  auto* check = app.add_subcommand("check", "validate a graph and certify definiteness");
  add_common(check);
  auto* invariants = app.add_subcommand("invariants", "full invariant report");
  add_common(invariants);
  auto* h1 = app.add_subcommand("h1", "h1 of a natural line bundle");
  add_common(h1, true, true, false, true);
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series truncation");
  add_common(hilbert, false, false, true);
  auto* poincare = app.add_subcommand("poincare", "Poincare series truncation");
  add_common(poincare, false, false, true);
  auto* semigroup = app.add_subcommand("semigroup", "analytic semigroup membership");
  add_common(semigroup, true, false, false, true);
  auto* cycles = app.add_subcommand("cycles", "distinguished cycles");
  add_common(cycles, false, false, false, true);
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force regression diff");
  add_common(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return cmd_check(opt);
    if (invariants->parsed()) return cmd_invariants(opt);
    if (h1->parsed()) return cmd_h1(opt);
    if (hilbert->parsed()) return cmd_series(opt, plumb::SeriesKind::Hilbert);
    if (poincare->parsed()) return cmd_series(opt, plumb::SeriesKind::Poincare);
    if (semigroup->parsed()) return cmd_semigroup(opt);
    if (cycles->parsed()) return cmd_cycles(opt);
    if (oracle_cmd->parsed()) return cmd_oracle(opt);
  } catch (const plumb::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const plumb::infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const plumb::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
