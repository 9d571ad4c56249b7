#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "drumgeo/gallery.hpp"
#include "drumgeo/geometry.hpp"
#include "drumgeo/io.hpp"
#include "drumgeo/spectral.hpp"
#include "drumgeo/triple.hpp"

namespace {

using namespace drumgeo;
namespace fs = std::filesystem;

// Renders a report as indented key/value lines; strings print unquoted,
// everything else in compact JSON.
void print_node(std::ostream& os, const std::string& key, const Json& v,
                int depth) {
  const std::string ind(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    os << ind << key << ":\n";
    for (const auto& [k2, v2] : v.items()) print_node(os, k2, v2, depth + 1);
  } else if (v.is_string()) {
    os << ind << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << ind << key << ": " << v.dump() << "\n";
  }
}

void emit(const Json& report, bool json_mode) {
  if (json_mode) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : report.items()) print_node(std::cout, k, v, 0);
}

Json input_entry(const fs::path& p) {
  return Json{{"path", p.string()}, {"hash", hash_file(p)}};
}

Json make_report(const std::string& command, Json inputs, Json results) {
  return Json{{"command", command},
              {"version", kToolVersion},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

Json verify_to_json(const VerifyResult& r) {
  Json j{{"ok", r.ok}};
  if (!r.ok && r.witness) {
    j["witness"] = to_string(*r.witness);
    j["fixed_points"] = r.witness_fixed_points;
    j["fixed_lines"] = r.witness_fixed_lines;
  }
  j["summary"] = r.summary;
  return j;
}

Json triple_summary(const GSTriple& t) {
  return Json{{"group", t.group->name()},
              {"degree", t.group->degree()},
              {"order", t.group->size()},
              {"u_order", t.left.size()},
              {"v_order", t.right.size()},
              {"index", t.group->size() / t.left.size()}};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

struct CheckArgs {
  std::string triple;
  std::string expect;
};

int run_check(const CheckArgs& a, Json& report) {
  const GSTriple t = load_triple(a.triple);
  const FlagReport flags = check_flags(t);
  Json results = triple_summary(t);
  results["flags"] = flags_to_json(flags);

  int code = 0;
  if (!a.expect.empty()) {
    const std::map<std::string, bool> actual{
        {"ec", flags.ec},     {"ac", flags.ac},
        {"ff", flags.ff},     {"max", flags.max},
        {"pair", flags.pair}, {"conjugate", flags.conjugate}};
    Json failed = Json::array();
    for (std::string tok : split_list(a.expect)) {
      bool want = true;
      if (tok.front() == '!') {
        want = false;
        tok.erase(0, 1);
      }
      auto it = actual.find(tok);
      if (it == actual.end())
        throw IoError("unknown flag in --expect: " + tok);
      if (it->second != want) failed.push_back((want ? "" : "!") + tok);
    }
    if (!failed.empty()) {
      results["expect_failed"] = std::move(failed);
      code = 2;
    }
  }
  report = make_report("check", Json{{"triple", input_entry(a.triple)}},
                       std::move(results));
  return code;
}

struct GeometryArgs {
  std::string triple;
  std::string out;
  std::string dot;
};

int run_geometry(const GeometryArgs& a, Json& report) {
  const GSTriple t = load_triple(a.triple);
  const DGeometry g = build_drum_geometry(t);

  Json results{{"points", g.geometry.num_points},
               {"lines", g.geometry.num_lines}};
  Json pdeg = Json::array(), ldeg = Json::array();
  for (int p = 0; p < g.geometry.num_points; ++p)
    pdeg.push_back(g.geometry.point_degree(p));
  for (int l = 0; l < g.geometry.num_lines; ++l)
    ldeg.push_back(g.geometry.line_degree(l));
  results["point_degrees"] = std::move(pdeg);
  results["line_degrees"] = std::move(ldeg);

  const VerifyResult sd = verify_SD(g);
  const VerifyResult d = verify_D(g);
  results["sd"] = verify_to_json(sd);
  results["d"] = verify_to_json(d);

  if (g.geometry.num_points == g.geometry.num_lines) {
    const SuperStrongResult ss = is_super_strong(g.geometry);
    results["super_strong"] = ss.super_strong;
    results["det"] = rational_to_string(ss.det);
    if (sd.ok && !ss.super_strong)
      results["finding"] =
          "fixed-point counts match on every class yet the incidence "
          "matrix is singular";
  }

  Json outputs = Json::object();
  if (!a.out.empty()) {
    write_json_file(a.out, geometry_to_json(g.geometry));
    outputs["geometry"] = a.out;
  }
  if (!a.dot.empty()) {
    std::ofstream f(a.dot);
    if (!f) throw IoError("cannot open " + a.dot + " for writing");
    f << to_dot(g.geometry);
    outputs["dot"] = a.dot;
  }
  if (!outputs.empty()) results["outputs"] = std::move(outputs);

  report = make_report("geometry", Json{{"triple", input_entry(a.triple)}},
                       std::move(results));
  return sd.ok && d.ok ? 0 : 2;
}

struct GenPgArgs {
  int n = 3;
  int p = 2;
  std::string out;
  std::string geometry_out;
};

int run_gen_pg(const GenPgArgs& a, Json& report) {
  const ProjectiveGeometry pg = projective_geometry(ProjectiveSpec{a.n, a.p});
  write_json_file(a.out, triple_to_json(pg.triple));

  Json results = triple_summary(pg.triple);
  results["points"] = pg.geometry.geometry.num_points;
  results["lines"] = pg.geometry.geometry.num_lines;
  Json outputs{{"triple", a.out}};
  if (!a.geometry_out.empty()) {
    write_json_file(a.geometry_out, geometry_to_json(pg.geometry.geometry));
    outputs["geometry"] = a.geometry_out;
  }
  results["outputs"] = std::move(outputs);
  report = make_report("gen pg", Json::object(), std::move(results));
  return 0;
}

struct GenDesignArgs {
  int m = 2;
  std::string form;
  std::string out;
  std::string geometry_out;
};

int run_gen_design(const GenDesignArgs& a, Json& report) {
  FormType form;
  if (a.form == "hyperbolic")
    form = FormType::kHyperbolic;
  else if (a.form == "elliptic")
    form = FormType::kElliptic;
  else
    throw IoError("--form must be hyperbolic or elliptic");

  const QuadraticDesign qd = quadratic_design(QuadraticDesignSpec{a.m, form});
  const GSTriple t = triple_at_incident_flag(qd.geometry);
  write_json_file(a.out, triple_to_json(t));

  Json results = triple_summary(t);
  results["v"] = qd.parameters.v;
  results["k"] = qd.parameters.k;
  results["lambda"] = qd.parameters.lambda;
  Json outputs{{"triple", a.out}};
  if (!a.geometry_out.empty()) {
    write_json_file(a.geometry_out, geometry_to_json(qd.geometry.geometry));
    outputs["geometry"] = a.geometry_out;
  }
  results["outputs"] = std::move(outputs);
  report = make_report("gen design", Json::object(), std::move(results));
  return 0;
}

struct GenDihedralArgs {
  int n = 5;
  std::string out;
  std::string geometry_out;
};

int run_gen_dihedral(const GenDihedralArgs& a, Json& report) {
  const DGeometry g = dihedral_geometry(a.n);
  const GSTriple t = triple_at_incident_flag(g);
  write_json_file(a.out, triple_to_json(t));

  Json results = triple_summary(t);
  results["points"] = g.geometry.num_points;
  results["lines"] = g.geometry.num_lines;
  Json outputs{{"triple", a.out}};
  if (!a.geometry_out.empty()) {
    write_json_file(a.geometry_out, geometry_to_json(g.geometry));
    outputs["geometry"] = a.geometry_out;
  }
  results["outputs"] = std::move(outputs);
  report = make_report("gen dihedral", Json::object(), std::move(results));
  return 0;
}

struct GenGwwArgs {
  std::string out_a;
  std::string out_b;
};

Json domain_summary(const TileDomain& d) {
  const TileDomain::Perimeter p = d.perimeter();
  return Json{{"tiles", d.tiles().size()},
              {"area", rational_to_string(d.area())},
              {"perimeter_axial", rational_to_string(p.axial)},
              {"perimeter_diagonal", rational_to_string(p.diagonal)}};
}

int run_gen_gww(const GenGwwArgs& a, Json& report) {
  const auto [da, db] = gww_domains();
  write_json_file(a.out_a, domain_to_json(da));
  write_json_file(a.out_b, domain_to_json(db));

  Json results{{"a", domain_summary(da)},
               {"b", domain_summary(db)},
               {"congruent", congruent(da, db)},
               {"outputs", Json{{"a", a.out_a}, {"b", a.out_b}}}};
  report = make_report("gen gww", Json::object(), std::move(results));
  return 0;
}

struct WreathArgs {
  std::string triple;
  int copies = 2;
  std::string top;
  std::string out;
};

int run_wreath(const WreathArgs& a, Json& report) {
  GroupPtr top;
  std::string kind = a.top.empty() ? "s" + std::to_string(a.copies) : a.top;
  if (kind.size() < 2 || (kind[0] != 's' && kind[0] != 'c'))
    throw IoError("--top must look like s2 or c3");
  int degree = 0;
  try {
    degree = std::stoi(kind.substr(1));
  } catch (const std::exception&) {
    throw IoError("--top must look like s2 or c3");
  }
  if (degree != a.copies)
    throw IoError("--top degree must match --copies");
  top = kind[0] == 's' ? symmetric_top(degree) : cyclic_top(degree);

  const GSTriple base = load_triple(a.triple);
  const GSTriple t = wreath_triple(WreathSpec{base, a.copies, top});
  write_json_file(a.out, triple_to_json(t));

  Json results = triple_summary(t);
  results["outputs"] = Json{{"triple", a.out}};
  report = make_report("wreath", Json{{"triple", input_entry(a.triple)}},
                       std::move(results));
  return 0;
}

struct IntertwineArgs {
  std::string triple;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int run_intertwine(const IntertwineArgs& a, Json& report) {
  const GSTriple t = load_triple(a.triple);
  const std::vector<ExactMatrix> basis = intertwiner_space(t);

  Json results{{"dimension", basis.size()}};
  int code = 2;
  const std::optional<ExactMatrix> found =
      basis.empty() ? std::nullopt
                    : find_invertible_intertwiner(basis, a.seed);
  if (found) {
    results["invertible"] = true;
    results["det"] = rational_to_string(determinant(*found));
    results["matrix"] = matrix_to_json(*found);
    if (!a.out.empty()) {
      write_json_file(a.out, matrix_to_json(*found));
      results["outputs"] = Json{{"matrix", a.out}};
    }
    code = 0;
  } else {
    results["invertible"] = false;
  }
  report = make_report("intertwine", Json{{"triple", input_entry(a.triple)}},
                       std::move(results));
  report["seed"] = a.seed;
  return code;
}

struct SpectrumArgs {
  std::string domain;
  std::string h = "1/16";
  int k = 10;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int run_spectrum(const SpectrumArgs& a, Json& report) {
  const TileDomain dom = load_domain(a.domain);
  const Rational h = rational_from_string(a.h);
  const Grid grid = build_grid(dom, h);
  Spectrum s;
  s.h = h;
  s.k = a.k;
  smallest_eigenvalues(discretize(grid), a.k, a.seed, s.eigenvalues,
                       s.residuals);

  Json results = spectrum_to_json(s);
  results["nodes"] = grid.size();
  if (!a.out.empty()) {
    write_json_file(a.out, spectrum_to_json(s));
    results["outputs"] = Json{{"spectrum", a.out}};
  }
  report = make_report("spectrum", Json{{"domain", input_entry(a.domain)}},
                       std::move(results));
  report["seed"] = a.seed;
  return 0;
}

struct CompareArgs {
  std::string a;
  std::string b;
  std::string h = "1/16";
  int k = 10;
  std::uint64_t seed = kDefaultSeed;
  double tol = -1.0;
};

int run_compare(const CompareArgs& a, Json& report) {
  const TileDomain da = load_domain(a.a);
  const TileDomain db = load_domain(a.b);
  const Rational fine_h = rational_from_string(a.h);
  const Rational coarse_h = fine_h * 2;

  const SpectrumComparison fine = compare_spectra(
      spectrum_of(da, fine_h, a.k, a.seed), spectrum_of(db, fine_h, a.k, a.seed),
      a.k);
  const SpectrumComparison coarse = compare_spectra(
      spectrum_of(da, coarse_h, a.k, a.seed),
      spectrum_of(db, coarse_h, a.k, a.seed), a.k);

  Json results{{"h", rational_to_string(fine_h)},
               {"k", a.k},
               {"rel_diffs", fine.rel_diffs},
               {"max_rel_diff", fine.max_rel_diff},
               {"coarse_h", rational_to_string(coarse_h)},
               {"coarse_max_rel_diff", coarse.max_rel_diff},
               {"shrink_ratio", shrink_ratio(coarse.max_rel_diff,
                                             fine.max_rel_diff)}};
  int code = 0;
  if (a.tol >= 0.0) {
    results["tol"] = a.tol;
    results["within_tol"] = fine.max_rel_diff <= a.tol;
    if (fine.max_rel_diff > a.tol) code = 2;
  }
  report = make_report(
      "compare",
      Json{{"a", input_entry(a.a)}, {"b", input_entry(a.b)}},
      std::move(results));
  report["seed"] = a.seed;
  return code;
}

struct WeylArgs {
  std::string spectrum;
  std::string area;
  double tol = -1.0;
};

int run_weyl(const WeylArgs& a, Json& report) {
  const Spectrum s = load_spectrum(a.spectrum);
  const Rational area = rational_from_string(a.area);
  if (area <= 0) throw IoError("--area must be positive");
  const WeylFit fit = weyl_fit(s, area.get_d());

  Json results{{"h", rational_to_string(s.h)},
               {"k", s.k},
               {"slope", fit.slope},
               {"expected", fit.expected},
               {"ratio", fit.ratio},
               {"points_used", fit.points_used}};
  int code = 0;
  if (a.tol >= 0.0) {
    results["tol"] = a.tol;
    results["within_tol"] = std::abs(fit.ratio - 1.0) <= a.tol;
    if (std::abs(fit.ratio - 1.0) > a.tol) code = 2;
  }
  report = make_report("weyl", Json{{"spectrum", input_entry(a.spectrum)}},
                       std::move(results));
  return code;
}

struct RoundtripArgs {
  std::string triple;
  long long budget = 1'000'000;
};

int run_roundtrip(const RoundtripArgs& a, Json& report) {
  const GSTriple t = load_triple(a.triple);
  const CheckResult ac = check_ac(t);
  const CheckResult ec = check_ec(t);
  const DGeometry g = build_drum_geometry(t);
  const VerifyResult sd = verify_SD(g);
  const VerifyResult d = verify_D(g);
  const GSTriple back = triple_from_geometry(g);
  const TriState iso = are_isomorphic(t, back, a.budget);

  Json results{{"ac", ac.ok},
               {"ec", ec.ok},
               {"sd", sd.ok},
               {"d", d.ok},
               {"ac_matches_sd", ac.ok == sd.ok},
               {"ec_matches_d", ec.ok == d.ok},
               {"isomorphic", to_string(iso)}};
  report = make_report("roundtrip", Json{{"triple", input_entry(a.triple)}},
                       std::move(results));
  const bool ok = ac.ok == sd.ok && ec.ok == d.ok && iso == TriState::kYes;
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gassmann-Sunada triples, incidence geometries, and"
               " isospectral drum verification"};
  app.require_subcommand(1);

  bool json_mode = false;
  bool timings = false;
  app.add_flag("--json", json_mode, "machine-readable JSON report");
  app.add_flag("--timings", timings, "append wall-clock timings");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "flag battery for a triple");
  check->add_option("--triple", check_args.triple, "triple file")->required();
  check->add_option("--expect", check_args.expect,
                    "comma list of flags that must hold; prefix ! to negate");

  GeometryArgs geometry_args;
  auto* geometry =
      app.add_subcommand("geometry", "build and verify the coset geometry");
  geometry->add_option("--triple", geometry_args.triple, "triple file")
      ->required();
  geometry->add_option("--out", geometry_args.out, "write the geometry");
  geometry->add_option("--dot", geometry_args.dot, "write a DOT export");

  auto* gen = app.add_subcommand("gen", "generate a gallery example");
  gen->require_subcommand(1);

  GenPgArgs pg_args;
  auto* pg = gen->add_subcommand("pg", "projective point-hyperplane triple");
  pg->add_option("--n", pg_args.n, "matrix size, at least 3");
  pg->add_option("--p", pg_args.p, "prime field characteristic");
  pg->add_option("--out", pg_args.out, "triple output file")->required();
  pg->add_option("--geometry-out", pg_args.geometry_out, "geometry output");

  GenDesignArgs design_args;
  auto* design = gen->add_subcommand("design", "quadratic-form design triple");
  design->add_option("--m", design_args.m, "half dimension, at least 2");
  design->add_option("--form", design_args.form, "hyperbolic or elliptic")
      ->required();
  design->add_option("--out", design_args.out, "triple output file")
      ->required();
  design->add_option("--geometry-out", design_args.geometry_out,
                     "geometry output");

  GenDihedralArgs dihedral_args;
  auto* dihedral = gen->add_subcommand("dihedral", "n-gon vertex/side triple");
  dihedral->add_option("--n", dihedral_args.n, "number of vertices")
      ->required();
  dihedral->add_option("--out", dihedral_args.out, "triple output file")
      ->required();
  dihedral->add_option("--geometry-out", dihedral_args.geometry_out,
                       "geometry output");

  GenGwwArgs gww_args;
  auto* gww = gen->add_subcommand("gww", "the bundled isospectral domains");
  gww->add_option("--out-a", gww_args.out_a, "first domain output")
      ->required();
  gww->add_option("--out-b", gww_args.out_b, "second domain output")
      ->required();

  WreathArgs wreath_args;
  auto* wreath =
      app.add_subcommand("wreath", "wreath-product triple from a base");
  wreath->add_option("--triple", wreath_args.triple, "base triple file")
      ->required();
  wreath->add_option("--copies", wreath_args.copies, "number of base copies")
      ->required();
  wreath->add_option("--top", wreath_args.top,
                     "top group, s<k> symmetric or c<k> cyclic");
  wreath->add_option("--out", wreath_args.out, "triple output file")
      ->required();

  IntertwineArgs intertwine_args;
  auto* intertwine =
      app.add_subcommand("intertwine", "invertible intertwiner search");
  intertwine->add_option("--triple", intertwine_args.triple, "triple file")
      ->required();
  intertwine->add_option("--seed", intertwine_args.seed, "search seed");
  intertwine->add_option("--out", intertwine_args.out, "matrix output file");

  SpectrumArgs spectrum_args;
  auto* spectrum =
      app.add_subcommand("spectrum", "Dirichlet eigenvalues of a domain");
  spectrum->set_help_flag("--help", "print this help message and exit");
  spectrum->add_option("--domain", spectrum_args.domain, "domain file")
      ->required();
  spectrum->add_option("--h", spectrum_args.h, "mesh width, 1 over 2^m");
  spectrum->add_option("--k", spectrum_args.k, "eigenvalue count");
  spectrum->add_option("--seed", spectrum_args.seed, "eigensolver seed");
  spectrum->add_option("--out", spectrum_args.out, "spectrum output file");

  CompareArgs compare_args;
  auto* compare =
      app.add_subcommand("compare", "spectra of two domains, with refinement");
  compare->set_help_flag("--help", "print this help message and exit");
  compare->add_option("--a", compare_args.a, "first domain file")->required();
  compare->add_option("--b", compare_args.b, "second domain file")
      ->required();
  compare->add_option("--h", compare_args.h, "fine mesh width");
  compare->add_option("--k", compare_args.k, "eigenvalue count");
  compare->add_option("--seed", compare_args.seed, "eigensolver seed");
  compare->add_option("--tol", compare_args.tol,
                      "fail when the max relative difference exceeds this");

  WeylArgs weyl_args;
  auto* weyl = app.add_subcommand("weyl", "counting-slope fit of a spectrum");
  weyl->add_option("--spectrum", weyl_args.spectrum, "spectrum file")
      ->required();
  weyl->add_option("--area", weyl_args.area, "domain area, exact rational")
      ->required();
  weyl->add_option("--tol", weyl_args.tol,
                   "fail when |ratio - 1| exceeds this");

  RoundtripArgs roundtrip_args;
  auto* roundtrip = app.add_subcommand(
      "roundtrip", "triple to geometry and back, with isomorphism check");
  roundtrip->add_option("--triple", roundtrip_args.triple, "triple file")
      ->required();
  roundtrip->add_option("--budget", roundtrip_args.budget,
                        "isomorphism search budget");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  for (CLI::App* sub : gen->get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  Json report;
  int code = 0;
  try {
    if (check->parsed()) code = run_check(check_args, report);
    else if (geometry->parsed()) code = run_geometry(geometry_args, report);
    else if (pg->parsed()) code = run_gen_pg(pg_args, report);
    else if (design->parsed()) code = run_gen_design(design_args, report);
    else if (dihedral->parsed()) code = run_gen_dihedral(dihedral_args, report);
    else if (gww->parsed()) code = run_gen_gww(gww_args, report);
    else if (wreath->parsed()) code = run_wreath(wreath_args, report);
    else if (intertwine->parsed()) code = run_intertwine(intertwine_args, report);
    else if (spectrum->parsed()) code = run_spectrum(spectrum_args, report);
    else if (compare->parsed()) code = run_compare(compare_args, report);
    else if (weyl->parsed()) code = run_weyl(weyl_args, report);
    else if (roundtrip->parsed()) code = run_roundtrip(roundtrip_args, report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (timings) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report["timings"] = Json{{"total_ms", ms}};
  }
  emit(report, json_mode);
  return code;
}
