#include "drumgeo/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace drumgeo {

namespace {

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw IoError(std::string("missing field \"") + name + "\"");
  return *it;
}

long long int_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_number_integer())
    throw IoError(std::string("field \"") + name + "\" must be an integer");
  return f.get<long long>();
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw IoError("cannot write " + path.string());
}

std::string hash_bytes(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string hash_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return hash_bytes(buf.str());
}

Json perm_to_json(const Perm& p) { return Json(p.images()); }

Perm perm_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("a permutation must be an image array");
  std::vector<int> images;
  images.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_integer())
      throw IoError("permutation images must be integers");
    images.push_back(v.get<int>());
  }
  return Perm(std::move(images));
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(perm_to_json(p));
  return Json{{"name", g.name()},
              {"degree", g.degree()},
              {"generators", std::move(gens)}};
}

GroupPtr group_from_json(const Json& j, std::size_t cap) {
  if (!j.is_object()) throw IoError("a group must be a JSON object");
  const long long degree = int_field(j, "degree");
  if (degree < 1) throw IoError("group degree must be positive");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw IoError("\"generators\" must be an array");
  std::vector<Perm> parsed;
  parsed.reserve(gens.size());
  for (const Json& g : gens) parsed.push_back(perm_from_json(g));
  std::string name = j.value("name", std::string());
  return make_group(static_cast<int>(degree), std::move(parsed), cap,
                    std::move(name));
}

namespace {

std::vector<Perm> perm_list(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_array())
    throw IoError(std::string("\"") + name + "\" must be an array");
  std::vector<Perm> out;
  out.reserve(f.size());
  for (const Json& g : f) out.push_back(perm_from_json(g));
  return out;
}

}  // namespace

Json triple_to_json(const GSTriple& t) {
  Json u = Json::array(), v = Json::array();
  for (const Perm& p : t.left.generators) u.push_back(perm_to_json(p));
  for (const Perm& p : t.right.generators) v.push_back(perm_to_json(p));
  return Json{{"group", group_to_json(*t.group)},
              {"u_generators", std::move(u)},
              {"v_generators", std::move(v)}};
}

GSTriple triple_from_json(const Json& j, const std::filesystem::path& base_dir,
                          std::size_t cap) {
  if (!j.is_object()) throw IoError("a triple must be a JSON object");
  const Json& g = field(j, "group");
  GroupPtr group;
  if (g.is_string()) {
    std::filesystem::path p = g.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    group = group_from_json(read_json_file(p), cap);
  } else {
    group = group_from_json(g, cap);
  }
  return make_triple(std::move(group), perm_list(j, "u_generators"),
                     perm_list(j, "v_generators"));
}

GSTriple load_triple(const std::filesystem::path& path, std::size_t cap) {
  return triple_from_json(read_json_file(path), path.parent_path(), cap);
}

Json geometry_to_json(const IncidenceGeometry& g) {
  Json pairs = Json::array();
  for (int p = 0; p < g.num_points; ++p)
    for (int l = 0; l < g.num_lines; ++l)
      if (g.incident(p, l)) pairs.push_back(Json::array({p, l}));
  return Json{{"points", g.num_points},
              {"lines", g.num_lines},
              {"incident", std::move(pairs)}};
}

IncidenceGeometry geometry_from_json(const Json& j) {
  if (!j.is_object()) throw IoError("a geometry must be a JSON object");
  const long long points = int_field(j, "points");
  const long long lines = int_field(j, "lines");
  if (points < 1 || lines < 1)
    throw IoError("point and line counts must be positive");
  IncidenceGeometry g;
  g.num_points = static_cast<int>(points);
  g.num_lines = static_cast<int>(lines);
  g.incidence = BitMatrix(g.num_points, g.num_lines);
  const Json& pairs = field(j, "incident");
  if (!pairs.is_array()) throw IoError("\"incident\" must be an array");
  for (const Json& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
        !pr[1].is_number_integer())
      throw IoError("incidence entries must be [point, line] pairs");
    const long long p = pr[0].get<long long>(), l = pr[1].get<long long>();
    if (p < 0 || p >= points || l < 0 || l >= lines)
      throw IoError("incidence pair out of range");
    g.incidence.set(static_cast<int>(p), static_cast<int>(l), true);
  }
  return g;
}

Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw IoError("a matrix must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw IoError("matrix rows must all have the same length");
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_string())
        throw IoError("matrix entries must be rational strings");
      m.at(i, c) = rational_from_string(row[c].get<std::string>());
    }
  }
  return m;
}

namespace {

Json coordinate_to_json(const Rational& x, const Rational& y) {
  return Json::array({x.get_num().get_si(), x.get_den().get_si(),
                      y.get_num().get_si(), y.get_den().get_si()});
}

Rational rational_from_pair(const Json& num, const Json& den) {
  if (!num.is_number_integer() || !den.is_number_integer())
    throw IoError("vertex coordinates must be integer pairs");
  if (den.get<long long>() == 0)
    throw IoError("vertex denominator must be nonzero");
  Rational r(Int(static_cast<long>(num.get<long long>())),
             Int(static_cast<long>(den.get<long long>())));
  r.canonicalize();
  return r;
}

}  // namespace

Json domain_to_json(const TileDomain& d) {
  Json triangles = Json::array();
  for (const Triangle& t : d.tiles()) {
    Json tri = Json::array();
    for (const RPoint& v : t.v) tri.push_back(coordinate_to_json(v.x, v.y));
    triangles.push_back(std::move(tri));
  }
  return Json{{"triangles", std::move(triangles)}};
}

TileDomain domain_from_json(const Json& j) {
  if (!j.is_object()) throw IoError("a domain must be a JSON object");
  const Json& triangles = field(j, "triangles");
  if (!triangles.is_array() || triangles.empty())
    throw IoError("\"triangles\" must be a nonempty array");
  std::vector<Triangle> tiles;
  tiles.reserve(triangles.size());
  for (const Json& tri : triangles) {
    if (!tri.is_array() || tri.size() != 3)
      throw IoError("each triangle needs exactly 3 vertices");
    Triangle t;
    for (int k = 0; k < 3; ++k) {
      const Json& v = tri[k];
      if (!v.is_array() || v.size() != 4)
        throw IoError("each vertex is [xnum, xden, ynum, yden]");
      t.v[k] = RPoint{rational_from_pair(v[0], v[1]),
                      rational_from_pair(v[2], v[3])};
    }
    tiles.push_back(std::move(t));
  }
  return TileDomain(std::move(tiles));
}

TileDomain load_domain(const std::filesystem::path& path) {
  return domain_from_json(read_json_file(path));
}

Json spectrum_to_json(const Spectrum& s) {
  return Json{{"h", rational_to_string(s.h)},
              {"k", s.k},
              {"eigenvalues", s.eigenvalues},
              {"residuals", s.residuals}};
}

Spectrum spectrum_from_json(const Json& j) {
  if (!j.is_object()) throw IoError("a spectrum must be a JSON object");
  const Json& h = field(j, "h");
  if (!h.is_string()) throw IoError("\"h\" must be a rational string");
  Spectrum s;
  s.h = rational_from_string(h.get<std::string>());
  s.k = static_cast<int>(int_field(j, "k"));
  const Json& ev = field(j, "eigenvalues");
  const Json& rs = field(j, "residuals");
  if (!ev.is_array() || !rs.is_array())
    throw IoError("\"eigenvalues\" and \"residuals\" must be arrays");
  for (const Json& v : ev) {
    if (!v.is_number()) throw IoError("eigenvalues must be numbers");
    s.eigenvalues.push_back(v.get<double>());
  }
  for (const Json& v : rs) {
    if (!v.is_number()) throw IoError("residuals must be numbers");
    s.residuals.push_back(v.get<double>());
  }
  return s;
}

Spectrum load_spectrum(const std::filesystem::path& path) {
  return spectrum_from_json(read_json_file(path));
}

Json flags_to_json(const FlagReport& r) {
  return Json{{"ec", r.ec},
              {"ac", r.ac},
              {"ff", r.ff},
              {"max", r.max},
              {"pair", r.pair},
              {"conjugate", r.conjugate},
              {"witnesses",
               Json{{"ec", r.ec_witness},
                    {"ac", r.ac_witness},
                    {"ff", r.ff_witness},
                    {"max", r.max_witness},
                    {"pair", r.pair_witness},
                    {"conjugate", r.conjugate_witness}}}};
}

}  // namespace drumgeo
