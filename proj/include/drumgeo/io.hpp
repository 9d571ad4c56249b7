#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "drumgeo/domain.hpp"
#include "drumgeo/error.hpp"
#include "drumgeo/exact.hpp"
#include "drumgeo/geometry.hpp"
#include "drumgeo/group.hpp"
#include "drumgeo/spectral.hpp"
#include "drumgeo/triple.hpp"

namespace drumgeo {

// Ordered so that serialized reports keep their field order and reruns are
// byte identical.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// File and format problems, as opposed to mathematical preconditions.
struct IoError : Error {
  using Error::Error;
};

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

// FNV-1a content hash, printed as 16 hex digits. Used to stamp input files
// into reports.
std::string hash_file(const std::filesystem::path& path);
std::string hash_bytes(const std::string& bytes);

Json perm_to_json(const Perm& p);
Perm perm_from_json(const Json& j);

// {"name": str, "degree": int, "generators": [[int,...],...]}
Json group_to_json(const PermGroup& g);
GroupPtr group_from_json(const Json& j,
                         std::size_t cap = PermGroup::default_cap());

// {"group": <path or inline group>, "u_generators": [...],
//  "v_generators": [...]}; a relative group path resolves against base_dir.
Json triple_to_json(const GSTriple& t);
GSTriple triple_from_json(const Json& j, const std::filesystem::path& base_dir,
                          std::size_t cap = PermGroup::default_cap());
GSTriple load_triple(const std::filesystem::path& path,
                     std::size_t cap = PermGroup::default_cap());

// {"points": int, "lines": int, "incident": [[p, l], ...]}
Json geometry_to_json(const IncidenceGeometry& g);
IncidenceGeometry geometry_from_json(const Json& j);

// Row-major nested arrays of exact "p/q" strings.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

// {"triangles": [[[xn, xd, yn, yd] x 3], ...]}
Json domain_to_json(const TileDomain& d);
TileDomain domain_from_json(const Json& j);
TileDomain load_domain(const std::filesystem::path& path);

// {"h": "1/32", "k": int, "eigenvalues": [...], "residuals": [...]}
Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);
Spectrum load_spectrum(const std::filesystem::path& path);

// Stable field order: ec, ac, ff, max, pair, conjugate, witnesses.
Json flags_to_json(const FlagReport& r);

}  // namespace drumgeo
