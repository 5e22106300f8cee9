#include "twinpoly/io.hpp"

namespace twinpoly {

namespace {

using nlohmann::json;

long long to_int64(const Int& v) {
  if (v < std::numeric_limits<long long>::min() ||
      v > std::numeric_limits<long long>::max())
    throw CapacityError("integer too large for the JSON wire format");
  return v.convert_to<long long>();
}

int read_dim(const json& j) {
  if (!j.is_object() || !j.contains("dim") ||
      !j["dim"].is_number_integer())
    throw ParseError("expected an object with an integer \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw ParseError("\"dim\" must be positive");
  return dim;
}

}  // namespace

json vrep_to_json(const VRep& v) {
  json verts = json::array();
  for (const auto& p : v.vertices) {
    json coords = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i)
      coords.push_back(rational_to_string(p[i]));
    verts.push_back(std::move(coords));
  }
  return json{{"dim", v.dim}, {"vertices", std::move(verts)}};
}

VRep vrep_from_json(const json& j) {
  const int dim = read_dim(j);
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("expected a \"vertices\" array");
  std::vector<RationalVector> pts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError("vertex row has wrong length");
    RationalVector p(dim);
    for (int i = 0; i < dim; ++i) {
      if (!row[i].is_string()) throw ParseError("coordinates are strings");
      p[i] = rational_from_string(row[i].get<std::string>());
    }
    pts.push_back(std::move(p));
  }
  return VRep(dim, std::move(pts));
}

json hrep_to_json(const HRep& h) {
  json rows = json::array();
  for (const auto& f : h.rows) {
    json normal = json::array();
    for (Eigen::Index i = 0; i < f.normal.size(); ++i)
      normal.push_back(to_int64(f.normal[i]));
    rows.push_back(json{{"normal", std::move(normal)},
                        {"rhs", rational_to_string(f.rhs)}});
  }
  return json{{"dim", h.dim}, {"facets", std::move(rows)}};
}

HRep hrep_from_json(const json& j) {
  HRep h;
  h.dim = read_dim(j);
  if (!j.contains("facets") || !j["facets"].is_array())
    throw ParseError("expected a \"facets\" array");
  for (const auto& row : j["facets"]) {
    if (!row.is_object() || !row.contains("normal") || !row.contains("rhs") ||
        !row["normal"].is_array() ||
        static_cast<int>(row["normal"].size()) != h.dim ||
        !row["rhs"].is_string())
      throw ParseError("malformed facet row");
    HalfSpace hs;
    hs.normal.resize(h.dim);
    for (int i = 0; i < h.dim; ++i) {
      if (!row["normal"][i].is_number_integer())
        throw ParseError("facet normals are integer arrays");
      hs.normal[i] = Int(row["normal"][i].get<long long>());
    }
    hs.rhs = rational_from_string(row["rhs"].get<std::string>());
    h.rows.push_back(std::move(hs));
  }
  return h;
}

json report_to_json(const PolytopeReport& report) {
  json j{{"kind", to_string(report.kind)},
         {"volume", rational_to_string(report.volume)},
         {"facet_count", report.facet_count},
         {"reflexive", report.reflexive},
         {"centrally_symmetric", report.centrally_symmetric}};
  if (report.common_linear_extension.has_value())
    j["common_linear_extension"] = *report.common_linear_extension;
  return j;
}

}  // namespace twinpoly
