#include "digifix/io.hpp"

#include <fstream>

#include "digifix/errors.hpp"

namespace digifix {

namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + " JSON is missing \"" + key + "\"");
  return j.at(key);
}

json coeff_array(const std::array<double, 3>& c) { return json::array({c[0], c[1], c[2]}); }

json index_list(const std::vector<std::size_t>& v) { return json(v); }

}  // namespace

DigitalImage image_from_json(const json& j) {
  try {
    const json& dim = require(j, "dim", "image");
    const json& adjacency = require(j, "adjacency", "image");
    const json& cu = require(adjacency, "cu", "image adjacency");
    const json& points = require(j, "points", "image");
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) throw InputError("image \"dim\" must be a positive integer");
    if (!cu.is_number_integer()) throw InputError("image adjacency \"cu\" must be an integer");
    if (!points.is_array()) throw InputError("image \"points\" must be an array");
    std::vector<Point> pts;
    for (const json& p : points) {
      if (!p.is_array()) throw InputError("every image point must be an array of integers");
      std::vector<Coord> c;
      for (const json& x : p) {
        if (!x.is_number_integer()) throw InputError("point coordinates must be integers");
        c.push_back(x.get<Coord>());
      }
      pts.emplace_back(std::move(c));
    }
    return DigitalImage(dim.get<std::size_t>(), std::move(pts), AdjacencySpec{cu.get<int>()});
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed image JSON: ") + e.what());
  }
}

json image_to_json(const DigitalImage& img) {
  json pts = json::array();
  for (const Point& p : img.points()) pts.push_back(std::vector<Coord>(p.coords().begin(), p.coords().end()));
  return {{"dim", img.dim()}, {"adjacency", {{"cu", img.adjacency().u}}}, {"points", pts}};
}

SelfMap map_from_json(const json& j, const DigitalImage& img) {
  const json& table = require(j, "table", "map");
  if (!table.is_array()) throw InputError("map \"table\" must be an array");
  std::vector<std::size_t> t;
  for (const json& x : table) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) throw InputError("map entries must be non-negative integers");
    t.push_back(x.get<std::size_t>());
  }
  if (t.size() != img.size()) {
    throw InputError("map has " + std::to_string(t.size()) + " entries but the image has " +
                     std::to_string(img.size()) + " points");
  }
  return SelfMap(std::move(t));
}

json map_to_json(const SelfMap& f) { return {{"table", f.table()}}; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

json to_json(const DistanceValue& d) {
  json out{{"value", d.value()}};
  if (d.is_exact()) {
    out["power_sum"] = d.payload();
    out["exponent"] = d.exponent();
  }
  return out;
}

json to_json(const ClassificationReport& r) {
  json out{
      {"gamma_star", r.banach.gamma},
      {"is_banach", r.banach.is_banach},
      {"distance_decreasing", r.distance_decreasing},
      {"kannan_k_star", r.kannan.feasible ? json(r.kannan.k) : json("infeasible")},
      {"is_kannan", r.kannan.is_kannan},
      {"reich_feasible", r.reich.feasible},
      {"reich_witness", r.reich.feasible ? coeff_array(r.reich.coeffs) : json(nullptr)},
      {"reich_min_sum", r.reich.sum},
      {"reich_universal", r.reich_universal},
      {"continuous", r.continuous},
      {"constant", r.constant},
  };
  if (r.banach.power_ratio) out["gamma_star_power_ratio"] = {r.banach.power_ratio->num, r.banach.power_ratio->den};
  return out;
}

json to_json(const PairReport& r) {
  return {
      {"weakly_commutative", r.weakly_commutative},
      {"weakly_compatible", r.weakly_compatible},
      {"saluja_coeffs", r.coefficients.feasible ? coeff_array(r.coefficients.coeffs) : json("infeasible")},
      {"containment", r.containment},
  };
}

json to_json(const ComplexityResult& r) {
  return {
      {"c_sharp", r.c_sharp},
      {"witness", r.witness ? map_to_json(*r.witness) : json(nullptr)},
      {"maps_enumerated", r.maps_enumerated},
      {"contractions", r.contractions},
  };
}

json to_json(const SccSearchResult& r) {
  json curve = json::array();
  for (const Point& p : r.curve) curve.push_back(std::vector<Coord>(p.coords().begin(), p.coords().end()));
  return {{"found", r.found},
          {"budget_exhausted", r.budget_exhausted},
          {"length", r.length},
          {"curve", curve},
          {"nodes", r.nodes}};
}

json to_json(const PairFixedPoint& r) {
  return {{"fixed_point", r.fixed_point}, {"coincidence", r.coincidence}, {"preimages", index_list(r.preimages)},
          {"values", index_list(r.values)}, {"verified", r.verified},       {"unique", r.unique}};
}

json to_json(const FourMapFixedPoint& r) {
  return {{"sigma", r.sigma},
          {"preimages", index_list(r.preimages)},
          {"values", index_list(r.values)},
          {"verified", r.verified},
          {"unique", r.unique}};
}

json to_json(const KannanResult& r) {
  return {{"fixed_point", r.fixed_point},
          {"orbit", index_list(r.orbit)},
          {"stabilization_index", r.stabilization_index},
          {"unique", r.unique}};
}

}  // namespace digifix
