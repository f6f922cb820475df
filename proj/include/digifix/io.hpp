#pragma once

#include <filesystem>

#include "json.hpp"

#include "digifix/contraction.hpp"
#include "digifix/enumeration.hpp"
#include "digifix/image.hpp"
#include "digifix/iteration.hpp"
#include "digifix/scc.hpp"
#include "digifix/selfmap.hpp"

namespace digifix {

using json = nlohmann::json;

// Image JSON: {"dim": n, "adjacency": {"cu": u}, "points": [[ints]...]}.
DigitalImage image_from_json(const json& j);
json image_to_json(const DigitalImage& img);

// Map JSON: {"table": [indices]}.
SelfMap map_from_json(const json& j, const DigitalImage& img);
json map_to_json(const SelfMap& f);

// Reads and parses a file; InputError on I/O or JSON syntax errors.
json read_json_file(const std::filesystem::path& path);

json to_json(const DistanceValue& d);
json to_json(const ClassificationReport& r);
json to_json(const PairReport& r);
json to_json(const ComplexityResult& r);
json to_json(const SccSearchResult& r);
json to_json(const PairFixedPoint& r);
json to_json(const FourMapFixedPoint& r);
json to_json(const KannanResult& r);

}  // namespace digifix
