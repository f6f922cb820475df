#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "digifix/contraction.hpp"
#include "digifix/enumeration.hpp"
#include "digifix/errors.hpp"
#include "digifix/io.hpp"
#include "digifix/iteration.hpp"
#include "digifix/scc.hpp"
#include "digifix/suite.hpp"

using namespace digifix;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Common {
  std::string image;
  std::string metric = "l2";
  bool pretty = false;
};

void emit(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

// Image from --image, or from an "image" member embedded in the map file.
DigitalImage load_image(const std::string& image_path, const json* map_doc = nullptr) {
  if (!image_path.empty()) return image_from_json(read_json_file(image_path));
  if (map_doc && map_doc->contains("image")) return image_from_json(map_doc->at("image"));
  throw InputError("--image is required");
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad number '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) out.push_back(id);
    }
  }
  return out;
}

void print_suite(const std::vector<ScenarioOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    std::cout << o.id << "  " << status_name(o.status) << "  " << o.title << '\n';
    for (const auto& a : o.assertions) {
      std::cout << "    [" << (a.pass ? "ok" : "FAIL") << "] " << a.name << ": expected " << a.expected.dump()
                << ", got " << a.actual.dump() << " (" << a.provenance << ")\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point checks on finite digital images"};
  app.require_subcommand(1);
  int exit_code = 0;

  Common c;
  std::string map_path, j_path, k_path, l_path, m_path, xi_text;
  std::size_t start = 0;
  std::size_t cap = kDefaultEnumerationCap;
  bool require_continuous = false;

  auto add_image = [&](CLI::App* sub) {
    sub->add_option("--image", c.image, "image JSON file");
    sub->add_flag("--pretty", c.pretty, "indented output");
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", c.metric, "l1, l2, lp:<p> or hop")->capture_default_str();
  };

  // image
  auto* image_cmd = app.add_subcommand("image", "validate or describe an image");
  image_cmd->require_subcommand(1);
  auto* image_validate = image_cmd->add_subcommand("validate", "parse and validate an image file");
  add_image(image_validate);
  image_validate->callback([&] {
    const DigitalImage img = load_image(c.image);
    emit({{"valid", true}, {"points", img.size()}, {"dim", img.dim()}, {"cu", img.adjacency().u}}, c.pretty);
  });
  auto* image_info = image_cmd->add_subcommand("info", "connectivity and metric facts");
  add_image(image_info);
  add_metric(image_info);
  image_info->callback([&] {
    const DigitalImage img = load_image(c.image);
    const Metric metric = Metric::parse(c.metric);
    json out{{"points", img.size()}, {"dim", img.dim()}, {"cu", img.adjacency().u}};
    out["components"] = components(img);
    const bool connected = is_connected(img);
    out["connected"] = connected;
    if (connected) out["uniformly_connected"] = is_uniformly_connected(img);
    if (!img.empty() && (connected || metric.kind() != Metric::Kind::ShortestPath)) {
      const DistanceMatrix dm(metric, img);
      out["metric"] = metric.name();
      out["diameter"] = to_json(diameter(metric, img));
      out["distinct_positive_distances"] = dm.distinct_positive().size();
    }
    emit(out, c.pretty);
  });

  // map
  auto* map_cmd = app.add_subcommand("map", "single self-map checks");
  map_cmd->require_subcommand(1);
  auto add_map = [&](CLI::App* sub) {
    add_image(sub);
    sub->add_option("--map", map_path, "map JSON file")->required();
  };
  auto load_map = [&](const std::string& path, const DigitalImage& img) { return map_from_json(read_json_file(path), img); };
  auto load_image_for = [&](const std::string& path) {
    const json doc = read_json_file(path);
    return load_image(c.image, &doc);
  };

  auto* classify_cmd = map_cmd->add_subcommand("classify", "every contraction notion for one map");
  add_map(classify_cmd);
  add_metric(classify_cmd);
  classify_cmd->callback([&] {
    const DigitalImage img = load_image_for(map_path);
    emit(to_json(classify(Metric::parse(c.metric), img, load_map(map_path, img))), c.pretty);
  });

  auto* fix_cmd = map_cmd->add_subcommand("fixpoints", "fixed points and continuity");
  add_map(fix_cmd);
  fix_cmd->callback([&] {
    const DigitalImage img = load_image_for(map_path);
    const SelfMap f = load_map(map_path, img);
    emit({{"fixed_points", fixed_points(f)}, {"continuous", is_continuous(img, f)}, {"constant", is_constant(f)}},
         c.pretty);
  });

  bool kannan = false;
  auto* iterate_cmd = map_cmd->add_subcommand("iterate", "image sequence, or the Kannan iteration with --kannan");
  add_map(iterate_cmd);
  add_metric(iterate_cmd);
  iterate_cmd->add_flag("--kannan", kannan, "run the Picard iteration for a Kannan map");
  iterate_cmd->add_option("--start", start, "starting point index for --kannan");
  iterate_cmd->callback([&] {
    const DigitalImage img = load_image_for(map_path);
    const SelfMap f = load_map(map_path, img);
    if (kannan) {
      emit(to_json(kannan_fixed_point(DistanceMatrix(Metric::parse(c.metric), img), f, start)), c.pretty);
      return;
    }
    const auto seq = image_sequence(f);
    json out{{"sets", seq.sets}, {"stabilized", seq.stabilized}, {"fixed_points", fixed_points(f)}};
    const DistanceMatrix dm(Metric::parse(c.metric), img);
    if (is_distance_decreasing(dm, f)) {
      const auto col = singleton_collapse(dm, f);
      out["collapse"] = {{"steps", col.steps}, {"fixed_point", col.fixed_point}, {"bound", col.bound}};
    }
    emit(out, c.pretty);
  });

  // pair
  auto* pair_cmd = app.add_subcommand("pair", "two-map checks");
  pair_cmd->require_subcommand(1);
  auto add_pair = [&](CLI::App* sub) {
    add_image(sub);
    add_metric(sub);
    sub->add_option("--j", j_path, "first map (S or J) JSON file")->required();
    sub->add_option("--k", k_path, "second map (T or K) JSON file")->required();
  };
  auto* pair_check = pair_cmd->add_subcommand("check", "weak commutativity, compatibility and coefficients");
  add_pair(pair_check);
  pair_check->callback([&] {
    const DigitalImage img = load_image_for(j_path);
    emit(to_json(check_pair(Metric::parse(c.metric), img, load_map(j_path, img), load_map(k_path, img))), c.pretty);
  });
  auto* saluja = pair_cmd->add_subcommand("saluja", "common fixed point of J and K");
  add_pair(saluja);
  saluja->add_option("--xi", xi_text, "coefficients x1,x2,x3; the minimal feasible ones when omitted");
  saluja->add_option("--start", start, "starting point index");
  saluja->callback([&] {
    const DigitalImage img = load_image_for(j_path);
    const DistanceMatrix dm(Metric::parse(c.metric), img);
    const SelfMap j = load_map(j_path, img), k = load_map(k_path, img);
    std::array<double, 3> xi{};
    if (xi_text.empty()) {
      const auto w = pair_coefficients(dm, j, k);
      if (!w.feasible) throw PremiseViolation({"no coefficients with x1 + x2 + x3 < 1 satisfy the pair inequality"});
      xi = w.coeffs;
    } else {
      const auto v = parse_list(xi_text);
      if (v.size() != 3) throw InputError("--xi needs three comma-separated values");
      xi = {v[0], v[1], v[2]};
    }
    json out = to_json(common_fixed_point_pair(dm, j, k, xi, start));
    out["xi"] = xi;
    emit(out, c.pretty);
  });

  // quad
  auto* quad_cmd = app.add_subcommand("quad", "four-map checks");
  quad_cmd->require_subcommand(1);
  auto* saljhade = quad_cmd->add_subcommand("saljhade", "common fixed point of J, K, L, M");
  add_image(saljhade);
  add_metric(saljhade);
  saljhade->add_option("--j", j_path, "J map JSON file")->required();
  saljhade->add_option("--k", k_path, "K map JSON file")->required();
  saljhade->add_option("--l", l_path, "L map JSON file")->required();
  saljhade->add_option("--m", m_path, "M map JSON file")->required();
  saljhade->add_option("--xi", xi_text, "contraction constant in (0,1); max(minimal, 1/2) when omitted");
  saljhade->add_option("--start", start, "starting point index");
  saljhade->callback([&] {
    const DigitalImage img = load_image_for(j_path);
    const DistanceMatrix dm(Metric::parse(c.metric), img);
    const SelfMap j = load_map(j_path, img), k = load_map(k_path, img), l = load_map(l_path, img),
                  m = load_map(m_path, img);
    double xi = 0;
    if (xi_text.empty()) {
      const auto min_xi = four_map_min_xi(dm, j, k, l, m);
      if (!min_xi || *min_xi >= 1.0 - kTolerance) {
        throw PremiseViolation({"no xi < 1 satisfies d(Ju,Kq) <= xi d(Lu,Mq)"});
      }
      xi = std::max(*min_xi, 0.5);
    } else {
      const auto v = parse_list(xi_text);
      if (v.size() != 1) throw InputError("--xi needs one value");
      xi = v[0];
    }
    json out = to_json(common_fixed_point_four(dm, j, k, l, m, xi, start));
    out["xi"] = xi;
    emit(out, c.pretty);
  });

  // complexity
  auto* complexity_cmd = app.add_subcommand("complexity", "C# by exhaustive enumeration");
  add_image(complexity_cmd);
  add_metric(complexity_cmd);
  complexity_cmd->add_option("--cap", cap, "largest |X| to enumerate")->capture_default_str();
  complexity_cmd->add_flag("--require-continuous", require_continuous, "only count continuous contractions");
  complexity_cmd->callback([&] {
    const DigitalImage img = load_image(c.image);
    emit(to_json(c_sharp(Metric::parse(c.metric), img, EnumerationOptions{cap, require_continuous})), c.pretty);
  });

  // scc
  auto* scc_cmd = app.add_subcommand("scc", "simple closed curves");
  scc_cmd->require_subcommand(1);
  std::size_t dim = 2, length = 4;
  int u = 1;
  std::string window_text;
  std::uint64_t budget = kDefaultSccBudget;
  auto* scc_find = scc_cmd->add_subcommand("find", "search a window for a curve of given length");
  scc_find->add_option("--dim", dim)->required();
  scc_find->add_option("--u", u)->required();
  scc_find->add_option("--len", length)->required();
  scc_find->add_option("--window", window_text, "e.g. 5x5")->required();
  scc_find->add_option("--budget", budget, "search node budget")->capture_default_str();
  scc_find->add_flag("--pretty", c.pretty);
  scc_find->callback([&] {
    const Window window = Window::parse(window_text);
    if (window.dim() != dim) throw InputError("--window has " + std::to_string(window.dim()) + " axes, --dim is " + std::to_string(dim));
    const auto res = find_scc(dim, u, length, window, budget);
    emit(to_json(res), c.pretty);
    if (!res.found) exit_code = kExitCheckFailed;
  });
  auto* scc_check = scc_cmd->add_subcommand("check", "is the image a simple closed curve");
  add_image(scc_check);
  scc_check->callback([&] {
    const bool ok = is_simple_closed_curve(load_image(c.image));
    emit({{"simple_closed_curve", ok}}, c.pretty);
    if (!ok) exit_code = kExitCheckFailed;
  });

  // paper-suite
  auto* suite_cmd = app.add_subcommand("paper-suite", "run the verification scenarios");
  std::vector<std::string> only;
  std::optional<std::uint64_t> seed;
  suite_cmd->add_option("--only", only, "scenario ids, e.g. S1,S3")->delimiter(',');
  suite_cmd->add_option("--seed", seed, "enable seeded spot checks");
  suite_cmd->add_flag("--pretty", c.pretty, "human-readable summary");
  suite_cmd->callback([&] {
    SuiteOptions options;
    options.only = split_ids(only);
    options.seed = seed;
    const auto outcomes = run_paper_suite(options);
    if (c.pretty) {
      print_suite(outcomes);
    } else {
      json out = json::array();
      for (const auto& o : outcomes) out.push_back(to_json(o));
      emit(out, false);
    }
    for (const auto& o : outcomes) {
      if (!o.pass()) exit_code = kExitCheckFailed;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  } catch (const PremiseViolation& e) {
    emit({{"error", e.what()}, {"violated", e.violated()}}, false);
    std::cerr << "premise violation: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return exit_code;
}
