#include "digifix/sweeps.hpp"

#include "digifix/contraction.hpp"
#include "digifix/enumeration.hpp"
#include "digifix/errors.hpp"
#include "digifix/iteration.hpp"

namespace digifix {

namespace {

void combinations(const std::vector<Point>& pool, std::size_t size, std::size_t from, std::vector<Point>& chosen,
                  const std::function<void(const std::vector<Point>&)>& emit) {
  if (chosen.size() == size) {
    emit(chosen);
    return;
  }
  for (std::size_t i = from; i + (size - chosen.size()) <= pool.size(); ++i) {
    chosen.push_back(pool[i]);
    combinations(pool, size, i + 1, chosen, emit);
    chosen.pop_back();
  }
}

SweepStats sweep_image(const DigitalImage& img, const std::vector<Metric>& metrics, const SweepChecks& checks) {
  SweepStats s;
  s.images = 1;
  for (const Metric& metric : metrics) {
    if (metric.kind() == Metric::Kind::ShortestPath && !is_connected(img)) continue;
    const DistanceMatrix dm(metric, img);
    for_each_self_map(img.size(), [&](const SelfMap& f) {
      ++s.maps;
      const bool constant = is_constant(f);
      if (checks.reich_collapse) {
        s.reich_mismatches += reich_universal_holds(dm, f) != constant ? 1 : 0;
        s.self_composed_mismatches += self_composed_reich_holds(dm, f) != constant ? 1 : 0;
      }
      if (!banach_modulus(dm, f).is_banach) return true;
      ++s.contractions;
      if (checks.banach_implies_constant && !constant) ++s.nonconstant_contractions;
      if (checks.banach_uniqueness) {
        if (fixed_points(f).size() != 1) ++s.fixed_point_violations;
        try {
          const auto collapse = singleton_collapse(dm, f);
          if (collapse.steps > collapse.bound) ++s.collapse_violations;
        } catch (const PremiseViolation&) {
          ++s.collapse_violations;
        }
      }
      return true;
    });
  }
  return s;
}

}  // namespace

SweepStats& SweepStats::operator+=(const SweepStats& o) {
  images += o.images;
  maps += o.maps;
  contractions += o.contractions;
  nonconstant_contractions += o.nonconstant_contractions;
  fixed_point_violations += o.fixed_point_violations;
  collapse_violations += o.collapse_violations;
  reich_mismatches += o.reich_mismatches;
  self_composed_mismatches += o.self_composed_mismatches;
  return *this;
}

std::uint64_t SweepStats::violations() const {
  return nonconstant_contractions + fixed_point_violations + collapse_violations + reich_mismatches +
         self_composed_mismatches;
}

std::vector<DigitalImage> window_images(const Window& window, std::size_t min_points, std::size_t max_points, int u,
                                        bool connected_only) {
  const std::vector<Point> pool = window.points();
  std::vector<DigitalImage> out;
  std::vector<Point> chosen;
  for (std::size_t size = std::max<std::size_t>(1, min_points); size <= max_points; ++size) {
    combinations(pool, size, 0, chosen, [&](const std::vector<Point>& pts) {
      DigitalImage img(window.dim(), pts, AdjacencySpec{u});
      if (!connected_only || is_connected(img)) out.push_back(std::move(img));
    });
  }
  return out;
}

SweepStats sweep_all_maps(const std::vector<DigitalImage>& images, const std::vector<Metric>& metrics,
                          const SweepChecks& checks) {
  std::vector<SweepStats> per_image(images.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(images.size()); ++i) {
    per_image[i] = sweep_image(images[i], metrics, checks);
  }
  SweepStats total;
  for (const auto& s : per_image) total += s;
  return total;
}

SweepStats sweep_all_maps_reference(const std::vector<DigitalImage>& images, const std::vector<Metric>& metrics,
                                    const SweepChecks& checks) {
  SweepStats total;
  for (const auto& img : images) total += sweep_image(img, metrics, checks);
  return total;
}

}  // namespace digifix
