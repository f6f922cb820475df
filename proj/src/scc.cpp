#include "digifix/scc.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "digifix/contraction.hpp"
#include "digifix/errors.hpp"

namespace digifix {

namespace {

// Induced-cycle backtracking on the window graph. Each cycle is produced once:
// it starts at its smallest vertex and path[1] < path[len-1].
class CycleSearch {
 public:
  CycleSearch(const DigitalImage& graph, std::size_t length, std::uint64_t budget)
      : g_(graph), len_(length), budget_(budget), on_path_(graph.size(), false) {}

  template <typename Emit>
  void run(Emit&& emit) {
    for (std::size_t s = 0; s < g_.size() && !stopped_; ++s) {
      path_.assign(1, s);
      on_path_[s] = true;
      extend(emit);
      on_path_[s] = false;
    }
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  template <typename Emit>
  void extend(Emit& emit) {
    if (stopped_) return;
    if (++nodes_ > budget_) {
      exhausted_ = stopped_ = true;
      return;
    }
    const std::size_t k = path_.size();
    const std::size_t start = path_.front();
    const bool closing = k + 1 == len_;
    for (std::size_t w : g_.neighbors(path_.back())) {
      if (w <= start || on_path_[w]) continue;
      if (closing && (!g_.adjacent(w, start) || w < path_[1])) continue;
      bool induced = true;
      for (std::size_t i = closing ? 1 : 0; i + 1 < k && induced; ++i) induced = !g_.adjacent(w, path_[i]);
      if (!induced) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (closing) {
        if (!emit(path_)) stopped_ = true;
      } else {
        extend(emit);
      }
      on_path_[w] = false;
      path_.pop_back();
      if (stopped_) return;
    }
  }

  const DigitalImage& g_;
  std::size_t len_;
  std::uint64_t budget_;
  std::vector<std::size_t> path_;
  std::vector<bool> on_path_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool stopped_ = false;
};

DigitalImage window_graph(std::size_t dim, int u, std::size_t length, const Window& window) {
  if (length < 4) throw InputError("a simple closed curve needs at least 4 points");
  if (window.dim() != dim) throw InputError("window dimension does not match --dim");
  return DigitalImage(dim, window.points(), AdjacencySpec{u});
}

}  // namespace

Window Window::parse(std::string_view text) {
  Window w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find('x', pos), text.size());
    const std::string_view part = text.substr(pos, next - pos);
    Coord side = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), side);
    if (ec != std::errc() || ptr != part.data() + part.size() || side < 1) {
      throw InputError("bad window '" + std::string(text) + "' (expected e.g. 5x5)");
    }
    w.lo.push_back(0);
    w.hi.push_back(side - 1);
    pos = next + 1;
  }
  return w;
}

Window Window::cube(std::size_t dim, Coord side) {
  return Window{std::vector<Coord>(dim, 0), std::vector<Coord>(dim, side - 1)};
}

std::vector<Point> Window::points() const {
  std::vector<Point> out;
  std::vector<Coord> c(lo);
  if (c.empty()) return out;
  while (true) {
    out.emplace_back(c);
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      if (++c[i] <= hi[i]) break;
      c[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

bool is_simple_closed_curve(const DigitalImage& img) {
  if (img.size() < 4) throw InputError("a simple closed curve needs at least 4 points");
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img.degree(i) != 2) return false;
  }
  return is_connected(img);
}

SccSearchResult find_scc(std::size_t dim, int u, std::size_t length, const Window& window, std::uint64_t budget) {
  const DigitalImage g = window_graph(dim, u, length, window);
  SccSearchResult out;
  out.length = length;
  CycleSearch search(g, length, budget);
  search.run([&](const std::vector<std::size_t>& path) {
    out.found = true;
    for (std::size_t v : path) out.curve.push_back(g.point(v));
    return false;
  });
  out.nodes = search.nodes();
  out.budget_exhausted = !out.found && search.exhausted();
  return out;
}

std::vector<std::vector<Point>> enumerate_sccs(std::size_t dim, int u, std::size_t length, const Window& window) {
  const DigitalImage g = window_graph(dim, u, length, window);
  std::vector<std::vector<Point>> out;
  CycleSearch search(g, length, std::numeric_limits<std::uint64_t>::max());
  search.run([&](const std::vector<std::size_t>& path) {
    std::vector<Point> curve;
    for (std::size_t v : path) curve.push_back(g.point(v));
    out.push_back(std::move(curve));
    return true;
  });
  return out;
}

NeighborhoodBound scc_neighborhood_bound(const DigitalImage& img, const EnumerationOptions& options) {
  if (!is_simple_closed_curve(img)) throw InputError("image is not a simple closed curve");
  const DistanceMatrix dm(Metric::l2(), img);
  NeighborhoodBound out;
  out.premise = true;
  for (const SelfMap& f : enumerate_contractions(dm, img, options)) {
    ++out.contractions;
    const std::size_t fixed = fixed_points(f).front();
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f(x) != fixed && !img.adjacent(f(x), fixed)) out.premise = false;
    }
    out.c_sharp = std::max(out.c_sharp, collapse_depth(f));
  }
  out.bound_holds = !out.premise || out.c_sharp <= 3;
  return out;
}

}  // namespace digifix
