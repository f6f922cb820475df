#include "digifix/selfmap.hpp"

#include <algorithm>

#include "digifix/errors.hpp"

namespace digifix {

SelfMap::SelfMap(std::vector<std::size_t> table) : table_(std::move(table)) {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= table_.size()) {
      throw InputError("map entry " + std::to_string(i) + " = " + std::to_string(table_[i]) +
                       " is out of range for " + std::to_string(table_.size()) + " points");
    }
  }
}

SelfMap SelfMap::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return SelfMap(std::move(t));
}

SelfMap SelfMap::constant(std::size_t n, std::size_t value) { return SelfMap(std::vector<std::size_t>(n, value)); }

void SelfMap::check_against(const DigitalImage& img) const {
  if (size() != img.size()) {
    throw InputError("map has " + std::to_string(size()) + " entries but the image has " +
                     std::to_string(img.size()) + " points");
  }
}

bool is_continuous(const DigitalImage& img, const SelfMap& f) {
  f.check_against(img);
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j : img.neighbors(i)) {
      if (f(i) != f(j) && !img.adjacent(f(i), f(j))) return false;
    }
  }
  return true;
}

IndexSet fixed_points(const SelfMap& f) {
  IndexSet out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f(i) == i) out.push_back(i);
  }
  return out;
}

bool is_constant(const SelfMap& f) {
  return std::adjacent_find(f.table().begin(), f.table().end(), std::not_equal_to<>()) == f.table().end();
}

IndexSet image_of(const SelfMap& f, const IndexSet& s) {
  IndexSet out;
  out.reserve(s.size());
  for (std::size_t i : s) out.push_back(f(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SelfMap compose(const SelfMap& f, const SelfMap& g) {
  if (f.size() != g.size()) throw InputError("cannot compose maps on images of different sizes");
  std::vector<std::size_t> t(f.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f(g(i));
  return SelfMap(std::move(t));
}

SelfMap iterate(const SelfMap& f, std::size_t n) {
  SelfMap out = SelfMap::identity(f.size());
  for (std::size_t i = 0; i < n; ++i) out = compose(f, out);
  return out;
}

ImageSequence image_sequence(const SelfMap& f, std::size_t max_steps) {
  if (max_steps == 0) max_steps = std::max<std::size_t>(1, 2 * f.size());
  ImageSequence seq;
  seq.sets.push_back(SelfMap::identity(f.size()).table());
  for (std::size_t step = 0; step < max_steps; ++step) {
    IndexSet next = image_of(f, seq.sets.back());
    const bool repeat = next == seq.sets.back();
    seq.sets.push_back(std::move(next));
    if (repeat) {
      seq.stabilized = true;
      break;
    }
  }
  return seq;
}

Stabilization is_eventually_constant(const SequenceWindow& window) {
  Stabilization out;
  const auto& v = window.values;
  if (v.empty()) throw InputError("sequence window is empty");
  std::size_t start = v.size() - 1;
  while (start > 0 && v[start - 1] == v.back()) --start;
  out.eventually_constant = v.size() == 1 || start + 1 < v.size();
  out.index = start;
  if (window.claimed_index) {
    const std::size_t m = *window.claimed_index;
    out.claim_consistent = out.eventually_constant && m < v.size() && m >= start;
  }
  return out;
}

}  // namespace digifix
