#include "digifix/isomorphism.hpp"

#include <algorithm>

#include "digifix/errors.hpp"

namespace digifix {

namespace {

class Matcher {
 public:
  Matcher(const DigitalImage& a, const DigitalImage& b)
      : a_(a), b_(b), map_(a.size(), kUnset), used_(b.size(), false) {
    // Most-constrained first: high degree vertices early.
    order_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) { return a.degree(x) > a.degree(y); });
  }

  bool solve(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < b_.size(); ++w) {
      if (used_[w] || b_.degree(w) != a_.degree(v) || !consistent(v, w)) continue;
      map_[v] = w;
      used_[w] = true;
      if (solve(depth + 1)) return true;
      map_[v] = kUnset;
      used_[w] = false;
    }
    return false;
  }

  const std::vector<std::size_t>& mapping() const { return map_; }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t v, std::size_t w) const {
    for (std::size_t x = 0; x < a_.size(); ++x) {
      if (map_[x] == kUnset) continue;
      if (a_.adjacent(v, x) != b_.adjacent(w, map_[x])) return false;
    }
    return true;
  }

  const DigitalImage& a_;
  const DigitalImage& b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const DigitalImage& img) {
  std::vector<std::size_t> d(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) d[i] = img.degree(i);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

Isomorphism find_isomorphism(const DigitalImage& a, const DigitalImage& b, std::size_t cap) {
  if (a.size() > cap || b.size() > cap) {
    throw CapExceeded("isomorphism search is capped at " + std::to_string(cap) + " points");
  }
  Isomorphism out;
  if (a.size() != b.size() || degree_sequence(a) != degree_sequence(b)) return out;
  Matcher matcher(a, b);
  if (matcher.solve()) {
    out.isomorphic = true;
    out.mapping = matcher.mapping();
  }
  return out;
}

}  // namespace digifix
