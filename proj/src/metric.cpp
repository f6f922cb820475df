#include "digifix/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "digifix/errors.hpp"

namespace digifix {

namespace {

// Largest integer exponent carried exactly; beyond it p-th powers overflow too easily.
constexpr int kMaxExactExponent = 16;

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InputError("cannot parse metric exponent '" + std::string(text) + "'");
  return value;
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) throw InputError("coordinate differences too large for exact l_p");
  }
  return out;
}

DistanceValue lp_distance(const Metric& m, const Point& x, const Point& y) {
  if (auto e = m.exponent()) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      const std::int64_t diff = x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
      if (__builtin_add_overflow(sum, checked_pow(diff, *e), &sum)) {
        throw InputError("coordinate differences too large for exact l_p");
      }
    }
    return DistanceValue::exact(sum, *e);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) sum += std::pow(std::abs(static_cast<double>(x[i] - y[i])), m.p());
  return DistanceValue::approx(std::pow(sum, 1.0 / m.p()));
}

void require_connected_for_hops(const Metric& m, const DigitalImage& img) {
  if (m.kind() == Metric::Kind::ShortestPath && !is_connected(img)) {
    throw InputError("the shortest-path metric requires a connected image");
  }
}

}  // namespace

Metric Metric::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("l_p metric needs p >= 1");
  const double rounded = std::round(p);
  std::optional<int> exponent;
  if (std::abs(p - rounded) < 1e-12 && rounded <= kMaxExactExponent) {
    exponent = static_cast<int>(rounded);
    p = rounded;
  }
  return Metric(Kind::Lp, p, exponent);
}

Metric Metric::shortest_path() { return Metric(Kind::ShortestPath, 1.0, 1); }

Metric Metric::parse(std::string_view text) {
  if (text == "l1") return l1();
  if (text == "l2") return l2();
  if (text == "hop") return shortest_path();
  constexpr std::string_view prefix = "lp:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw InputError("unknown metric '" + std::string(text) + "' (expected l1, l2, lp:<p> or hop)");
  }
  const std::string_view arg = text.substr(prefix.size());
  if (const auto slash = arg.find('/'); slash != std::string_view::npos) {
    const double num = parse_number(arg.substr(0, slash));
    const double den = parse_number(arg.substr(slash + 1));
    if (den <= 0) throw InputError("metric exponent denominator must be positive");
    return lp(num / den);
  }
  return lp(parse_number(arg));
}

std::string Metric::name() const {
  if (kind_ == Kind::ShortestPath) return "hop";
  if (exponent_) return *exponent_ <= 2 ? "l" + std::to_string(*exponent_) : "lp:" + std::to_string(*exponent_);
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p_);
  return "lp:" + std::string(buf, ptr);
}

DistanceValue DistanceValue::exact(std::int64_t payload, int exponent) {
  DistanceValue d;
  d.payload_ = payload;
  d.exponent_ = exponent;
  d.approx_ = exponent == 1   ? static_cast<double>(payload)
              : exponent == 2 ? std::sqrt(static_cast<double>(payload))
                              : std::pow(static_cast<double>(payload), 1.0 / exponent);
  return d;
}

DistanceValue DistanceValue::approx(double value) {
  DistanceValue d;
  d.approx_ = value;
  return d;
}

double DistanceValue::value() const { return approx_; }

bool DistanceValue::is_zero() const { return is_exact() ? payload_ == 0 : std::abs(approx_) <= kTolerance; }

std::weak_ordering DistanceValue::compare(const DistanceValue& other) const {
  if (is_exact() && other.is_exact() && exponent_ == other.exponent_) return payload_ <=> other.payload_;
  if (std::abs(approx_ - other.approx_) <= kTolerance) return std::weak_ordering::equivalent;
  return approx_ < other.approx_ ? std::weak_ordering::less : std::weak_ordering::greater;
}

DistanceMatrix::DistanceMatrix(const Metric& metric, const DigitalImage& img)
    : metric_(metric), n_(img.size()), values_(n_ * n_), doubles_(n_ * n_) {
  require_connected_for_hops(metric, img);
  for (std::size_t i = 0; i < n_; ++i) {
    if (metric.kind() == Metric::Kind::ShortestPath) {
      const auto hops = hops_from(img, i);
      for (std::size_t j = 0; j < n_; ++j) values_[i * n_ + j] = DistanceValue::exact(static_cast<std::int64_t>(*hops[j]), 1);
    } else {
      for (std::size_t j = 0; j < n_; ++j) values_[i * n_ + j] = lp_distance(metric, img.point(i), img.point(j));
    }
    for (std::size_t j = 0; j < n_; ++j) doubles_[i * n_ + j] = values_[i * n_ + j].value();
  }
}

std::vector<DistanceValue> DistanceMatrix::distinct_positive() const {
  std::vector<DistanceValue> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!at(i, j).is_zero()) out.push_back(at(i, j));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a < b; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a == b; }), out.end());
  return out;
}

DistanceValue distance(const Metric& m, const DigitalImage& img, const Point& x, const Point& y) {
  const std::size_t i = img.require_index(x);
  const std::size_t j = img.require_index(y);
  if (m.kind() == Metric::Kind::ShortestPath) {
    require_connected_for_hops(m, img);
    return DistanceValue::exact(static_cast<std::int64_t>(*shortest_path_length(img, i, j)), 1);
  }
  return lp_distance(m, x, y);
}

DistanceValue diameter(const Metric& m, const DigitalImage& img) {
  if (img.empty()) throw InputError("diameter of an empty image is undefined");
  const DistanceMatrix dm(m, img);
  DistanceValue best = dm.at(0, 0);
  for (std::size_t i = 0; i < dm.size(); ++i) {
    for (std::size_t j = i + 1; j < dm.size(); ++j) {
      if (best < dm.at(i, j)) best = dm.at(i, j);
    }
  }
  return best;
}

DistanceValue uniform_discreteness_witness(const Metric& m, const DigitalImage& img) {
  if (img.size() < 2) {
    return m.exponent() ? DistanceValue::exact(1, *m.exponent()) : DistanceValue::approx(1.0);
  }
  const auto distinct = DistanceMatrix(m, img).distinct_positive();
  return distinct.front();
}

std::strong_ordering Ratio::operator<=>(const Ratio& other) const {
  if (den == 0 || other.den == 0) {
    if (den == 0 && other.den == 0) return std::strong_ordering::equal;
    return den == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const __int128 lhs = static_cast<__int128>(num) * other.den;
  const __int128 rhs = static_cast<__int128>(other.num) * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Ratio::value() const {
  if (den == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace digifix
