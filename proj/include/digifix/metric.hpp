#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digifix/image.hpp"

namespace digifix {

// Tolerance for every comparison that has to fall back to floating point.
inline constexpr double kTolerance = 1e-9;

class Metric {
 public:
  enum class Kind { Lp, ShortestPath };

  static Metric lp(double p);
  static Metric l1() { return lp(1.0); }
  static Metric l2() { return lp(2.0); }
  static Metric shortest_path();

  // Accepts "l1", "l2", "hop", "lp:<p>" where <p> is an integer, a decimal, or a ratio "a/b".
  static Metric parse(std::string_view text);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  // Set when distances are carried exactly as integers (integer p, or hop counts).
  std::optional<int> exponent() const { return exponent_; }
  // All distances are themselves integers (l1 or hop), so sums of distances stay exact.
  bool integer_valued() const { return exponent_ == 1; }
  std::string name() const;

 private:
  Metric(Kind kind, double p, std::optional<int> exponent) : kind_(kind), p_(p), exponent_(exponent) {}

  Kind kind_;
  double p_;
  std::optional<int> exponent_;
};

// A distance with an exactness carrier. Exact values hold the integer
// sum |x_i - y_i|^p (the p-th power of the distance) or a hop count;
// approximate values hold a double and compare with kTolerance.
class DistanceValue {
 public:
  static DistanceValue exact(std::int64_t payload, int exponent);
  static DistanceValue approx(double value);

  bool is_exact() const { return exponent_ > 0; }
  std::int64_t payload() const { return payload_; }
  int exponent() const { return exponent_; }
  double value() const;
  bool is_zero() const;

  // Exact when both sides share an exponent, otherwise tolerance-based.
  std::weak_ordering compare(const DistanceValue& other) const;
  bool operator<(const DistanceValue& o) const { return compare(o) < 0; }
  bool operator==(const DistanceValue& o) const { return compare(o) == 0; }

 private:
  std::int64_t payload_ = 0;
  int exponent_ = 0;
  double approx_ = 0.0;
};

// Pairwise distances of an image under one metric, computed once.
class DistanceMatrix {
 public:
  DistanceMatrix(const Metric& metric, const DigitalImage& img);

  std::size_t size() const { return n_; }
  const Metric& metric() const { return metric_; }
  bool exact() const { return metric_.exponent().has_value(); }

  const DistanceValue& at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double value(std::size_t i, std::size_t j) const { return doubles_[i * n_ + j]; }
  std::int64_t payload(std::size_t i, std::size_t j) const { return values_[i * n_ + j].payload(); }

  // d(i,j) < d(k,l), exact whenever the metric is.
  bool less(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    if (exact()) return payload(i, j) < payload(k, l);
    return value(i, j) < value(k, l) - kTolerance;
  }
  // d(i,j) <= d(k,l)
  bool less_equal(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    if (exact()) return payload(i, j) <= payload(k, l);
    return value(i, j) <= value(k, l) + kTolerance;
  }
  bool is_zero(std::size_t i, std::size_t j) const { return i == j || at(i, j).is_zero(); }

  // Sorted distinct strictly positive distances.
  std::vector<DistanceValue> distinct_positive() const;

 private:
  Metric metric_;
  std::size_t n_;
  std::vector<DistanceValue> values_;
  std::vector<double> doubles_;
};

// Throws InputError for points outside the image, or for the hop metric on a disconnected image.
DistanceValue distance(const Metric& m, const DigitalImage& img, const Point& x, const Point& y);

// Throws InputError on an empty image.
DistanceValue diameter(const Metric& m, const DigitalImage& img);

// Smallest positive pairwise distance; by convention 1 for a singleton.
DistanceValue uniform_discreteness_witness(const Metric& m, const DigitalImage& img);

// Exact non-negative ratio num/den of two integers; den == 0 means +infinity.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::strong_ordering operator<=>(const Ratio& other) const;
  bool operator==(const Ratio& other) const { return (*this <=> other) == 0; }
  double value() const;
};

}  // namespace digifix
