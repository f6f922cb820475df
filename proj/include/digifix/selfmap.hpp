#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "digifix/image.hpp"

namespace digifix {

using IndexSet = std::vector<std::size_t>;

// A total map X -> X stored as an index table: entry i is the index of f(x_i).
class SelfMap {
 public:
  explicit SelfMap(std::vector<std::size_t> table);

  static SelfMap identity(std::size_t n);
  static SelfMap constant(std::size_t n, std::size_t value);

  std::size_t size() const { return table_.size(); }
  std::size_t operator()(std::size_t i) const { return table_[i]; }
  const std::vector<std::size_t>& table() const { return table_; }

  // Throws InputError unless the table length matches the image.
  void check_against(const DigitalImage& img) const;

  bool operator==(const SelfMap&) const = default;

 private:
  std::vector<std::size_t> table_;
};

bool is_continuous(const DigitalImage& img, const SelfMap& f);
IndexSet fixed_points(const SelfMap& f);
bool is_constant(const SelfMap& f);
// The sorted index set f(S).
IndexSet image_of(const SelfMap& f, const IndexSet& s);

// (f o g)(x) = f(g(x)). Throws InputError on size mismatch.
SelfMap compose(const SelfMap& f, const SelfMap& g);
// f^n; f^0 is the identity.
SelfMap iterate(const SelfMap& f, std::size_t n);

struct ImageSequence {
  std::vector<IndexSet> sets;  // X, f(X), f^2(X), ...
  bool stabilized = false;     // two consecutive sets were equal before the cap
};

// Stops at the first repeat of consecutive image sets or after max_steps
// applications; max_steps == 0 selects the default 2|X|.
ImageSequence image_sequence(const SelfMap& f, std::size_t max_steps = 0);

struct SequenceWindow {
  std::vector<std::size_t> values;
  std::optional<std::size_t> claimed_index;
};

struct Stabilization {
  bool eventually_constant = false;
  std::size_t index = 0;      // start of the trailing constant run
  bool claim_consistent = true;
};

// A window counts as eventually constant when it ends in a constant run of
// length >= 2 (or has a single entry).
Stabilization is_eventually_constant(const SequenceWindow& window);

}  // namespace digifix
