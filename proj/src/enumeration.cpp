#include "digifix/enumeration.hpp"

#include <cstdint>

#include "digifix/contraction.hpp"
#include "digifix/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace digifix {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("image has " + std::to_string(n) + " points; enumeration cap is " + std::to_string(cap) +
                      " (raise it with --cap)");
  }
}

// Depth-first assignment of f(x_pos), rejecting a value as soon as some
// earlier pair fails to shrink.
class ContractionSearch {
 public:
  explicit ContractionSearch(const DistanceMatrix& dm) : dm_(dm), table_(dm.size()) {}

  template <typename Visit>
  void run(std::optional<std::size_t> first, Visit&& visit) {
    if (table_.empty()) return;
    descend(0, first, visit);
  }

 private:
  template <typename Visit>
  void descend(std::size_t pos, std::optional<std::size_t> first, Visit& visit) {
    const std::size_t n = table_.size();
    if (pos == n) {
      visit(table_);
      return;
    }
    const std::size_t lo = (pos == 0 && first) ? *first : 0;
    const std::size_t hi = (pos == 0 && first) ? *first + 1 : n;
    for (std::size_t v = lo; v < hi; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < pos && ok; ++j) ok = dm_.less(table_[j], v, j, pos);
      if (!ok) continue;
      table_[pos] = v;
      descend(pos + 1, first, visit);
    }
  }

  const DistanceMatrix& dm_;
  std::vector<std::size_t> table_;
};

struct ChunkBest {
  std::size_t depth = 0;
  std::optional<std::vector<std::size_t>> table;
  std::uint64_t contractions = 0;
};

ChunkBest search_chunk(const DistanceMatrix& dm, const DigitalImage& img, const EnumerationOptions& options,
                       std::size_t first) {
  ChunkBest best;
  ContractionSearch search(dm);
  search.run(first, [&](const std::vector<std::size_t>& table) {
    const SelfMap f(table);
    if (options.require_continuous && !is_continuous(img, f)) return;
    ++best.contractions;
    const std::size_t depth = collapse_depth(f);
    if (depth > best.depth) {
      best.depth = depth;
      best.table = table;
    }
  });
  return best;
}

}  // namespace

void for_each_self_map(std::size_t n, const std::function<bool(const SelfMap&)>& visit) {
  if (n == 0) return;
  std::vector<std::size_t> table(n, 0);
  while (true) {
    if (!visit(SelfMap(table))) return;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++table[pos] < n) break;
      table[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::uint64_t map_space_size(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  return total;
}

std::vector<SelfMap> enumerate_contractions(const DistanceMatrix& dm, const DigitalImage& img,
                                            const EnumerationOptions& options) {
  check_cap(img.size(), options.cap);
  std::vector<SelfMap> out;
  ContractionSearch search(dm);
  search.run(std::nullopt, [&](const std::vector<std::size_t>& table) {
    SelfMap f(table);
    if (options.require_continuous && !is_continuous(img, f)) return;
    out.push_back(std::move(f));
  });
  return out;
}

std::vector<SelfMap> enumerate_contractions_reference(const DistanceMatrix& dm, const DigitalImage& img,
                                                      const EnumerationOptions& options) {
  check_cap(img.size(), options.cap);
  std::vector<SelfMap> out;
  for_each_self_map(img.size(), [&](const SelfMap& f) {
    if (banach_modulus(dm, f).is_banach && (!options.require_continuous || is_continuous(img, f))) out.push_back(f);
    return true;
  });
  return out;
}

std::size_t collapse_depth(const SelfMap& f) {
  const std::size_t n = f.size();
  if (n <= 64) {
    std::uint64_t current = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::size_t steps = 0;
    while (__builtin_popcountll(current) > 1) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = current; rest; rest &= rest - 1) next |= std::uint64_t{1} << f(__builtin_ctzll(rest));
      if (next == current) return 0;  // never collapses; not a contraction
      current = next;
      ++steps;
    }
    return steps;
  }
  IndexSet current = SelfMap::identity(n).table();
  std::size_t steps = 0;
  while (current.size() > 1) {
    IndexSet next = image_of(f, current);
    if (next == current) return 0;
    current = std::move(next);
    ++steps;
  }
  return steps;
}

ComplexityResult c_sharp(const DistanceMatrix& dm, const DigitalImage& img, const EnumerationOptions& options) {
  check_cap(img.size(), options.cap);
  const std::size_t n = img.size();
  ComplexityResult out;
  out.maps_enumerated = map_space_size(n);
  std::vector<ChunkBest> chunks(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
    chunks[v] = search_chunk(dm, img, options, static_cast<std::size_t>(v));
  }
  for (auto& chunk : chunks) {
    out.contractions += chunk.contractions;
    if (chunk.depth > out.c_sharp) {
      out.c_sharp = chunk.depth;
      out.witness = SelfMap(*chunk.table);
    }
  }
  return out;
}

ComplexityResult c_sharp(const Metric& metric, const DigitalImage& img, const EnumerationOptions& options) {
  check_cap(img.size(), options.cap);
  return c_sharp(DistanceMatrix(metric, img), img, options);
}

ComplexityResult c_sharp_reference(const DistanceMatrix& dm, const DigitalImage& img,
                                   const EnumerationOptions& options) {
  check_cap(img.size(), options.cap);
  ComplexityResult out;
  out.maps_enumerated = map_space_size(img.size());
  for_each_self_map(img.size(), [&](const SelfMap& f) {
    if (!banach_modulus(dm, f).is_banach) return true;
    if (options.require_continuous && !is_continuous(img, f)) return true;
    ++out.contractions;
    // First m with |f^m(X)| = 1, read off the image sequence.
    const auto seq = image_sequence(f);
    std::size_t m = 0;
    while (m < seq.sets.size() && seq.sets[m].size() > 1) ++m;
    if (m > out.c_sharp) {
      out.c_sharp = m;
      out.witness = f;
    }
    return true;
  });
  return out;
}

}  // namespace digifix
