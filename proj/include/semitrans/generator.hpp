#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semitrans/graph.hpp"

namespace semitrans {

/// SplitMix64 (Steele, Lea, Flood 2014). Every draw is defined bit-for-bit,
/// so corpora reproduce across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Seed of the independent stream for instance `index`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

enum class GenMode { Random, Exhaustive, PlantedYes, PlantedNo };

GenMode parse_gen_mode(std::string_view name);
const char* gen_mode_name(GenMode mode);

struct GenSpec {
  int k = 4;              // clique size (upper bound in exhaustive mode)
  int t = 3;              // independent-set size (upper bound in exhaustive mode)
  double density = 0.5;   // adjacency probability between I and C
  std::uint64_t seed = 1;
  GenMode mode = GenMode::Random;
};

/// Throws std::invalid_argument for an unusable spec.
void validate(const GenSpec& spec);

/// Instance `index` of a random, planted-yes or planted-no stream.
SplitPartition generate_one(const GenSpec& spec, std::uint64_t index);

/// First `count` instances of the stream. Exhaustive mode ignores `count`
/// and returns every subset-type profile with 1..k clique types over
/// 0..t independent vertices.
std::vector<SplitPartition> generate(const GenSpec& spec, std::size_t count);

/// One clique vertex per distinct type; types are bitmasks over the t
/// independent vertices. Clique is 1..|types|, I follows in order.
SplitPartition partition_from_types(std::span<const unsigned> types, int t);

}  // namespace semitrans
