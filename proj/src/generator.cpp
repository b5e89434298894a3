#include "semitrans/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "semitrans/split_semitrans.hpp"

namespace semitrans {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (index * 0xd1b54a32d192ed03ULL));
  mix.next();
  return mix.next();
}

GenMode parse_gen_mode(std::string_view name) {
  if (name == "random") return GenMode::Random;
  if (name == "exhaustive") return GenMode::Exhaustive;
  if (name == "planted-yes") return GenMode::PlantedYes;
  if (name == "planted-no") return GenMode::PlantedNo;
  throw std::invalid_argument("unknown generator mode '" + std::string(name) + "'");
}

const char* gen_mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::Random: return "random";
    case GenMode::Exhaustive: return "exhaustive";
    case GenMode::PlantedYes: return "planted-yes";
    case GenMode::PlantedNo: return "planted-no";
  }
  return "";
}

void validate(const GenSpec& spec) {
  if (spec.k < 0 || spec.t < 0) throw std::invalid_argument("k and t must be nonnegative");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  if (spec.mode == GenMode::Exhaustive && (spec.k > 5 || spec.t > 4)) {
    throw std::invalid_argument("exhaustive mode is limited to k <= 5, t <= 4");
  }
  if (spec.mode == GenMode::PlantedNo && (spec.k < 4 || spec.t < 3)) {
    throw std::invalid_argument("planted-no needs k >= 4 and t >= 3");
  }
}

namespace {

// Clique vertices take ids 1..k in `clique_ids` order of positions; I
// vertices take k+1..k+t. `hoods` holds clique positions (0-based).
SplitPartition assemble(int k, const std::vector<std::vector<int>>& hoods,
                        const std::vector<int>& clique_ids) {
  const int t = static_cast<int>(hoods.size());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * (k - 1) / 2 + static_cast<std::size_t>(t) * k / 2);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
  }
  for (int v = 0; v < t; ++v) {
    for (int pos : hoods[v]) edges.emplace_back(clique_ids[pos], k + 1 + v);
  }
  SplitPartition p;
  p.graph = Graph(k + t, edges);
  p.clique.resize(k);
  std::iota(p.clique.begin(), p.clique.end(), 1);
  p.independent.resize(t);
  std::iota(p.independent.begin(), p.independent.end(), k + 1);
  return normalize_partition(std::move(p));
}

std::vector<int> identity_ids(int k) {
  std::vector<int> ids(k);
  std::iota(ids.begin(), ids.end(), 1);
  return ids;
}

SplitPartition random_instance(const GenSpec& spec, SplitMix64& rng) {
  std::vector<std::vector<int>> hoods(spec.t);
  for (auto& hood : hoods) {
    for (int pos = 0; pos < spec.k; ++pos) {
      if (rng.bernoulli(spec.density)) hood.push_back(pos);
    }
  }
  return assemble(spec.k, hoods, identity_ids(spec.k));
}

// Neighborhoods that satisfy the labeling conditions for the identity
// order of positions, then a random relabeling of the clique.
SplitPartition planted_yes(const GenSpec& spec, SplitMix64& rng) {
  const int k = spec.k;
  std::vector<std::vector<int>> hoods(spec.t);
  // Wrapped sets [1,a] u [b,k] use a < split < b so every pair is compatible.
  const bool can_wrap = k >= 3;
  const int split = can_wrap ? 2 + static_cast<int>(rng.below(k - 2)) : 0;  // 1-based, in [2, k-1]
  std::vector<std::pair<int, int>> wrapped;
  std::vector<char> is_wrapped(spec.t, 0);
  for (int v = 0; v < spec.t; ++v) {
    if (can_wrap && rng.bernoulli(0.3)) {
      int a = 1 + static_cast<int>(rng.below(split - 1));
      int b = split + 1 + static_cast<int>(rng.below(k - split));
      wrapped.emplace_back(a, b);
      is_wrapped[v] = 1;
      for (int pos = 1; pos <= a; ++pos) hoods[v].push_back(pos - 1);
      for (int pos = b; pos <= k; ++pos) hoods[v].push_back(pos - 1);
    }
  }
  const int max_len = std::max(1, static_cast<int>(std::lround(2.0 * spec.density * k)));
  for (int v = 0; v < spec.t; ++v) {
    if (is_wrapped[v] || k == 0) continue;
    if (rng.bernoulli(0.05)) continue;  // empty neighborhood
    int a = 0, b = 0;
    bool placed = false;
    for (int attempt = 0; attempt < 50 && !placed; ++attempt) {
      a = 1 + static_cast<int>(rng.below(k));
      b = std::min(k, a + static_cast<int>(rng.below(max_len)));
      if (a == 1 && b == k) continue;
      placed = std::none_of(wrapped.begin(), wrapped.end(),
                            [&](auto w) { return a <= w.first && b >= w.second; });
    }
    if (!placed) {
      if (k == 1) continue;  // [1,1] would be the whole clique
      b = a;
    }
    for (int pos = a; pos <= b; ++pos) hoods[v].push_back(pos - 1);
  }
  std::vector<int> ids = identity_ids(k);
  rng.shuffle(std::span<int>(ids));
  return assemble(k, hoods, ids);
}

SplitPartition planted_no(const GenSpec& spec, SplitMix64& rng) {
  const int k = spec.k;
  const auto kind = static_cast<ForbiddenCase>(rng.below(3));
  auto types = forbidden_types(kind);
  std::vector<std::vector<int>> hoods(spec.t);
  for (int pos = 0; pos < 4; ++pos) {
    for (int j = 0; j < 3; ++j) {
      if (types[pos] & (1u << j)) hoods[j].push_back(pos);
    }
  }
  for (int pos = 4; pos < k; ++pos) {
    for (int j = 0; j < 3; ++j) {
      if (rng.bernoulli(spec.density)) hoods[j].push_back(pos);
    }
  }
  for (int v = 3; v < spec.t; ++v) {
    for (int pos = 0; pos < k; ++pos) {
      if (rng.bernoulli(spec.density)) hoods[v].push_back(pos);
    }
  }
  for (auto& hood : hoods) std::sort(hood.begin(), hood.end());
  std::vector<int> ids = identity_ids(k);
  rng.shuffle(std::span<int>(ids));
  return assemble(k, hoods, ids);
}

void exhaustive(const GenSpec& spec, std::vector<SplitPartition>& out) {
  for (int t = 0; t <= spec.t; ++t) {
    const unsigned type_count = 1u << t;
    for (int k = 1; k <= spec.k && k <= static_cast<int>(type_count); ++k) {
      // Combinations of k distinct types in lexicographic order.
      std::vector<unsigned> pick(k);
      std::iota(pick.begin(), pick.end(), 0u);
      for (;;) {
        out.push_back(partition_from_types(pick, t));
        int i = k - 1;
        while (i >= 0 && pick[i] == type_count - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
}

}  // namespace

SplitPartition partition_from_types(std::span<const unsigned> types, int t) {
  const int k = static_cast<int>(types.size());
  std::vector<std::vector<int>> hoods(t);
  for (int pos = 0; pos < k; ++pos) {
    for (int j = 0; j < t; ++j) {
      if (types[pos] & (1u << j)) hoods[j].push_back(pos);
    }
  }
  return assemble(k, hoods, identity_ids(k));
}

SplitPartition generate_one(const GenSpec& spec, std::uint64_t index) {
  validate(spec);
  SplitMix64 rng(stream_seed(spec.seed, index));
  switch (spec.mode) {
    case GenMode::Random: return random_instance(spec, rng);
    case GenMode::PlantedYes: return planted_yes(spec, rng);
    case GenMode::PlantedNo: return planted_no(spec, rng);
    case GenMode::Exhaustive: break;
  }
  throw std::invalid_argument("exhaustive mode has no indexed stream");
}

std::vector<SplitPartition> generate(const GenSpec& spec, std::size_t count) {
  validate(spec);
  std::vector<SplitPartition> out;
  if (spec.mode == GenMode::Exhaustive) {
    exhaustive(spec, out);
    return out;
  }
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate_one(spec, i));
  return out;
}

}  // namespace semitrans
