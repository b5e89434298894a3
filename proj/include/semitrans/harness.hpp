#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semitrans/generator.hpp"
#include "semitrans/graph.hpp"

namespace semitrans {

enum class Method { Recognize, LabelingOracle, OrientationOracle };

Method parse_method(std::string_view name);
const char* method_name(Method m);
/// Comma-separated list, e.g. "recognize,labeling-oracle".
std::vector<Method> parse_methods(std::string_view list);

struct DiffOptions {
  std::vector<Method> methods{Method::Recognize, Method::LabelingOracle,
                              Method::OrientationOracle};
  int labeling_max_clique = 8;
  int orientation_max_vertices = 12;
};

struct Disagreement {
  std::uint64_t index = 0;
  std::string instance;  // graph file text with the clique pinned
  std::vector<std::pair<Method, bool>> verdicts;
};

struct DiffReport {
  std::uint64_t instances = 0;
  std::uint64_t agreements = 0;
  std::uint64_t accepted = 0;  // instances every method called semi-transitive
  std::uint64_t certificate_failures = 0;
  std::vector<Disagreement> disagreements;
  std::map<Method, std::vector<double>> seconds;  // per-instance timings

  bool ok() const { return disagreements.empty() && certificate_failures == 0; }
  /// Deterministic unless `timings` is set.
  std::string format(bool timings = false) const;
};

/// Runs every selected method on each instance and compares verdicts.
/// Semi-transitive answers also have their certificates re-checked.
DiffReport difftest(std::span<const SplitPartition> corpus, const DiffOptions& options = {});
DiffReport difftest(const GenSpec& spec, std::size_t count, const DiffOptions& options = {});

struct BenchCell {
  int k = 0;
  int t = 0;
  double median_seconds = 0;
};

struct BenchReport {
  std::vector<BenchCell> cells;
  /// Least-squares fit of log(time) = slope_t log t + slope_k log k + c.
  /// A slope is NaN when its range has a single value.
  double slope_t = 0;
  double slope_k = 0;
  double intercept = 0;
  /// Geometric mean of T(2x) / T(x) over grid pairs that differ by exactly a
  /// doubling in one coordinate; NaN when the grid has no such pair.
  double doubling_t = 0;
  double doubling_k = 0;

  std::string format() const;
};

/// Median wall time of recognize (without building the explicit
/// orientation) on planted-yes instances over the k x t grid.
BenchReport bench(std::span<const int> ks, std::span<const int> ts, int repetitions,
                  std::uint64_t seed = 1);

}  // namespace semitrans
