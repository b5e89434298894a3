#include "semitrans/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "semitrans/orientation.hpp"
#include "semitrans/split_semitrans.hpp"

namespace semitrans {

Method parse_method(std::string_view name) {
  if (name == "recognize") return Method::Recognize;
  if (name == "labeling-oracle") return Method::LabelingOracle;
  if (name == "orientation-oracle") return Method::OrientationOracle;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Recognize: return "recognize";
    case Method::LabelingOracle: return "labeling-oracle";
    case Method::OrientationOracle: return "orientation-oracle";
  }
  return "";
}

std::vector<Method> parse_methods(std::string_view list) {
  std::vector<Method> out;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = list.substr(0, comma);
    if (!item.empty()) out.push_back(parse_method(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("no methods selected");
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  auto idx = static_cast<std::size_t>(std::ceil(q * values.size())) ;
  idx = std::min(values.size() - 1, idx == 0 ? 0 : idx - 1);
  return values[idx];
}

}  // namespace

DiffReport difftest(std::span<const SplitPartition> corpus, const DiffOptions& options) {
  DiffReport report;
  for (std::size_t index = 0; index < corpus.size(); ++index) {
    const SplitPartition& p = corpus[index];
    std::vector<std::pair<Method, bool>> verdicts;
    bool cert_ok = true;
    for (Method m : options.methods) {
      auto start = Clock::now();
      bool yes = false;
      switch (m) {
        case Method::Recognize: {
          auto d = recognize(p, {.build_orientation = true, .verify = false});
          yes = d.semi_transitive();
          if (yes) {
            SplitPartition q = normalize_partition(p);
            cert_ok &= validate_labeling(q, *d.labeling).valid() &&
                       is_semi_transitive_orientation(*d.orientation);
          }
          break;
        }
        case Method::LabelingOracle: {
          auto labeling = enumerate_labelings_oracle(normalize_partition(p),
                                                     options.labeling_max_clique);
          yes = labeling.has_value();
          break;
        }
        case Method::OrientationOracle: {
          auto o = oracle_semi_transitive(p.graph, options.orientation_max_vertices);
          yes = o.has_value();
          if (yes) cert_ok &= is_semi_transitive_orientation(*o);
          break;
        }
      }
      report.seconds[m].push_back(seconds_since(start));
      verdicts.emplace_back(m, yes);
    }
    ++report.instances;
    if (!cert_ok) ++report.certificate_failures;
    bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                             [&](auto& v) { return v.second == verdicts.front().second; });
    if (agree) {
      ++report.agreements;
      if (!verdicts.empty() && verdicts.front().second) ++report.accepted;
    } else {
      report.disagreements.push_back(
          {index, format_graph(p.graph, std::span<const int>(p.clique)), std::move(verdicts)});
    }
  }
  return report;
}

DiffReport difftest(const GenSpec& spec, std::size_t count, const DiffOptions& options) {
  auto corpus = generate(spec, count);
  return difftest(corpus, options);
}

std::string DiffReport::format(bool timings) const {
  std::ostringstream out;
  out << "instances: " << instances << '\n'
      << "agreements: " << agreements << '\n'
      << "accepted: " << accepted << '\n'
      << "disagreements: " << disagreements.size() << '\n'
      << "certificate_failures: " << certificate_failures << '\n';
  for (const auto& d : disagreements) {
    out << "# disagreement at instance " << d.index << ":";
    for (auto [m, yes] : d.verdicts) out << ' ' << method_name(m) << '=' << (yes ? "yes" : "no");
    out << '\n' << d.instance;
  }
  if (timings) {
    out << std::scientific << std::setprecision(3);
    for (const auto& [m, values] : seconds) {
      out << "timing " << method_name(m) << ": p50=" << quantile(values, 0.5)
          << "s p90=" << quantile(values, 0.9) << "s max=" << quantile(values, 1.0) << "s\n";
    }
  }
  return out.str();
}

namespace {

// Solves the normal equations for y ~ X b (columns of X given row-wise).
std::vector<double> least_squares(const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& y) {
  const std::size_t p = rows.front().size();
  std::vector<std::vector<double>> a(p, std::vector<double>(p + 1, 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) a[i][j] += rows[r][i] * rows[r][j];
      a[i][p] += rows[r][i] * y[r];
    }
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < p; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col || a[col][col] == 0) continue;
      double f = a[r][col] / a[col][col];
      for (std::size_t j = col; j <= p; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<double> b(p);
  for (std::size_t i = 0; i < p; ++i) b[i] = a[i][i] == 0 ? 0 : a[i][p] / a[i][i];
  return b;
}

}  // namespace

BenchReport bench(std::span<const int> ks, std::span<const int> ts, int repetitions,
                  std::uint64_t seed) {
  if (ks.empty() || ts.empty() || repetitions < 1) {
    throw std::invalid_argument("bench needs nonempty k and t ranges and reps >= 1");
  }
  BenchReport report;
  for (int k : ks) {
    for (int t : ts) {
      GenSpec spec{.k = k, .t = t, .density = 0.25, .seed = seed, .mode = GenMode::PlantedYes};
      std::vector<double> times;
      for (int rep = 0; rep < repetitions; ++rep) {
        SplitPartition p = generate_one(spec, static_cast<std::uint64_t>(rep));
        auto start = Clock::now();
        auto d = recognize(p, {.build_orientation = false, .verify = false});
        times.push_back(seconds_since(start));
        if (!d.semi_transitive()) throw InternalError("planted-yes instance rejected");
      }
      std::sort(times.begin(), times.end());
      report.cells.push_back({k, t, times[times.size() / 2]});
    }
  }

  const bool vary_k = ks.size() > 1, vary_t = ts.size() > 1;
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  for (const auto& cell : report.cells) {
    std::vector<double> row{1.0};
    if (vary_t) row.push_back(std::log(static_cast<double>(cell.t)));
    if (vary_k) row.push_back(std::log(static_cast<double>(cell.k)));
    rows.push_back(row);
    y.push_back(std::log(std::max(cell.median_seconds, 1e-9)));
  }
  auto b = least_squares(rows, y);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  report.intercept = b[0];
  report.slope_t = vary_t ? b[1] : nan;
  report.slope_k = vary_k ? b[vary_t ? 2 : 1] : nan;

  auto doubling = [&](bool along_t) {
    double log_sum = 0;
    int pairs = 0;
    for (const auto& lo : report.cells) {
      for (const auto& hi : report.cells) {
        const bool match = along_t ? hi.k == lo.k && hi.t == 2 * lo.t
                                   : hi.t == lo.t && hi.k == 2 * lo.k;
        if (!match) continue;
        log_sum += std::log(std::max(hi.median_seconds, 1e-9) / std::max(lo.median_seconds, 1e-9));
        ++pairs;
      }
    }
    return pairs ? std::exp(log_sum / pairs) : nan;
  };
  report.doubling_t = doubling(true);
  report.doubling_k = doubling(false);
  return report;
}

std::string BenchReport::format() const {
  std::ostringstream out;
  out << std::setw(8) << "k" << std::setw(8) << "t" << std::setw(16) << "median_s" << '\n';
  out << std::scientific << std::setprecision(4);
  for (const auto& cell : cells) {
    out << std::setw(8) << cell.k << std::setw(8) << cell.t << std::setw(16)
        << cell.median_seconds << '\n';
  }
  out << std::fixed << std::setprecision(3);
  out << "fit: log T = " << slope_t << " log t + " << slope_k << " log k + " << intercept
      << '\n';
  out << "doubling ratio: t " << doubling_t << ", k " << doubling_k << '\n';
  out << "model t^2 k: expected slope_t 2, slope_k 1, doubling t 4, doubling k 2\n";
  return out.str();
}

}  // namespace semitrans
