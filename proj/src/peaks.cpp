#include "rgap/experiment.hpp"

#include <algorithm>
#include <limits>

namespace rgap {

double PeakReport::worst_match() const {
  double worst = 0.0;
  for (double d : matches) worst = std::max(worst, d);
  return worst;
}

PeakReport find_peaks(const ImagingField& field, int count, double min_sep,
                      std::span<const Vec2> truth) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "find_peaks: count must be >= 1");
  if (!(min_sep > 0.0)) throw Error(ErrorKind::InvalidArgument, "find_peaks: min_sep must be > 0");
  const SamplingGrid& grid = field.grid;
  if (field.values.size() != grid.size()) {
    throw Error(ErrorKind::InvalidArgument, "find_peaks: field size does not match its grid");
  }
  const int n = grid.nodes_per_axis();
  auto flat = [n](int i, int j) { return static_cast<std::size_t>(j) * n + i; };

  std::vector<Peak> candidates;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = flat(i, j);
      if (!grid.inside(k)) continue;
      const double v = field.values[k];
      bool strict = true;
      for (int dj = -1; dj <= 1 && strict; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di;
          const int jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= n || jj >= n) continue;
          const std::size_t kk = flat(ii, jj);
          if (grid.inside(kk) && field.values[kk] >= v) {
            strict = false;
            break;
          }
        }
      }
      if (strict) candidates.push_back({grid.node(i, j), v});
    }
  }
  // Stable order: value descending, then scan order.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Peak& a, const Peak& b) { return a.value > b.value; });

  PeakReport report;
  for (const Peak& c : candidates) {
    if (static_cast<int>(report.peaks.size()) == count) break;
    const bool separated = std::all_of(report.peaks.begin(), report.peaks.end(), [&](const Peak& p) {
      return distance(p.location, c.location) >= min_sep;
    });
    if (separated) report.peaks.push_back(c);
  }
  report.complete = static_cast<int>(report.peaks.size()) == count;
  for (const Vec2& t : truth) {
    double best = std::numeric_limits<double>::infinity();
    for (const Peak& p : report.peaks) best = std::min(best, distance(p.location, t));
    report.matches.push_back(best);
  }
  return report;
}

std::vector<Vec2> centers_of(const Scene& scene) {
  std::vector<Vec2> c;
  for (const Inclusion& inc : scene.inclusions) c.push_back(inc.center);
  return c;
}

}  // namespace rgap
