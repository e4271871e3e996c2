#include "pldiv/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <list>

namespace pldiv {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<LandscapePoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) return;
  if (breakpoints_.size() < 2) {
    throw InputError("piecewise-linear function needs at least two breakpoints");
  }
  if (breakpoints_.front().value != 0.0 || breakpoints_.back().value != 0.0) {
    throw InputError("piecewise-linear function must start and end at value 0");
  }
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (!std::isfinite(breakpoints_[k].t) || breakpoints_[k].value < 0.0) {
      throw InputError("piecewise-linear breakpoints must be finite with value >= 0");
    }
    if (k > 0 && breakpoints_[k].t <= breakpoints_[k - 1].t) {
      throw InputError("piecewise-linear abscissae must be strictly increasing");
    }
  }
}

double PiecewiseLinearFn::operator()(double t) const {
  if (breakpoints_.empty()) return 0.0;
  if (t <= breakpoints_.front().t || t >= breakpoints_.back().t) {
    if (t == breakpoints_.front().t) return breakpoints_.front().value;
    if (t == breakpoints_.back().t) return breakpoints_.back().value;
    return 0.0;
  }
  auto it = std::upper_bound(
      breakpoints_.begin(), breakpoints_.end(), t,
      [](double lhs, const LandscapePoint& p) { return lhs < p.t; });
  const LandscapePoint& hi = *it;
  const LandscapePoint& lo = *(it - 1);
  const double s = (t - lo.t) / (hi.t - lo.t);
  return lo.value + s * (hi.value - lo.value);
}

double PiecewiseLinearFn::integral() const {
  double area = 0.0;
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    const auto& a = breakpoints_[k - 1];
    const auto& b = breakpoints_[k];
    area += 0.5 * (b.t - a.t) * (a.value + b.value);
  }
  return area;
}

PiecewiseLinearFn tent(const PersistencePair& pair) {
  if (pair.death <= pair.birth) return PiecewiseLinearFn{};
  const double mid = 0.5 * (pair.birth + pair.death);
  const double peak = 0.5 * (pair.death - pair.birth);
  return PiecewiseLinearFn({{pair.birth, 0.0}, {mid, peak}, {pair.death, 0.0}});
}

PersistenceLandscape build_landscape(const PersistenceDiagram& diagram) {
  // Zero-lifetime pairs contribute nothing to any level.
  std::list<PersistencePair> pending;
  for (const auto& p : diagram.pairs()) {
    if (p.death > p.birth) pending.push_back(p);
  }
  pending.sort([](const PersistencePair& a, const PersistencePair& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death > b.death;
  });

  std::vector<PiecewiseLinearFn> levels;
  while (!pending.empty()) {
    PersistencePair cur = pending.front();
    pending.pop_front();

    std::vector<LandscapePoint> pts;
    pts.push_back({cur.birth, 0.0});
    pts.push_back({0.5 * (cur.birth + cur.death), 0.5 * (cur.death - cur.birth)});

    auto scan = pending.begin();
    for (;;) {
      // Next pair that outlives the current one; pairs passed over are
      // dominated here and feed the lower levels.
      while (scan != pending.end() && scan->death <= cur.death) ++scan;
      if (scan == pending.end()) {
        pts.push_back({cur.death, 0.0});
        break;
      }
      const PersistencePair nxt = *scan;
      scan = pending.erase(scan);

      if (nxt.birth > cur.death) {
        // Disjoint supports: the level touches zero in between.
        pts.push_back({cur.death, 0.0});
        pts.push_back({nxt.birth, 0.0});
      } else {
        // Crossing of the current down-slope with the next up-slope.
        pts.push_back({0.5 * (nxt.birth + cur.death), 0.5 * (cur.death - nxt.birth)});
        // The clipped remainder belongs to a lower level; reinsert it at
        // its sorted position at or after the scan point.
        if (cur.death > nxt.birth) {
          PersistencePair leftover{nxt.birth, cur.death};
          auto pos = scan;
          while (pos != pending.end() && pos->birth == leftover.birth &&
                 pos->death > leftover.death) {
            ++pos;
          }
          pending.insert(pos, leftover);
        }
      }
      pts.push_back({0.5 * (nxt.birth + nxt.death), 0.5 * (nxt.death - nxt.birth)});
      cur = nxt;
    }
    levels.emplace_back(std::move(pts));
  }
  return PersistenceLandscape(std::move(levels), diagram.size());
}

double integrate_landscape(const PersistenceLandscape& landscape) {
  double total = 0.0;
  for (const auto& level : landscape.levels()) total += level.integral();
  return total;
}

double pldiv_closed_form(const PersistenceDiagram& diagram) {
  double sum = 0.0;
  for (const auto& p : diagram.pairs()) {
    const double life = p.death - p.birth;
    sum += life * life;
  }
  return 0.25 * sum;
}

double pldiv_dense(const DistanceMatrix& dist) {
  return pldiv_closed_form(h0_dense(dist));
}

Eigen::MatrixXd sample_landscape(const PersistenceLandscape& landscape, double t_min,
                                 double t_max, int steps) {
  if (!(t_min < t_max)) {
    throw ParameterError("sample range requires t_min < t_max");
  }
  if (steps < 2) {
    throw ParameterError("sample grid needs at least 2 steps");
  }
  const auto& levels = landscape.levels();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(levels.size()), steps);
  const double dt = (t_max - t_min) / (steps - 1);
  for (Eigen::Index k = 0; k < out.rows(); ++k) {
    for (int s = 0; s < steps; ++s) {
      out(k, s) = levels[static_cast<std::size_t>(k)](t_min + dt * s);
    }
  }
  return out;
}

}  // namespace pldiv
