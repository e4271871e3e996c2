#pragma once

#include <Eigen/Core>
#include <vector>

#include "pldiv/persistence.hpp"

namespace pldiv {

struct LandscapePoint {
  double t = 0.0;
  double value = 0.0;
};

// Nonnegative piecewise-linear function with compact support, stored as
// breakpoints with strictly increasing abscissae. The value is 0 outside
// [front.t, back.t]; an empty breakpoint list is the zero function.
class PiecewiseLinearFn {
 public:
  PiecewiseLinearFn() = default;
  explicit PiecewiseLinearFn(std::vector<LandscapePoint> breakpoints);

  double operator()(double t) const;
  // Exact area under the function (sum of segment areas).
  double integral() const;
  bool is_zero() const { return breakpoints_.empty(); }
  const std::vector<LandscapePoint>& breakpoints() const { return breakpoints_; }

 private:
  std::vector<LandscapePoint> breakpoints_;
};

// The sequence of k-th largest envelopes of the tent family of a
// diagram. Only nonzero levels are stored, so levels().size() <= m.
class PersistenceLandscape {
 public:
  PersistenceLandscape() = default;
  PersistenceLandscape(std::vector<PiecewiseLinearFn> levels, std::size_t source_pairs)
      : levels_(std::move(levels)), source_pairs_(source_pairs) {}

  const std::vector<PiecewiseLinearFn>& levels() const { return levels_; }
  std::size_t source_pairs() const { return source_pairs_; }

 private:
  std::vector<PiecewiseLinearFn> levels_;
  std::size_t source_pairs_ = 0;
};

// Triangle function of one pair: 0 at b and d, peak (d-b)/2 at the
// midpoint. A zero-lifetime pair yields the zero function.
PiecewiseLinearFn tent(const PersistencePair& pair);

// Exact landscape by the sweep of Bubenik & Dlotko ("A persistence
// landscapes toolbox", 2017). All tent slopes are +-1, so every envelope
// breakpoint is a midpoint average of birth/death values and no general
// line intersections are needed.
PersistenceLandscape build_landscape(const PersistenceDiagram& diagram);

// Total area across levels.
double integrate_landscape(const PersistenceLandscape& landscape);

// Closed form of the same quantity: 1/4 * sum of squared lifetimes.
// This is the production path; landscapes are only materialized on
// request.
double pldiv_closed_form(const PersistenceDiagram& diagram);

// Convenience composition: dense H0 diagram -> closed form.
double pldiv_dense(const DistanceMatrix& dist);

// Levels x steps matrix of landscape values on a uniform grid over
// [t_min, t_max].
Eigen::MatrixXd sample_landscape(const PersistenceLandscape& landscape, double t_min,
                                 double t_max, int steps);

}  // namespace pldiv
