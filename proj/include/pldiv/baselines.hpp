#pragma once

#include <map>
#include <string>
#include <vector>

#include "pldiv/distance.hpp"

namespace pldiv {

// A named metric result with the parameters that produced it.
struct DiversityValue {
  std::string metric;
  double value = 0.0;
  std::map<std::string, double> params;
};

// Sampled magnitude function Mag_X(t) together with the convergence scale
// actually used for the area.
struct MagnitudeCurve {
  std::vector<double> scales;
  std::vector<double> values;
  double t_cut = 0.0;
  double area = 0.0;
};

// Vendi Score: exponential Shannon entropy of the spectrum of K/n.
// Eigenvalues below 1e-12 are clamped to zero and the spectrum is
// renormalized before the entropy; an eigenvalue below -1e-8 is treated
// as a non-PSD input and rejected.
DiversityValue vendi_score(const SimilarityMatrix& k);

// DCScore: trace of the row-wise softmax of K/tau (rows stabilized by
// subtracting their maximum). Lies in [1, n] for unit-diagonal K.
DiversityValue dcscore(const SimilarityMatrix& k, double tau = 1.0);

// Magnitude of the metric space at scale t: solve Z w = 1 with
// Z_ij = exp(-t d_ij) and return the sum of weights. Rejects solves with
// an estimated 1-norm condition number beyond 1e12.
double magnitude_at(const DistanceMatrix& dist, double t);

// Magnitude function on a log-spaced grid starting at t0 (n_grid points
// per doubling window). With t_cut = 0 the upper end doubles until the
// magnitude at a window end reaches 0.95 * n, which defines t_cut; the
// area is the trapezoid integral over [t0, t_cut]. Fails after 60
// doublings. A positive t_cut fixes the integration end instead: areas
// of different datasets are only comparable over a shared scale
// interval, so comparative studies pass the family's largest
// convergence scale here.
MagnitudeCurve magnitude_curve(const DistanceMatrix& dist, double t0 = 0.01,
                               int n_grid = 64, double t_cut = 0.0);

// Convergence scale alone: the first doubling-window end with
// Mag >= 0.95 * n. One magnitude solve per window.
double magnitude_convergence_scale(const DistanceMatrix& dist, double t0 = 0.01);

// Area under the magnitude function as a DiversityValue (records t0 and
// t_cut in the params).
DiversityValue magarea(const DistanceMatrix& dist, double t0 = 0.01, int n_grid = 64,
                       double t_cut = 0.0);

}  // namespace pldiv
