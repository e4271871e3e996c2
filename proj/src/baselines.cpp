#include "pldiv/baselines.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace pldiv {

DiversityValue vendi_score(const SimilarityMatrix& k) {
  const Eigen::Index n = k.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(k.values() / static_cast<double>(n), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigendecomposition of the similarity matrix failed");
  }

  Eigen::VectorXd lambda = solver.eigenvalues();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lambda[i] < -1e-8) {
      throw NumericError("similarity matrix is not PSD (eigenvalue " +
                         std::to_string(lambda[i]) + ")");
    }
    if (lambda[i] < 1e-12) lambda[i] = 0.0;
    sum += lambda[i];
  }
  if (!(sum > 0.0)) {
    throw NumericError("similarity spectrum vanished after clamping");
  }
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = lambda[i] / sum;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return {"vendi", std::exp(entropy), k.params()};
}

DiversityValue dcscore(const SimilarityMatrix& k, double tau) {
  if (!(tau > 0.0)) {
    throw ParameterError("softmax temperature tau must be > 0");
  }
  const Eigen::MatrixXd& m = k.values();
  const Eigen::Index n = k.size();
  double trace = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double rowmax = m.row(i).maxCoeff();
    double denom = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      denom += std::exp((m(i, j) - rowmax) / tau);
    }
    trace += std::exp((m(i, i) - rowmax) / tau) / denom;
  }
  auto params = k.params();
  params["tau"] = tau;
  return {"dcscore", trace, params};
}

namespace {

// Hager-Higham 1-norm estimate of ||Z^-1||; Z is symmetric so solves with
// Z and Z^T coincide.
double inverse_one_norm_estimate(const Eigen::LDLT<Eigen::MatrixXd>& ldlt,
                                 Eigen::Index n) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    Eigen::VectorXd y = ldlt.solve(x);
    est = y.lpNorm<1>();
    Eigen::VectorXd xi(n);
    for (Eigen::Index i = 0; i < n; ++i) xi[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    Eigen::VectorXd z = ldlt.solve(xi);
    Eigen::Index j;
    const double zmax = z.cwiseAbs().maxCoeff(&j);
    if (zmax <= z.dot(x)) break;
    x.setZero();
    x[j] = 1.0;
  }
  return est;
}

}  // namespace

double magnitude_at(const DistanceMatrix& dist, double t) {
  if (!(t > 0.0)) {
    throw ParameterError("magnitude scale t must be > 0");
  }
  const Eigen::Index n = dist.size();
  Eigen::MatrixXd z = (-t * dist.values()).array().exp();
  Eigen::LDLT<Eigen::MatrixXd> ldlt(z);
  if (ldlt.info() != Eigen::Success) {
    throw NumericError("similarity kernel exp(-t d) could not be factorized; try a larger t");
  }
  const double z_norm = z.cwiseAbs().colwise().sum().maxCoeff();
  const double cond = z_norm * inverse_one_norm_estimate(ldlt, n);
  if (!std::isfinite(cond) || cond > 1e12) {
    throw NumericError("magnitude system is ill-conditioned at t = " + std::to_string(t) +
                       " (cond ~ " + std::to_string(cond) + "); try a larger t");
  }
  const Eigen::VectorXd w = ldlt.solve(Eigen::VectorXd::Ones(n));
  return w.sum();
}

namespace {

constexpr int kMaxDoublings = 60;

[[noreturn]] void convergence_failure() {
  throw NumericError("magnitude function did not reach 0.95 * n within " +
                     std::to_string(kMaxDoublings) +
                     " doublings (duplicate-heavy input?)");
}

}  // namespace

double magnitude_convergence_scale(const DistanceMatrix& dist, double t0) {
  if (!(t0 > 0.0)) {
    throw ParameterError("magnitude grid start t0 must be > 0");
  }
  const double target = 0.95 * static_cast<double>(dist.size());
  double upper = 2.0 * t0;
  for (int window = 0; window < kMaxDoublings; ++window, upper *= 2.0) {
    if (magnitude_at(dist, upper) >= target) return upper;
  }
  convergence_failure();
}

MagnitudeCurve magnitude_curve(const DistanceMatrix& dist, double t0, int n_grid,
                               double t_cut) {
  if (!(t0 > 0.0)) {
    throw ParameterError("magnitude grid start t0 must be > 0");
  }
  if (n_grid < 8) {
    throw ParameterError("magnitude grid needs at least 8 points per window");
  }
  if (t_cut != 0.0 && !(t_cut > t0)) {
    throw ParameterError("explicit t_cut must exceed t0");
  }
  const double target = 0.95 * static_cast<double>(dist.size());

  MagnitudeCurve curve;
  double lower = t0;
  bool first_window = true;
  for (int window = 0;; ++window) {
    if (window >= kMaxDoublings) convergence_failure();
    const double upper = 2.0 * lower;
    const double log_lo = std::log(lower);
    const double log_hi = std::log(upper);
    for (int i = first_window ? 0 : 1; i < n_grid; ++i) {
      const double s = static_cast<double>(i) / (n_grid - 1);
      const double t = i == n_grid - 1 ? upper : std::exp(log_lo + s * (log_hi - log_lo));
      curve.scales.push_back(t);
      curve.values.push_back(magnitude_at(dist, t));
    }
    first_window = false;
    const bool done = t_cut > 0.0 ? upper >= t_cut : curve.values.back() >= target;
    if (done) {
      curve.t_cut = upper;
      break;
    }
    lower = upper;
  }

  double area = 0.0;
  for (std::size_t i = 1; i < curve.scales.size(); ++i) {
    area += 0.5 * (curve.scales[i] - curve.scales[i - 1]) *
            (curve.values[i] + curve.values[i - 1]);
  }
  curve.area = area;
  return curve;
}

DiversityValue magarea(const DistanceMatrix& dist, double t0, int n_grid, double t_cut) {
  const MagnitudeCurve curve = magnitude_curve(dist, t0, n_grid, t_cut);
  return {"magarea",
          curve.area,
          {{"t0", t0}, {"t_cut", curve.t_cut}, {"n_grid", static_cast<double>(n_grid)}}};
}

}  // namespace pldiv
