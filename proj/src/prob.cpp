#include "infotherm/prob.hpp"

#include <cmath>

namespace infotherm {

namespace {
constexpr double kNormTol = 1e-12;
}

ProbDist::ProbDist(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("ProbDist: empty weight vector");
  double sum = 0.0;
  for (double w : w_) {
    if (!(w >= 0.0)) throw std::invalid_argument("ProbDist: negative or NaN weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kNormTol)
    throw std::invalid_argument("ProbDist: weights sum to " + std::to_string(sum) + ", not 1");
}

ProbDist ProbDist::uniform(std::size_t n) {
  return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

JointDist::JointDist(Eigen::MatrixXd table) : t_(std::move(table)) {
  if (t_.rows() == 0 || t_.cols() == 0) throw std::invalid_argument("JointDist: empty table");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < t_.rows(); ++i)
    for (Eigen::Index j = 0; j < t_.cols(); ++j) {
      if (!(t_(i, j) >= 0.0)) throw std::invalid_argument("JointDist: negative entry");
      sum += t_(i, j);
    }
  if (std::abs(sum - 1.0) > kNormTol)
    throw std::invalid_argument("JointDist: entries sum to " + std::to_string(sum) + ", not 1");
}

JointDist JointDist::from_conditional(const ProbDist& prior, const Eigen::MatrixXd& cond) {
  if (static_cast<std::size_t>(cond.rows()) != prior.size())
    throw std::invalid_argument("JointDist: conditional rows must match prior size");
  Eigen::MatrixXd t = cond;
  for (Eigen::Index x = 0; x < t.rows(); ++x) t.row(x) *= prior[static_cast<std::size_t>(x)];
  return JointDist(t);
}

ProbDist JointDist::marginal_x() const {
  std::vector<double> m(nx());
  for (std::size_t x = 0; x < nx(); ++x) m[x] = t_.row(static_cast<Eigen::Index>(x)).sum();
  return ProbDist(std::move(m));
}

ProbDist JointDist::marginal_y() const {
  std::vector<double> m(ny());
  for (std::size_t y = 0; y < ny(); ++y) m[y] = t_.col(static_cast<Eigen::Index>(y)).sum();
  return ProbDist(std::move(m));
}

double information_content(double p) {
  if (!(p > 0.0) || p > 1.0)
    throw std::domain_error("information_content: p must lie in (0, 1]");
  return -std::log(p);
}

double shannon_entropy(const ProbDist& p) {
  double s = 0.0;
  for (double w : p.weights()) s -= xlnx(w);
  return s;
}

double joint_entropy(const JointDist& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.table().rows(); ++i)
    for (Eigen::Index j = 0; j < p.table().cols(); ++j) s -= xlnx(p.table()(i, j));
  return s;
}

double conditional_entropy(const JointDist& p) {
  // S(X|Y) = S(X,Y) - S(Y); evaluated directly on p(x|y) for per-term clarity
  const ProbDist py = p.marginal_y();
  double s = 0.0;
  for (std::size_t y = 0; y < p.ny(); ++y) {
    if (py[y] < 1e-14) continue;
    for (std::size_t x = 0; x < p.nx(); ++x) {
      const double pxy = p(x, y);
      if (pxy < 1e-14) continue;
      s -= pxy * std::log(pxy / py[y]);
    }
  }
  return s;
}

double mutual_information_classical(const JointDist& p) {
  const ProbDist px = p.marginal_x();
  const ProbDist py = p.marginal_y();
  double s = 0.0;
  for (std::size_t x = 0; x < p.nx(); ++x)
    for (std::size_t y = 0; y < p.ny(); ++y) {
      const double pxy = p(x, y);
      if (pxy < 1e-14) continue;
      s += pxy * std::log(pxy / (px[x] * py[y]));
    }
  return s;
}

JointDist binary_symmetric_joint(double error, const ProbDist& prior) {
  if (prior.size() != 2) throw std::invalid_argument("binary_symmetric_joint: prior must be binary");
  if (error < 0.0 || error > 1.0) throw std::domain_error("binary_symmetric_joint: error outside [0,1]");
  Eigen::MatrixXd cond(2, 2);
  cond << 1.0 - error, error, error, 1.0 - error;
  return JointDist::from_conditional(prior, cond);
}

double bsc_mutual_information(double error) {
  return mutual_information_classical(binary_symmetric_joint(error, ProbDist::uniform(2)));
}

}  // namespace infotherm
