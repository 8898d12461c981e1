#ifndef INFOTHERM_PROB_HPP
#define INFOTHERM_PROB_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "infotherm/common.hpp"

namespace infotherm {

// Discrete probability distribution.  Immutable after construction; the
// constructor enforces non-negativity and normalisation (1e-12).
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> weights);
  static ProbDist uniform(std::size_t n);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  std::span<const double> weights() const { return w_; }

 private:
  std::vector<double> w_;
};

// Joint distribution p(x, y), x indexing rows.  Marginals are row/column sums.
class JointDist {
 public:
  explicit JointDist(Eigen::MatrixXd table);

  // builds p(x,y) = prior(x) * conditional(y|x); conditional rows indexed by x
  static JointDist from_conditional(const ProbDist& prior, const Eigen::MatrixXd& cond_y_given_x);

  std::size_t nx() const { return static_cast<std::size_t>(t_.rows()); }
  std::size_t ny() const { return static_cast<std::size_t>(t_.cols()); }
  double operator()(std::size_t x, std::size_t y) const { return t_(x, y); }
  const Eigen::MatrixXd& table() const { return t_; }

  ProbDist marginal_x() const;
  ProbDist marginal_y() const;

 private:
  Eigen::MatrixXd t_;
};

// -ln p in nats; the k in -k ln p is fixed to 1 (use nats_to_bits for bits).
double information_content(double p);

double shannon_entropy(const ProbDist& p);
double joint_entropy(const JointDist& p);

// S(X|Y) = -sum p(x,y) ln p(x|y)
double conditional_entropy(const JointDist& p);

// I(X:Y) = sum p(x,y) ln[p(x,y)/(p(x)p(y))]
double mutual_information_classical(const JointDist& p);

// two-input binary symmetric channel on a given prior; the workhorse of the
// measurement models
JointDist binary_symmetric_joint(double error, const ProbDist& prior);

// ln 2 - H(e), the BSC mutual information on a uniform binary input
double bsc_mutual_information(double error);

}  // namespace infotherm

#endif
