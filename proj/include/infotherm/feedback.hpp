#ifndef INFOTHERM_FEEDBACK_HPP
#define INFOTHERM_FEEDBACK_HPP

#include <Eigen/Dense>

#include "infotherm/common.hpp"
#include "infotherm/prob.hpp"

namespace infotherm {

// Classical non-disturbing measurement: columns are p(m|x) for each x.
// Bayes-consistency (sum_m p_M(m) p(x|m) = p(x)) holds by construction and is
// revalidated property-style in the tests.
class MeasurementModel {
 public:
  explicit MeasurementModel(Eigen::MatrixXd cond_m_given_x);
  static MeasurementModel binary_symmetric(double error);

  std::size_t n_outcomes() const { return static_cast<std::size_t>(cond_.rows()); }
  std::size_t n_states() const { return static_cast<std::size_t>(cond_.cols()); }
  double conditional(std::size_t m, std::size_t x) const { return cond_(m, x); }

  // joint p(x, m) = prior(x) p(m|x), x indexing rows
  JointDist joint(const ProbDist& prior) const;
  double mutual_information(const ProbDist& prior) const;

 private:
  Eigen::MatrixXd cond_;
};

// dF_meas = T I(X:M) >= 0: free energy gained by measuring
double measurement_gain(const ProbDist& rho_x, const MeasurementModel& meas, double temperature);

// least admissible feedback work, dF - kT I(X:M)
double feedback_bound(double delta_f, double i_xm, double temperature);

// Work ledger of one measure/feedback/reset cycle at saturation of every
// sub-process bound; optional non-negative slack models suboptimal strokes.
struct FeedbackLedger {
  double w_meas = 0.0;
  double w_fb = 0.0;
  double w_reset = 0.0;
  double w_tot = 0.0;
  double i_xm = 0.0;      // nats
  double delta_f_y = 0.0; // memory free-energy change on recording
  double delta_f = 0.0;   // system free-energy change over the cycle (0)
};

struct SubprocessSlack {
  double meas = 0.0;
  double fb = 0.0;
  double reset = 0.0;
};

FeedbackLedger szilard_cycle_ledger(const MeasurementModel& meas, double delta_f_y,
                                    double temperature, const ProbDist& prior,
                                    SubprocessSlack slack = {});

// uniform-prior convenience overload (the Szilard engine's 50/50 bit)
FeedbackLedger szilard_cycle_ledger(const MeasurementModel& meas, double delta_f_y,
                                    double temperature);

}  // namespace infotherm

#endif
