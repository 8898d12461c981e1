#include "infotherm/feedback.hpp"

#include <cmath>

namespace infotherm {

MeasurementModel::MeasurementModel(Eigen::MatrixXd cond) : cond_(std::move(cond)) {
  if (cond_.rows() == 0 || cond_.cols() == 0)
    throw std::invalid_argument("MeasurementModel: empty conditional");
  for (Eigen::Index x = 0; x < cond_.cols(); ++x) {
    double col = 0.0;
    for (Eigen::Index m = 0; m < cond_.rows(); ++m) {
      if (!(cond_(m, x) >= 0.0)) throw std::invalid_argument("MeasurementModel: negative entry");
      col += cond_(m, x);
    }
    if (std::abs(col - 1.0) > 1e-12)
      throw std::invalid_argument("MeasurementModel: column " + std::to_string(x) +
                                  " does not sum to 1");
  }
}

MeasurementModel MeasurementModel::binary_symmetric(double error) {
  if (error < 0.0 || error > 1.0)
    throw std::domain_error("MeasurementModel: error rate outside [0,1]");
  Eigen::MatrixXd c(2, 2);
  c << 1.0 - error, error, error, 1.0 - error;
  return MeasurementModel(std::move(c));
}

JointDist MeasurementModel::joint(const ProbDist& prior) const {
  if (prior.size() != n_states())
    throw std::invalid_argument("MeasurementModel: prior size mismatch");
  return JointDist::from_conditional(prior, cond_.transpose());
}

double MeasurementModel::mutual_information(const ProbDist& prior) const {
  return mutual_information_classical(joint(prior));
}

double measurement_gain(const ProbDist& rho_x, const MeasurementModel& meas, double temperature) {
  if (!(temperature > 0.0)) throw std::domain_error("measurement_gain: temperature must be > 0");
  return temperature * meas.mutual_information(rho_x);
}

double feedback_bound(double delta_f, double i_xm, double temperature) {
  if (!(temperature > 0.0)) throw std::domain_error("feedback_bound: temperature must be > 0");
  if (i_xm < 0.0) throw std::domain_error("feedback_bound: mutual information must be >= 0");
  return delta_f - temperature * i_xm;
}

FeedbackLedger szilard_cycle_ledger(const MeasurementModel& meas, double delta_f_y,
                                    double temperature, const ProbDist& prior,
                                    SubprocessSlack slack) {
  if (slack.meas < 0.0 || slack.fb < 0.0 || slack.reset < 0.0)
    throw std::domain_error("szilard_cycle_ledger: slack terms must be >= 0");
  FeedbackLedger led;
  led.i_xm = meas.mutual_information(prior);
  led.delta_f_y = delta_f_y;
  led.delta_f = 0.0;  // cyclic: system returns to its initial state
  led.w_meas = delta_f_y + temperature * led.i_xm + slack.meas;
  led.w_fb = -temperature * led.i_xm + slack.fb;
  led.w_reset = -delta_f_y + slack.reset;
  led.w_tot = led.w_meas + led.w_fb + led.w_reset;
  return led;
}

FeedbackLedger szilard_cycle_ledger(const MeasurementModel& meas, double delta_f_y,
                                    double temperature) {
  return szilard_cycle_ledger(meas, delta_f_y, temperature,
                              ProbDist::uniform(meas.n_states()), {});
}

}  // namespace infotherm
