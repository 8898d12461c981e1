#include "infotherm/engine.hpp"

#include <cmath>

namespace infotherm {

EnginePoint engine_efficiency(double q_dot_hot, double q_dot_cold, double t_hot, double t_cold) {
  if (!(t_hot > t_cold && t_cold > 0.0))
    throw std::domain_error("engine_efficiency: need T_hot > T_cold > 0");
  if (q_dot_hot == 0.0)
    throw std::domain_error("engine_efficiency: hot heat rate must be nonzero");
  EnginePoint p;
  p.carnot = 1.0 - t_cold / t_hot;
  p.efficiency = 1.0 + q_dot_cold / q_dot_hot;
  p.entropy_rate = q_dot_hot / t_hot + q_dot_cold / t_cold;
  p.second_law_violated = p.entropy_rate < -1e-12;
  return p;
}

}  // namespace infotherm
