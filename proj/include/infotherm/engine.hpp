#ifndef INFOTHERM_ENGINE_HPP
#define INFOTHERM_ENGINE_HPP

#include "infotherm/common.hpp"

namespace infotherm {

// Steady-state two-bath engine bookkeeping.  Sign convention: heat rates are
// the Q-dot entering the entropy balance Sigma-dot = Qh/Th + Qc/Tc (heat into
// the system from the hot bath shows up as negative q_dot_hot).
struct EnginePoint {
  double efficiency = 0.0;        // eta = 1 + Qc/Qh
  double entropy_rate = 0.0;      // Sigma-dot = Qh/Th + Qc/Tc
  double carnot = 0.0;            // 1 - Tc/Th
  bool second_law_violated = false;  // Sigma-dot < -1e-12
};

EnginePoint engine_efficiency(double q_dot_hot, double q_dot_cold, double t_hot, double t_cold);

}  // namespace infotherm

#endif
