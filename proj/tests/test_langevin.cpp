#include <doctest.h>

#include <cmath>

#include "infotherm/parallel.hpp"
#include "infotherm/stats.hpp"
#include "infotherm/stochastic.hpp"

using namespace infotherm;

TEST_CASE("schedule interpolation and jumps") {
  const Schedule s({0.0, 1.0, 1.0, 2.0}, {1.0, 2.0, 5.0, 6.0});
  CHECK(s(0.0) == doctest::Approx(1.0));
  CHECK(s(0.5) == doctest::Approx(1.5));
  CHECK(s(1.0) == doctest::Approx(2.0));  // left value at the jump instant
  CHECK(s(1.0 + 1e-12) == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(s(1.5) == doctest::Approx(5.5));
  CHECK(s(3.0) == doctest::Approx(6.0));
  CHECK_THROWS(Schedule({1.0, 0.0}, {0.0, 1.0}));
}

TEST_CASE("free diffusion follows 2 D t") {
  // zero-stiffness harmonic potential: pure diffusion
  const PotentialSpec pot = HarmonicSpec{Schedule(0.0)};
  LangevinParams p;
  p.dt = 1e-3;
  p.n_steps = 1000;  // t = 1
  p.seed = 2021;
  const long n = 10000;
  std::vector<double> x2(n);
  parallel_for(n, 0, [&](std::size_t i) {
    Rng rng(derive_stream_seed(p.seed, i));
    x2[i] = std::pow(run_path(pot, p, 0.0, rng).x_final, 2);
  });
  const MeanSe m = mean_se(x2);
  CHECK(std::abs(m.mean - 2.0) < 3.0 * m.se);
}

TEST_CASE("static harmonic well equilibrates to kT/k") {
  const double k = 2.0;
  const PotentialSpec pot = HarmonicSpec{Schedule(k)};
  LangevinParams p;
  p.dt = 5e-3;
  p.n_steps = 4000;  // 20 relaxation times of gamma/k
  p.seed = 7;
  const long n = 8000;
  std::vector<double> x2(n);
  parallel_for(n, 0, [&](std::size_t i) {
    Rng rng(derive_stream_seed(p.seed, i));
    x2[i] = std::pow(run_path(pot, p, 0.0, rng).x_final, 2);
  });
  const MeanSe m = mean_se(x2);
  // Euler-Maruyama inflates the variance by ~dt k/2 per unit; stay within 3 sigma + bias allowance
  CHECK(std::abs(m.mean - 1.0 / k) < 3.0 * m.se + 0.01);
}

TEST_CASE("frozen particle stays put") {
  const PotentialSpec pot = HarmonicSpec{Schedule(1.0)};
  LangevinParams p;
  p.kT = 1e-12;
  p.dt = 1e-3;
  p.n_steps = 100;
  Rng rng(1);
  const PathSummary s = run_path(pot, p, 0.8, rng);
  CHECK(s.x_final == doctest::Approx(0.8 * std::exp(-0.1)).epsilon(1e-3));  // drift only
}

TEST_CASE("seed determinism") {
  const PotentialSpec pot = DoubleWellSpec{Schedule(4.0), Schedule(0.3)};
  LangevinParams p;
  p.dt = 5e-4;
  p.n_steps = 4000;
  p.seed = 424242;
  const Trajectory a = simulate(pot, p, 0.5);
  const Trajectory b = simulate(pot, p, 0.5);
  REQUIRE(a.positions.size() == b.positions.size());
  for (std::size_t i = 0; i < a.positions.size(); ++i) CHECK(a.positions[i] == b.positions[i]);
}

TEST_CASE("per-step first law is exact") {
  const PotentialSpec pot = DoubleWellSpec{
      Schedule({0.0, 1.0, 2.0}, {8.0, 2.2, 8.0}), Schedule({0.0, 1.0, 2.0}, {0.0, 1.5, 0.0})};
  LangevinParams p;
  p.dt = 2e-4;
  p.n_steps = 10000;
  p.seed = 5;
  const Trajectory traj = simulate(pot, p, -1.0);
  const double du = potential_value(pot, traj.positions.back(), traj.times.back()) -
                    potential_value(pot, traj.positions.front(), traj.times.front());
  const double w = trajectory_work(traj, pot);
  const double q = trajectory_heat(traj, pot);
  CHECK(std::abs(du - w - q) < 1e-9 * static_cast<double>(p.n_steps) * p.kT);
  // the recomputed sums match the increments recorded during integration
  CHECK(w == doctest::Approx(pairwise_sum(traj.work_increments)).epsilon(1e-12));
  CHECK(q == doctest::Approx(pairwise_sum(traj.heat_increments)).epsilon(1e-12));
  // static protocol does no work
  const PotentialSpec still = HarmonicSpec{Schedule(1.0)};
  LangevinParams ps = p;
  ps.n_steps = 500;
  CHECK(trajectory_work(simulate(still, ps, 0.3), still) == doctest::Approx(0.0));
}

TEST_CASE("instantaneous stiffness quench work") {
  // equilibrium at k1, quench k1 -> k2 at t=0: <W> = (k2-k1) kT / (2 k1)
  const double k1 = 1.0, k2 = 3.0;
  const PotentialSpec pot = HarmonicSpec{Schedule({0.0, 0.0, 1.0}, {k1, k2, k2})};
  LangevinParams p;
  p.dt = 1e-3;
  p.n_steps = 50;
  p.seed = 99;
  const long n = 20000;
  std::vector<double> w(n);
  parallel_for(n, 0, [&](std::size_t i) {
    Rng rng(derive_stream_seed(p.seed, i));
    const double x0 = rng.normal() / std::sqrt(k1);
    w[i] = run_path(pot, p, x0, rng).work;
  });
  const MeanSe m = mean_se(w);
  CHECK(std::abs(m.mean - (k2 - k1) / (2.0 * k1)) < 3.0 * m.se);
}

TEST_CASE("quasistatic ramp approaches the free-energy difference") {
  const double k1 = 1.0, k2 = 4.0, tau = 100.0;
  const PotentialSpec pot = HarmonicSpec{Schedule({0.0, tau}, {k1, k2})};
  LangevinParams p;
  p.dt = 5e-3;
  p.n_steps = static_cast<long>(tau / p.dt);
  p.seed = 11;
  const long n = 3000;
  std::vector<double> w(n);
  parallel_for(n, 0, [&](std::size_t i) {
    Rng rng(derive_stream_seed(p.seed, i));
    const double x0 = rng.normal() / std::sqrt(k1);
    w[i] = run_path(pot, p, x0, rng).work;
  });
  const double df = 0.5 * std::log(k2 / k1);
  const MeanSe m = mean_se(w);
  CHECK(std::abs(m.mean - df) / df < 0.02);
  CHECK(m.mean >= df - 3.0 * m.se);  // never below dF
}

TEST_CASE("divergence guard names the step") {
  const PotentialSpec pot = HarmonicSpec{Schedule(-0.5)};  // inverted well blows up
  LangevinParams p;
  p.dt = 1e-2;
  p.n_steps = 10000;
  p.seed = 3;
  Rng rng(3);
  CHECK_THROWS_AS(run_path(pot, p, 1.0, rng), divergence_error);
}

TEST_CASE("stability heuristic rejects oversized steps") {
  const PotentialSpec pot = DoubleWellSpec{Schedule(8.0), Schedule(0.0)};
  LangevinParams p;
  p.dt = 1e-3;  // dt * 44 * 8 = 0.35 >= 0.1
  p.n_steps = 10;
  Rng rng(1);
  CHECK_THROWS_AS(run_path(pot, p, 0.0, rng), std::domain_error);
}

TEST_CASE("jarzynski: identity protocol") {
  const HarmonicSpec pot{Schedule(2.0)};
  LangevinParams p;
  p.dt = 2e-3;
  p.n_steps = 500;
  p.seed = 21;
  const JarzynskiReport rep = jarzynski_check(pot, p, 4000);
  CHECK(rep.delta_f == doctest::Approx(0.0));
  CHECK(rep.exp_avg == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.rel_deviation < 1e-12);
}

TEST_CASE("jarzynski: slow and fast stiffness ramps") {
  for (double tau : {10.0, 0.1}) {
    const HarmonicSpec pot{Schedule({0.0, tau}, {1.0, 4.0})};
    LangevinParams p;
    p.dt = 1e-3;
    p.n_steps = static_cast<long>(tau / p.dt);
    p.seed = 2718;
    const JarzynskiReport rep = jarzynski_check(pot, p, 20000);
    CHECK(rep.rel_deviation < 0.05);
    CHECK(rep.jensen_ok);
    if (tau < 1.0) CHECK(rep.work.mean - rep.delta_f > 0.1);  // far from equilibrium
  }
}

TEST_CASE("erasure heat bound endpoints") {
  CHECK(erasure_heat_bound(1.0, 1.0) == doctest::Approx(kLn2).epsilon(1e-13));
  CHECK(erasure_heat_bound(0.5, 1.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(erasure_heat_bound(1.0, 2.5) == doctest::Approx(2.5 * kLn2).epsilon(1e-13));
}

TEST_CASE("erasure: no tilt leaves the bit random and nearly reversible") {
  LangevinParams p;
  p.dt = 2e-4;
  p.seed = 1001;
  const ErasureOutcome out = erasure_experiment(4.0, 0.0, p, 1000);
  CHECK(std::abs(out.success_rate - 0.5) < 0.08);
  CHECK(out.q_bound < 0.02);
  CHECK(out.bound_ok);
}

TEST_CASE("erasure: strong tilt erases and respects Q(r)") {
  LangevinParams p;
  p.dt = 2e-4;
  p.seed = 913;
  const ErasureOutcome out = erasure_experiment(8.0, 3.0, p, 1500);
  CHECK(out.success_rate > 0.9);
  CHECK(!out.tilt_ineffective);
  CHECK(out.bound_ok);
  CHECK(out.mean_heat > 0.2);  // genuinely dissipative at this speed
}

TEST_CASE("time-step convergence on the erasure protocol") {
  LangevinParams coarse;
  coarse.dt = 2e-4;
  coarse.seed = 5150;
  LangevinParams fine = coarse;
  fine.dt = 1e-4;
  const ErasureOutcome a = erasure_experiment(5.0, 3.0, coarse, 1500);
  const ErasureOutcome b = erasure_experiment(5.0, 3.0, fine, 1500);
  const double tol = 0.01 * std::max(a.mean_heat, b.mean_heat) + 3.0 * (a.heat_se + b.heat_se);
  CHECK(std::abs(a.mean_heat - b.mean_heat) < tol);
}

TEST_CASE("ensemble exceptions propagate out of the thread pool") {
  const PotentialSpec pot = HarmonicSpec{Schedule(-0.5)};  // diverges
  std::vector<double> sink(64, 0.0);
  auto worker = [&](std::size_t i) {
    LangevinParams p;
    p.dt = 1e-2;
    p.n_steps = 20000;
    Rng rng(derive_stream_seed(3, i));
    sink[i] = run_path(pot, p, 1.0, rng).x_final;
  };
  CHECK_THROWS_AS(parallel_for(sink.size(), 2, worker), divergence_error);
}
