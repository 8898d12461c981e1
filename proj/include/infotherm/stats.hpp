#ifndef INFOTHERM_STATS_HPP
#define INFOTHERM_STATS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace infotherm {

// Pairwise (cascade) summation: result independent of how an ensemble was
// chunked across threads, error O(log n) ulps.
inline double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
  std::size_t n = 0;
};

inline MeanSe mean_se(std::span<const double> xs) {
  MeanSe r;
  r.n = xs.size();
  if (r.n == 0) return r;
  r.mean = pairwise_sum(xs) / static_cast<double>(r.n);
  if (r.n < 2) return r;
  std::vector<double> sq(r.n);
  for (std::size_t i = 0; i < r.n; ++i) {
    const double d = xs[i] - r.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(r.n - 1);
  r.se = std::sqrt(var / static_cast<double>(r.n));
  return r;
}

// Delete-one-block jackknife error of the sample mean.  Used for integral
// fluctuation-theorem estimators where samples span many orders of magnitude.
inline double jackknife_se(std::span<const double> xs, std::size_t blocks = 50) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  if (blocks > n) blocks = n;
  const double total = pairwise_sum(xs);
  std::vector<double> theta(blocks);
  double theta_bar = 0.0;
  std::size_t start = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t len = n / blocks + (b < n % blocks ? 1 : 0);
    const double block_sum = pairwise_sum(xs.subspan(start, len));
    theta[b] = (total - block_sum) / static_cast<double>(n - len);
    theta_bar += theta[b];
    start += len;
  }
  theta_bar /= static_cast<double>(blocks);
  double ss = 0.0;
  for (double t : theta) ss += (t - theta_bar) * (t - theta_bar);
  const double nb = static_cast<double>(blocks);
  return std::sqrt((nb - 1.0) / nb * ss);
}

// Least squares y = a + b*x; returns {a, b}.
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
};

inline LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  LinearFit f;
  const std::size_t n = x.size();
  if (n < 2) return f;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double dn = static_cast<double>(n);
  const double det = dn * sxx - sx * sx;
  f.slope = (dn * sxy - sx * sy) / det;
  f.intercept = (sy * sxx - sx * sxy) / det;
  return f;
}

}  // namespace infotherm

#endif
