// Binomial summaries for Monte Carlo estimates: plain standard error plus the
// Wilson score interval at 99% used by every ExperimentReport.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace caromlab {

// Two-sided 99% normal quantile.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

struct BinomialSummary {
  long trials = 0;
  long successes = 0;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

inline BinomialSummary summarize_binomial(long successes, long trials,
                                          double z = kWilsonZ99) {
  if (trials < 1) throw std::invalid_argument("summarize_binomial: trials < 1");
  if (successes < 0 || successes > trials) {
    throw std::invalid_argument("summarize_binomial: successes out of range");
  }
  BinomialSummary s;
  s.trials = trials;
  s.successes = successes;
  double n = static_cast<double>(trials);
  double p = static_cast<double>(successes) / n;
  s.estimate = p;
  s.stderr_ = std::sqrt(p * (1.0 - p) / n);
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  s.ci_low = center - half;
  s.ci_high = center + half;
  if (s.ci_low < 0.0) s.ci_low = 0.0;
  if (s.ci_high > 1.0) s.ci_high = 1.0;
  return s;
}

}  // namespace caromlab
