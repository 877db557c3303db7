#pragma once

#include <cstdint>
#include <utility>

namespace adaptball {

// Query for the chi-square concentration bound: X = sum_{i<=n_terms}
// (g_i^2 - sigma_sq) with g_i iid N(0, sigma_sq).
struct TailBoundQuery {
  std::uint64_t n_terms = 1;
  double sigma_sq = 1.0;
  double t = 0.0;
};

// P(X > t) and P(-X > t) are both bounded by
//   exp{ -(t^2 / sigma^4) / (4 (n + t / sigma^2)) }.
double chisq_tail_bound(const TailBoundQuery& q);

// Two-sided Mill-ratio bound for a centered Gaussian with standard
// deviation sigma: P(|Z| >= t) <= (2 sigma / (sqrt(2 pi) t)) e^{-t^2/(2 sigma^2)}.
double gaussian_tail_bound(double sigma, double t);

// Probability envelopes for the Lepski level estimate at oracle level j*:
//   first:  C e^{-2^{j*}/8} with C = 2/(1 - e^{-1/8})^2  (level too high),
//   second: j* e^{-(9/8) 2^{j*}}                          (level too low).
std::pair<double, double> lemma1_envelopes(int j_star);

}  // namespace adaptball
