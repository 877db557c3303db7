#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "adaptball/coeff_seq.hpp"
#include "adaptball/gaussian_model.hpp"
#include "adaptball/lepski.hpp"

namespace adaptball {

// L2 confidence ball around the adaptive estimator. sq_radius_raw may be
// negative (empty ball); membership uses the raw value, the reported
// diameter clamps at zero.
struct ConfidenceBall {
  CoeffSeq center;
  double sq_radius_raw = 0.0;
  int Jhat = 0;
  std::uint64_t n = 2;
  double alpha = 0.05;

  std::string to_json(const std::string& center_file) const;
};

// 1 - alpha quantile of the standard normal.
double normal_quantile(double alpha);

// Projection estimator at the Lepski level of the first half-sample.
std::pair<CoeffSeq, int> adaptive_estimator(const CoeffSeq& yprime,
                                            std::uint64_t n,
                                            const LepskiConfig& cfg);

// sum_{k <= 2^Jhat} (y''_k - fhat_k)^2 - 2^{Jhat+1}/n. Conditionally on the
// first half-sample this is unbiased for ||K_Jhat (f - fhat)||_2^2.
double risk_estimate(const CoeffSeq& ydouble, const CoeffSeq& fhat, int Jhat,
                     std::uint64_t n);

// Full construction: Lepski level on y', under-smoothed level Jhat, risk
// estimate on y'', and squared radius
//   U + sqrt(8) * gamma_alpha * 2^{Jhat/2} / n.
ConfidenceBall confidence_ball(const SplitSample& split, double alpha,
                               const LepskiConfig& cfg);

// Boundary-inclusive membership against the raw squared radius.
bool contains(const ConfidenceBall& ball, const CoeffSeq& f);

// 2 * sqrt(max(sq_radius_raw, 0)).
double diameter(const ConfidenceBall& ball);

}  // namespace adaptball
