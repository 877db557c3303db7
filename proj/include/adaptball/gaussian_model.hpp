#pragma once

#include <cstdint>

#include "adaptball/coeff_seq.hpp"
#include "adaptball/rng.hpp"

namespace adaptball {

// Observation in the Gaussian sequence model: y_k = f_k + g_k / sqrt(n) for
// k = 1..N_obs with independent standard normal g_k. n plays the role of an
// inverse noise-variance scale ("sample size").
struct Observation {
  CoeffSeq y;
  std::uint64_t n = 2;
};

// The two half-samples produced by noise-doubling sample splitting. Each half
// carries noise of variance 2/n per coordinate and the halves are independent
// given the truth; their average reconstructs the original observation.
struct SplitSample {
  CoeffSeq yprime;
  CoeffSeq ydouble;
  std::uint64_t n = 2;
};

// Default observation window 2^{floor(log2 n)}.
std::uint64_t default_window(std::uint64_t n);

// Draws y_k = f_k + g_k/sqrt(n), k = 1..N_obs. A nonzero window override
// widens (or narrows) the stored window, e.g. for adversarial truths whose
// support exceeds n. The truth must vanish beyond the window except for a
// declared tail.
Observation sample_observation(const CoeffSeq& f, std::uint64_t n,
                               RngStream rng, std::uint64_t window_override = 0);

// Splits y into y' = y + w and y'' = 2y - y' with w ~ N(0, 1/n) iid, so each
// half has per-coordinate noise variance 2/n and the halves are independent.
SplitSample split_sample(const Observation& y, RngStream rng);

// log dP_f/dP_0 evaluated at y: n * sum_k f_k y_k - (n/2) * ||f||_2^2.
double log_likelihood_ratio(const CoeffSeq& f, const Observation& y);

}  // namespace adaptball
