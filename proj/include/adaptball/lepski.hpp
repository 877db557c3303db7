#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adaptball/coeff_seq.hpp"

namespace adaptball {

// Grid and under-smoothing parameters. The two constraint chains are
//   m < (2 s_min + 1/2) / (s_min + (s_min + 1/2)/kappa1) < 1,
//   0 < (1 + kappa1) / (2 kappa2) < kappa2 < 1,
// i.e. kappa2^2 > (1 + kappa1)/2.
struct LepskiConfig {
  double s_min = 1.0;
  double s_max = 2.5;
  double s_prime = 3.0;  // grid parameter, > s_max
  double m = 0.9;
  double kappa1 = 0.85;
  double kappa2 = 0.98;
};

// Returns the violated constraints (empty means the config is valid).
std::vector<std::string> validate_config(const LepskiConfig& cfg);

// Fills s_prime/kappa1/kappa2 (and m unless pinned) from the selection rule:
// s' = s_max + 1/2; m the midpoint of (eps_max (2 s_min + 1/2)/s_min, 1);
// kappa1 the smallest value satisfying the first chain with 5% headroom
// slack; kappa2 the midpoint of (sqrt((1 + kappa1)/2), 1).
LepskiConfig default_config(double s_min, double s_max, double eps_max,
                            double m_pinned = 0.0);

// All integer resolution levels j with
// ceil(log2 n / (2 s' + 1)) <= j <= floor(log2 n).
std::vector<int> resolution_grid(std::uint64_t n, double s_prime);

// Projection of the first half-sample onto the first 2^j coordinates.
CoeffSeq linear_estimator(const CoeffSeq& yprime, int j);

// Minimal j in the grid such that for every finer level l in the grid
// ||fhat(j) - fhat(l)||_2^2 <= 4 * 2^{l+1} / n. The maximal grid element
// satisfies the condition vacuously.
int lepski_level(const CoeffSeq& yprime, std::uint64_t n,
                 const std::vector<int>& grid);

struct OracleLevel {
  int j = 0;
  bool attained = false;  // false if no grid level satisfies the bound
};

// Minimal grid j with ||f||_{s,2}^2 2^{-2js} <= 2^{j+1}/n (bias-variance
// balance against the Sobolev envelope).
OracleLevel oracle_level(const CoeffSeq& f, double s, std::uint64_t n,
                         const std::vector<int>& grid);

struct SmoothnessEstimates {
  double bar_s = 0.0;  // log2(n)/(2 jhat) - 1/2
  double hat_s = 0.0;  // bar_s / (2 kappa2)
};

SmoothnessEstimates smoothness_estimates(int jhat, std::uint64_t n,
                                         double kappa2);

// The under-smoothed level: 1/J_n = (1/(2 kappa2)) / jhat
//                                  - ((1 - kappa2)/(2 kappa2)) / log2 n,
// with Jhat = ceil(J_n). Satisfies 2^{J_n} = n^{1/(2 hat_s + 1/2)} exactly.
struct LevelSelection {
  int jhat = 0;
  double Jn_real = 0.0;
  int Jhat = 0;
  double bar_s = 0.0;
  double hat_s = 0.0;
};

LevelSelection undersmoothed_level(int jhat, std::uint64_t n, double kappa2);

}  // namespace adaptball
