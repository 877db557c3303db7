#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adaptball/coeff_seq.hpp"
#include "adaptball/rng.hpp"
#include "adaptball/selfsim.hpp"

namespace adaptball {

// Inclusive index range [lo, hi].
struct IndexRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t count() const { return hi - lo + 1; }
};

// Splits the dyadic block {2^i, ..., 2^{i+1}-1} into its lower and upper
// half: Z_i^0 = {2^i, ..., 2^i + 2^{i-1} - 1}, Z_i^1 = the rest.
std::pair<IndexRange, IndexRange> block_partition(int i);

// Largest c with e^{c^2/2} = 1 + delta^2 (equality case of the calibration).
double calibrate_c(double delta);

// Parameters of the two-class indistinguishability construction. Orderings:
// 0 < r < r' < r/(1-eps), s in (r', r/(1-eps)), s' > s, r > s'(1-eps),
// delta in (0, 0.2], e^{c^2/2} <= 1 + delta^2.
struct AdversaryConfig {
  double r = 1.2;
  double r_prime = 1.25;
  double s = 2.0;
  double s_prime = 2.5;
  double eps = 0.7;
  double delta = 0.2;
  double c = 0.0;  // 0 => calibrate_c(delta)

  void validate() const;
  double c_value() const;
};

// Desk-scale guards: perturbation levels and codebook/family sizes beyond
// this are refused with a clear error.
constexpr int kMaxPerturbationLevel = 12;
constexpr std::uint64_t kMaxFamilySize = 1 << 12;

// Builds the adversarial sequence f_m: profile 2^{-(s'+1/2)l} on every lower
// half-block Z_l^0 (l = 0 meaning coordinate 1), sign perturbations
// 2^{-(r'+1/2) j_i} beta_i on the upper half-blocks Z_{j_i}^1 for i < m, zero
// elsewhere. Stored support runs through level support_levels (defaults to
// max(j_seq) + 1). Consecutive j's must grow by the factor 1 + 1/(2 r').
CoeffSeq build_adversary_sequence(const AdversaryConfig& cfg, std::size_t m,
                                  const std::vector<int>& j_seq,
                                  const std::vector<std::vector<int>>& betas,
                                  int support_levels = 0);

// The limit sequence: the finite prefix of f_m plus the exact analytic tail
// mass sum_{i>m} 2^{-2 r' j_i}/2 of the continued schedule, stored in
// tail_norm_sq. j_seq here is the full (extended) schedule; m marks the last
// realized perturbation block.
CoeffSeq build_limit_sequence(const AdversaryConfig& cfg, std::size_t m,
                              const std::vector<int>& j_seq,
                              const std::vector<std::vector<int>>& betas,
                              int support_levels = 0);

// Extends a schedule by j_{i+1} = ceil(j_i (1 + 1/(2 r'))) until the tail
// mass beyond the last element falls below rel_tol of the first block.
std::vector<int> extend_schedule(const AdversaryConfig& cfg,
                                 std::vector<int> j_seq, double rel_tol = 1e-18);

// Sample size n_m = round(c * 2^{j_m (2 r' + 1/2)}), floored at 2.
std::uint64_t sample_size_schedule(const AdversaryConfig& cfg, int j_m);

// Second moment of the equal-weight sign-mixture likelihood ratio:
// cosh(c 2^{-j/2})^{2^{j-1}}, evaluated in log space.
double chi_sq_divergence_mixture(double c, int j);

// KL divergence between the sequence-model laws at f and g: (n/2) ||f-g||^2.
double kl_divergence(const CoeffSeq& f, const CoeffSeq& g, std::uint64_t n);

// Mixture likelihood-ratio statistic for one draw: the equal-weight mixture
// over all sign vectors on a block factorizes as
//   Z = prod_k e^{-gamma/2} cosh(sqrt(n gamma) y_k),  gamma = c 2^{-j/2}.
// y_block holds the observed coordinates of Z_j^1 in order.
double mixture_lr(double c, int j, std::uint64_t n,
                  const std::vector<double>& y_block);

struct Codebook {
  std::vector<std::vector<std::uint8_t>> words;  // binary, common length
  int min_distance = 0;
  bool shortfall = false;  // true if the retry budget ran out early
};

// Randomized greedy codebook construction: sample words, keep those at
// Hamming distance >= min_dist from everything kept so far, stop at
// target_size or after a 10^6-candidate budget. The distance invariant holds
// unconditionally; only the size can fall short (flagged).
Codebook varshamov_gilbert(int block_len, int min_dist,
                           std::uint64_t target_size, RngStream rng);

int hamming_distance(const std::vector<std::uint8_t>& a,
                     const std::vector<std::uint8_t>& b);

// Well-separated family configuration: base profile K1 2^{-(r+1/2)l} on the
// lower half-blocks (l >= 1), perturbations delta beta 2^{-(s+1/2)j} with
// binary beta on Z_j^1. Requires s < r < s/(1-eps) and
// delta^2 < (B^2 - b^2) 2^{1-2s}.
struct MinimaxConfig {
  double s = 1.0;
  double r = 1.4;
  double eps = 0.7;
  double b = 1.0;
  double B = 2.0;
  int j = 6;
  double delta = 0.08;
  int support_levels = 0;  // 0 => j + 2

  void validate() const;
};

struct MinimaxFamily {
  CoeffSeq f0;
  std::vector<CoeffSeq> members;
  Codebook codebook;
  double K1 = 0.0;          // profile amplitude solving ||f0||_{s,2} = b
  double min_sep_sq = 0.0;  // guaranteed pairwise separation (delta^2/16) 2^{-2js}
  std::uint64_t n = 0;      // calibrated sample size 2^{j (2s+1)}
};

// Builds f0 and the codebook-indexed family. Every kept codeword also has
// Hamming weight >= min_dist, so members stay separated from f0 as well.
MinimaxFamily minimax_family(const MinimaxConfig& cfg, RngStream rng);

// Risk lower bound over an (M+1)-point family that is 2 r_n separated with
// average KL at most alpha_kl * log(max(e, M)):
//   r_n * sqrt(Mbar)/(1 + sqrt(Mbar)) * (1 - 2 alpha_kl - sqrt(2 alpha_kl / log Mbar)).
// Natural logarithms; the value may be nonpositive (vacuous) and is
// returned as-is.
double fano_lower_bound(std::uint64_t M, double alpha_kl, double r_n);

}  // namespace adaptball
