#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adaptball/coeff_seq.hpp"

namespace adaptball {

// Parameters of a self-similar class: sequences with Sobolev s-norm in [b, B]
// whose energy in every dyadic window [2^{J(1-eps)}, 2^J], J >= J0, is at
// least c * ||f||_{s,2}^2 * 2^{-2Js}. The block constant c defaults to
// 16 * 2^{2s+1}; c_override (> 0) replaces it, which only rescales the class.
struct SelfSimParams {
  double s = 1.0;
  double eps = 0.5;
  double b = 1.0;
  double B = 2.0;
  int J0 = 1;
  double c_override = 0.0;  // 0 => use c_of_s(s)

  void validate() const;
  double block_constant() const;
};

struct MembershipReport {
  bool is_member = false;
  double norm_sq = 0.0;        // ||f||_{s,2}^2
  std::vector<int> failures;   // scales J where the block inequality fails
  int J_checked = 0;           // largest scale verified
  bool norm_in_range = false;

  std::string to_json() const;
};

// The default block constant 16 * 2^{2s+1}.
double c_of_s(double s);

// Verifies the norm interval and the block inequality for every integer
// J in [J0, floor(log2 support) - 1]. The condition quantifies over all
// J >= J0; only the stored support can be checked, so the report carries
// J_checked.
MembershipReport check_membership(const CoeffSeq& f, const SelfSimParams& p);

// The ratio-window variant: sum_{k=2^J/rho}^{2^J} f_k^2 >= eta B^2 2^{-2Js}
// for all J in [J0, J_checked], plus ||f||_{s,2} <= B.
MembershipReport check_bayes_selfsim(const CoeffSeq& f, double s, double B,
                                     double eta, double rho, int J0);

// True iff eps(s) * (2s + 1/2) / s <= m at every tabulated grid point.
bool validate_eps(const std::map<double, double>& eps_by_s, double m,
                  double s_min, double s_max);

// Dyadic-profile generator: amplitude * 2^{-(s+1/2)l} on every coordinate of
// the lower half-block {2^l, ..., 2^l + 2^{l-1} - 1} (block l = 0 is {1}),
// zero elsewhere, for l = 0..levels. Output length 2^{levels+1} - 1.
CoeffSeq make_dyadic_selfsim(double s, int levels, double amplitude);

// Class parameters certified by the dyadic construction itself: b slightly
// below the achieved norm, B above it, and the block constant set to the
// smallest verified window ratio over [J0, J_checked] (with a 5% safety
// factor). The caller re-verifies via check_membership.
SelfSimParams implied_selfsim_params(const CoeffSeq& f, double class_s,
                                     double eps, int J0);

}  // namespace adaptball
