#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace adaptball {

// A real coefficient sequence (f_k)_{k>=1} with finitely many stored entries.
// Indexing is 1-based to match the usual sequence-space convention; stored
// entry k lives at coeffs[k-1]. Mass beyond the stored support is either
// exactly zero (finite_support == true) or declared analytically through
// tail_norm_sq, the exact value of sum_{k>N} f_k^2.
struct CoeffSeq {
  std::vector<double> coeffs;
  double tail_norm_sq = 0.0;
  bool finite_support = true;

  CoeffSeq() = default;
  explicit CoeffSeq(std::vector<double> c);
  CoeffSeq(std::vector<double> c, double tail_sq);

  std::size_t size() const { return coeffs.size(); }

  // f_k for any k >= 1; zero beyond the stored support.
  double at(std::uint64_t k) const {
    return (k >= 1 && k <= coeffs.size()) ? coeffs[k - 1] : 0.0;
  }
};

// Compensated (Kahan) accumulator. Norm sums run over up to 2^20 dyadically
// decaying terms, where naive summation loses several digits.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// sum_k f_k^2 over the stored support plus the declared tail mass.
double l2_norm_sq(const CoeffSeq& f);

// sum_k f_k^2 k^{2s}. Refused for sequences with an unstored tail: the
// Sobolev mass of the tail is not computable from its l2 mass alone.
double sobolev_norm_sq(const CoeffSeq& f, double s);

// Projection onto the first 2^j coordinates.
CoeffSeq project(const CoeffSeq& f, int j);

// sum_{k=ceil(a)}^{floor(b)} f_k^2. Real endpoints follow the ceil/floor
// summation convention used throughout the block computations.
double block_energy(const CoeffSeq& f, double a, double b);

// sum_k (f_k - g_k)^2 including tail contributions where well defined.
double l2_dist_sq(const CoeffSeq& f, const CoeffSeq& g);

// Plain text sequence file: one coefficient per line, optional leading
// header line "tail_norm_sq=<float>".
CoeffSeq load_sequence(const std::string& path);
void save_sequence(const CoeffSeq& f, const std::string& path);

}  // namespace adaptball
