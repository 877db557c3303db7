#include "adaptball/gaussian_model.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace adaptball {

std::uint64_t default_window(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("sample-size-must-be-at-least-2");
  return std::uint64_t(1) << (63 - std::countl_zero(n));
}

Observation sample_observation(const CoeffSeq& f, std::uint64_t n,
                               RngStream rng, std::uint64_t window_override) {
  if (n < 2) throw std::invalid_argument("sample-size-must-be-at-least-2");
  const std::uint64_t window = window_override ? window_override : default_window(n);
  for (std::size_t k = window; k < f.coeffs.size(); ++k)
    if (f.coeffs[k] != 0.0)
      throw std::invalid_argument("truth-exceeds-observation-window");
  Philox gen(rng);
  const double sd = 1.0 / std::sqrt(double(n));
  std::vector<double> y(window);
  for (std::uint64_t k = 0; k < window; ++k)
    y[k] = f.at(k + 1) + sd * gen.normal();
  return Observation{CoeffSeq(std::move(y)), n};
}

SplitSample split_sample(const Observation& y, RngStream rng) {
  Philox gen(rng);
  const double sd = 1.0 / std::sqrt(double(y.n));
  const std::size_t N = y.y.size();
  std::vector<double> yp(N), yd(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double w = sd * gen.normal();
    yp[k] = y.y.coeffs[k] + w;
    yd[k] = 2.0 * y.y.coeffs[k] - yp[k];  // exact midpoint reconstruction
  }
  return SplitSample{CoeffSeq(std::move(yp)), CoeffSeq(std::move(yd)), y.n};
}

double log_likelihood_ratio(const CoeffSeq& f, const Observation& y) {
  if (!f.finite_support || f.coeffs.size() > y.y.size())
    throw std::invalid_argument("llr-truth-support-exceeds-observation");
  KahanSum dot, norm;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    dot.add(f.coeffs[i] * y.y.coeffs[i]);
    norm.add(f.coeffs[i] * f.coeffs[i]);
  }
  const double n = double(y.n);
  return n * dot.value() - 0.5 * n * norm.value();
}

}  // namespace adaptball
