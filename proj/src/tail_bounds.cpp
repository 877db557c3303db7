#include "adaptball/tail_bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adaptball {

double chisq_tail_bound(const TailBoundQuery& q) {
  if (q.n_terms < 1) throw std::invalid_argument("tail-bound-requires-n>=1");
  if (!(q.sigma_sq > 0.0))
    throw std::invalid_argument("tail-bound-requires-sigma_sq>0");
  if (!(q.t >= 0.0)) throw std::invalid_argument("tail-bound-requires-t>=0");
  const double u = q.t / q.sigma_sq;
  return std::exp(-(u * u) / (4.0 * (double(q.n_terms) + u)));
}

double gaussian_tail_bound(double sigma, double t) {
  if (!(sigma > 0.0) || !(t > 0.0))
    throw std::invalid_argument("gaussian-tail-requires-positive-sigma-and-t");
  const double z = t / sigma;
  return (2.0 / (std::sqrt(2.0 * std::numbers::pi) * z)) *
         std::exp(-0.5 * z * z);
}

std::pair<double, double> lemma1_envelopes(int j_star) {
  if (j_star < 1) throw std::invalid_argument("oracle-level-must-be-at-least-1");
  const double C = 2.0 / std::pow(1.0 - std::exp(-0.125), 2.0);
  const double p = std::exp2(double(j_star));
  return {C * std::exp(-p / 8.0), double(j_star) * std::exp(-1.125 * p)};
}

}  // namespace adaptball
