#include "adaptball/confidence_ball.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "adaptball/rng.hpp"

namespace adaptball {

std::string ConfidenceBall::to_json(const std::string& center_file) const {
  nlohmann::ordered_json j;
  j["center_file"] = center_file;
  j["sq_radius_raw"] = sq_radius_raw;
  j["Jhat"] = Jhat;
  j["n"] = n;
  j["alpha"] = alpha;
  return j.dump();
}

double normal_quantile(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("quantile-requires-alpha-in-(0,1)");
  return inverse_normal_cdf(1.0 - alpha);
}

std::pair<CoeffSeq, int> adaptive_estimator(const CoeffSeq& yprime,
                                            std::uint64_t n,
                                            const LepskiConfig& cfg) {
  const auto violations = validate_config(cfg);
  if (!violations.empty())
    throw std::invalid_argument("invalid lepski config: " + violations.front());
  const auto grid = resolution_grid(n, cfg.s_prime);
  const int jhat = lepski_level(yprime, n, grid);
  return {project(yprime, jhat), jhat};
}

double risk_estimate(const CoeffSeq& ydouble, const CoeffSeq& fhat, int Jhat,
                     std::uint64_t n) {
  if (Jhat < 0 || std::exp2(double(Jhat)) > double(ydouble.size()))
    throw std::invalid_argument("risk-window-exceeds-observation");
  const std::uint64_t top = std::uint64_t(1) << Jhat;
  KahanSum acc;
  for (std::uint64_t k = 1; k <= top; ++k) {
    const double d = ydouble.coeffs[k - 1] - fhat.at(k);
    acc.add(d * d);
  }
  return acc.value() - std::exp2(double(Jhat + 1)) / double(n);
}

ConfidenceBall confidence_ball(const SplitSample& split, double alpha,
                               const LepskiConfig& cfg) {
  auto [fhat, jhat] = adaptive_estimator(split.yprime, split.n, cfg);
  const auto sel = undersmoothed_level(jhat, split.n, cfg.kappa2);
  const double u = risk_estimate(split.ydouble, fhat, sel.Jhat, split.n);
  // sqrt(8) is the standard deviation of (g'')^2 - 2 under split noise.
  const double margin = std::sqrt(8.0) * normal_quantile(alpha) *
                        std::exp2(0.5 * sel.Jhat) / double(split.n);
  ConfidenceBall ball;
  ball.center = std::move(fhat);
  ball.sq_radius_raw = u + margin;
  ball.Jhat = sel.Jhat;
  ball.n = split.n;
  ball.alpha = alpha;
  return ball;
}

bool contains(const ConfidenceBall& ball, const CoeffSeq& f) {
  return l2_dist_sq(f, ball.center) <= ball.sq_radius_raw;
}

double diameter(const ConfidenceBall& ball) {
  return 2.0 * std::sqrt(std::max(ball.sq_radius_raw, 0.0));
}

}  // namespace adaptball
