#include "adaptball/lepski.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace adaptball {

namespace {

double first_chain_bound(double s_min, double kappa1) {
  return (2.0 * s_min + 0.5) / (s_min + (s_min + 0.5) / kappa1);
}

}  // namespace

std::vector<std::string> validate_config(const LepskiConfig& cfg) {
  std::vector<std::string> v;
  auto fail = [&](const std::string& msg) { v.push_back(msg); };
  if (!(cfg.s_min > 0.0 && cfg.s_min < cfg.s_max))
    fail("requires 0 < s_min < s_max");
  if (!(cfg.s_prime > cfg.s_max)) fail("requires s_prime > s_max");
  if (!(cfg.m > 0.0 && cfg.m < 1.0)) fail("requires m in (0,1)");
  if (!(cfg.kappa1 > 0.0 && cfg.kappa1 < 1.0)) fail("requires kappa1 in (0,1)");
  if (!(cfg.kappa2 > 0.0 && cfg.kappa2 < 1.0)) fail("requires kappa2 in (0,1)");
  if (!v.empty()) return v;
  const double bound = first_chain_bound(cfg.s_min, cfg.kappa1);
  if (!(cfg.m < bound)) {
    std::ostringstream os;
    os << "first chain violated: m = " << cfg.m << " >= " << bound
       << " = (2 s_min + 1/2)/(s_min + (s_min + 1/2)/kappa1)";
    fail(os.str());
  }
  if (!(bound < 1.0)) fail("first chain violated: bound >= 1");
  const double mid = (1.0 + cfg.kappa1) / (2.0 * cfg.kappa2);
  if (!(mid > 0.0 && mid < cfg.kappa2)) {
    std::ostringstream os;
    os << "second chain violated: (1 + kappa1)/(2 kappa2) = " << mid
       << " not in (0, kappa2 = " << cfg.kappa2 << ")";
    fail(os.str());
  }
  return v;
}

LepskiConfig default_config(double s_min, double s_max, double eps_max,
                            double m_pinned) {
  if (!(0.0 < s_min && s_min < s_max))
    throw std::invalid_argument("requires 0 < s_min < s_max");
  LepskiConfig cfg;
  cfg.s_min = s_min;
  cfg.s_max = s_max;
  cfg.s_prime = s_max + 0.5;
  const double eps_floor = eps_max * (2.0 * s_min + 0.5) / s_min;
  if (!(eps_floor < 1.0))
    throw std::invalid_argument("eps too large for this s_min: no valid m");
  cfg.m = m_pinned > 0.0 ? m_pinned : 0.5 * (eps_floor + 1.0);
  if (!(cfg.m > eps_floor && cfg.m < 1.0))
    throw std::invalid_argument("pinned m incompatible with eps and s_min");
  // Smallest kappa1 whose first-chain bound clears m with 5% of the headroom.
  const double target = cfg.m + 0.05 * (1.0 - cfg.m);
  cfg.kappa1 = (s_min + 0.5) / ((2.0 * s_min + 0.5) / target - s_min);
  cfg.kappa2 = 0.5 * (std::sqrt((1.0 + cfg.kappa1) / 2.0) + 1.0);
  const auto violations = validate_config(cfg);
  if (!violations.empty())
    throw std::invalid_argument("default config invalid: " + violations.front());
  return cfg;
}

std::vector<int> resolution_grid(std::uint64_t n, double s_prime) {
  if (n < 4) throw std::invalid_argument("grid-requires-n>=4");
  if (!(s_prime > 0.0)) throw std::invalid_argument("grid-requires-s_prime>0");
  const double log2n = std::log2(double(n));
  const int j_min = int(std::ceil(log2n / (2.0 * s_prime + 1.0) - 1e-9));
  const int j_max = int(63 - std::countl_zero(n));
  if (j_min > j_max) throw std::invalid_argument("grid-empty");
  std::vector<int> grid;
  for (int j = std::max(j_min, 0); j <= j_max; ++j) grid.push_back(j);
  return grid;
}

CoeffSeq linear_estimator(const CoeffSeq& yprime, int j) {
  if (j < 0 || std::exp2(double(j)) > double(yprime.size()))
    throw std::invalid_argument("resolution-level-exceeds-observation-window");
  return project(yprime, j);
}

int lepski_level(const CoeffSeq& yprime, std::uint64_t n,
                 const std::vector<int>& grid) {
  if (grid.empty()) throw std::invalid_argument("grid-empty");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("grid-must-be-sorted");
  const int top = grid.back();
  if (std::exp2(double(top)) > double(yprime.size()))
    throw std::invalid_argument("resolution-level-exceeds-observation-window");

  // ||fhat(j) - fhat(l)||^2 = sum_{2^j < k <= 2^l} y'_k^2: one cumulative
  // pass gives all pairwise distances.
  std::vector<double> cum(grid.size());
  {
    std::size_t gi = 0;
    KahanSum acc;
    for (std::uint64_t k = 1; k <= (std::uint64_t(1) << top); ++k) {
      acc.add(yprime.coeffs[k - 1] * yprime.coeffs[k - 1]);
      while (gi < grid.size() && k == (std::uint64_t(1) << grid[gi])) {
        cum[gi] = acc.value();
        ++gi;
      }
    }
  }
  for (std::size_t a = 0; a < grid.size(); ++a) {
    bool ok = true;
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      const double dist = cum[b] - cum[a];
      const double threshold =
          4.0 * std::exp2(double(grid[b] + 1)) / double(n);
      if (dist > threshold) {
        ok = false;
        break;
      }
    }
    if (ok) return grid[a];
  }
  return grid.back();  // unreachable: the top level is vacuously admissible
}

OracleLevel oracle_level(const CoeffSeq& f, double s, std::uint64_t n,
                         const std::vector<int>& grid) {
  if (grid.empty()) throw std::invalid_argument("grid-empty");
  const double norm_sq = sobolev_norm_sq(f, s);
  for (int j : grid) {
    const double bias = norm_sq * std::exp2(-2.0 * s * j);
    if (bias <= std::exp2(double(j + 1)) / double(n)) return {j, true};
  }
  return {grid.back(), false};
}

SmoothnessEstimates smoothness_estimates(int jhat, std::uint64_t n,
                                         double kappa2) {
  if (jhat < 1) throw std::invalid_argument("jhat-must-be-at-least-1");
  SmoothnessEstimates est;
  est.bar_s = std::log2(double(n)) / (2.0 * jhat) - 0.5;
  est.hat_s = est.bar_s / (2.0 * kappa2);
  return est;
}

LevelSelection undersmoothed_level(int jhat, std::uint64_t n, double kappa2) {
  if (jhat < 1) throw std::invalid_argument("jhat-must-be-at-least-1");
  if (!(kappa2 > 0.0 && kappa2 < 1.0))
    throw std::invalid_argument("kappa2-must-be-in-(0,1)");
  const double log2n = std::log2(double(n));
  const double inv =
      (1.0 / (2.0 * kappa2)) / double(jhat) -
      ((1.0 - kappa2) / (2.0 * kappa2)) / log2n;
  if (!(inv > 0.0)) throw std::invalid_argument("undersmoothing-undefined");
  LevelSelection sel;
  sel.jhat = jhat;
  sel.Jn_real = 1.0 / inv;
  sel.Jhat = int(std::ceil(sel.Jn_real - 1e-9));
  const auto est = smoothness_estimates(jhat, n, kappa2);
  sel.bar_s = est.bar_s;
  sel.hat_s = est.hat_s;
  return sel;
}

}  // namespace adaptball
