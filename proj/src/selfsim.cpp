#include "adaptball/selfsim.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace adaptball {

double c_of_s(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("smoothness-must-be-positive");
  return 16.0 * std::exp2(2.0 * s + 1.0);
}

void SelfSimParams::validate() const {
  if (!(s > 0.0)) throw std::invalid_argument("selfsim-s-must-be-positive");
  if (!(eps > 0.0 && eps <= 1.0))
    throw std::invalid_argument("selfsim-eps-must-be-in-(0,1]");
  if (!(0.0 < b && b < B))
    throw std::invalid_argument("selfsim-requires-0<b<B");
  if (J0 < 1) throw std::invalid_argument("selfsim-J0-must-be-at-least-1");
  if (c_override < 0.0)
    throw std::invalid_argument("selfsim-c-override-must-be-positive");
}

double SelfSimParams::block_constant() const {
  return c_override > 0.0 ? c_override : c_of_s(s);
}

std::string MembershipReport::to_json() const {
  nlohmann::ordered_json j;
  j["is_member"] = is_member;
  j["norm_sq"] = norm_sq;
  j["failures"] = failures;
  j["J_checked"] = J_checked;
  j["norm_in_range"] = norm_in_range;
  return j.dump();
}

namespace {

int max_checkable_scale(const CoeffSeq& f) {
  if (f.coeffs.size() < 2) return 0;
  return int(63 - std::countl_zero(std::uint64_t(f.coeffs.size()))) - 1;
}

}  // namespace

MembershipReport check_membership(const CoeffSeq& f, const SelfSimParams& p) {
  p.validate();
  if (!f.finite_support)
    throw std::invalid_argument("membership-check-requires-finite-support");
  if (double(f.coeffs.size()) < std::exp2(double(p.J0)))
    throw std::invalid_argument("support-too-small-to-check");

  MembershipReport rep;
  rep.norm_sq = sobolev_norm_sq(f, p.s);
  rep.norm_in_range =
      rep.norm_sq >= p.b * p.b && rep.norm_sq <= p.B * p.B;
  rep.J_checked = max_checkable_scale(f);
  const double c = p.block_constant();
  for (int J = p.J0; J <= rep.J_checked; ++J) {
    const double lo = std::exp2(double(J) * (1.0 - p.eps));
    const double hi = std::exp2(double(J));
    const double window = block_energy(f, lo, hi);
    const double required = c * rep.norm_sq * std::exp2(-2.0 * p.s * J);
    if (window < required) rep.failures.push_back(J);
  }
  rep.is_member = rep.failures.empty() && rep.norm_in_range;
  return rep;
}

MembershipReport check_bayes_selfsim(const CoeffSeq& f, double s, double B,
                                     double eta, double rho, int J0) {
  if (!(rho > 1.0)) throw std::invalid_argument("bayes-selfsim-requires-rho>1");
  if (eta < 0.0) throw std::invalid_argument("bayes-selfsim-requires-eta>=0");
  if (!f.finite_support)
    throw std::invalid_argument("membership-check-requires-finite-support");
  if (double(f.coeffs.size()) < std::exp2(double(J0)))
    throw std::invalid_argument("support-too-small-to-check");

  MembershipReport rep;
  rep.norm_sq = sobolev_norm_sq(f, s);
  rep.norm_in_range = rep.norm_sq <= B * B;
  rep.J_checked = max_checkable_scale(f);
  for (int J = J0; J <= rep.J_checked; ++J) {
    const double hi = std::exp2(double(J));
    const double window = block_energy(f, hi / rho, hi);
    const double required = eta * B * B * std::exp2(-2.0 * s * J);
    if (window < required) rep.failures.push_back(J);
  }
  rep.is_member = rep.failures.empty() && rep.norm_in_range;
  return rep;
}

bool validate_eps(const std::map<double, double>& eps_by_s, double m,
                  double s_min, double s_max) {
  if (!(m > 0.0 && m < 1.0))
    throw std::invalid_argument("eps-validation-requires-m-in-(0,1)");
  if (eps_by_s.empty()) throw std::invalid_argument("eps-grid-empty");
  if (eps_by_s.begin()->first > s_min ||
      eps_by_s.rbegin()->first < s_max)
    throw std::invalid_argument("eps-grid-does-not-cover-[s_min,s_max]");
  for (const auto& [s, eps] : eps_by_s) {
    if (!(eps > 0.0 && eps < 1.0)) return false;
    if (eps * (2.0 * s + 0.5) / s > m) return false;
  }
  return true;
}

CoeffSeq make_dyadic_selfsim(double s, int levels, double amplitude) {
  if (levels < 3) throw std::invalid_argument("dyadic-truth-needs-levels>=3");
  if (!(amplitude > 0.0))
    throw std::invalid_argument("dyadic-truth-needs-positive-amplitude");
  const std::uint64_t N = (std::uint64_t(1) << (levels + 1)) - 1;
  std::vector<double> c(N, 0.0);
  c[0] = amplitude;  // block l = 0 is {1}
  for (int l = 1; l <= levels; ++l) {
    const double v = amplitude * std::exp2(-(s + 0.5) * l);
    const std::uint64_t lo = std::uint64_t(1) << l;
    const std::uint64_t half = std::uint64_t(1) << (l - 1);
    for (std::uint64_t k = lo; k < lo + half; ++k) c[k - 1] = v;
  }
  return CoeffSeq(std::move(c));
}

SelfSimParams implied_selfsim_params(const CoeffSeq& f, double class_s,
                                     double eps, int J0) {
  if (!f.finite_support)
    throw std::invalid_argument("membership-check-requires-finite-support");
  SelfSimParams p;
  p.s = class_s;
  p.eps = eps;
  p.J0 = J0;
  const double norm_sq = sobolev_norm_sq(f, class_s);
  const double norm = std::sqrt(norm_sq);
  p.b = 0.95 * norm;
  p.B = 1.25 * norm;
  const int J_max = max_checkable_scale(f);
  if (J_max < J0) throw std::invalid_argument("support-too-small-to-check");
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int J = J0; J <= J_max; ++J) {
    const double window =
        block_energy(f, std::exp2(double(J) * (1.0 - eps)), std::exp2(double(J)));
    const double envelope = norm_sq * std::exp2(-2.0 * class_s * J);
    min_ratio = std::min(min_ratio, window / envelope);
  }
  if (!(min_ratio > 0.0))
    throw std::invalid_argument("construction-has-empty-window");
  p.c_override = 0.95 * min_ratio;
  return p;
}

}  // namespace adaptball
