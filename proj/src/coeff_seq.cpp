#include "adaptball/coeff_seq.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adaptball {

namespace {

void check_entries(const std::vector<double>& c) {
  for (double x : c)
    if (!std::isfinite(x))
      throw std::invalid_argument("coeff-seq-entries-must-be-finite");
}

}  // namespace

CoeffSeq::CoeffSeq(std::vector<double> c) : coeffs(std::move(c)) {
  check_entries(coeffs);
}

CoeffSeq::CoeffSeq(std::vector<double> c, double tail_sq)
    : coeffs(std::move(c)), tail_norm_sq(tail_sq), finite_support(tail_sq == 0.0) {
  check_entries(coeffs);
  if (!(tail_sq >= 0.0) || !std::isfinite(tail_sq))
    throw std::invalid_argument("coeff-seq-tail-must-be-nonnegative");
}

double l2_norm_sq(const CoeffSeq& f) {
  KahanSum acc;
  for (double x : f.coeffs) acc.add(x * x);
  acc.add(f.tail_norm_sq);
  return acc.value();
}

double sobolev_norm_sq(const CoeffSeq& f, double s) {
  if (!f.finite_support)
    throw std::invalid_argument("sobolev-norm-undefined-for-tail");
  if (!(s > 0.0)) throw std::invalid_argument("sobolev-smoothness-must-be-positive");
  KahanSum acc;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    const double k = double(i + 1);
    acc.add(f.coeffs[i] * f.coeffs[i] * std::pow(k, 2.0 * s));
  }
  return acc.value();
}

CoeffSeq project(const CoeffSeq& f, int j) {
  if (j < 0) throw std::invalid_argument("projection-level-must-be-nonnegative");
  std::uint64_t keep = (j >= 63) ? ~0ULL : (1ULL << j);
  std::vector<double> out(f.coeffs.begin(),
                          f.coeffs.begin() +
                              std::min<std::uint64_t>(keep, f.coeffs.size()));
  return CoeffSeq(std::move(out));
}

double block_energy(const CoeffSeq& f, double a, double b) {
  if (!(a <= b)) throw std::invalid_argument("block-energy-requires-a<=b");
  const double lo_r = std::ceil(a);
  const double hi_r = std::floor(b);
  if (lo_r > hi_r) return 0.0;
  const std::uint64_t lo = lo_r < 1.0 ? 1 : std::uint64_t(lo_r);
  const std::uint64_t hi = std::uint64_t(hi_r);
  if (hi > f.coeffs.size() && !f.finite_support)
    throw std::invalid_argument("block-energy-range-intersects-unstored-tail");
  KahanSum acc;
  for (std::uint64_t k = lo; k <= hi && k <= f.coeffs.size(); ++k)
    acc.add(f.coeffs[k - 1] * f.coeffs[k - 1]);
  return acc.value();
}

double l2_dist_sq(const CoeffSeq& f, const CoeffSeq& g) {
  double tail;
  if (f.finite_support)
    tail = g.tail_norm_sq;
  else if (g.finite_support)
    tail = f.tail_norm_sq;
  else if (f.tail_norm_sq == g.tail_norm_sq)
    tail = 0.0;  // identical declared tails cancel
  else
    throw std::invalid_argument("l2-dist-incomparable-tails");
  const std::size_t n = std::max(f.coeffs.size(), g.coeffs.size());
  KahanSum acc;
  for (std::size_t k = 1; k <= n; ++k) {
    const double d = f.at(k) - g.at(k);
    acc.add(d * d);
  }
  acc.add(tail);
  return acc.value();
}

CoeffSeq load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot-open-sequence-file: " + path);
  std::vector<double> c;
  double tail = 0.0;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("tail_norm_sq=", 0) == 0) {
      tail = std::stod(line.substr(13));
      first = false;
      continue;
    }
    first = false;
    c.push_back(std::stod(line));
  }
  return tail > 0.0 ? CoeffSeq(std::move(c), tail) : CoeffSeq(std::move(c));
}

void save_sequence(const CoeffSeq& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot-write-sequence-file: " + path);
  char buf[40];
  if (!f.finite_support) {
    std::snprintf(buf, sizeof buf, "%.17g", f.tail_norm_sq);
    out << "tail_norm_sq=" << buf << "\n";
  }
  for (double x : f.coeffs) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf << "\n";
  }
}

}  // namespace adaptball
