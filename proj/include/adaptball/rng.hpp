#pragma once

#include <cstdint>
#include <span>

namespace adaptball {

// Identifies one reproducible random stream. Identical (seed, stream_id)
// pairs always produce identical draw sequences; distinct stream_ids give
// statistically independent streams.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

// Derives the substream label for replication `rep` of experiment `experiment`
// at sample size `n`. Runs may be distributed over any number of workers
// without changing results because every (experiment, n, rep) triple maps to
// a fixed stream.
std::uint64_t substream_id(std::uint64_t experiment, std::uint64_t n,
                           std::uint64_t rep);

// splitmix64 bit mixer, used for substream derivation.
std::uint64_t mix64(std::uint64_t x);

// Inverse of the standard normal CDF (Wichura's PPND16 rational
// approximation, absolute error below 1e-15 over (0,1)).
double inverse_normal_cdf(double p);

// Counter-based generator: Philox4x32-10 keyed by (seed, stream_id).
// Draws depend only on the key and the draw index, so streams can be
// replayed or skipped independently of each other.
class Philox {
public:
  explicit Philox(RngStream stream);

  std::uint64_t next_u64();

  // Uniform on the open interval (0,1).
  double uniform();

  // Standard normal via the inverse CDF applied to uniform().
  double normal();

  void fill_normal(std::span<double> out);

private:
  void refill();

  std::uint32_t key0_, key1_;
  std::uint32_t ctr2_, ctr3_;   // stream label
  std::uint64_t block_ = 0;     // draw-block counter
  std::uint64_t buf_[2];
  int have_ = 0;
};

}  // namespace adaptball
