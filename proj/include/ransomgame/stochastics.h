// Copyright 2026 The ransomgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANSOMGAME_STOCHASTICS_H_
#define RANSOMGAME_STOCHASTICS_H_

#include <array>
#include <cstdint>

namespace ransomgame {

// Philox4x32-10 counter-based block cipher (Salmon et al., SC'11). Maps a
// 128-bit counter and 64-bit key to 128 random bits with no internal state,
// so any position of any stream is reachable in O(1).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key);
};

// Identifies one random stream: the master seed of a run configuration and
// the index of the stream (usually the simulation run) within it.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

// SplitMix64 finalizer over (seed, index). Used to key independent families of
// streams (e.g. one per heatmap node) off a single user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Sequential view of a Philox stream. The key is the master seed, the upper
// half of the counter is the stream index and the lower half counts blocks.
// Two streams with equal SeedSpec yield identical sequences.
class RandomStream {
 public:
  explicit RandomStream(SeedSpec seed);

  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform();
  // Standard normal deviate by inversion of the normal CDF.
  double normal();

 private:
  void refill();

  Philox4x32::Key key_;
  std::uint64_t stream_index_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int cursor_ = 4;
};

// Phi(z), absolute error well below 1e-12. Throws DomainError for non-finite z.
double std_normal_cdf(double z);

// Phi^{-1}(p) for p in (0, 1).
double std_normal_quantile(double p);

// exp(t^2/2) * Phi(-t) for t >= 0, without overflow for large t. Bounded by
// 1/2 and decreasing like 1/(t sqrt(2 pi)).
double scaled_normal_tail(double t);

// Lognormal(mu, sigma^2) density at x_est > 0.
double lognormal_pdf(double x_est, double mu, double sigma);

// Lognormal(mu, sigma^2) distribution function.
double lognormal_cdf(double x_est, double mu, double sigma);

// The attacker's estimate of a data value x: a lognormal draw with median x
// and scale sigma in (0, 1].
class LognormalEstimator {
 public:
  LognormalEstimator(double x, double sigma);

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double median() const;
  double mean() const;

  double pdf(double x_est) const { return lognormal_pdf(x_est, mu_, sigma_); }
  double cdf(double x_est) const { return lognormal_cdf(x_est, mu_, sigma_); }
  double sample(RandomStream& stream) const;

 private:
  double mu_;
  double sigma_;
};

// exp(ln x + sigma z) with z the next normal deviate of `stream`.
double sample_estimate(double x, double sigma, RandomStream& stream);
// Same, from a fresh stream.
double sample_estimate(double x, double sigma, SeedSpec seed);

}  // namespace ransomgame

#endif  // RANSOMGAME_STOCHASTICS_H_
