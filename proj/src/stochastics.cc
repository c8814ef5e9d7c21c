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

#include "ransomgame/stochastics.h"

#include <cmath>
#include <numbers>

#include <boost/math/distributions/normal.hpp>

#include "ransomgame/errors.h"

namespace ransomgame {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
constexpr int kPhiloxRounds = 10;

// Below this the direct exp * erfc product is accurate; above it erfc
// approaches underflow and the continued fraction converges in few terms.
constexpr double kTailSwitch = 8.0;
constexpr int kTailFractionDepth = 100;

const double kSqrtTwoPi = std::sqrt(2.0 * std::numbers::pi);

void philox_round(Philox4x32::Counter& ctr, const Philox4x32::Key& key) {
  const std::uint64_t p0 = std::uint64_t{kPhiloxM0} * ctr[0];
  const std::uint64_t p1 = std::uint64_t{kPhiloxM1} * ctr[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter counter, Key key) {
  philox_round(counter, key);
  for (int r = 1; r < kPhiloxRounds; ++r) {
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
    philox_round(counter, key);
  }
  return counter;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

RandomStream::RandomStream(SeedSpec seed)
    : key_{static_cast<std::uint32_t>(seed.master_seed),
           static_cast<std::uint32_t>(seed.master_seed >> 32)},
      stream_index_(seed.stream_index) {}

void RandomStream::refill() {
  const Philox4x32::Counter counter{
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_index_),
      static_cast<std::uint32_t>(stream_index_ >> 32)};
  buffer_ = Philox4x32::generate(counter, key_);
  ++block_;
  cursor_ = 0;
}

std::uint64_t RandomStream::next_u64() {
  if (cursor_ > 2) refill();
  const std::uint64_t v =
      (std::uint64_t{buffer_[cursor_]} << 32) | buffer_[cursor_ + 1];
  cursor_ += 2;
  return v;
}

double RandomStream::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() { return std_normal_quantile(uniform()); }

double std_normal_cdf(double z) {
  if (!std::isfinite(z)) throw DomainError("std_normal_cdf: non-finite input");
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("std_normal_quantile: p must lie in (0, 1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double scaled_normal_tail(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("scaled_normal_tail: t must be finite and >= 0");
  }
  if (t < kTailSwitch) {
    return std::exp(0.5 * t * t) * 0.5 * std::erfc(t / std::numbers::sqrt2);
  }
  // Mills ratio Phi(-t)/phi(t) = 1/(t + 1/(t + 2/(t + 3/(t + ...)))).
  double f = t;
  for (int k = kTailFractionDepth; k >= 1; --k) f = t + k / f;
  return 1.0 / (f * kSqrtTwoPi);
}

double lognormal_pdf(double x_est, double mu, double sigma) {
  if (!(x_est > 0.0) || !(sigma > 0.0) || !std::isfinite(mu)) {
    throw DomainError("lognormal_pdf: requires x > 0 and sigma > 0");
  }
  const double z = (std::log(x_est) - mu) / sigma;
  return std::exp(-0.5 * z * z) / (x_est * sigma * kSqrtTwoPi);
}

double lognormal_cdf(double x_est, double mu, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(mu)) {
    throw DomainError("lognormal_cdf: requires sigma > 0");
  }
  if (x_est <= 0.0) return 0.0;
  return std_normal_cdf((std::log(x_est) - mu) / sigma);
}

LognormalEstimator::LognormalEstimator(double x, double sigma) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("LognormalEstimator: x must be positive and finite");
  }
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw DomainError("LognormalEstimator: sigma must lie in (0, 1]");
  }
  mu_ = std::log(x);
  sigma_ = sigma;
}

double LognormalEstimator::median() const { return std::exp(mu_); }

double LognormalEstimator::mean() const {
  return std::exp(mu_ + 0.5 * sigma_ * sigma_);
}

double LognormalEstimator::sample(RandomStream& stream) const {
  return std::exp(mu_ + sigma_ * stream.normal());
}

double sample_estimate(double x, double sigma, RandomStream& stream) {
  return LognormalEstimator(x, sigma).sample(stream);
}

double sample_estimate(double x, double sigma, SeedSpec seed) {
  RandomStream stream(seed);
  return sample_estimate(x, sigma, stream);
}

}  // namespace ransomgame
