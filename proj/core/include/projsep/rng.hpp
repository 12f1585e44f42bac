#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace projsep {

/// Deterministic, path-keyed random stream.
///
/// A stream is identified by (master seed, path). The generator state is a
/// pure function of that key, so forking a child (path + [i]) never depends on
/// how many numbers the parent has already produced. Sweeps key their tasks
/// on (cell, replicate, component) and are therefore schedule independent.
///
/// Engine: xoshiro256** seeded through SplitMix64 from a hash of the key.
/// Distributions come from Boost.Random, whose algorithms are fixed by the
/// library rather than by the standard library vendor.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::vector<std::uint64_t> path);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  RngStream fork(std::uint64_t child) const;

  std::uint64_t master_seed() const noexcept { return seed_; }
  const std::vector<std::uint64_t>& path() const noexcept { return path_; }

  /// Uniform on [0, 1).
  double uniform();
  double normal();
  double chi_squared(double df);
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
  std::array<std::uint64_t, 4> state_{};
};

/// Same as constructing RngStream(master_seed, path).
RngStream derive_stream(std::uint64_t master_seed, std::vector<std::uint64_t> path);

/// First k entries of a uniformly random permutation of 0..n-1 (partial
/// Fisher-Yates).
std::vector<int> sample_without_replacement(int n, int k, RngStream& rng);

}  // namespace projsep
