#include "projsep/rng.hpp"

#include <boost/random/chi_squared_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <numeric>
#include <utility>

namespace projsep {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::vector<std::uint64_t> path)
    : seed_(master_seed), path_(std::move(path)) {
  // Key hash: each level folds its depth in, so [0] and [0, 0] differ.
  std::uint64_t key = mix64(seed_ + 0x9e3779b97f4a7c15ULL);
  std::uint64_t depth = 0;
  for (auto index : path_) {
    ++depth;
    key = mix64(key ^ mix64(index + depth * 0x632be59bd9b4e019ULL));
  }
  // SplitMix64 expansion of the key into the xoshiro state.
  std::uint64_t sm = key;
  for (auto& word : state_) {
    sm += 0x9e3779b97f4a7c15ULL;
    word = mix64(sm);
  }
}

RngStream::result_type RngStream::operator()() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

RngStream RngStream::fork(std::uint64_t child) const {
  auto path = path_;
  path.push_back(child);
  return RngStream(seed_, std::move(path));
}

double RngStream::uniform() {
  // 53 high bits -> [0, 1)
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  boost::random::normal_distribution<double> dist;
  return dist(*this);
}

double RngStream::chi_squared(double df) {
  boost::random::chi_squared_distribution<double> dist(df);
  return dist(*this);
}

std::uint64_t RngStream::below(std::uint64_t n) {
  boost::random::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
  return dist(*this);
}

RngStream derive_stream(std::uint64_t master_seed, std::vector<std::uint64_t> path) {
  return RngStream(master_seed, std::move(path));
}

std::vector<int> sample_without_replacement(int n, int k, RngStream& rng) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(static_cast<std::size_t>(k));
  return idx;
}

}  // namespace projsep
