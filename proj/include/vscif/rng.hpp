#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace vscif {

// Reproducible randomness: std::mt19937_64 (the standard fixes its output
// sequence) with hand-written integer sampling and shuffling, since the
// standard distributions are implementation-defined.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on the closed interval [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer; stable per-instance seeds from (master, index).
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace vscif
