#include "vscif/rng.hpp"

#include "vscif/error.hpp"

namespace vscif {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) raise(ErrorKind::Precondition, "empty sampling interval");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  // Reject the low (2^64 mod span) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - span) % span;
  std::uint64_t x = engine_();
  while (x < threshold) x = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ index);
}

}  // namespace vscif
