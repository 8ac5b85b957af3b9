#pragma once

#include <cstdint>
#include <random>

namespace hkr {

/// The single pseudo-random source used everywhere a seed appears.
///
/// Algorithm: std::mt19937_64 seeded with the 64-bit seed; a bounded draw in
/// [0, bound) is `next() % bound`. Both the engine and this reduction are part
/// of the reproducibility contract, so seeded outputs are identical across
/// platforms and can be regenerated from other languages.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hkr
