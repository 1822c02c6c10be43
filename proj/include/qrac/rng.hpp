#pragma once

#include <cstdint>

namespace qrac {

/// splitmix64 generator. Used everywhere randomness is needed so results are
/// reproducible across platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, 1).
  double uniform01();

  /// Standard normal via Box-Muller (pair cached).
  double gaussian();

  /// Seed for the k-th derived stream of a master seed.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream);

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace qrac
