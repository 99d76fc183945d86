#pragma once

// Random elements built the constructive way: two random partitions of K_n
// into cells of equal count, a random bijection between them, and random
// flips of the target cells.

#include <cstdint>
#include <random>

#include "cantordiff/element.hpp"

namespace cantordiff {

struct SamplerConfig {
  Arity arity{2};
  /// Number of cells m in each partition; needs m = 1 (mod n-1).
  std::size_t partition_size = 1;
  /// Probability that a rule is flipped, as an exact fraction.
  std::uint64_t flip_numerator = 0;
  std::uint64_t flip_denominator = 1;
  std::uint64_t seed = 0;
};

/// Throws Error on an unreachable partition size or a probability outside [0,1].
void validate(const SamplerConfig& cfg);

/// Deterministic per seed; the result is reduced.
Element sample_element(const SamplerConfig& cfg);

/// Portable draws on top of std::mt19937_64, whose output sequence is fixed
/// by the standard (the standard distributions are not).
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Random complete prefix code with `leaves` cells: start from the root and
/// split a uniformly chosen leaf until the count is reached.
std::vector<Word> random_prefix_code(Arity arity, std::size_t leaves, PortableRng& rng);

}  // namespace cantordiff
