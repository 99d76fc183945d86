#include "cantordiff/sampler.hpp"

#include <limits>

namespace cantordiff {

std::uint64_t PortableRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("empty range");
  // Largest multiple of bound that fits, to keep the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

void validate(const SamplerConfig& cfg) {
  const auto step = static_cast<std::size_t>(cfg.arity.value() - 1);
  if (cfg.partition_size < 1 || (cfg.partition_size - 1) % step != 0) {
    throw Error("partition size " + std::to_string(cfg.partition_size) + " is not 1 mod " + std::to_string(step));
  }
  if (cfg.flip_denominator == 0 || cfg.flip_numerator > cfg.flip_denominator) {
    throw Error("flip probability must be a fraction in [0, 1]");
  }
}

std::vector<Word> random_prefix_code(Arity arity, std::size_t leaves, PortableRng& rng) {
  std::vector<Word> code{Word{}};
  while (code.size() < leaves) {
    const auto i = static_cast<std::size_t>(rng.below(code.size()));
    Word parent = std::move(code[i]);
    code.erase(code.begin() + static_cast<std::ptrdiff_t>(i));
    for (int a = 0; a < arity.value(); ++a) {
      Word child = parent;
      child.push_back(static_cast<Digit>(a));
      code.push_back(std::move(child));
    }
  }
  return code;
}

Element sample_element(const SamplerConfig& cfg) {
  validate(cfg);
  PortableRng rng(cfg.seed);
  auto domains = random_prefix_code(cfg.arity, cfg.partition_size, rng);
  auto ranges = random_prefix_code(cfg.arity, cfg.partition_size, rng);
  // Fisher-Yates for the bijection.
  for (std::size_t i = ranges.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(ranges[i - 1], ranges[j]);
  }
  std::vector<Rule> rules;
  rules.reserve(domains.size());
  for (std::size_t i = 0; i < domains.size(); ++i) {
    const bool flip = rng.below(cfg.flip_denominator) < cfg.flip_numerator;
    rules.push_back(Rule{std::move(domains[i]), std::move(ranges[i]), flip});
  }
  return reduce(Element(cfg.arity, std::move(rules)));
}

}  // namespace cantordiff
