#pragma once

// Test-only oracles. They work on exact coordinates in [0,1] and the
// interval picture of K_n, never on the digit-level code paths they check.

#include <random>
#include <string>

#include "cantordiff/sampler.hpp"
#include "cantordiff/subgroup.hpp"
#include "cantordiff/text_format.hpp"

namespace cantordiff::testing {

inline Rational pow_base(Arity arity, std::size_t k) {
  BigInt p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= arity.base();
  return Rational(p);
}

/// sum_{i<k} 2 a_i (2n-1)^-(i+1): the coordinate truncated after k digits.
/// The true coordinate lies in [S_k, S_k + (2n-1)^-k].
inline Rational partial_sum(const Address& a, std::size_t k) {
  Rational s = 0;
  Rational scale = 1;
  for (std::size_t i = 0; i < k; ++i) {
    scale /= a.arity().base();
    s += 2 * static_cast<int>(a.digit(i)) * scale;
  }
  return s;
}

/// Left end of the construction interval of a cell, built by walking the
/// subdivision: digit a keeps the piece [2a, 2a+1] / (2n-1).
inline Rational interval_left(Arity arity, const Word& w) {
  Rational left = 0;
  Rational len = 1;
  for (Digit d : w) {
    len /= arity.base();
    left += 2 * static_cast<int>(d) * len;
  }
  return left;
}

inline Rational interval_length(Arity arity, const Word& w) { return 1 / pow_base(arity, w.size()); }

/// Applies g to the coordinate x as a piecewise map of the line: on each
/// domain interval the orientation preserving affine map onto the range
/// interval, composed with the reflection about the range centre when flipped.
inline Rational affine_apply(const Element& g, const Rational& x) {
  const Arity arity = g.arity();
  for (const Rule& r : g.rules()) {
    const Rational lu = interval_left(arity, r.domain);
    const Rational len_u = interval_length(arity, r.domain);
    if (x < lu || x > lu + len_u) continue;
    const Rational lv = interval_left(arity, r.range);
    const Rational len_v = interval_length(arity, r.range);
    const Rational y = lv + (x - lu) * len_v / len_u;
    return r.flip ? Rational(2 * lv + len_v - y) : y;
  }
  throw std::logic_error("point not covered");
}

/// Brute-force semantic equality: agreement on the corner addresses of all
/// domain cells of both elements separates distinct tree-pair maps.
inline bool semantically_equal(const Element& a, const Element& b) {
  for (const Element* e : {&a, &b}) {
    for (const Rule& r : e->rules()) {
      for (const Address& x : {left_corner(a.arity(), r.domain), right_corner(a.arity(), r.domain)}) {
        if (apply(a, x) != apply(b, x)) return false;
      }
    }
  }
  return true;
}

/// Difference quotient of coordinates.
inline Rational difference_quotient(const Element& g, const Address& x, const Address& y) {
  return (coordinate(apply(g, y)) - coordinate(apply(g, x))) / (coordinate(y) - coordinate(x));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

  Word word(Arity arity, std::size_t min_len, std::size_t max_len) {
    Word w(min_len + below(max_len - min_len + 1));
    for (auto& d : w) d = static_cast<Digit>(below(static_cast<std::uint64_t>(arity.value())));
    return w;
  }

  Address address(Arity arity) { return Address(arity, word(arity, 0, 5), word(arity, 1, 4)); }

  Element element(Arity arity, std::size_t max_leaves = 7, bool flips = true) {
    const auto step = static_cast<std::size_t>(arity.value() - 1);
    const std::size_t m = 1 + step * below(max_leaves / step + 1);
    return sample_element(SamplerConfig{arity, m, flips ? 1u : 0u, 2, rng_()});
  }

  ClopenSet clopen(Arity arity, std::size_t max_cells = 4) {
    std::vector<Word> cells;
    const auto k = below(max_cells + 1);
    for (std::uint64_t i = 0; i < k; ++i) cells.push_back(word(arity, 0, 3));
    return ClopenSet(arity, std::move(cells));
  }

 private:
  std::mt19937_64 rng_;
};

inline Element el(const std::string& text) { return parse_element(text); }

inline Address addr(const std::string& text, int n = 2) { return parse_address(Arity(n), text); }

inline ClopenSet cset(const std::string& text, int n = 2) { return parse_clopen(Arity(n), text); }

inline Rational q(long long p, long long d = 1) { return Rational(p, d); }

}  // namespace cantordiff::testing
