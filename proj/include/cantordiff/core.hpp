#pragma once

// Basic vocabulary shared by every module: digits, words, arity, the exact
// rational type and the exception hierarchy.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cantordiff {

using Digit = std::uint8_t;
using Word = std::vector<Digit>;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Default bound on the length of any cell word produced by composition.
inline constexpr std::size_t kDefaultMaxDepth = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(int lhs, int rhs)
      : Error("arity mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Structurally invalid data, e.g. rule lists that are not complete prefix codes.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

class DepthLimitExceeded : public Error {
 public:
  DepthLimitExceeded(std::size_t depth, std::size_t limit)
      : Error("cell depth " + std::to_string(depth) + " exceeds limit " + std::to_string(limit)),
        depth_(depth),
        limit_(limit) {}
  std::size_t depth() const noexcept { return depth_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t depth_;
  std::size_t limit_;
};

/// Number n of kept subintervals per construction step of K_n. Digits run over
/// 0..n-1 and each step subdivides an interval into 2n-1 equal pieces.
/// Capped at 10 so every digit is a single character in the text formats.
class Arity {
 public:
  static constexpr int kMax = 10;

  explicit Arity(int n) : n_(n) {
    if (n < 2 || n > kMax) {
      throw Error("arity must lie in [2, " + std::to_string(kMax) + "], got " + std::to_string(n));
    }
  }

  int value() const noexcept { return n_; }
  int base() const noexcept { return 2 * n_ - 1; }
  Digit top() const noexcept { return static_cast<Digit>(n_ - 1); }
  Digit complement(Digit d) const noexcept { return static_cast<Digit>(n_ - 1 - d); }

  friend bool operator==(Arity, Arity) = default;
  friend auto operator<=>(Arity, Arity) = default;

 private:
  int n_;
};

inline void require_same_arity(Arity a, Arity b) {
  if (a != b) throw ArityMismatch(a.value(), b.value());
}

// Word helpers.

inline bool is_prefix(const Word& prefix, const Word& word) {
  return prefix.size() <= word.size() && std::equal(prefix.begin(), prefix.end(), word.begin());
}

/// True when one word is a prefix of the other, i.e. the cells intersect.
inline bool comparable(const Word& a, const Word& b) {
  return a.size() <= b.size() ? is_prefix(a, b) : is_prefix(b, a);
}

inline Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Digitwise a -> n-1-a when `flip` is set, identity otherwise.
inline Word flipped(Arity arity, Word w, bool flip) {
  if (flip) {
    for (auto& d : w) d = arity.complement(d);
  }
  return w;
}

/// Words render as digit strings; the empty word renders as `*`.
std::string word_to_string(const Word& w);
/// Inverse of word_to_string. Throws ParseError on a non-digit or a digit >= n.
Word word_from_string(Arity arity, std::string_view text, std::size_t offset = 0);

/// `p/q` in lowest terms, denominator always printed.
std::string rational_to_string(const Rational& q);
/// Truncated decimal rendering with `digits` fractional digits (display only).
std::string rational_to_decimal(const Rational& q, int digits);

}  // namespace cantordiff
