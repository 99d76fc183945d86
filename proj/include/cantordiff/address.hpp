#pragma once

// Points of K_n as eventually periodic digit words.
//
// Digit a at depth i selects the kept subinterval
// [2a/(2n-1), (2a+1)/(2n-1)] of the current interval, so the point with
// expansion a_1 a_2 ... sits at sum_i 2 a_i (2n-1)^-i. Because the kept
// subintervals are separated by gaps, distinct expansions give distinct
// points and lexicographic order is the order of the line.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "cantordiff/core.hpp"

namespace cantordiff {

/// The interval of K_n addressed by a finite word; the empty word is all of K_n.
class Cell {
 public:
  Cell(Arity arity, Word word);

  Arity arity() const noexcept { return arity_; }
  const Word& word() const noexcept { return word_; }
  std::size_t depth() const noexcept { return word_.size(); }

  friend bool operator==(const Cell&, const Cell&) = default;

 private:
  Arity arity_;
  Word word_;
};

/// The infinite word preperiod . period^inf, kept in canonical form:
/// the period is primitive and the preperiod is as short as possible.
/// Structural equality is therefore equality of points.
class Address {
 public:
  Address(Arity arity, Word preperiod, Word period);

  /// The point d d d ...
  static Address constant(Arity arity, Digit d) { return Address(arity, {}, {d}); }

  Arity arity() const noexcept { return arity_; }
  const Word& preperiod() const noexcept { return preperiod_; }
  const Word& period() const noexcept { return period_; }

  /// Digit at 0-based position i of the infinite expansion.
  Digit digit(std::size_t i) const noexcept {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
  }

  /// First k digits.
  Word prefix(std::size_t k) const;
  bool has_prefix(const Word& w) const noexcept;

  /// The address with the first k digits removed.
  Address drop(std::size_t k) const;
  /// w . this
  Address prepend(const Word& w) const;
  /// Digitwise complement.
  Address complemented() const;

  friend bool operator==(const Address&, const Address&) = default;

 private:
  void canonicalize();

  Arity arity_;
  Word preperiod_;
  Word period_;
};

/// Exact position of the point in [0,1].
Rational coordinate(const Address& a);

/// Order of the points on the line (lexicographic order of expansions).
/// Throws ArityMismatch.
std::strong_ordering compare(const Address& a, const Address& b);

inline bool operator<(const Address& a, const Address& b) { return compare(a, b) < 0; }

/// Exact coordinates of the leftmost and rightmost points of the cell.
std::pair<Rational, Rational> cell_endpoints(const Cell& c);

/// Leftmost point c . 0^inf and rightmost point c . (n-1)^inf.
Address left_corner(Arity arity, const Word& cell);
Address right_corner(Arity arity, const Word& cell);

/// Text syntax `<preperiod>(<period>)`, e.g. `0(1)` or `(10)`.
std::string to_string(const Address& a);
Address parse_address(Arity arity, std::string_view text);

}  // namespace cantordiff
