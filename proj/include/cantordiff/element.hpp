#pragma once

// Elements of diff(K_n) as tree-pair diagrams with flips.
//
// A rule (u, v, flip) maps every point u.s to v.s, or to v.c(s) when flipped,
// where c is the digitwise complement a -> n-1-a. The complement is the
// address-level form of the reflection of a cell about its centre: the
// reflection x -> 1-x sends the kept subinterval of digit a onto the kept
// subinterval of digit n-1-a, and recursively so at every depth, so it
// preserves K_n and acts as c on expansions. Composing with the affine
// rescaling between cells gives exactly the orientation reversing affine map
// from one cell onto another.
//
// Elements with no flipped rule form the Higman-Thompson group V_n.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cantordiff/address.hpp"
#include "cantordiff/clopen.hpp"

namespace cantordiff {

struct Rule {
  Word domain;
  Word range;
  bool flip = false;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

class Element {
 public:
  /// Validates that domains and ranges are both complete prefix codes of
  /// equal size; throws InvalidElement naming the offending or missing cells.
  /// Rules are sorted by domain but not reduced.
  Element(Arity arity, std::vector<Rule> rules);

  static Element identity(Arity arity);
  /// The reflection of all of K_n, x -> 1 - x.
  static Element global_flip(Arity arity);

  Arity arity() const noexcept { return arity_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }

  bool is_identity() const noexcept;
  bool has_flips() const noexcept;
  /// Longest domain or range word.
  std::size_t depth() const noexcept;

  /// Index of the rule whose domain cell contains x.
  std::size_t rule_index(const Address& x) const;
  /// Rules whose domain cell meets the cell `w`, as a range of indices
  /// [first, last). Either a single rule contains w, or w is split among
  /// several rules all extending it.
  std::pair<std::size_t, std::size_t> rules_meeting(const Word& w) const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  struct Unchecked {};
  Element(Unchecked, Arity arity, std::vector<Rule> rules);

  friend Element compose(const Element&, const Element&, std::size_t);
  friend Element inverse(const Element&);
  friend Element reduce(const Element&);
  friend Element expand(const Element&, std::size_t);

  Arity arity_;
  std::vector<Rule> rules_;
};

Address apply(const Element& g, const Address& x);

/// g after f, in reduced form. Throws DepthLimitExceeded when an intermediate
/// rule word is longer than `max_depth`.
Element compose(const Element& g, const Element& f, std::size_t max_depth = kDefaultMaxDepth);
Element inverse(const Element& g);

/// Merges complete sibling rule families until none is left. The result is
/// the canonical representative: two elements are the same map iff their
/// reduced forms are equal.
Element reduce(const Element& g);
bool is_reduced(const Element& g);

/// Replaces rule `rule_index` by its n children; same map, one level finer.
/// Throws std::out_of_range.
Element expand(const Element& g, std::size_t rule_index);

/// g^k for any integer k, by repeated squaring with reduction at each step.
Element power(const Element& g, std::int64_t k, std::size_t max_depth = kDefaultMaxDepth);

ClopenSet image(const Element& g, const ClopenSet& a);

}  // namespace cantordiff
