#pragma once

// Procedures on finitely generated subgroups: closure enumeration,
// commutators, orbits, ping-pong certificates and crossed-pair search.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cantordiff/dynamics.hpp"

namespace cantordiff {

/// Reduced generators of one arity with duplicates and the identity removed.
/// An input made only of identities yields an empty list: the trivial group.
class GeneratingSet {
 public:
  /// Throws Error on an empty input and ArityMismatch on mixed arities.
  explicit GeneratingSet(const std::vector<Element>& generators);

  Arity arity() const noexcept { return arity_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  /// Generators followed by those inverses that are not already listed.
  const std::vector<Element>& symmetric() const noexcept { return symmetric_; }

 private:
  Arity arity_;
  std::vector<Element> generators_;
  std::vector<Element> symmetric_;
};

struct FiniteClosure {
  /// In discovery order, starting with the identity.
  std::vector<Element> elements;
  /// Result of the full multiplication-table check; only performed when the
  /// group has at most kMultiplicationCheckLimit elements.
  bool multiplication_closed = false;
  bool multiplication_checked = false;
};

struct ClosureExceeded {
  std::size_t cap;
  std::size_t count_reached;
};

using ClosureResult = std::variant<FiniteClosure, ClosureExceeded>;

inline constexpr std::size_t kMultiplicationCheckLimit = 200;
inline constexpr std::size_t kDefaultCap = 10'000;
inline constexpr int kDefaultSearchDepth = 6;

/// Breadth-first closure from the identity under right multiplication by
/// the generators and their inverses, deduplicated on reduced forms.
/// Exceeded as soon as a (cap+1)-th distinct element would be recorded.
ClosureResult enumerate_group(const GeneratingSet& gens, std::size_t cap = kDefaultCap,
                              std::size_t max_depth = kDefaultMaxDepth);

/// g h g^-1 h^-1, reduced.
Element commutator(const Element& g, const Element& h, std::size_t max_depth = kDefaultMaxDepth);

struct FiniteOrbit {
  std::vector<Address> points;
};

struct OrbitExceeded {
  std::size_t cap;
};

using OrbitResult = std::variant<FiniteOrbit, OrbitExceeded>;

OrbitResult orbit(const Address& x, const GeneratingSet& gens, std::size_t cap = kDefaultCap);

/// Positive ping-pong: A and B nonempty and disjoint, h1(A u B) in A and
/// h2(A u B) in B. A true result certifies that h1, h2 freely generate a
/// free semigroup.
bool pingpong_verify(const Element& h1, const Element& h2, const ClopenSet& a, const ClopenSet& b);

/// True iff all positive words of length 1..max_length in f1, f2 reduce to
/// pairwise distinct elements. Necessary for freeness, not a certificate.
bool distinct_words_check(const Element& f1, const Element& f2, int max_length,
                          std::size_t max_depth = kDefaultMaxDepth);

struct CrossedWitness {
  Element g;
  Element h;
  Address p1;
  Address p2;
  /// f1 = g^power, f2 = h o g^power.
  std::int64_t power;
  Element f1;
  Element f2;
  ClopenSet a;
  ClopenSet b;
};

struct CrossedOptions {
  int search_depth = kDefaultSearchDepth;
  /// Cap on |power| when pushing h(A) back into A.
  int max_power = 64;
  std::size_t max_depth = kDefaultMaxDepth;
};

/// Searches products of generators (length-lexicographic, ties by canonical
/// text) for a crossed pair and builds the ping-pong witness of the
/// resulting free subsemigroup. Every returned witness has been checked
/// with check_witness.
std::optional<CrossedWitness> find_crossed(const GeneratingSet& gens, const CrossedOptions& options = {});

/// Machine check of every witness invariant, including the ping-pong certificate.
bool check_witness(const CrossedWitness& w);

/// Pairs p1 < p2 of fixed points of g with no fixed point strictly between
/// and at least one point of K_n strictly between.
std::vector<std::pair<Address, Address>> adjacent_fixed_pairs(const FixedSet& fix);

/// g is order preserving on [p1, p2]: rules meeting the interval are
/// unflipped and keep their range cells in domain order.
bool increasing_on(const Element& g, const Address& p1, const Address& p2);
/// Every rule meeting [p1, p2] is unflipped.
bool unflipped_on(const Element& g, const Address& p1, const Address& p2);

/// Reduced elements given by words of length <= max_length in the symmetric
/// generators, deduplicated, in length-lexicographic order with ties broken
/// by canonical text. The identity is omitted.
std::vector<Element> products_up_to(const GeneratingSet& gens, int max_length,
                                    std::size_t max_depth = kDefaultMaxDepth);

}  // namespace cantordiff
