#pragma once

// Clopen subsets of K_n. Every clopen set is a finite union of cells and has a
// unique normal form: an antichain of cell words (no word is a prefix of
// another) without complete sibling families. Cells are kept sorted, so
// structural equality is set equality.

#include <string>
#include <string_view>
#include <vector>

#include "cantordiff/address.hpp"

namespace cantordiff {

class ClopenSet {
 public:
  /// The empty set.
  explicit ClopenSet(Arity arity) : arity_(arity) {}
  /// Normalizes an arbitrary list of cell words.
  ClopenSet(Arity arity, std::vector<Word> cells);

  static ClopenSet all(Arity arity) { return ClopenSet(arity, std::vector<Word>{Word{}}); }
  /// Throws ArityMismatch when the cells disagree on arity.
  static ClopenSet from_cells(const std::vector<Cell>& cells);

  Arity arity() const noexcept { return arity_; }
  const std::vector<Word>& cells() const noexcept { return cells_; }
  bool empty() const noexcept { return cells_.empty(); }
  bool is_all() const noexcept { return cells_.size() == 1 && cells_.front().empty(); }

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

 private:
  Arity arity_;
  std::vector<Word> cells_;
};

ClopenSet normalize(Arity arity, std::vector<Word> cells);

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersection(const ClopenSet& a, const ClopenSet& b);
/// Relative to all of K_n.
ClopenSet complement(const ClopenSet& a);
ClopenSet difference(const ClopenSet& a, const ClopenSet& b);

bool is_subset(const ClopenSet& a, const ClopenSet& b);
bool disjoint(const ClopenSet& a, const ClopenSet& b);
bool contains_address(const ClopenSet& a, const Address& x);

/// `{00, 01, 1}`; `{}` is empty and `{*}` is all of K_n.
std::string to_string(const ClopenSet& a);
ClopenSet parse_clopen(Arity arity, std::string_view text);

}  // namespace cantordiff
