#include "cantordiff/clopen.hpp"

#include <cctype>

namespace cantordiff {

namespace {

bool completes_family(Arity arity, const std::vector<Word>& stack) {
  const auto n = static_cast<std::size_t>(arity.value());
  if (stack.size() < n) return false;
  const Word& last = stack.back();
  if (last.empty() || last.back() != arity.top()) return false;
  const std::size_t len = last.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Word& w = stack[stack.size() - n + k];
    if (w.size() != len || w.back() != k) return false;
    if (!std::equal(w.begin(), w.end() - 1, last.begin())) return false;
  }
  return true;
}

// Complement of the cells in [first, last) (sorted antichain, all extending
// `prefix`) inside the cell `prefix`.
void complement_into(Arity arity, Word& prefix, std::vector<Word>::const_iterator first,
                     std::vector<Word>::const_iterator last, std::vector<Word>& out) {
  if (first == last) {
    out.push_back(prefix);
    return;
  }
  if (first->size() == prefix.size()) return;  // the cell itself is present
  for (int d = 0; d < arity.value(); ++d) {
    prefix.push_back(static_cast<Digit>(d));
    auto mid = std::find_if(first, last, [&](const Word& w) { return !is_prefix(prefix, w); });
    complement_into(arity, prefix, first, mid, out);
    prefix.pop_back();
    first = mid;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ClopenSet normalize(Arity arity, std::vector<Word> cells) { return ClopenSet(arity, std::move(cells)); }

ClopenSet::ClopenSet(Arity arity, std::vector<Word> cells) : arity_(arity) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<Word> stack;
  for (auto& w : cells) {
    for (Digit d : w) {
      if (d >= arity.value()) throw Error("digit out of range in cell " + word_to_string(w));
    }
    // In sorted order a word is immediately followed by its extensions, so
    // one stack pass handles prefix absorption and cascading sibling merges.
    if (!stack.empty() && is_prefix(stack.back(), w)) continue;
    stack.push_back(std::move(w));
    while (completes_family(arity, stack)) {
      Word parent = stack.back();
      parent.pop_back();
      stack.resize(stack.size() - static_cast<std::size_t>(arity.value()));
      stack.push_back(std::move(parent));
    }
  }
  cells_ = std::move(stack);
}

ClopenSet ClopenSet::from_cells(const std::vector<Cell>& cells) {
  if (cells.empty()) throw Error("from_cells needs at least one cell to fix the arity");
  const Arity arity = cells.front().arity();
  std::vector<Word> words;
  words.reserve(cells.size());
  for (const auto& c : cells) {
    require_same_arity(arity, c.arity());
    words.push_back(c.word());
  }
  return ClopenSet(arity, std::move(words));
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Word> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return ClopenSet(a.arity(), std::move(cells));
}

ClopenSet intersection(const ClopenSet& a, const ClopenSet& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Word> cells;
  for (const auto& x : a.cells()) {
    for (const auto& y : b.cells()) {
      if (is_prefix(x, y)) {
        cells.push_back(y);
      } else if (is_prefix(y, x)) {
        cells.push_back(x);
      }
    }
  }
  return ClopenSet(a.arity(), std::move(cells));
}

ClopenSet complement(const ClopenSet& a) {
  std::vector<Word> out;
  Word prefix;
  complement_into(a.arity(), prefix, a.cells().begin(), a.cells().end(), out);
  return ClopenSet(a.arity(), std::move(out));
}

ClopenSet difference(const ClopenSet& a, const ClopenSet& b) { return intersection(a, complement(b)); }

bool is_subset(const ClopenSet& a, const ClopenSet& b) { return intersection(a, b) == a; }

bool disjoint(const ClopenSet& a, const ClopenSet& b) { return intersection(a, b).empty(); }

bool contains_address(const ClopenSet& a, const Address& x) {
  require_same_arity(a.arity(), x.arity());
  return std::any_of(a.cells().begin(), a.cells().end(), [&](const Word& w) { return x.has_prefix(w); });
}

std::string to_string(const ClopenSet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.cells().size(); ++i) {
    if (i > 0) s += ", ";
    s += word_to_string(a.cells()[i]);
  }
  s += "}";
  return s;
}

ClopenSet parse_clopen(Arity arity, std::string_view text) {
  const auto body_start = text.find('{');
  const auto body_end = text.rfind('}');
  if (body_start == std::string_view::npos || body_end == std::string_view::npos || body_end < body_start) {
    throw ParseError("clopen set must be written as {cell, ...}", 0);
  }
  if (!trim(text.substr(0, body_start)).empty()) throw ParseError("unexpected text before '{'", 0);
  if (!trim(text.substr(body_end + 1)).empty()) throw ParseError("unexpected text after '}'", body_end + 1);
  std::vector<Word> cells;
  std::size_t pos = body_start + 1;
  if (trim(text.substr(pos, body_end - pos)).empty()) return ClopenSet(arity);
  while (pos <= body_end) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos || next > body_end) next = body_end;
    const auto raw = text.substr(pos, next - pos);
    const auto token = trim(raw);
    if (token.empty()) throw ParseError("empty cell", pos);
    const auto offset = pos + static_cast<std::size_t>(token.data() - raw.data());
    cells.push_back(word_from_string(arity, token, offset));
    pos = next + 1;
  }
  return ClopenSet(arity, std::move(cells));
}

}  // namespace cantordiff
