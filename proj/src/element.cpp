#include "cantordiff/element.hpp"

#include <stdexcept>

namespace cantordiff {

namespace {

std::string join_cells(const std::vector<Word>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) s += ", ";
    s += word_to_string(cells[i]);
  }
  return s;
}

void check_prefix_code(Arity arity, std::vector<Word> words, const char* side) {
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (is_prefix(words[i], words[i + 1])) {
      const char* how = words[i] == words[i + 1] ? " repeats " : " is a prefix of ";
      throw InvalidElement(std::string(side) + " not a prefix code: " + word_to_string(words[i]) + how +
                           word_to_string(words[i + 1]));
    }
  }
  const ClopenSet covered(arity, std::move(words));
  if (!covered.is_all()) {
    throw InvalidElement(std::string(side) + " not a complete prefix code: missing " +
                         join_cells(complement(covered).cells()));
  }
}

bool by_domain(const Rule& a, const Rule& b) { return a.domain < b.domain; }

// Top n rules on the stack are the children u.0 .. u.(n-1) of one domain
// cell, with ranges v.a (unflipped) or v.c(a) (flipped) for a common v.
bool mergeable_family(Arity arity, const std::vector<Rule>& stack) {
  const auto n = static_cast<std::size_t>(arity.value());
  if (stack.size() < n) return false;
  const Rule& last = stack.back();
  if (last.domain.empty() || last.range.empty()) return false;
  const std::size_t dlen = last.domain.size();
  const std::size_t rlen = last.range.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Rule& r = stack[stack.size() - n + k];
    if (r.flip != last.flip || r.domain.size() != dlen || r.range.size() != rlen) return false;
    if (r.domain.back() != k) return false;
    if (!std::equal(r.domain.begin(), r.domain.end() - 1, last.domain.begin())) return false;
    const Digit expected = last.flip ? arity.complement(static_cast<Digit>(k)) : static_cast<Digit>(k);
    if (r.range.back() != expected) return false;
    if (!std::equal(r.range.begin(), r.range.end() - 1, last.range.begin())) return false;
  }
  return true;
}

void check_depth(const Word& w, std::size_t max_depth) {
  if (w.size() > max_depth) throw DepthLimitExceeded(w.size(), max_depth);
}

}  // namespace

Element::Element(Arity arity, std::vector<Rule> rules) : arity_(arity), rules_(std::move(rules)) {
  if (rules_.empty()) throw InvalidElement("element needs at least one rule");
  std::vector<Word> domains;
  std::vector<Word> ranges;
  for (const auto& r : rules_) {
    for (const Word* w : {&r.domain, &r.range}) {
      for (Digit d : *w) {
        if (d >= arity.value()) throw InvalidElement("digit out of range in cell " + word_to_string(*w));
      }
    }
    domains.push_back(r.domain);
    ranges.push_back(r.range);
  }
  check_prefix_code(arity_, std::move(domains), "domain");
  check_prefix_code(arity_, std::move(ranges), "range");
  std::sort(rules_.begin(), rules_.end(), by_domain);
}

Element::Element(Unchecked, Arity arity, std::vector<Rule> rules) : arity_(arity), rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end(), by_domain);
}

Element Element::identity(Arity arity) { return Element(Unchecked{}, arity, {Rule{{}, {}, false}}); }

Element Element::global_flip(Arity arity) { return Element(Unchecked{}, arity, {Rule{{}, {}, true}}); }

bool Element::is_identity() const noexcept {
  return rules_.size() == 1 && rules_[0].domain.empty() && rules_[0].range.empty() && !rules_[0].flip;
}

bool Element::has_flips() const noexcept {
  return std::any_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.flip; });
}

std::size_t Element::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& r : rules_) d = std::max({d, r.domain.size(), r.range.size()});
  return d;
}

std::pair<std::size_t, std::size_t> Element::rules_meeting(const Word& w) const {
  // The greatest domain <= w is the only candidate prefix of w: anything
  // between a prefix of w and w itself would extend that prefix.
  auto it = std::upper_bound(rules_.begin(), rules_.end(), w,
                             [](const Word& key, const Rule& r) { return key < r.domain; });
  if (it != rules_.begin() && is_prefix(std::prev(it)->domain, w)) {
    const auto i = static_cast<std::size_t>(std::prev(it) - rules_.begin());
    return {i, i + 1};
  }
  auto first = std::lower_bound(rules_.begin(), rules_.end(), w,
                                [](const Rule& r, const Word& key) { return r.domain < key; });
  auto last = first;
  while (last != rules_.end() && is_prefix(w, last->domain)) ++last;
  return {static_cast<std::size_t>(first - rules_.begin()), static_cast<std::size_t>(last - rules_.begin())};
}

std::size_t Element::rule_index(const Address& x) const {
  require_same_arity(arity_, x.arity());
  const auto [first, last] = rules_meeting(x.prefix(depth()));
  if (last != first + 1) throw Error("element does not cover the address");  // unreachable for valid elements
  return first;
}

Address apply(const Element& g, const Address& x) {
  const Rule& r = g.rules()[g.rule_index(x)];
  Address suffix = x.drop(r.domain.size());
  if (r.flip) suffix = suffix.complemented();
  return suffix.prepend(r.range);
}

Element compose(const Element& g, const Element& f, std::size_t max_depth) {
  require_same_arity(g.arity(), f.arity());
  const Arity arity = g.arity();
  std::vector<Rule> out;
  out.reserve(f.size() + g.size());
  for (const Rule& fr : f.rules()) {
    const auto [first, last] = g.rules_meeting(fr.range);
    for (std::size_t i = first; i < last; ++i) {
      const Rule& gr = g.rules()[i];
      Rule r;
      r.flip = fr.flip != gr.flip;
      if (is_prefix(fr.range, gr.domain)) {
        // g's domain u' = v.s sits inside f's range: restrict f to u.c^e(s).
        Word s(gr.domain.begin() + static_cast<std::ptrdiff_t>(fr.range.size()), gr.domain.end());
        r.domain = concat(fr.domain, flipped(arity, std::move(s), fr.flip));
        r.range = gr.range;
      } else {
        // f's range v = u'.s sits inside g's domain.
        Word s(fr.range.begin() + static_cast<std::ptrdiff_t>(gr.domain.size()), fr.range.end());
        r.domain = fr.domain;
        r.range = concat(gr.range, flipped(arity, std::move(s), gr.flip));
      }
      check_depth(r.domain, max_depth);
      check_depth(r.range, max_depth);
      out.push_back(std::move(r));
    }
  }
  return reduce(Element(Element::Unchecked{}, arity, std::move(out)));
}

Element inverse(const Element& g) {
  std::vector<Rule> out;
  out.reserve(g.size());
  for (const Rule& r : g.rules()) out.push_back(Rule{r.range, r.domain, r.flip});
  return reduce(Element(Element::Unchecked{}, g.arity(), std::move(out)));
}

Element reduce(const Element& g) {
  const Arity arity = g.arity();
  // Domains form a prefix code, so in sorted order a complete sibling family
  // is contiguous and, once merged, sits right after its own siblings.
  std::vector<Rule> stack;
  stack.reserve(g.size());
  for (const Rule& r : g.rules()) {
    stack.push_back(r);
    while (mergeable_family(arity, stack)) {
      Rule parent = stack.back();
      parent.domain.pop_back();
      parent.range.pop_back();
      stack.resize(stack.size() - static_cast<std::size_t>(arity.value()));
      stack.push_back(std::move(parent));
    }
  }
  return Element(Element::Unchecked{}, arity, std::move(stack));
}

bool is_reduced(const Element& g) { return reduce(g) == g; }

Element expand(const Element& g, std::size_t rule_index) {
  if (rule_index >= g.size()) {
    throw std::out_of_range("rule index " + std::to_string(rule_index) + " out of range for " +
                            std::to_string(g.size()) + " rules");
  }
  const Arity arity = g.arity();
  std::vector<Rule> out;
  out.reserve(g.size() + static_cast<std::size_t>(arity.value()) - 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Rule& r = g.rules()[i];
    if (i != rule_index) {
      out.push_back(r);
      continue;
    }
    for (int a = 0; a < arity.value(); ++a) {
      const auto d = static_cast<Digit>(a);
      Rule child = r;
      child.domain.push_back(d);
      child.range.push_back(r.flip ? arity.complement(d) : d);
      out.push_back(std::move(child));
    }
  }
  return Element(Element::Unchecked{}, arity, std::move(out));
}

Element power(const Element& g, std::int64_t k, std::size_t max_depth) {
  Element base = k < 0 ? inverse(g) : reduce(g);
  auto e = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k) + (k < 0 ? 1u : 0u);
  Element result = Element::identity(g.arity());
  while (e > 0) {
    if (e & 1u) result = compose(result, base, max_depth);
    e >>= 1u;
    if (e > 0) base = compose(base, base, max_depth);
  }
  return result;
}

ClopenSet image(const Element& g, const ClopenSet& a) {
  require_same_arity(g.arity(), a.arity());
  const Arity arity = g.arity();
  std::vector<Word> out;
  for (const Word& c : a.cells()) {
    const auto [first, last] = g.rules_meeting(c);
    for (std::size_t i = first; i < last; ++i) {
      const Rule& r = g.rules()[i];
      if (is_prefix(r.domain, c)) {
        Word s(c.begin() + static_cast<std::ptrdiff_t>(r.domain.size()), c.end());
        out.push_back(concat(r.range, flipped(arity, std::move(s), r.flip)));
      } else {
        out.push_back(r.range);
      }
    }
  }
  return ClopenSet(arity, std::move(out));
}

}  // namespace cantordiff
