#include "cantordiff/subgroup.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cantordiff/text_format.hpp"

namespace cantordiff {

namespace {

struct AddressLess {
  bool operator()(const Address& a, const Address& b) const { return compare(a, b) < 0; }
};

bool strictly_between(const Address& lo, const Address& x, const Address& hi) {
  return compare(lo, x) < 0 && compare(x, hi) < 0;
}

// Some point of K_n lies strictly between a < b.
bool exists_between(const Address& a, const Address& b) {
  std::size_t i = 0;
  while (a.digit(i) == b.digit(i)) ++i;
  if (b.digit(i) - a.digit(i) >= 2) return true;
  const Arity arity = a.arity();
  return !(a.drop(i + 1) == Address::constant(arity, arity.top()) && b.drop(i + 1) == Address::constant(arity, 0));
}

// Rules whose domain cell meets the closed interval [p1, p2], in line order.
std::vector<const Rule*> rules_on(const Element& g, const Address& p1, const Address& p2) {
  std::vector<const Rule*> out;
  for (const Rule& r : g.rules()) {
    if (compare(right_corner(g.arity(), r.domain), p1) < 0) continue;
    if (compare(left_corner(g.arity(), r.domain), p2) > 0) continue;
    out.push_back(&r);
  }
  return out;
}

bool fixed_point_between(const FixedSet& fix, const Address& p1, const Address& p2) {
  const Arity arity = p1.arity();
  for (const auto& p : fix.isolated) {
    if (strictly_between(p1, p.point, p2)) return true;
  }
  for (const Word& c : fix.clopen_part.cells()) {
    if (compare(right_corner(arity, c), p1) > 0 && compare(left_corner(arity, c), p2) < 0) return true;
  }
  return false;
}

// Ping-pong witness near the endpoint of [p1, p2] that h pushes inside.
std::optional<CrossedWitness> build_witness(const Element& g, const Element& h, const Address& p1,
                                            const Address& p2, bool near_left, const CrossedOptions& opt) {
  const Arity arity = g.arity();
  const Address& end = near_left ? p1 : p2;
  const Address probe = apply(h, end);
  // g has no fixed point in (p1, p2) and is increasing there, so g(x) - x
  // has one sign on the interval; orient g so that it moves points toward `end`.
  const bool toward_left = compare(apply(g, probe), probe) < 0;
  const std::int64_t sign = toward_left == near_left ? 1 : -1;
  const Element step = power(g, sign, opt.max_depth);

  for (std::size_t k = 1; k <= opt.max_depth; ++k) {
    const Word a_word = end.prefix(k);
    const auto [first, last] = h.rules_meeting(a_word);
    if (last != first + 1 || !is_prefix(h.rules()[first].domain, a_word)) continue;
    const ClopenSet a(arity, std::vector<Word>{a_word});
    const ClopenSet b = image(h, a);
    const Word& b_word = b.cells().front();
    if (comparable(a_word, b_word)) continue;
    if (!strictly_between(p1, left_corner(arity, b_word), p2) ||
        !strictly_between(p1, right_corner(arity, b_word), p2)) {
      continue;
    }
    const ClopenSet both = set_union(a, b);
    ClopenSet pushed = b;
    for (int n = 1; n <= opt.max_power; ++n) {
      pushed = image(step, pushed);
      if (!is_subset(pushed, a)) continue;
      Element f1 = power(g, sign * n, opt.max_depth);
      if (!is_subset(image(f1, both), a)) continue;
      Element f2 = compose(h, f1, opt.max_depth);
      CrossedWitness w{g, h, p1, p2, sign * n, std::move(f1), std::move(f2), a, b};
      if (check_witness(w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

GeneratingSet::GeneratingSet(const std::vector<Element>& generators)
    : arity_(generators.empty() ? throw Error("generating set needs at least one element")
                                : generators.front().arity()) {
  for (const auto& g : generators) {
    require_same_arity(arity_, g.arity());
    Element r = reduce(g);
    if (r.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), r) == generators_.end()) generators_.push_back(r);
  }
  symmetric_ = generators_;
  for (const auto& g : generators_) {
    Element inv = inverse(g);
    if (std::find(symmetric_.begin(), symmetric_.end(), inv) == symmetric_.end()) symmetric_.push_back(inv);
  }
}

ClosureResult enumerate_group(const GeneratingSet& gens, std::size_t cap, std::size_t max_depth) {
  std::vector<Element> elements{Element::identity(gens.arity())};
  std::unordered_map<std::string, std::size_t> index{{format_element(elements.front()), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens.symmetric()) {
      Element next = compose(elements[i], s, max_depth);
      auto key = format_element(next);
      if (index.contains(key)) continue;
      if (elements.size() >= cap) return ClosureExceeded{cap, elements.size()};
      index.emplace(std::move(key), elements.size());
      elements.push_back(std::move(next));
    }
  }

  FiniteClosure out;
  bool closed = std::all_of(elements.begin(), elements.end(),
                            [&](const Element& e) { return index.contains(format_element(inverse(e))); });
  if (elements.size() <= kMultiplicationCheckLimit) {
    for (std::size_t i = 0; i < elements.size() && closed; ++i) {
      for (std::size_t j = 0; j < elements.size() && closed; ++j) {
        closed = index.contains(format_element(compose(elements[i], elements[j], max_depth)));
      }
    }
    out.multiplication_checked = true;
    out.multiplication_closed = closed;
  }
  out.elements = std::move(elements);
  return out;
}

Element commutator(const Element& g, const Element& h, std::size_t max_depth) {
  return compose(compose(g, h, max_depth), compose(inverse(g), inverse(h), max_depth), max_depth);
}

OrbitResult orbit(const Address& x, const GeneratingSet& gens, std::size_t cap) {
  require_same_arity(x.arity(), gens.arity());
  std::vector<Address> points{x};
  std::set<Address, AddressLess> seen{x};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const auto& s : gens.symmetric()) {
      Address y = apply(s, points[i]);
      if (seen.contains(y)) continue;
      if (points.size() >= cap) return OrbitExceeded{cap};
      seen.insert(y);
      points.push_back(std::move(y));
    }
  }
  return FiniteOrbit{std::move(points)};
}

bool pingpong_verify(const Element& h1, const Element& h2, const ClopenSet& a, const ClopenSet& b) {
  require_same_arity(h1.arity(), h2.arity());
  require_same_arity(h1.arity(), a.arity());
  require_same_arity(h1.arity(), b.arity());
  if (a.empty() || b.empty() || !disjoint(a, b)) return false;
  const ClopenSet both = set_union(a, b);
  return is_subset(image(h1, both), a) && is_subset(image(h2, both), b);
}

bool distinct_words_check(const Element& f1, const Element& f2, int max_length, std::size_t max_depth) {
  require_same_arity(f1.arity(), f2.arity());
  if (max_length < 1) throw Error("word length bound must be at least 1");
  const Element letters[2] = {reduce(f1), reduce(f2)};
  std::unordered_set<std::string> seen;
  std::vector<Element> level;
  for (const auto& l : letters) {
    if (!seen.insert(format_element(l)).second) return false;
    level.push_back(l);
  }
  for (int len = 2; len <= max_length; ++len) {
    std::vector<Element> next;
    next.reserve(2 * level.size());
    for (const auto& w : level) {
      for (const auto& l : letters) {
        Element e = compose(w, l, max_depth);
        if (!seen.insert(format_element(e)).second) return false;
        next.push_back(std::move(e));
      }
    }
    level = std::move(next);
  }
  return true;
}

std::vector<Element> products_up_to(const GeneratingSet& gens, int max_length, std::size_t max_depth) {
  std::vector<Element> out;
  std::unordered_set<std::string> seen{format_element(Element::identity(gens.arity()))};
  std::vector<Element> level{Element::identity(gens.arity())};
  for (int len = 1; len <= max_length && !level.empty(); ++len) {
    std::map<std::string, Element> fresh;
    for (const auto& w : level) {
      for (const auto& s : gens.symmetric()) {
        Element e = compose(w, s, max_depth);
        auto key = format_element(e);
        if (seen.contains(key)) continue;
        fresh.emplace(std::move(key), std::move(e));
      }
    }
    level.clear();
    for (auto& [key, e] : fresh) {
      seen.insert(key);
      level.push_back(e);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<std::pair<Address, Address>> adjacent_fixed_pairs(const FixedSet& fix) {
  enum class Kind { isolated, left, right };
  std::vector<std::pair<Address, Kind>> marks;
  const Arity arity = fix.clopen_part.arity();
  for (const auto& p : fix.isolated) marks.emplace_back(p.point, Kind::isolated);
  for (const Word& c : fix.clopen_part.cells()) {
    marks.emplace_back(left_corner(arity, c), Kind::left);
    marks.emplace_back(right_corner(arity, c), Kind::right);
  }
  std::sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  std::vector<std::pair<Address, Address>> out;
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    // From a left corner the next mark is the same cell's right corner.
    if (marks[i].second == Kind::left) continue;
    if (exists_between(marks[i].first, marks[i + 1].first)) out.emplace_back(marks[i].first, marks[i + 1].first);
  }
  return out;
}

bool unflipped_on(const Element& g, const Address& p1, const Address& p2) {
  const auto rules = rules_on(g, p1, p2);
  return std::none_of(rules.begin(), rules.end(), [](const Rule* r) { return r->flip; });
}

bool increasing_on(const Element& g, const Address& p1, const Address& p2) {
  const auto rules = rules_on(g, p1, p2);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i]->flip) return false;
    if (i > 0 && !(rules[i - 1]->range < rules[i]->range)) return false;
  }
  return true;
}

bool check_witness(const CrossedWitness& w) {
  const Arity arity = w.g.arity();
  if (compare(w.p1, w.p2) >= 0) return false;
  if (apply(w.g, w.p1) != w.p1 || apply(w.g, w.p2) != w.p2) return false;
  if (fixed_point_between(fixed_points(w.g), w.p1, w.p2)) return false;
  if (!increasing_on(w.g, w.p1, w.p2) || !unflipped_on(w.h, w.p1, w.p2)) return false;
  if (!strictly_between(w.p1, apply(w.h, w.p1), w.p2) && !strictly_between(w.p1, apply(w.h, w.p2), w.p2)) {
    return false;
  }
  const std::size_t depth = std::max<std::size_t>(kDefaultMaxDepth, std::max(w.f1.depth(), w.f2.depth()) * 2);
  if (w.f1 != power(w.g, w.power, depth) || w.f2 != compose(w.h, w.f1, depth)) return false;
  if (w.a.arity() != arity || w.b.arity() != arity) return false;
  return pingpong_verify(w.f1, w.f2, w.a, w.b);
}

std::optional<CrossedWitness> find_crossed(const GeneratingSet& gens, const CrossedOptions& options) {
  if (options.search_depth < 1) throw Error("search depth must be at least 1");
  const auto candidates = products_up_to(gens, options.search_depth, options.max_depth);
  for (const auto& g : candidates) {
    for (const auto& [p1, p2] : adjacent_fixed_pairs(fixed_points(g))) {
      if (!increasing_on(g, p1, p2)) continue;
      for (const auto& h : candidates) {
        if (!unflipped_on(h, p1, p2)) continue;
        std::optional<CrossedWitness> w;
        if (strictly_between(p1, apply(h, p1), p2)) w = build_witness(g, h, p1, p2, true, options);
        if (!w && strictly_between(p1, apply(h, p2), p2)) w = build_witness(g, h, p1, p2, false, options);
        if (w) return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace cantordiff
