#include <doctest.h>

#include <array>
#include <set>

#include "support.hpp"

using namespace cantordiff;
using namespace cantordiff::testing;

namespace {

const char* const kG = "n=2; 0->00, 10->01, 11->1";
const char* const kSigma = "n=2; 00->01, 01->10, 10->11, 11->00";
const char* const kTau = "n=2; 00->01, 01->00, 1->1";
const char* const kSwap = "n=2; 0->1, 1->0";

GeneratingSet gens(std::initializer_list<const char*> texts) {
  std::vector<Element> out;
  for (const char* t : texts) out.push_back(el(t));
  return GeneratingSet(out);
}

bool member(const std::vector<Element>& xs, const Element& x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

// Signed permutations of the four depth-2 cells, as an independent model
// of the finite group of cell permutations with flips.
struct Signed {
  std::array<int, 4> image;
  std::array<bool, 4> flip;
  auto operator<=>(const Signed&) const = default;
};

const std::array<Word, 4> kCells{Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}};

Element to_element(const Signed& s) {
  std::vector<Rule> rules;
  for (int i = 0; i < 4; ++i) rules.push_back(Rule{kCells[i], kCells[s.image[i]], s.flip[i]});
  return reduce(Element(Arity(2), rules));
}

// a after b
Signed then(const Signed& a, const Signed& b) {
  Signed out{};
  for (int i = 0; i < 4; ++i) {
    out.image[i] = a.image[b.image[i]];
    out.flip[i] = a.flip[b.image[i]] != b.flip[i];
  }
  return out;
}

std::size_t signed_closure_size(const std::vector<Signed>& gens) {
  const Signed id{{0, 1, 2, 3}, {false, false, false, false}};
  std::set<Signed> seen{id};
  std::vector<Signed> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      const Signed next = then(queue[i], s);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

Signed random_signed(Gen& gen) {
  Signed s{{0, 1, 2, 3}, {}};
  for (int i = 3; i > 0; --i) std::swap(s.image[i], s.image[gen.below(i + 1)]);
  for (auto& f : s.flip) f = gen.below(2) == 1;
  return s;
}

}  // namespace

TEST_CASE("generating sets") {
  const GeneratingSet s = gens({kG, kG, "n=2; *->*", kSwap});
  CHECK(s.generators().size() == 2);
  CHECK(s.symmetric().size() == 3);  // the swap is its own inverse
  CHECK(GeneratingSet({Element::identity(Arity(2))}).generators().empty());
  CHECK_THROWS_AS(GeneratingSet(std::vector<Element>{}), Error);
  CHECK_THROWS_AS(GeneratingSet({el(kG), Element::identity(Arity(3))}), ArityMismatch);
}

TEST_CASE("enumerate S4") {
  const ClosureResult r = enumerate_group(gens({kSigma, kTau}));
  REQUIRE(std::holds_alternative<FiniteClosure>(r));
  const auto& c = std::get<FiniteClosure>(r);
  CHECK(c.elements.size() == 24);
  CHECK(c.multiplication_checked);
  CHECK(c.multiplication_closed);
  CHECK(c.elements.front().is_identity());
  for (const auto& e : c.elements) {
    CHECK(member(c.elements, inverse(e)));
    CHECK(std::holds_alternative<FiniteOrder>(order(e)));
  }
}

TEST_CASE("enumerate trivial and infinite groups") {
  const ClosureResult t = enumerate_group(GeneratingSet({Element::identity(Arity(2))}));
  REQUIRE(std::holds_alternative<FiniteClosure>(t));
  CHECK(std::get<FiniteClosure>(t).elements.size() == 1);

  const ClosureResult g = enumerate_group(gens({kG}), 100);
  REQUIRE(std::holds_alternative<ClosureExceeded>(g));
  CHECK(std::get<ClosureExceeded>(g).cap == 100);
  CHECK(std::get<ClosureExceeded>(g).count_reached == 100);

  const ClosureResult f = enumerate_group(gens({"n=2; *->*~"}));
  CHECK(std::get<FiniteClosure>(f).elements.size() == 2);
}

TEST_CASE("finite groups of signed cell permutations") {
  Gen gen(21);
  for (int i = 0; i < 40; ++i) {
    std::vector<Signed> model;
    std::vector<Element> elements;
    const auto k = 1 + gen.below(3);
    for (std::uint64_t j = 0; j < k; ++j) {
      model.push_back(random_signed(gen));
      elements.push_back(to_element(model.back()));
      CHECK(std::holds_alternative<FiniteOrder>(order(elements.back())));
    }
    const ClosureResult r = enumerate_group(GeneratingSet(elements));
    REQUIRE(std::holds_alternative<FiniteClosure>(r));
    const auto& c = std::get<FiniteClosure>(r);
    CHECK(c.elements.size() == signed_closure_size(model));
    if (c.multiplication_checked) CHECK(c.multiplication_closed);
  }
}

TEST_CASE("commutator") {
  const Element g = el(kG);
  CHECK(commutator(g, g).is_identity());
  CHECK(commutator(g, Element::identity(Arity(2))).is_identity());
  const Element s = el(kSigma);
  const Element t = el(kTau);
  const Element c = commutator(s, t);
  CHECK_FALSE(c.is_identity());
  CHECK(member(std::get<FiniteClosure>(enumerate_group(gens({kSigma, kTau}))).elements, c));

  Gen gen(22);
  for (int i = 0; i < 100; ++i) {
    const Element a = gen.element(Arity(2));
    const Element b = gen.element(Arity(2));
    CHECK(commutator(a, b) == compose(compose(a, b), compose(inverse(a), inverse(b))));
    CHECK(inverse(commutator(a, b)) == commutator(b, a));
  }
}

TEST_CASE("commutators fix a neighbourhood of common fixed points") {
  const Element g = el(kG);
  for (const char* s : {"n=2; 0->0, 10->11, 11->10", "n=2; 0->0, 1->1~", "n=2; 0->0, 10->11~, 11->10~",
                        "n=2; 00->00, 01->11, 10->01, 11->10"}) {
    const Element h = el(s);
    REQUIRE(std::holds_alternative<FiniteOrder>(order(h)));
    CHECK(apply(h, addr("(0)")) == addr("(0)"));
    const FixedSet fix = fixed_points(commutator(g, h));
    bool found = false;
    for (const Word& c : fix.clopen_part.cells()) found = found || std::all_of(c.begin(), c.end(), [](Digit d) {
                                                        return d == 0;
                                                      });
    CHECK_MESSAGE(found, s);
  }
}

TEST_CASE("orbit") {
  const OrbitResult r = orbit(addr("(0)"), gens({kSwap}));
  REQUIRE(std::holds_alternative<FiniteOrbit>(r));
  const auto& pts = std::get<FiniteOrbit>(r).points;
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == addr("(0)"));
  CHECK(pts[1] == addr("1(0)"));
  CHECK(coordinate(pts[1]) == q(2, 3));

  CHECK(std::get<FiniteOrbit>(orbit(addr("(1)"), gens({kG}))).points.size() == 1);

  const OrbitResult e = orbit(addr("0(1)"), gens({kG}), 50);
  REQUIRE(std::holds_alternative<OrbitExceeded>(e));
  CHECK(std::get<OrbitExceeded>(e).cap == 50);

  const GeneratingSet s4 = gens({kSigma, kTau});
  Gen gen(23);
  for (int i = 0; i < 50; ++i) {
    const OrbitResult o = orbit(gen.address(Arity(2)), s4);
    REQUIRE(std::holds_alternative<FiniteOrbit>(o));
    const auto& points = std::get<FiniteOrbit>(o).points;
    CHECK(points.size() <= 24);
    for (const auto& p : points) {
      for (const auto& s : s4.generators()) {
        CHECK(std::find(points.begin(), points.end(), apply(s, p)) != points.end());
      }
    }
  }
}

TEST_CASE("pingpong_verify") {
  const Element h1 = el(kG);
  const Element h2 = el("n=2; 0->01, 10->00, 11->1");
  CHECK(pingpong_verify(h1, h2, cset("{00}"), cset("{01}")));
  CHECK_FALSE(pingpong_verify(h1, h2, cset("{01}"), cset("{00}")));
  const Element id = Element::identity(Arity(2));
  CHECK_FALSE(pingpong_verify(id, id, cset("{0}"), cset("{1}")));
  CHECK_FALSE(pingpong_verify(h1, h2, cset("{}"), cset("{01}")));
  CHECK_FALSE(pingpong_verify(h1, h2, cset("{0}"), cset("{01}")));
  CHECK_THROWS_AS(pingpong_verify(h1, h2, cset("{00}", 3), cset("{01}")), ArityMismatch);
}

TEST_CASE("distinct_words_check") {
  const Element h1 = el(kG);
  const Element h2 = el("n=2; 0->01, 10->00, 11->1");
  CHECK(distinct_words_check(h1, h2, 8));
  CHECK_FALSE(distinct_words_check(h1, h1, 1));
  CHECK_FALSE(distinct_words_check(el("n=2; *->*~"), Element::identity(Arity(2)), 2));
  CHECK(distinct_words_check(el("n=2; *->*~"), Element::identity(Arity(2)), 1));
  CHECK_FALSE(distinct_words_check(el(kSigma), el(kTau), 8));
}

TEST_CASE("find_crossed on the hyperbolic element and the swap") {
  const auto w = find_crossed(gens({kG, kSwap}));
  REQUIRE(w.has_value());
  CHECK(w->g == el(kG));
  CHECK(w->h == el(kSwap));
  CHECK(w->p1 == addr("(0)"));
  CHECK(w->p2 == addr("(1)"));
  CHECK(w->power == 2);
  CHECK(w->a == cset("{00}"));
  CHECK(w->b == cset("{10}"));
  CHECK(w->f1 == power(el(kG), 2));
  CHECK(w->f2 == compose(el(kSwap), power(el(kG), 2)));
  CHECK(check_witness(*w));
  CHECK(pingpong_verify(w->f1, w->f2, w->a, w->b));
  CHECK(distinct_words_check(w->f1, w->f2, 8));
  CHECK(image(w->f1, cset("{00}")) == cset("{0000}"));
  CHECK(image(w->f1, cset("{10}")) == cset("{001}"));
}

TEST_CASE("find_crossed finds nothing in finite groups") {
  CHECK_FALSE(find_crossed(GeneratingSet({Element::identity(Arity(2))})).has_value());
  CHECK_FALSE(find_crossed(gens({kSigma, kTau})).has_value());
  CHECK_FALSE(find_crossed(gens({"n=2; *->*~", kSwap})).has_value());
}

TEST_CASE("check_witness rejects tampering") {
  auto w = *find_crossed(gens({kG, kSwap}));
  auto bad = w;
  bad.a = cset("{11}");
  CHECK_FALSE(check_witness(bad));
  bad = w;
  bad.power = 3;
  CHECK_FALSE(check_witness(bad));
  bad = w;
  std::swap(bad.p1, bad.p2);
  CHECK_FALSE(check_witness(bad));
  bad = w;
  bad.h = el("n=2; *->*~");
  CHECK_FALSE(check_witness(bad));
}

TEST_CASE("witnesses from random generators verify") {
  Gen gen(24);
  int found = 0;
  for (int i = 0; i < 30; ++i) {
    const GeneratingSet s({gen.element(Arity(2), 4, false), gen.element(Arity(2), 4, false)});
    if (s.generators().empty()) continue;
    const auto w = find_crossed(s, CrossedOptions{2, 64, 64});
    if (!w) continue;
    ++found;
    CHECK(check_witness(*w));
    CHECK(distinct_words_check(w->f1, w->f2, 6, 256));
  }
  CHECK(found > 0);
}

TEST_CASE("adjacent fixed pairs and monotonicity") {
  const auto pairs = adjacent_fixed_pairs(fixed_points(el(kG)));
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == addr("(0)"));
  CHECK(pairs[0].second == addr("(1)"));
  CHECK(adjacent_fixed_pairs(fixed_points(Element::identity(Arity(2)))).empty());
  // Fixed cell 00 and points 01(0), (1). Nothing of K_2 lies between 00(1)
  // and 01(0), so only one pair is adjacent with room in between.
  const auto gap = adjacent_fixed_pairs(fixed_points(el("n=2; 00->00, 010->01, 011->10, 1->11")));
  REQUIRE(gap.size() == 1);
  CHECK(gap[0].first == addr("01(0)"));
  CHECK(gap[0].second == addr("(1)"));

  CHECK(increasing_on(el(kG), addr("(0)"), addr("(1)")));
  CHECK_FALSE(increasing_on(el(kSwap), addr("(0)"), addr("(1)")));
  CHECK(unflipped_on(el(kSwap), addr("(0)"), addr("(1)")));
  CHECK_FALSE(unflipped_on(el("n=2; 0->0, 1->1~"), addr("(0)"), addr("(1)")));
  CHECK(unflipped_on(el("n=2; 0->0, 1->1~"), addr("(0)"), addr("0(1)")));
}
