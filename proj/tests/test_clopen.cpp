#include <doctest.h>

#include "support.hpp"

using namespace cantordiff;
using namespace cantordiff::testing;

namespace {

// Membership oracle: every clopen set is decided by digits up to its depth.
bool member(const ClopenSet& s, const Word& w) {
  return std::any_of(s.cells().begin(), s.cells().end(), [&](const Word& c) { return is_prefix(c, w); });
}

// All words of the given length: two clopen sets of depth <= len are equal
// iff they contain the same such cells.
std::vector<Word> all_words(Arity arity, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (int d = 0; d < arity.value(); ++d) {
        Word c = w;
        c.push_back(static_cast<Digit>(d));
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("normalize") {
  const Arity two(2);
  CHECK(ClopenSet(two, {{0, 0}, {0, 1}}) == cset("{0}"));
  CHECK(ClopenSet(two, {{0}, {0, 1}}) == cset("{0}"));
  CHECK(ClopenSet(two, {{0, 0}, {1, 0}}).cells() == std::vector<Word>{{0, 0}, {1, 0}});
  CHECK(ClopenSet(two, {{0}, {1}}).is_all());
  CHECK(ClopenSet(two, {{0, 0}, {0, 1}, {1, 0}, {1, 1, 0}, {1, 1, 1}}).is_all());
  CHECK(ClopenSet(two, {}).empty());
  CHECK(cset("{00, 01, 02}", 3) == cset("{0}", 3));
  CHECK(cset("{00, 01}", 3).cells().size() == 2);
}

TEST_CASE("normalize is idempotent and order independent") {
  Gen gen(21);
  for (int i = 0; i < 300; ++i) {
    const Arity arity(2 + static_cast<int>(gen.below(2)));
    std::vector<Word> cells;
    for (int k = 0; k < 6; ++k) cells.push_back(gen.word(arity, 0, 3));
    const ClopenSet a(arity, cells);
    CHECK(ClopenSet(arity, a.cells()) == a);
    std::reverse(cells.begin(), cells.end());
    CHECK(ClopenSet(arity, cells) == a);
    for (const auto& w : all_words(arity, 3)) {
      const bool expected = std::any_of(cells.begin(), cells.end(), [&](const Word& c) { return is_prefix(c, w); });
      CHECK(member(a, w) == expected);
    }
  }
}

TEST_CASE("boolean operations") {
  CHECK(set_union(cset("{00}"), cset("{01}")) == cset("{0}"));
  CHECK(intersection(cset("{0}"), cset("{01}")) == cset("{01}"));
  CHECK(complement(cset("{0}")) == cset("{1}"));
  CHECK(complement(cset("{}")) == cset("{*}"));
  CHECK(complement(cset("{*}")) == cset("{}"));
  CHECK(complement(cset("{01}")) == cset("{00, 1}"));
  CHECK(difference(cset("{*}"), cset("{10}")) == cset("{0, 11}"));
  CHECK_THROWS_AS(set_union(cset("{0}"), cset("{0}", 3)), ArityMismatch);
}

TEST_CASE("subset and membership") {
  CHECK(is_subset(cset("{000}"), cset("{0}")));
  CHECK(is_subset(cset("{0}"), cset("{00, 01}")));
  CHECK_FALSE(is_subset(cset("{0}"), cset("{00}")));
  CHECK(is_subset(cset("{}"), cset("{}")));
  CHECK_FALSE(contains_address(cset("{00}"), addr("(10)")));
  CHECK(contains_address(cset("{1}"), addr("(10)")));
  CHECK(contains_address(cset("{*}"), addr("(0)")));
}

TEST_CASE("boolean algebra laws on random sets") {
  Gen gen(33);
  for (int i = 0; i < 300; ++i) {
    const Arity arity(2 + static_cast<int>(gen.below(2)));
    const ClopenSet a = gen.clopen(arity);
    const ClopenSet b = gen.clopen(arity);
    const ClopenSet c = gen.clopen(arity);
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(intersection(a, b) == intersection(b, a));
    CHECK(set_union(a, set_union(b, c)) == set_union(set_union(a, b), c));
    CHECK(intersection(a, intersection(b, c)) == intersection(intersection(a, b), c));
    CHECK(set_union(a, intersection(a, b)) == a);
    CHECK(intersection(a, set_union(a, b)) == a);
    CHECK(complement(complement(a)) == a);
    CHECK(complement(set_union(a, b)) == intersection(complement(a), complement(b)));
    CHECK(complement(intersection(a, b)) == set_union(complement(a), complement(b)));
    CHECK(intersection(a, complement(a)).empty());
    CHECK(set_union(a, complement(a)).is_all());
    CHECK(is_subset(a, b) == (set_union(a, b) == b));
    for (int k = 0; k < 5; ++k) {
      const Address x = gen.address(arity);
      CHECK(contains_address(set_union(a, b), x) == (contains_address(a, x) || contains_address(b, x)));
      CHECK(contains_address(intersection(a, b), x) == (contains_address(a, x) && contains_address(b, x)));
      CHECK(contains_address(complement(a), x) == !contains_address(a, x));
    }
  }
}

TEST_CASE("clopen text") {
  CHECK(to_string(cset("{00, 01, 1}")) == "{*}");
  CHECK(to_string(cset("{ 10 ,00 }")) == "{00, 10}");
  CHECK(to_string(cset("{}")) == "{}");
  CHECK(to_string(cset("{*}")) == "{*}");
  CHECK_THROWS_AS(cset("{0,,1}"), ParseError);
  CHECK_THROWS_AS(cset("{2}"), ParseError);
  CHECK_THROWS_AS(cset("0, 1"), ParseError);
  CHECK_THROWS_AS(cset("{0} x"), ParseError);
}
