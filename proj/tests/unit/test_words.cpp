#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "orbi/words.hpp"

using namespace orbi;

namespace {

// Reference reduction on (label, sign) pairs with an explicit stack; it shares
// no code with Word.
using Plain = std::vector<std::pair<std::string, int>>;

Plain plain_reduce(const Plain& in) {
  Plain st;
  for (const auto& x : in) {
    if (!st.empty() && st.back().first == x.first && st.back().second == -x.second) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  return st;
}

Plain plain_of(const Word& w) {
  Plain p;
  for (const auto& l : w) p.emplace_back(l.gen.label(), l.sign);
  return p;
}

const std::vector<GeneratorId> kAlphabet{GeneratorId::h(1), GeneratorId::h(2), GeneratorId::u(),
                                         GeneratorId::uprime(), GeneratorId::t(), GeneratorId::hu(1)};

std::vector<Letter> random_letters(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, static_cast<int>(kAlphabet.size()) - 1), coin(0, 1);
  std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
  for (auto& l : out) l = {kAlphabet[static_cast<std::size_t>(pick(rng))], static_cast<std::int8_t>(coin(rng) ? 1 : -1)};
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] == w[k - 1].inverse()) return false;
  }
  return true;
}

Word W(const char* s) { return parse_word(s); }

}  // namespace

TEST_CASE("free reduction examples") {
  const Letter h1{GeneratorId::h(1), 1};
  CHECK(free_reduce(std::vector<Letter>{h1, h1.inverse()}).empty());
  // a21 * c21 expands to h1 h1 h1^-1 u h1, which reduces to h1 u h1.
  const Letter u{GeneratorId::u(), 1};
  CHECK(free_reduce(std::vector<Letter>{h1, h1, h1.inverse(), u, h1}) == W("h1*u*h1"));
  std::mt19937 rng(7);
  auto raw = random_letters(rng, 12);
  const Word w{std::span<const Letter>(raw)};
  CHECK(concat(w, invert(w)).empty());
}

TEST_CASE("concat, invert and alternating words") {
  CHECK(concat(W("h1*u"), W("u^-1*h1")) == W("h1^2"));
  CHECK(concat(Word(), W("h2*u")) == W("h2*u"));
  CHECK(concat(W("h1*u*h1"), W("u")) == W("h1*u*h1*u"));
  CHECK(invert(W("h1*u")) == W("u^-1*h1^-1"));
  CHECK(invert(Word()).empty());
  CHECK(invert(W("h1*u*h1")) == W("h1^-1*u^-1*h1^-1"));
  const Word a = W("h1"), b = W("u");
  CHECK(alternating_word(a, b, 3) == W("h1*u*h1"));
  CHECK(alternating_word(a, b, 0).empty());
  CHECK(alternating_word(a, b, 4) == W("h1*u*h1*u"));
}

TEST_CASE("text syntax") {
  CHECK(W("1").empty());
  CHECK_THROWS_AS(W(""), Error);
  CHECK(W("u'") == Word::of(GeneratorId::uprime()));
  CHECK(W("ubar^2") == Word::of(GeneratorId::ubar(), 2));
  CHECK(W("a(3,1)") == Word::of(GeneratorId::a(3, 1)));
  CHECK(W("c(2,1)^-1") == Word::of(GeneratorId::c(2, 1), -1));
  CHECK(W("hu'2") == Word::of(GeneratorId::huprime(2)));
  CHECK(W("(h1*u)^2") == W("h1*u*h1*u"));
  CHECK(W("h1*u*h1*u^-1").str() == "h1*u*h1*u^-1");
  CHECK_THROWS_AS(parse_word("h1**"), Error);
  CHECK_THROWS_AS(parse_word("zz"), Error);
}

TEST_CASE("letter order puts + before - and families in declaration order") {
  const Letter hp{GeneratorId::h(1), 1}, hm{GeneratorId::h(1), -1}, up{GeneratorId::u(), 1};
  CHECK(hp < hm);
  CHECK(hm < up);
  CHECK(W("h1") < W("h1*h1"));
  CHECK(W("h1*h2") < W("h2*h1"));
}

TEST_CASE("property: word algebra laws against the reference reduction") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto ra = random_letters(rng, 14), rb = random_letters(rng, 14), rc = random_letters(rng, 14);
    const Word a{std::span<const Letter>(ra)}, b{std::span<const Letter>(rb)}, c{std::span<const Letter>(rc)};
    Plain pa;
    for (const auto& l : ra) pa.emplace_back(l.gen.label(), l.sign);
    REQUIRE(plain_of(a) == plain_reduce(pa));
    REQUIRE(is_reduced(a));
    REQUIRE(free_reduce(a.letters()) == a);
    REQUIRE(concat(concat(a, b), c) == concat(a, concat(b, c)));
    REQUIRE(concat(Word(), a) == a);
    REQUIRE(concat(a, Word()) == a);
    REQUIRE(invert(invert(a)) == a);
    REQUIRE(invert(concat(a, b)) == concat(invert(b), invert(a)));
    REQUIRE(concat(a, invert(a)).empty());
    REQUIRE(parse_word(a.str()) == a);
    const int k = trial % 7;
    REQUIRE(alternating_word(a, b, k + 1) == concat(alternating_word(a, b, k), k % 2 == 0 ? a : b));
    REQUIRE(power(a, k) == (k == 0 ? Word() : concat(power(a, k - 1), a)));
  }
}
