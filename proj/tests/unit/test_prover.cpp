#include <random>
#include <vector>

#include "doctest.h"
#include "orbi/prover.hpp"
#include "orbi/quotients.hpp"

using namespace orbi;

namespace {

Word w(const char* s) { return parse_word(s); }

Word random_word(std::mt19937& rng, const Presentation& p, int max_len) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(p.generators.size()) - 1), coin(0, 1), len(0, max_len);
  std::vector<Letter> raw(len(rng));
  for (auto& l : raw) l = {p.generators[pick(rng)], static_cast<std::int8_t>(coin(rng) ? 1 : -1)};
  return Word(raw);
}

// a*lhs*b versus a*rhs*b for a random relation: equal by construction.
std::pair<Word, Word> random_equal_pair(std::mt19937& rng, const Presentation& p) {
  std::uniform_int_distribution<std::size_t> rel(0, p.relations.size() - 1);
  const auto& r = p.relations[rel(rng)];
  const Word a = random_word(rng, p, 3), b = random_word(rng, p, 3);
  return {concat({a, r.lhs, b}), concat({a, r.rhs, b})};
}

}  // namespace

TEST_CASE("worked examples") {
  SUBCASE("commutation at order two") {
    const auto p = build_orbifold_braid(2, 0, {2});
    const Word a = w("u*h1*u^-1*h1"), b = w("h1*u*h1*u^-1");
    const auto r = prove_equal(p, a, b);
    REQUIRE(r.proved());
    CHECK(verify_proof(p, {}, a, b, r));
  }
  SUBCASE("identical sides give an empty chain") {
    const auto p = build_orbifold_braid(3, 0, {3});
    for (const char* s : {"1", "h1", "h1*u*h2^-1*u"}) {
      const auto r = prove_equal(p, w(s), w(s));
      CHECK(r.proved());
      CHECK(r.chain.empty());
    }
  }
  SUBCASE("h1 commutes with c(3,1)") {
    // h1 does not touch strand 3. The neighbouring h2 does, and the wreath
    // quotient separates h2*c(3,1) from c(3,1)*h2.
    const auto p = build_orbifold_braid(3, 0, {3});
    const Word c = expand_pure_generator(GeneratorId::c(3, 1));
    const auto r = prove_equal(p, w("h1") * c, c * w("h1"));
    REQUIRE(r.proved());
    CHECK(verify_proof(p, {}, w("h1") * c, c * w("h1"), r));
    CHECK(r.stats.nodes > 0);
    CHECK(separate(WreathAssignment::standard_for(p), w("h2") * c, c * w("h2")));
  }
}

TEST_CASE("errors") {
  const auto p = build_orbifold_braid(2, 0, {2});
  CHECK_THROWS_AS(prove_equal(p, w("h1"), w("h2")), Error);
  ProverBudget zero;
  zero.max_nodes = 0;
  CHECK_THROWS_AS(prove_equal(p, w("h1"), w("u"), zero), Error);
  ProverBudget tight;
  tight.max_word_length = 2;
  CHECK_THROWS_AS(prove_equal(p, w("h1*u*h1"), w("u"), tight), Error);
}

TEST_CASE("obligation lists") {
  const auto p = build_orbifold_braid(3, 0, {2});
  const auto empty = verify_obligations(p, {});
  CHECK(empty.pass);
  CHECK(empty.entries.empty());

  std::vector<Obligation> obs;
  for (const auto& r : p.relations) obs.push_back({r.lhs, r.rhs, r.tag});
  const auto rep = verify_obligations(p, obs);
  CHECK(rep.pass);
  REQUIRE(rep.entries.size() == obs.size());
  for (std::size_t k = 0; k < obs.size(); ++k) CHECK(rep.entries[k].obligation.tag == obs[k].tag);

  ProverBudget small;
  small.max_nodes = 50;
  const auto fail = verify_obligations(p, {{w("h1"), w("h2"), "different"}}, small);
  CHECK_FALSE(fail.pass);
}

TEST_CASE("soundness, symmetry and stability on random equal pairs") {
  std::mt19937 rng(1234);
  const std::vector<Presentation> ps{build_orbifold_braid(3, 0, {2}), build_orbifold_braid(3, 1, {3}),
                                     build_cor35_presentation(3, 2), build_prop36_presentation(3, 2)};
  ProverBudget budget;
  budget.max_nodes = 20000;
  int proved = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto& p = ps[trial % ps.size()];
    const auto [a, b] = random_equal_pair(rng, p);
    const auto r = prove_equal(p, a, b, budget);
    if (!r.proved()) continue;
    ++proved;
    CHECK(verify_proof(p, {}, a, b, r));
    CHECK(replay(p, {}, a, r.chain, 0) == r.meet);

    const auto back = prove_equal(p, b, a, budget);
    CHECK(back.proved());
    CHECK(verify_proof(p, {}, b, a, back));
    CHECK(verify_proof(p, {}, b, a, reversed(r)));

    const auto again = prove_equal(p, a, b, budget);
    CHECK(again.chain == r.chain);
    CHECK(again.stats.nodes == r.stats.nodes);
    CHECK(again.meet == r.meet);
  }
  // one substitution is always within reach
  CHECK(proved == 120);
}

TEST_CASE("separated pairs are never proved") {
  std::mt19937 rng(555);
  const auto p = build_orbifold_braid(3, 0, {3});
  const auto asgn = WreathAssignment::standard_for(p);
  ProverBudget budget;
  budget.max_nodes = 3000;
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const Word a = random_word(rng, p, 6), b = random_word(rng, p, 6);
    if (!separate(asgn, a, b)) continue;
    ++checked;
    CHECK_FALSE(prove_equal(p, a, b, budget).proved());
  }
  CHECK(checked == 40);
}

TEST_CASE("larger budgets keep proved results") {
  std::mt19937 rng(8);
  const auto p = build_orbifold_braid(3, 0, {2});
  for (int trial = 0; trial < 30; ++trial) {
    auto [a, b] = random_equal_pair(rng, p);
    const auto [c, d] = random_equal_pair(rng, p);
    a = a * c;
    b = b * d;
    bool seen = false;
    for (std::int64_t nodes : {200, 2000, 20000}) {
      ProverBudget budget;
      budget.max_nodes = nodes;
      const bool ok = prove_equal(p, a, b, budget).proved();
      if (seen) CHECK(ok);
      seen = seen || ok;
    }
  }
}

TEST_CASE("lemmas shorten searches and replay through their own proofs") {
  const auto p = build_orbifold_braid(3, 0, {3});
  const Word c = expand_pure_generator(GeneratorId::c(3, 1));
  const auto base = prove_equal(p, w("h1") * c, c * w("h1"));
  REQUIRE(base.proved());
  std::vector<Lemma> lemmas{{w("h1") * c, c * w("h1"), "h1-commutes-c31", base, {}}};
  CHECK(verify_lemmas(p, lemmas));

  const Word lhs = w("h1^3") * c, rhs = c * w("h1^3");
  const auto with = prove_equal(p, lhs, rhs, {}, lemmas);
  REQUIRE(with.proved());
  CHECK(verify_proof(p, lemmas, lhs, rhs, with));

  std::vector<Lemma> forged{{w("h1"), w("h2"), "forged", base, {}}};
  CHECK_FALSE(verify_lemmas(p, forged));
}
