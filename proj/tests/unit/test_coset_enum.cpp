#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "orbi/coset_enum.hpp"
#include "orbi/quotients.hpp"

using namespace orbi;

namespace {

bool is_h(const GeneratorId& g) { return g.family == Family::H; }

// Oracle for small symmetric groups: closure of adjacent transpositions
// acting on tuples, independent of the monomial code.
long long symmetric_order(int n) {
  std::vector<int> start(n);
  for (int k = 0; k < n; ++k) start[k] = k;
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> todo{start};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (int k = 0; k + 1 < n; ++k) {
      auto y = x;
      std::swap(y[k], y[k + 1]);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace

TEST_CASE("orders of Coxeter and reflection quotients") {
  SUBCASE("symmetric groups from paths") {
    for (int v = 1; v <= 4; ++v) {
      const auto r = enumerate_order(coxeterize(artin_from_graph(path_graph(v))));
      REQUIRE(r.status == EnumStatus::Complete);
      CHECK(r.order == symmetric_order(v + 1));
      CHECK(table_is_consistent(coxeterize(artin_from_graph(path_graph(v))), r.table));
    }
  }
  SUBCASE("normal part of the one-cone semidirect presentation") {
    const auto base = build_cor35_presentation(3, 3);
    const auto normal = restrict_to(base, [](const GeneratorId& g) { return !is_torsion_generator(g); });
    const auto r = enumerate_order(coxeterize(normal, is_reflection_like));
    REQUIRE(r.status == EnumStatus::Complete);
    CHECK(r.order == enumerate_G(3, 3, 3).count);
  }
  SUBCASE("wreath product on two strands") {
    const auto r = enumerate_order(coxeterize(build_orbifold_braid(2, 0, {2}), is_h));
    REQUIRE(r.status == EnumStatus::Complete);
    CHECK(r.order == enumerate_G(2, 1, 2).count);
  }
  SUBCASE("wreath products Z_m wr S_n") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}}) {
      const auto r = enumerate_order(coxeterize(build_orbifold_braid(n, 0, {m}), is_h));
      REQUIRE(r.status == EnumStatus::Complete);
      CHECK(r.order == order_G(m, 1, n));
    }
  }
  SUBCASE("trivial and cyclic groups") {
    Presentation p;
    p.add_generator(GeneratorId::u());
    p.add_relation(Word::of(GeneratorId::u(), 5), Word(), "S");
    CHECK(enumerate_order(p).order == 5);
    p.add_relation(Word::of(GeneratorId::u(), 2), Word(), "S");
    CHECK(enumerate_order(p).order == 1);
  }
}

TEST_CASE("relation order does not change the result") {
  const auto base = coxeterize(build_orbifold_braid(3, 0, {3}), is_h);
  const auto expected = enumerate_order(base).order;
  std::mt19937 rng(17);
  for (int k = 0; k < 8; ++k) {
    auto p = base;
    std::shuffle(p.relations.begin(), p.relations.end(), rng);
    const auto r = enumerate_order(p);
    REQUIRE(r.status == EnumStatus::Complete);
    CHECK(r.order == expected);
    CHECK(table_is_consistent(p, r.table));
  }
}

TEST_CASE("overflow is monotone in the coset budget") {
  const auto p = coxeterize(build_orbifold_braid(3, 0, {3}), is_h);
  const auto tiny = enumerate_order(p, 4);
  CHECK(tiny.status == EnumStatus::Overflow);
  std::int64_t first = -1;
  for (std::int64_t budget : {8, 16, 32, 64, 128, 256, 512, 1024, 4096, 100000}) {
    const auto r = enumerate_order(p, budget);
    if (r.status == EnumStatus::Complete) {
      if (first < 0) first = r.order;
      CHECK(r.order == first);
    } else {
      CHECK(first < 0);  // once complete, a larger budget must stay complete
    }
  }
  CHECK(first == 162);
}

TEST_CASE("infinite groups overflow") {
  const auto r = enumerate_order(build_orbifold_braid(3, 0, {2}), 5000);
  CHECK(r.status == EnumStatus::Overflow);
  CHECK(r.table.defined > 5000 - 1);
}
