#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "orbi/presentations.hpp"

using namespace orbi;

namespace {

Word w(const char* s) { return parse_word(s); }

// Relator lhs*rhs^-1 as a list of letters, compared up to rotation and
// inversion. Written against plain vectors so it does not lean on the prover.
std::vector<Letter> relator_letters(const Word& lhs, const Word& rhs) {
  std::vector<Letter> raw(lhs.begin(), lhs.end());
  for (auto it = rhs.letters().rbegin(); it != rhs.letters().rend(); ++it) raw.push_back(it->inverse());
  Word reduced(raw);
  std::vector<Letter> out(reduced.begin(), reduced.end());
  // cyclic reduction
  while (out.size() >= 2 && out.front() == out.back().inverse()) {
    out.erase(out.begin());
    out.pop_back();
  }
  return out;
}

bool cyclic_match(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t k = 0; k < a.size() && ok; ++k) ok = a[(k + r) % a.size()] == b[k];
    if (ok) return true;
  }
  return false;
}

bool has_relation(const Presentation& p, const Word& lhs, const Word& rhs) {
  const auto want = relator_letters(lhs, rhs);
  std::vector<Letter> want_inv;
  for (auto it = want.rbegin(); it != want.rend(); ++it) want_inv.push_back(it->inverse());
  return std::any_of(p.relations.begin(), p.relations.end(), [&](const Relation& r) {
    const auto got = relator_letters(r.lhs, r.rhs);
    return cyclic_match(got, want) || cyclic_match(got, want_inv);
  });
}

std::vector<std::string> labels(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& g : p.generators) out.push_back(g.label());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("orbifold braid group with one cone, three strands") {
  const auto p = build_orbifold_braid(3, 0, {3});
  CHECK(labels(p) == std::vector<std::string>{"h1", "h2", "u"});
  CHECK(p.relations.size() == 4);
  CHECK(has_relation(p, w("u^3"), Word()));
  CHECK(has_relation(p, w("h1*h2*h1"), w("h2*h1*h2")));
  CHECK(has_relation(p, w("u*h2"), w("h2*u")));
  CHECK(has_relation(p, w("h1*u*h1*u"), w("u*h1*u*h1")));
}

TEST_CASE("orbifold braid group on two strands has two relations") {
  for (int m = 2; m <= 5; ++m) {
    const auto p = build_orbifold_braid(2, 0, {m});
    CHECK(p.relations.size() == 2);
    CHECK(has_relation(p, power(w("u"), m), Word()));
    CHECK(has_relation(p, w("h1*u*h1*u"), w("u*h1*u*h1")));
  }
}

TEST_CASE("orbifold braid group with a puncture") {
  const auto p = build_orbifold_braid(3, 1, {2});
  CHECK(labels(p) == std::vector<std::string>{"h1", "h2", "t", "u"});
  CHECK(has_relation(p, w("t*h2"), w("h2*t")));
  CHECK(has_relation(p, w("h1*t*h1*t"), w("t*h1*t*h1")));
  CHECK(has_relation(p, w("t*h1^-1*u*h1"), w("h1^-1*u*h1*t")));
  // punctures have no torsion relation
  CHECK_FALSE(has_relation(p, w("t^2"), Word()));
}

TEST_CASE("pure orbifold braid group presentations") {
  const auto p = build_pure_orbifold(2, 0, {3});
  CHECK(p.generators.size() == 3);
  CHECK(p.has_generator(GeneratorId::a(2, 1)));
  CHECK(p.has_generator(GeneratorId::c(1, 1)));
  CHECK(p.has_generator(GeneratorId::c(2, 1)));
  CHECK(has_relation(p, w("c(1,1)^3"), Word()));
  CHECK(has_relation(p, w("c(2,1)^3"), Word()));
  CHECK(has_relation(p, w("a(2,1)*c(2,1)*c(1,1)"), w("c(1,1)*a(2,1)*c(2,1)")));
  CHECK(has_relation(p, w("c(1,1)*a(2,1)*c(2,1)"), w("c(2,1)*c(1,1)*a(2,1)")));

  const auto q = build_pure_orbifold(1, 1, {2});
  CHECK(q.generators.size() == 2);
  CHECK(q.has_generator(GeneratorId::b(1, 1)));
  CHECK(q.relations.size() == 1);
  CHECK(has_relation(q, w("c(1,1)^2"), Word()));
}

TEST_CASE("pure generators expand to their defining words") {
  CHECK(expand_pure_generator(GeneratorId::a(2, 1)) == w("h1^2"));
  CHECK(expand_pure_generator(GeneratorId::c(2, 1)) == w("h1^-1*u*h1"));
  CHECK(expand_pure_generator(GeneratorId::a(3, 1)) == w("h2^-1*h1^2*h2"));
  CHECK(expand_pure_generator(GeneratorId::c(1, 1)) == w("u"));
  CHECK(expand_pure_generator(GeneratorId::b(3, 1)) == w("h2^-1*h1^-1*t*h1*h2"));
  CHECK(expand_pure_generator(GeneratorId::c(3, 2)) == w("h2^-1*h1^-1*u2*h1*h2"));
  CHECK(expand_pure_word(w("a(2,1)*c(2,1)")) == w("h1*u*h1"));
  CHECK(ascending_h(3) == w("h1*h2*h3"));
}

TEST_CASE("two-cone rewritten presentation") {
  const auto p = build_prop32_presentation(4, 2, 2);
  CHECK(has_relation(p, w("h1*hu1"), w("hu1*h1")));
  CHECK(has_relation(p, w("(h1*hu1*h2)^2"), w("(h2*h1*hu1)^2")));
  const auto q = build_prop32_presentation(4, 3, 2);
  CHECK(has_relation(q, w("u^3"), Word()));
  CHECK(has_relation(q, w("u'^2"), Word()));
  CHECK(has_relation(q, w("u*u'"), w("u'*u")));
  CHECK(has_relation(q, w("u*hu1*u^-1"), w("hu1^-1*h1*hu1")));
  CHECK(has_relation(q, w("h1*hu1*h1"), w("hu1*h1*hu1")));
  p.validate();
  q.validate();
}

TEST_CASE("cone and puncture rewritten presentation") {
  const auto p = build_prop36_presentation(3, 2);
  CHECK(has_relation(p, w("h2*hu2"), w("hu2*h2")));
  CHECK(has_relation(p, w("ubar^2"), Word()));
  CHECK(has_relation(p, w("ubar*hu2*ubar^-1"), w("hu2^-1*h2*hu2")));
  const auto q = build_prop36_presentation(4, 3);
  CHECK(has_relation(q, w("t*h2"), w("h2*t")));
  CHECK(has_relation(q, w("t*h3"), w("h3*t")));
  CHECK(has_relation(q, w("t*hu3"), w("hu3*t")));
  CHECK(has_relation(q, w("h3*hu3*h3"), w("hu3*h3*hu3")));
}

TEST_CASE("one-cone semidirect presentation on two strands") {
  for (int m = 2; m <= 4; ++m) {
    const auto p = build_cor35_presentation(2, m);
    CHECK(p.relations.size() == 4);
    CHECK(has_relation(p, w("u*h1*u^-1"), w("hu1")));
    CHECK(has_relation(p, w("u*hu1*u^-1"), w("hu1^-1*h1*hu1")));
    CHECK(has_relation(p, power(w("u"), m), Word()));
  }
}

TEST_CASE("three-strand two-cone variant") {
  SUBCASE("ranges") {
    CHECK(remark34_ranges(2) == std::make_pair(std::vector<int>{0}, std::vector<int>{0}));
    CHECK(remark34_ranges(3) == std::make_pair(std::vector<int>{0}, std::vector<int>{0, 1}));
    CHECK(remark34_ranges(4) == std::make_pair(std::vector<int>{0, 1}, std::vector<int>{0, 1}));
    CHECK(remark34_ranges(5) == std::make_pair(std::vector<int>{0, 1}, std::vector<int>{0, 1, 2}));
    CHECK_THROWS_AS(remark34_ranges(1), Error);
  }
  SUBCASE("orders two and two keep the plain presentation") {
    const auto p = build_remark34_presentation(2, 2);
    const auto q = build_prop32_presentation(3, 2, 2);
    CHECK(p.relations.size() == q.relations.size());
  }
  SUBCASE("extra relations replace the single R3") {
    for (auto [m, mp] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {4, 3}}) {
      const auto p = build_remark34_presentation(m, mp);
      const auto extra = std::count_if(p.relations.begin(), p.relations.end(),
                                       [](const Relation& r) { return r.tag == "R3'"; });
      const auto [ks, kps] = remark34_ranges(m);
      const auto [ks2, kps2] = remark34_ranges(mp);
      CHECK(extra == static_cast<long>(ks.size() + kps.size() + ks2.size() + kps2.size()));
      CHECK(std::none_of(p.relations.begin(), p.relations.end(), [](const Relation& r) { return r.tag == "R3"; }));
      p.validate();
    }
  }
  SUBCASE("listed relation at (2,3)") {
    const auto p = build_remark34_presentation(2, 3);
    CHECK(has_relation(p, w("(h1*hu1*hu'2)^2"), w("(hu'2*h1*hu1)^2")));
    CHECK(has_relation(p, w("(h1*hu1*h2)^2"), w("(h2*h1*hu1)^2")));
    CHECK(has_relation(p, w("(h1*hu1*hu'2^-1*h2*hu'2)^2"), w("(hu'2^-1*h2*hu'2*h1*hu1)^2")));
  }
}

TEST_CASE("Artin presentations from weighted graphs") {
  const auto two = artin_from_graph(path_graph(2, 3));
  CHECK(two.generators.size() == 2);
  CHECK(two.relations.size() == 1);

  WeightedGraph iso;
  iso.vertex_count = 2;
  const auto comm = artin_from_graph(iso);
  REQUIRE(comm.relations.size() == 1);
  CHECK(comm.relations[0].lhs.size() == 2);

  WeightedGraph free;
  free.vertex_count = 2;
  free.edges.push_back({1, 2, WeightedGraph::kInfinity});
  CHECK(artin_from_graph(free).relations.empty());

  const auto four = artin_from_graph(path_graph(2, 4));
  REQUIRE(four.relations.size() == 1);
  CHECK(four.relations[0].lhs.size() == 4);

  WeightedGraph tri;
  tri.vertex_count = 3;
  tri.edges = {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}};
  tri.triple_marks.push_back({1, 2, 3});
  CHECK(artin_from_graph(tri).relations.size() == 4);

  WeightedGraph bad;
  bad.vertex_count = 2;
  bad.edges.push_back({1, 2, 2});
  CHECK_THROWS_AS(artin_from_graph(bad), Error);
  WeightedGraph bad_mark;
  bad_mark.vertex_count = 3;
  bad_mark.edges = {{1, 2, 3}};
  bad_mark.triple_marks.push_back({1, 2, 3});
  CHECK_THROWS_AS(artin_from_graph(bad_mark), Error);
}

TEST_CASE("coxeterize and restrict") {
  const auto p = build_orbifold_braid(3, 0, {3});
  const auto c = coxeterize(p);
  CHECK(c.relations.size() == p.relations.size() + 2);
  CHECK(has_relation(c, w("h1^2"), Word()));
  CHECK_FALSE(has_relation(c, w("u^2"), Word()));

  const auto r = restrict_to(build_cor35_presentation(3, 2), [](const GeneratorId& g) { return !is_torsion_generator(g); });
  CHECK(labels(r) == std::vector<std::string>{"h1", "h2", "hu1"});
  for (const auto& rel : r.relations) {
    CHECK(r.covers(rel.lhs));
    CHECK(r.covers(rel.rhs));
  }
}

TEST_CASE("presentation validation") {
  Presentation p;
  p.add_generator(GeneratorId::h(1));
  CHECK_THROWS_AS(p.add_relation(w("h1*h2"), Word(), "x"), Error);
  CHECK_THROWS_AS(p.add_relation(w("h1"), w("h1"), "x"), Error);
  CHECK_THROWS_AS(build_orbifold_braid(0, 0, {2}), Error);
  CHECK_THROWS_AS(build_prop36_presentation(2, 3), Error);
  CHECK_THROWS_AS(build_prop32_presentation(3, 1, 2), Error);
}

TEST_CASE("every builder produces relations over its own generators") {
  std::vector<Presentation> all;
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 4; ++m) {
      all.push_back(build_orbifold_braid(n, 0, {m}));
      all.push_back(build_orbifold_braid(n, 1, {m, m + 1}));
      all.push_back(build_pure_orbifold(n, 1, {m}));
      all.push_back(build_cor35_presentation(n, m));
      if (n >= 3) {
        all.push_back(build_prop36_presentation(n, m));
        all.push_back(build_prop32_presentation(n, m, 2));
      }
    }
  }
  for (const auto& p : all) {
    CHECK_NOTHROW(p.validate());
    for (const auto& r : p.relations) CHECK(r.lhs != r.rhs);
  }
}

TEST_CASE("presentation files round-trip") {
  const auto dir = std::filesystem::temp_directory_path();
  for (const auto& p : {build_orbifold_braid(3, 1, {2, 3}), build_remark34_presentation(3, 2),
                        build_pure_orbifold(2, 0, {3}), artin_from_graph(path_graph(3))}) {
    const auto path = (dir / "orbi_roundtrip.pres").string();
    write_presentation_file(path, p);
    const auto q = read_presentation_file(path);
    CHECK(q.name == p.name);
    CHECK(q.params == p.params);
    CHECK(q.generators == p.generators);
    REQUIRE(q.relations.size() == p.relations.size());
    for (std::size_t k = 0; k < p.relations.size(); ++k) {
      CHECK(q.relations[k].lhs == p.relations[k].lhs);
      CHECK(q.relations[k].rhs == p.relations[k].rhs);
      CHECK(q.relations[k].tag == p.relations[k].tag);
    }
    std::remove(path.c_str());
  }
  CHECK_THROWS_AS(parse_presentation("gens: h1\nrel: h1*h9 = 1\n"), Error);
}
