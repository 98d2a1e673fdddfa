#include "orbi/presentations.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace orbi {

namespace {

Word gen(const GeneratorId& g) { return Word::of(g); }
Word hw(int j) { return gen(GeneratorId::h(j)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

bool Presentation::has_generator(const GeneratorId& g) const { return index_of(g) >= 0; }

int Presentation::index_of(const GeneratorId& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

bool Presentation::covers(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](const Letter& l) { return has_generator(l.gen); });
}

int Presentation::param(const std::string& key, int fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void Presentation::add_generator(const GeneratorId& g) {
  if (!has_generator(g)) generators.push_back(g);
}

void Presentation::add_relation(Word lhs, Word rhs, std::string tag) {
  if (lhs == rhs) throw Error("trivial relation " + lhs.str() + " = " + rhs.str() + " [" + tag + "]");
  if (!covers(lhs) || !covers(rhs)) {
    throw Error("relation " + lhs.str() + " = " + rhs.str() + " uses an undeclared generator");
  }
  relations.push_back({std::move(lhs), std::move(rhs), std::move(tag)});
}

void Presentation::add_commutator(const Word& a, const Word& b, std::string tag) {
  add_relation(a * b, b * a, std::move(tag));
}

void Presentation::add_braid(const Word& a, const Word& b, int length, std::string tag) {
  add_relation(alternating_word(a, b, length), alternating_word(b, a, length), std::move(tag));
}

void Presentation::validate() const {
  for (const auto& r : relations) {
    if (!covers(r.lhs) || !covers(r.rhs)) {
      throw Error("relation [" + r.tag + "] uses an undeclared generator");
    }
  }
}

Word ascending_h(int k) {
  std::vector<Letter> raw;
  for (int j = 1; j <= k; ++j) raw.push_back({GeneratorId::h(j), 1});
  return Word(raw);
}

Word expand_pure_generator(const GeneratorId& g) {
  switch (g.family) {
    case Family::Aji: {
      const int j = g.i, i = g.j;
      require(1 <= i && i < j, "a(j,i) needs 1 <= i < j");
      std::vector<Letter> mid;
      for (int k = i + 1; k <= j - 1; ++k) mid.push_back({GeneratorId::h(k), 1});
      Word tail(mid);
      return concat({invert(tail), power(hw(i), 2), tail});
    }
    case Family::Bkl:
    case Family::Ckv: {
      const int k = g.i;
      require(k >= 1 && g.j >= 1, "pure generator indices must be positive");
      const Word core = g.family == Family::Bkl ? gen(GeneratorId::t(g.j)) : gen(GeneratorId::u(g.j));
      const Word tail = ascending_h(k - 1);
      return concat({invert(tail), core, tail});
    }
    default:
      break;
  }
  return gen(g);
}

Word expand_pure_word(const Word& w) {
  std::vector<Letter> raw;
  for (const auto& l : w) {
    Word e = expand_pure_generator(l.gen);
    if (l.sign < 0) e = invert(e);
    raw.insert(raw.end(), e.begin(), e.end());
  }
  return Word(raw);
}

namespace {

void set_cone_params(Presentation& p, int n, int L, const std::vector<int>& cones) {
  require(n >= 1, "n must be at least 1");
  require(L >= 0, "L must be non-negative");
  for (int m : cones) require(m >= 2, "cone orders must be at least 2");
  p.params["n"] = n;
  p.params["L"] = L;
  p.params["N"] = static_cast<int>(cones.size());
  for (std::size_t k = 0; k < cones.size(); ++k) p.params["m" + std::to_string(k + 1)] = cones[k];
}

void add_braid_group_relations(Presentation& p, int n, const std::string& tag) {
  for (int j = 2; j < n; ++j) p.add_braid(hw(j - 1), hw(j), 3, tag);
  for (int k = 1; k < n; ++k) {
    for (int l = k + 2; l < n; ++l) p.add_commutator(hw(k), hw(l), tag);
  }
}

}  // namespace

Presentation build_orbifold_braid(int n, int L, const std::vector<int>& cones) {
  Presentation p;
  p.name = "orbifold_braid";
  set_cone_params(p, n, L, cones);
  const int N = static_cast<int>(cones.size());
  for (int j = 1; j < n; ++j) p.add_generator(GeneratorId::h(j));
  for (int l = 1; l <= L; ++l) p.add_generator(GeneratorId::t(l));
  for (int v = 1; v <= N; ++v) p.add_generator(GeneratorId::u(v));

  auto t = [](int l) { return gen(GeneratorId::t(l)); };
  auto u = [](int v) { return gen(GeneratorId::u(v)); };

  for (int v = 1; v <= N; ++v) p.add_relation(power(u(v), cones[v - 1]), Word(), "mixed(1)");
  add_braid_group_relations(p, n, "mixed(2)");
  for (int j = 2; j < n; ++j) {
    for (int l = 1; l <= L; ++l) p.add_commutator(t(l), hw(j), "mixed(3)");
    for (int v = 1; v <= N; ++v) p.add_commutator(u(v), hw(j), "mixed(3)");
  }
  if (n >= 2) {
    const Word h1 = hw(1);
    for (int l = 1; l <= L; ++l) p.add_commutator(h1 * t(l) * h1, t(l), "mixed(4)");
    for (int v = 1; v <= N; ++v) p.add_commutator(h1 * u(v) * h1, u(v), "mixed(4)");
    auto conj = [&](const Word& x) { return concat({invert(h1), x, h1}); };
    for (int th = 1; th <= L; ++th) {
      for (int l = th + 1; l <= L; ++l) p.add_commutator(t(th), conj(t(l)), "mixed(5)");
    }
    for (int mu = 1; mu <= N; ++mu) {
      for (int v = mu + 1; v <= N; ++v) p.add_commutator(u(mu), conj(u(v)), "mixed(5)");
    }
    for (int l = 1; l <= L; ++l) {
      for (int v = 1; v <= N; ++v) p.add_commutator(t(l), conj(u(v)), "mixed(5)");
    }
  }
  p.validate();
  return p;
}

Presentation build_pure_orbifold(int n, int L, const std::vector<int>& cones) {
  Presentation p;
  p.name = "pure_orbifold_braid";
  set_cone_params(p, n, L, cones);
  const int N = static_cast<int>(cones.size());
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) p.add_generator(GeneratorId::a(j, i));
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= L; ++l) p.add_generator(GeneratorId::b(k, l));
  }
  for (int k = 1; k <= n; ++k) {
    for (int v = 1; v <= N; ++v) p.add_generator(GeneratorId::c(k, v));
  }
  auto a = [](int j, int i) { return gen(GeneratorId::a(j, i)); };
  auto b = [](int k, int l) { return gen(GeneratorId::b(k, l)); };
  auto c = [](int k, int v) { return gen(GeneratorId::c(k, v)); };
  auto conj = [](const Word& x, const Word& y) { return concat({x, y, invert(x)}); };

  for (int k = 1; k <= n; ++k) {
    for (int v = 1; v <= N; ++v) p.add_relation(power(c(k, v), cones[v - 1]), Word(), "pure(1)");
  }
  // Item (2): disjoint index pairs i < j < k < l.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) p.add_commutator(a(j, i), a(l, k), "pure(2)");
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) {
        for (int la = 1; la <= L; ++la) p.add_commutator(b(j, la), a(l, k), "pure(2)");
        for (int v = 1; v <= N; ++v) p.add_commutator(c(j, v), a(l, k), "pure(2)");
      }
  // Item (3): nested pairs.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) p.add_commutator(a(l, i), a(k, j), "pure(3)");
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) {
        for (int la = 1; la <= L; ++la) p.add_commutator(b(l, la), a(k, j), "pure(3)");
        for (int v = 1; v <= N; ++v) p.add_commutator(c(l, v), a(k, j), "pure(3)");
      }
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      for (int th = 1; th <= L; ++th)
        for (int la = th + 1; la <= L; ++la) p.add_commutator(b(l, la), b(k, th), "pure(3)");
      for (int v = 1; v <= N; ++v)
        for (int la = 1; la <= L; ++la) p.add_commutator(c(l, v), b(k, la), "pure(3)");
      for (int mu = 1; mu <= N; ++mu)
        for (int v = mu + 1; v <= N; ++v) p.add_commutator(c(l, v), c(k, mu), "pure(3)");
    }
  // Item (4): conjugated commutations.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          p.add_commutator(conj(a(l, k), a(l, j)), a(k, i), "pure(4)");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        for (int la = 1; la <= L; ++la) p.add_commutator(conj(a(k, j), a(k, i)), b(j, la), "pure(4)");
        for (int v = 1; v <= N; ++v) p.add_commutator(conj(a(k, j), a(k, i)), c(j, v), "pure(4)");
      }
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      for (int th = 1; th <= L; ++th)
        for (int la = th + 1; la <= L; ++la)
          p.add_commutator(conj(a(k, j), b(k, th)), b(j, la), "pure(4)");
      for (int mu = 1; mu <= N; ++mu)
        for (int v = mu + 1; v <= N; ++v)
          p.add_commutator(conj(a(k, j), c(k, mu)), c(j, v), "pure(4)");
    }
  // Item (5): triple relations, each stored as two equations.
  auto triple = [&](const Word& x, const Word& y, const Word& z) {
    p.add_relation(x, y, "pure(5)");
    p.add_relation(y, z, "pure(5)");
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        triple(concat({a(k, j), a(k, i), a(j, i)}), concat({a(j, i), a(k, j), a(k, i)}),
               concat({a(k, i), a(j, i), a(k, j)}));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int la = 1; la <= L; ++la)
        triple(concat({a(j, i), b(j, la), b(i, la)}), concat({b(i, la), a(j, i), b(j, la)}),
               concat({b(j, la), b(i, la), a(j, i)}));
      for (int v = 1; v <= N; ++v)
        triple(concat({a(j, i), c(j, v), c(i, v)}), concat({c(i, v), a(j, i), c(j, v)}),
               concat({c(j, v), c(i, v), a(j, i)}));
    }
  p.validate();
  return p;
}

namespace {

// Braid and commutator relations among h_1..h_{n-1} plus conjugate generators
// that inherit the adjacencies of the generator they conjugate.
void add_conjugate_adjacency(Presentation& p, int n, const std::vector<std::pair<Word, int>>& extras,
                             const std::string& tag) {
  add_braid_group_relations(p, n, tag);
  for (const auto& [x, like] : extras) {
    for (int k = 1; k < n; ++k) {
      if (k == like) continue;
      if (std::abs(k - like) == 1) {
        p.add_braid(x, hw(k), 3, tag);
      } else {
        p.add_commutator(x, hw(k), tag);
      }
    }
  }
  for (std::size_t a = 0; a < extras.size(); ++a) {
    for (std::size_t b = a + 1; b < extras.size(); ++b) {
      const auto& [x, lx] = extras[a];
      const auto& [y, ly] = extras[b];
      if (std::abs(lx - ly) == 1) {
        p.add_braid(x, y, 3, tag);
      } else {
        p.add_commutator(x, y, tag);
      }
    }
  }
}

Word square(const Word& w) { return power(w, 2); }

}  // namespace

Presentation build_prop32_presentation(int n, int m, int mp) {
  require(n >= 3, "this presentation needs n >= 3");
  require(m >= 2 && mp >= 2, "cone orders must be at least 2");
  Presentation p;
  p.name = "two_cone_semidirect";
  p.params = {{"n", n}, {"m", m}, {"m'", mp}, {"L", 0}, {"N", 2}};
  const Word hu1 = gen(GeneratorId::hu(1));
  const Word hup = gen(GeneratorId::huprime(n - 1));
  const Word u = gen(GeneratorId::u());
  const Word up = gen(GeneratorId::uprime());
  p.add_generator(GeneratorId::hu(1));
  for (int j = 1; j < n; ++j) p.add_generator(GeneratorId::h(j));
  p.add_generator(GeneratorId::huprime(n - 1));
  p.add_generator(GeneratorId::u());
  p.add_generator(GeneratorId::uprime());

  add_conjugate_adjacency(p, n, {{hu1, 1}, {hup, n - 1}}, "R1");
  p.add_braid(hw(1), hu1, m, "R2");
  p.add_braid(hw(n - 1), hup, mp, "R2");
  p.add_relation(square(hw(1) * hu1 * hw(2)), square(hw(2) * hw(1) * hu1), "R3");
  p.add_relation(square(hw(n - 1) * hup * hw(n - 2)), square(hw(n - 2) * hw(n - 1) * hup), "R3");
  p.add_relation(power(u, m), Word(), "S1");
  p.add_relation(power(up, mp), Word(), "S1");
  p.add_commutator(u, up, "S1");
  auto conj = [](const Word& x, const Word& y) { return concat({x, y, invert(x)}); };
  for (int k = 2; k < n; ++k) p.add_relation(conj(u, hw(k)), hw(k), "C1");
  for (int j = 1; j <= n - 2; ++j) p.add_relation(conj(up, hw(j)), hw(j), "C1");
  p.add_relation(conj(u, hup), hup, "C2");
  p.add_relation(conj(up, hu1), hu1, "C2");
  p.add_relation(conj(u, hw(1)), hu1, "C3");
  p.add_relation(conj(up, hw(n - 1)), hup, "C3");
  p.add_relation(conj(u, hu1), concat({invert(hu1), hw(1), hu1}), "C4");
  p.add_relation(conj(up, hup), concat({invert(hup), hw(n - 1), hup}), "C4");
  p.validate();
  return p;
}

Presentation build_prop36_presentation(int n, int m) {
  require(n >= 3, "this presentation needs n >= 3");
  require(m >= 2, "cone order must be at least 2");
  Presentation p;
  p.name = "cone_puncture_semidirect";
  p.params = {{"n", n}, {"m", m}, {"L", 1}, {"N", 1}};
  const Word hu = gen(GeneratorId::hu(n - 1));
  const Word t = gen(GeneratorId::t());
  const Word ub = gen(GeneratorId::ubar());
  for (int j = 1; j < n; ++j) p.add_generator(GeneratorId::h(j));
  p.add_generator(GeneratorId::hu(n - 1));
  p.add_generator(GeneratorId::t());
  p.add_generator(GeneratorId::ubar());

  add_conjugate_adjacency(p, n, {{hu, n - 1}}, "R1");
  p.add_relation(concat({t, hw(1), t, hw(1)}), concat({hw(1), t, hw(1), t}), "R2");
  for (int j = 2; j < n; ++j) p.add_commutator(t, hw(j), "R2");
  p.add_commutator(t, hu, "R2");
  p.add_braid(hw(n - 1), hu, m, "R3");
  p.add_relation(square(hw(n - 1) * hu * hw(n - 2)), square(hw(n - 2) * hw(n - 1) * hu), "R4");
  p.add_relation(power(ub, m), Word(), "S1");
  auto conj = [](const Word& x, const Word& y) { return concat({x, y, invert(x)}); };
  for (int j = 1; j <= n - 2; ++j) p.add_relation(conj(ub, hw(j)), hw(j), "C1");
  p.add_relation(conj(ub, t), t, "C1");
  p.add_relation(conj(ub, hw(n - 1)), hu, "C2");
  p.add_relation(conj(ub, hu), concat({invert(hu), hw(n - 1), hu}), "C2");
  p.validate();
  return p;
}

Presentation build_cor35_presentation(int n, int m) {
  require(n >= 2, "this presentation needs n >= 2");
  require(m >= 2, "cone order must be at least 2");
  Presentation p;
  p.name = "one_cone_semidirect";
  p.params = {{"n", n}, {"m", m}, {"L", 0}, {"N", 1}};
  const Word hu1 = gen(GeneratorId::hu(1));
  const Word u = gen(GeneratorId::u());
  p.add_generator(GeneratorId::hu(1));
  for (int j = 1; j < n; ++j) p.add_generator(GeneratorId::h(j));
  p.add_generator(GeneratorId::u());
  auto conj = [](const Word& x, const Word& y) { return concat({x, y, invert(x)}); };
  if (n >= 3) add_conjugate_adjacency(p, n, {{hu1, 1}}, "R1");
  p.add_braid(hw(1), hu1, m, "R2");
  if (n >= 3) p.add_relation(square(hw(1) * hu1 * hw(2)), square(hw(2) * hw(1) * hu1), "R3");
  p.add_relation(power(u, m), Word(), "S1");
  for (int k = 2; k < n; ++k) p.add_relation(conj(u, hw(k)), hw(k), "C1");
  p.add_relation(conj(u, hw(1)), hu1, "C3");
  p.add_relation(conj(u, hu1), concat({invert(hu1), hw(1), hu1}), "C4");
  p.validate();
  return p;
}

std::pair<std::vector<int>, std::vector<int>> remark34_ranges(int order) {
  require(order >= 2, "cone order must be at least 2");
  const int l = order / 2;
  std::vector<int> ks(l), kps(order % 2 == 0 ? l : l + 1);
  std::iota(ks.begin(), ks.end(), 0);
  std::iota(kps.begin(), kps.end(), 0);
  return {ks, kps};
}

Presentation build_remark34_presentation(int m, int mp) {
  Presentation base = build_prop32_presentation(3, m, mp);
  base.name = "two_cone_semidirect_n3";
  if (m == 2 && mp == 2) return base;

  Presentation p = base;
  p.relations.clear();
  for (const auto& r : base.relations) {
    if (r.tag != "R3") p.relations.push_back(r);
  }
  const Word h1 = hw(1), h2 = hw(2);
  const Word hu1 = gen(GeneratorId::hu(1));
  const Word hup = gen(GeneratorId::huprime(2));
  // Family built around the pair (x, y) = (hu'2, h2) with prefix h1*hu1, and
  // its mirror image around (hu1, h1) with prefix h2*hu'2.
  auto family = [&](const Word& prefix, const Word& x, const Word& y, int order) {
    auto [ks, kps] = remark34_ranges(order);
    const Word left = invert(x) * invert(y);
    const Word right = y * x;
    for (int k : ks) {
      const Word mid = concat({power(left, k), x, power(right, k)});
      p.add_relation(square(prefix * mid), square(mid * prefix), "R3'");
    }
    for (int k : kps) {
      const Word mid = concat({power(left, k), y, power(right, k)});
      p.add_relation(square(prefix * mid), square(mid * prefix), "R3'");
    }
  };
  family(h1 * hu1, hup, h2, mp);
  family(h2 * hup, hu1, h1, m);
  p.validate();
  return p;
}

std::optional<int> WeightedGraph::weight(int a, int b) const {
  for (const auto& e : edges) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.weight;
  }
  return std::nullopt;
}

void WeightedGraph::validate() const {
  for (const auto& e : edges) {
    require(e.a >= 1 && e.a <= vertex_count && e.b >= 1 && e.b <= vertex_count && e.a != e.b,
            "edge endpoints must be distinct vertices");
    require(e.weight == kInfinity || e.weight >= 3, "edge weights must be >= 3 or infinity");
  }
  for (const auto& t : triple_marks) {
    require(t[0] != t[1] && t[1] != t[2] && t[0] != t[2], "triple marks need distinct vertices");
    for (int x : t) require(x >= 1 && x <= vertex_count, "triple mark vertex out of range");
    require(weight(t[0], t[1]) && weight(t[1], t[2]) && weight(t[0], t[2]),
            "triple marks must span a triangle");
  }
}

Presentation artin_from_graph(const WeightedGraph& g) {
  g.validate();
  Presentation p;
  p.name = "artin";
  p.params["vertices"] = g.vertex_count;
  for (int v = 1; v <= g.vertex_count; ++v) p.add_generator(GeneratorId::named(v));
  auto v = [](int i) { return gen(GeneratorId::named(i)); };
  for (int a = 1; a <= g.vertex_count; ++a) {
    for (int b = a + 1; b <= g.vertex_count; ++b) {
      auto w = g.weight(a, b);
      if (!w) {
        p.add_commutator(v(a), v(b), "artin-comm");
      } else if (*w != WeightedGraph::kInfinity) {
        p.add_braid(v(a), v(b), *w, "artin");
      }
    }
  }
  for (const auto& t : g.triple_marks) {
    p.add_relation(square(concat({v(t[0]), v(t[1]), v(t[2])})), square(concat({v(t[1]), v(t[2]), v(t[0])})),
                   "artin-triple");
  }
  return p;
}

WeightedGraph path_graph(int vertices, int weight) {
  WeightedGraph g;
  g.vertex_count = vertices;
  for (int a = 1; a < vertices; ++a) g.edges.push_back({a, a + 1, weight});
  return g;
}

bool is_reflection_like(const GeneratorId& g) {
  return g.family == Family::H || g.family == Family::HUConj || g.family == Family::Named;
}

bool is_torsion_generator(const GeneratorId& g) {
  return g.family == Family::U || g.family == Family::UPrime || g.family == Family::UBar;
}

Presentation coxeterize(const Presentation& p, const GeneratorFilter& filter) {
  Presentation q = p;
  q.name = p.name + "+squares";
  for (const auto& g : p.generators) {
    if (filter(g)) q.add_relation(power(gen(g), 2), Word(), "coxeter");
  }
  return q;
}

Presentation restrict_to(const Presentation& p, const GeneratorFilter& keep) {
  Presentation q;
  q.name = p.name + "/restricted";
  q.params = p.params;
  for (const auto& g : p.generators) {
    if (keep(g)) q.generators.push_back(g);
  }
  for (const auto& r : p.relations) {
    if (q.covers(r.lhs) && q.covers(r.rhs)) q.relations.push_back(r);
  }
  return q;
}

void write_presentation(std::ostream& os, const Presentation& p) {
  if (!p.name.empty()) os << "name: " << p.name << "\n";
  os << "params:";
  for (const auto& [k, v] : p.params) os << " " << k << "=" << v;
  os << "\ngens:";
  for (const auto& g : p.generators) os << " " << g.label();
  os << "\n";
  for (const auto& r : p.relations) {
    os << "rel: " << r.lhs.str() << " = " << r.rhs.str() << " [" << r.tag << "]\n";
  }
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  write_presentation(os, p);
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_gens = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error("line " + std::to_string(lineno) + ": missing ':'");
    const std::string key = trim(line.substr(0, colon));
    const std::string body = trim(line.substr(colon + 1));
    try {
      if (key == "name") {
        p.name = body;
      } else if (key == "params") {
        std::istringstream ps(body);
        std::string tok;
        while (ps >> tok) {
          const auto eq = tok.find('=');
          if (eq == std::string::npos) throw Error("bad parameter '" + tok + "'");
          p.params[tok.substr(0, eq)] = std::stoi(tok.substr(eq + 1));
        }
      } else if (key == "gens") {
        std::istringstream gs(body);
        std::string tok;
        while (gs >> tok) p.add_generator(parse_generator(tok));
        saw_gens = true;
      } else if (key == "rel") {
        if (!saw_gens) throw Error("'rel' before 'gens'");
        std::string eqn = body, tag;
        if (!eqn.empty() && eqn.back() == ']') {
          const auto open = eqn.rfind('[');
          if (open == std::string::npos) throw Error("unbalanced tag brackets");
          tag = trim(eqn.substr(open + 1, eqn.size() - open - 2));
          eqn = trim(eqn.substr(0, open));
        }
        const auto eq = eqn.find('=');
        if (eq == std::string::npos) throw Error("relation needs '='");
        p.add_relation(parse_word(eqn.substr(0, eq)), parse_word(eqn.substr(eq + 1)),
                       tag.empty() ? "rel" + std::to_string(p.relations.size() + 1) : tag);
      } else {
        throw Error("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::logic_error& e) {
      throw Error("line " + std::to_string(lineno) + ": bad number");
    }
  }
  return p;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

void write_presentation_file(const std::string& path, const Presentation& p) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write presentation file " + path);
  write_presentation(out, p);
}

}  // namespace orbi
