#include "orbi/homomorphisms.hpp"

#include <algorithm>

namespace orbi {

namespace {

Word gen(const GeneratorId& g) { return Word::of(g); }
Word conj(const Word& x, const Word& y) { return concat({x, y, invert(x)}); }

void require_same_generators(const Presentation& a, const Presentation& b, const char* what) {
  auto x = a.generators, y = b.generators;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x != y) throw Error(std::string(what) + ": presentations have different generators");
}

}  // namespace

void Assignment::validate() const {
  for (const auto& g : source.generators) {
    auto it = images.find(g);
    if (it == images.end()) throw Error("assignment: no image for " + g.label());
    if (!target.covers(it->second)) throw Error("assignment: image of " + g.label() + " leaves the target alphabet");
  }
}

Word apply_assignment(const Assignment& a, const Word& w) {
  std::vector<Letter> raw;
  for (const auto& l : w) {
    auto it = a.images.find(l.gen);
    if (it == a.images.end()) throw Error("assignment: unmapped generator " + l.gen.label());
    const Word img = l.sign > 0 ? it->second : invert(it->second);
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return Word(raw);
}

std::vector<Obligation> von_dyck_obligations(const Assignment& a) {
  std::vector<Obligation> out;
  for (const auto& r : a.source.relations) {
    out.push_back({apply_assignment(a, r.lhs), apply_assignment(a, r.rhs), r.tag});
  }
  return out;
}

Assignment compose(const Assignment& a, const Assignment& b) {
  require_same_generators(a.target, b.source, "compose");
  Assignment c{a.source, b.target, {}};
  for (const auto& [g, w] : a.images) c.images[g] = apply_assignment(b, w);
  return c;
}

Assignment identity_assignment(const Presentation& p) {
  Assignment a{p, p, {}};
  for (const auto& g : p.generators) a.images[g] = gen(g);
  return a;
}

IsomorphismPair two_cone_pair(int n, int m, int mprime) {
  IsomorphismPair pr;
  pr.phi.source = build_orbifold_braid(n, 0, {m, mprime});
  pr.phi.target = build_prop32_presentation(n, m, mprime);
  pr.psi.source = pr.phi.target;
  pr.psi.target = pr.phi.source;
  const Word asc = ascending_h(n - 1);
  const Word c2 = expand_pure_generator(GeneratorId::c(n, 2));
  for (int j = 1; j < n; ++j) {
    pr.phi.images[GeneratorId::h(j)] = gen(GeneratorId::h(j));
    pr.psi.images[GeneratorId::h(j)] = gen(GeneratorId::h(j));
  }
  pr.phi.images[GeneratorId::u(1)] = gen(GeneratorId::u());
  pr.phi.images[GeneratorId::u(2)] = conj(asc, gen(GeneratorId::uprime()));
  pr.psi.images[GeneratorId::u()] = gen(GeneratorId::u(1));
  pr.psi.images[GeneratorId::uprime()] = c2;
  pr.psi.images[GeneratorId::hu(1)] = conj(gen(GeneratorId::u(1)), gen(GeneratorId::h(1)));
  pr.psi.images[GeneratorId::huprime(n - 1)] = conj(c2, gen(GeneratorId::h(n - 1)));
  pr.phi.validate();
  pr.psi.validate();
  return pr;
}

IsomorphismPair cone_puncture_pair(int n, int m) {
  IsomorphismPair pr;
  pr.phi.source = build_orbifold_braid(n, 1, {m});
  pr.phi.target = build_prop36_presentation(n, m);
  pr.psi.source = pr.phi.target;
  pr.psi.target = pr.phi.source;
  const Word asc = ascending_h(n - 1);
  const Word c1 = expand_pure_generator(GeneratorId::c(n, 1));
  for (int j = 1; j < n; ++j) {
    pr.phi.images[GeneratorId::h(j)] = gen(GeneratorId::h(j));
    pr.psi.images[GeneratorId::h(j)] = gen(GeneratorId::h(j));
  }
  pr.phi.images[GeneratorId::t()] = gen(GeneratorId::t());
  pr.phi.images[GeneratorId::u()] = conj(asc, gen(GeneratorId::ubar()));
  pr.psi.images[GeneratorId::t()] = gen(GeneratorId::t());
  pr.psi.images[GeneratorId::ubar()] = c1;
  pr.psi.images[GeneratorId::hu(n - 1)] = conj(c1, gen(GeneratorId::h(n - 1)));
  pr.phi.validate();
  pr.psi.validate();
  return pr;
}

IsomorphismPair one_cone_pair(int n, int m) {
  IsomorphismPair pr;
  pr.phi.source = build_orbifold_braid(n, 0, {m});
  pr.phi.target = build_cor35_presentation(n, m);
  pr.psi.source = pr.phi.target;
  pr.psi.target = pr.phi.source;
  for (int j = 1; j < n; ++j) {
    pr.phi.images[GeneratorId::h(j)] = gen(GeneratorId::h(j));
    pr.psi.images[GeneratorId::h(j)] = gen(GeneratorId::h(j));
  }
  pr.phi.images[GeneratorId::u()] = gen(GeneratorId::u());
  pr.psi.images[GeneratorId::u()] = gen(GeneratorId::u());
  pr.psi.images[GeneratorId::hu(1)] = conj(gen(GeneratorId::u()), gen(GeneratorId::h(1)));
  pr.phi.validate();
  pr.psi.validate();
  return pr;
}

Presentation normal_subgroup(const Presentation& p) {
  Presentation q = restrict_to(p, [](const GeneratorId& g) { return !is_torsion_generator(g); });
  q.name = p.name + "/normal";
  return q;
}

Assignment conjugation_automorphism(const Presentation& p, const GeneratorId& y) {
  if (!is_torsion_generator(y) || !p.has_generator(y)) {
    throw Error("conjugation_automorphism: " + y.label() + " is not a torsion generator of the presentation");
  }
  const Presentation normal = normal_subgroup(p);
  Assignment a{normal, normal, {}};
  const Letter yp{y, 1}, ym{y, -1};
  for (const auto& r : p.relations) {
    if (r.lhs.size() != 3 || !(r.lhs[0] == yp) || !(r.lhs[2] == ym) || r.lhs[1].sign != 1) continue;
    if (is_torsion_generator(r.lhs[1].gen)) continue;
    a.images[r.lhs[1].gen] = r.rhs;
  }
  if (a.images.empty()) throw Error("conjugation_automorphism: no conjugation relations for " + y.label());
  a.validate();
  return a;
}

Assignment iterate(const Assignment& a, int k) {
  if (k < 0) throw Error("iterate: negative count");
  require_same_generators(a.source, a.target, "iterate");
  Assignment out = identity_assignment(a.source);
  for (int i = 0; i < k; ++i) out = compose(out, a);
  return out;
}

Word closed_form_conjugation(int k, const GeneratorId& base, const GeneratorId& conj_gen) {
  if (k < 1) throw Error("closed_form_conjugation: k must be positive");
  const Word b = gen(base), c = gen(conj_gen);
  const Word head = alternating_word(invert(c), invert(b), k - 1);
  const Word tail = k % 2 == 1 ? alternating_word(c, b, k) : alternating_word(b, c, k);
  return concat(head, tail);
}

std::vector<TorsionFactor> torsion_factors(const Presentation& p) {
  std::vector<TorsionFactor> out;
  for (const auto& g : p.generators) {
    if (!is_torsion_generator(g)) continue;
    for (const auto& r : p.relations) {
      if (!r.rhs.empty() || r.lhs.empty()) continue;
      const bool pure_power = std::all_of(r.lhs.begin(), r.lhs.end(),
                                          [&](const Letter& l) { return l.gen == g && l.sign == 1; });
      if (pure_power) {
        out.push_back({g, static_cast<int>(r.lhs.size())});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.gen < y.gen; });
  return out;
}

Word SemidirectForm::word(const std::vector<TorsionFactor>& factors) const {
  Word w = normal_part;
  for (std::size_t i = 0; i < factors.size() && i < quotient_exponents.size(); ++i) {
    w = concat(w, Word::of(factors[i].gen, quotient_exponents[i]));
  }
  return w;
}

SemidirectForm semidirect_normal_form(const Presentation& p, const Word& w) {
  if (!p.covers(w)) throw Error("semidirect_normal_form: word leaves the presentation alphabet");
  const auto factors = torsion_factors(p);
  std::vector<Assignment> phis;
  for (const auto& f : factors) phis.push_back(conjugation_automorphism(p, f.gen));

  // Image of a normal generator under the quotient element q. The last
  // factor acts first, so that w = normal_part * u^q1 * u'^q2 holds letter
  // for letter without reordering the torsion part.
  std::map<std::pair<GeneratorId, std::vector<int>>, Word> memo;
  auto image = [&](const GeneratorId& g, const std::vector<int>& q) {
    auto key = std::make_pair(g, q);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Word x = gen(g);
    for (std::size_t i = factors.size(); i-- > 0;) {
      for (int k = 0; k < q[i]; ++k) x = apply_assignment(phis[i], x);
    }
    memo.emplace(key, x);
    return x;
  };

  SemidirectForm out;
  out.quotient_exponents.assign(factors.size(), 0);
  std::vector<Letter> raw;
  for (const auto& l : w) {
    auto f = std::find_if(factors.begin(), factors.end(), [&](const auto& t) { return t.gen == l.gen; });
    if (f != factors.end()) {
      const auto i = static_cast<std::size_t>(f - factors.begin());
      auto& q = out.quotient_exponents[i];
      q = ((q + l.sign) % f->order + f->order) % f->order;
      continue;
    }
    if (is_torsion_generator(l.gen)) throw Error("semidirect_normal_form: " + l.gen.label() + " has no finite order");
    const Word img = image(l.gen, out.quotient_exponents);
    const Word part = l.sign > 0 ? img : invert(img);
    raw.insert(raw.end(), part.begin(), part.end());
  }
  out.normal_part = Word(raw);
  return out;
}

int u_exponent(const Word& w, int m) {
  if (m < 1) throw Error("u_exponent: modulus must be positive");
  long long s = 0;
  for (const auto& l : w) {
    if (l.gen == GeneratorId::u()) s += l.sign;
  }
  return static_cast<int>(((s % m) + m) % m);
}

}  // namespace orbi
