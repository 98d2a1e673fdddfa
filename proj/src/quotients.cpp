#include "orbi/quotients.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace orbi {

namespace {

long long mod(long long v, long long m) {
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

MonomialElement::MonomialElement(int n, ExponentGroup group)
    : perm_(static_cast<std::size_t>(n)),
      exps_(static_cast<std::size_t>(n), std::vector<long long>(group.rank(), 0)),
      group_(std::move(group)) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

MonomialElement::MonomialElement(std::vector<int> perm, std::vector<std::vector<long long>> exps,
                                 ExponentGroup group)
    : perm_(std::move(perm)), exps_(std::move(exps)), group_(std::move(group)) {
  if (exps_.size() != perm_.size()) throw Error("monomial element: size mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (int x : perm_) {
    if (x < 0 || x >= static_cast<int>(perm_.size()) || seen[x]) throw Error("monomial element: not a bijection");
    seen[x] = true;
  }
  for (const auto& e : exps_) {
    if (e.size() != group_.rank()) throw Error("monomial element: exponent rank mismatch");
  }
  normalize();
}

void MonomialElement::normalize() {
  for (auto& e : exps_) {
    for (std::size_t c = 0; c < e.size(); ++c) {
      if (group_.moduli[c] > 0) e[c] = mod(e[c], group_.moduli[c]);
    }
  }
}

MonomialElement MonomialElement::transposition(int n, const ExponentGroup& group, int j) {
  if (j < 1 || j >= n) throw Error("transposition index out of range");
  MonomialElement e(n, group);
  std::swap(e.perm_[j - 1], e.perm_[j]);
  return e;
}

MonomialElement MonomialElement::diagonal_unit(int n, const ExponentGroup& group, int strand, int coord) {
  MonomialElement e(n, group);
  if (strand < 1 || strand > n || coord < 0 || coord >= static_cast<int>(group.rank())) {
    throw Error("diagonal unit out of range");
  }
  e.exps_[strand - 1][coord] = 1;
  e.normalize();
  return e;
}

bool MonomialElement::is_identity() const {
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (perm_[j] != static_cast<int>(j)) return false;
    for (long long x : exps_[j]) {
      if (x != 0) return false;
    }
  }
  return true;
}

MonomialElement MonomialElement::inverse() const {
  const std::size_t n = perm_.size();
  std::vector<int> inv(n);
  for (std::size_t j = 0; j < n; ++j) inv[perm_[j]] = static_cast<int>(j);
  std::vector<std::vector<long long>> c(n, std::vector<long long>(group_.rank()));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < group_.rank(); ++k) c[j][k] = -exps_[inv[j]][k];
  }
  return MonomialElement(std::move(inv), std::move(c), group_);
}

long long MonomialElement::exponent_sum(int coord) const {
  long long s = 0;
  for (const auto& e : exps_) s += e[coord];
  return group_.moduli[coord] > 0 ? mod(s, group_.moduli[coord]) : s;
}

std::string MonomialElement::str() const {
  std::string out;
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t s = 0; s < perm_.size(); ++s) {
    if (seen[s]) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm_[x]);
    }
    out += ")";
  }
  out += " | [";
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (j) out += ",";
    if (exps_[j].size() == 1) {
      out += std::to_string(exps_[j][0]);
    } else {
      out += "(";
      for (std::size_t c = 0; c < exps_[j].size(); ++c) {
        if (c) out += ",";
        out += std::to_string(exps_[j][c]);
      }
      out += ")";
    }
  }
  out += "]";
  return out;
}

MonomialElement monomial_mul(const MonomialElement& a, const MonomialElement& b) {
  if (a.n() != b.n() || !(a.group() == b.group())) throw Error("monomial_mul: size mismatch");
  const int n = a.n();
  std::vector<int> perm(n);
  std::vector<std::vector<long long>> c(n, std::vector<long long>(a.group().rank()));
  for (int j = 0; j < n; ++j) {
    const int tj = b.perm()[j];
    perm[j] = a.perm()[tj];
    for (std::size_t k = 0; k < a.group().rank(); ++k) c[j][k] = b.exps()[j][k] + a.exps()[tj][k];
  }
  return MonomialElement(std::move(perm), std::move(c), a.group());
}

ExponentGroup WreathAssignment::group() const {
  ExponentGroup g{cone_orders};
  for (int l = 0; l < punctures; ++l) g.moduli.push_back(0);
  if (g.moduli.empty()) g.moduli.push_back(1);  // trivial label group keeps the rank positive
  return g;
}

WreathAssignment WreathAssignment::standard_for(const Presentation& p, bool track) {
  WreathAssignment a;
  a.n = p.param("n", 1);
  a.punctures = p.param("L", 0);
  a.track_punctures = track;
  if (p.params.count("m1")) {
    for (int v = 1; v <= p.param("N", 0); ++v) a.cone_orders.push_back(p.param("m" + std::to_string(v)));
  } else if (p.params.count("m")) {
    a.cone_orders.push_back(p.param("m"));
    if (p.params.count("m'")) a.cone_orders.push_back(p.param("m'"));
  }
  return a;
}

Word defining_word(const GeneratorId& g, int n) {
  auto w = [](const GeneratorId& x) { return Word::of(x); };
  auto conj = [](const Word& x, const Word& y) { return concat({x, y, invert(x)}); };
  switch (g.family) {
    case Family::H:
    case Family::U:
    case Family::T:
      return w(g);
    case Family::UPrime:
      return expand_pure_generator(GeneratorId::c(n, 2));
    case Family::UBar:
      return expand_pure_generator(GeneratorId::c(n, 1));
    case Family::HUConj:
      if (g.j == 1) return conj(expand_pure_generator(GeneratorId::c(n, 2)), w(GeneratorId::h(g.i)));
      if (g.i == 1) return conj(w(GeneratorId::u()), w(GeneratorId::h(1)));
      return conj(expand_pure_generator(GeneratorId::c(n, 1)), w(GeneratorId::h(g.i)));
    case Family::Aji:
    case Family::Bkl:
    case Family::Ckv:
      return expand_pure_generator(g);
    case Family::Named:
      break;
  }
  throw Error("generator " + g.label() + " has no standard wreath image");
}

MonomialElement evaluate_generator(const WreathAssignment& asgn, const GeneratorId& g) {
  const ExponentGroup grp = asgn.group();
  const int cones = static_cast<int>(asgn.cone_orders.size());
  switch (g.family) {
    case Family::H:
      return MonomialElement::transposition(asgn.n, grp, g.i);
    case Family::U:
      if (g.i < 1 || g.i > cones) throw Error("cone generator " + g.label() + " not in the quotient");
      return MonomialElement::diagonal_unit(asgn.n, grp, 1, g.i - 1);
    case Family::T:
      if (g.i < 1 || g.i > asgn.punctures) throw Error("puncture generator " + g.label() + " not in the quotient");
      if (!asgn.track_punctures) return MonomialElement::identity(asgn.n, grp);
      return MonomialElement::diagonal_unit(asgn.n, grp, 1, cones + g.i - 1);
    default:
      return evaluate_word(asgn, defining_word(g, asgn.n));
  }
}

MonomialElement evaluate_letters(const WreathAssignment& asgn, std::span<const Letter> raw) {
  MonomialElement acc = MonomialElement::identity(asgn.n, asgn.group());
  std::map<GeneratorId, MonomialElement> cache;
  for (const auto& l : raw) {
    auto it = cache.find(l.gen);
    if (it == cache.end()) it = cache.emplace(l.gen, evaluate_generator(asgn, l.gen)).first;
    acc = monomial_mul(acc, l.sign > 0 ? it->second : it->second.inverse());
  }
  return acc;
}

MonomialElement evaluate_word(const WreathAssignment& asgn, const Word& w) {
  return evaluate_letters(asgn, w.letters());
}

QuotientReport check_relations_in_quotient(const Presentation& p, const WreathAssignment& asgn) {
  QuotientReport rep;
  for (const auto& r : p.relations) {
    QuotientCheck c{r.tag, r.lhs.str(), r.rhs.str(), false};
    c.holds = evaluate_word(asgn, r.lhs) == evaluate_word(asgn, r.rhs);
    rep.pass = rep.pass && c.holds;
    rep.entries.push_back(std::move(c));
  }
  return rep;
}

long long order_G(int m, int p, int n) {
  long long total = 1;
  for (int k = 0; k < n; ++k) total *= m;
  for (int k = 2; k <= n; ++k) total *= k;
  return total / p;
}

GroupEnumeration enumerate_G(int m, int p, int n, long long cap) {
  if (m < 1 || p < 1 || n < 1 || m % p != 0) throw Error("enumerate_G needs p | m and n >= 1");
  const ExponentGroup grp = ExponentGroup::cyclic(m);
  GroupEnumeration out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long long> digits(n, 0);
  do {
    std::fill(digits.begin(), digits.end(), 0);
    for (;;) {
      long long sum = 0;
      for (long long d : digits) sum += d;
      if (sum % p == 0) {
        if (++out.count > cap) throw Error("enumerate_G: cap exceeded");
        std::vector<std::vector<long long>> exps(n);
        for (int j = 0; j < n; ++j) exps[j] = {digits[j]};
        out.elements.emplace_back(perm, std::move(exps), grp);
      }
      int k = 0;
      while (k < n && ++digits[k] == m) digits[k++] = 0;
      if (k == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GroupEnumeration generated_subgroup(const std::vector<MonomialElement>& gens, long long cap) {
  GroupEnumeration out;
  if (gens.empty()) return out;
  std::set<MonomialElement> seen;
  std::deque<MonomialElement> queue;
  const auto id = MonomialElement::identity(gens.front().n(), gens.front().group());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    MonomialElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      MonomialElement y = monomial_mul(x, g);
      if (seen.insert(y).second) {
        if (static_cast<long long>(seen.size()) > cap) throw Error("generated_subgroup: cap exceeded");
        queue.push_back(y);
      }
    }
  }
  out.count = static_cast<long long>(seen.size());
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

bool separate(const WreathAssignment& asgn, const Word& a, const Word& b) {
  return !(evaluate_word(asgn, a) == evaluate_word(asgn, b));
}

}  // namespace orbi
