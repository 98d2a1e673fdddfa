#include "orbi/prover.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>

namespace orbi {

std::string ProofStep::direction() const {
  return std::string(inverse ? "~" : "") + "r" + std::to_string(rotation) + "s" + std::to_string(split);
}

ProverBudget ProverBudget::from_env() {
  ProverBudget b;
  if (const char* v = std::getenv("ORBI_MAX_NODES")) b.max_nodes = std::atoll(v);
  if (const char* v = std::getenv("ORBI_SLACK")) b.slack = std::atoi(v);
  return b;
}

int ProverBudget::length_bound(const Word& a, const Word& b) const {
  if (max_word_length > 0) return max_word_length;
  return static_cast<int>(std::max(a.size(), b.size())) + slack;
}

Word relator_of(const Word& lhs, const Word& rhs) {
  const Word r = concat(lhs, invert(rhs));
  std::size_t b = 0, e = r.size();
  while (e - b >= 2 && r[b] == r[e - 1].inverse()) {
    ++b;
    --e;
  }
  return Word(r.letters().subspan(b, e - b));
}

std::pair<Word, Word> relator_piece(const Word& relator, bool inverse, int rotation, int split) {
  const Word c = inverse ? invert(relator) : relator;
  const int len = static_cast<int>(c.size());
  if (rotation < 0 || rotation >= len || split < 1 || split > len) throw Error("relator piece out of range");
  std::vector<Letter> rot;
  for (int k = 0; k < len; ++k) rot.push_back(c[(rotation + k) % len]);
  const Word x(std::span<const Letter>(rot).subspan(0, split));
  const Word rest(std::span<const Letter>(rot).subspan(split));
  return {x, invert(rest)};
}

namespace {

using Code = unsigned char;
using Mask = std::uint64_t;

struct Source {
  int source = 0;
  bool lemma = false;
  bool inverse = false;
  int rotation = 0;
  int split = 0;
};

struct Rule {
  std::string x;
  std::string y;
  Source src;
};

struct Occurrence {
  Mask chosen = 0;
  Mask left = 0;
  int first = 0;
  int last = 0;
};

class Engine {
 public:
  Engine(const Presentation& p, std::span<const Lemma> lemmas) : p_(p), lemmas_(lemmas) {
    gens_ = p.generators;
    std::sort(gens_.begin(), gens_.end());
    if (gens_.size() > 64) throw Error("prover supports at most 64 generators");
    for (std::size_t g = 0; g < gens_.size(); ++g) gid_[gens_[g]] = static_cast<int>(g);
    const std::size_t k = gens_.size();
    dep_.assign(k, 0);
    for (std::size_t g = 0; g < k; ++g) dep_[g] = ~Mask{0};
    swap_.assign(4 * k * k, std::nullopt);
    by_first_.assign(2 * k, {});

    std::set<std::pair<std::string, std::string>> seen;
    auto ingest = [&](const Word& lhs, const Word& rhs, int source, bool lemma) {
      const Word r = relator_of(lhs, rhs);
      if (r.empty()) return;
      const std::string code = encode(r);
      if (is_commutator(code)) {
        const int a = code[0] >> 1, b = code[1] >> 1;
        dep_[a] &= ~(Mask{1} << b);
        dep_[b] &= ~(Mask{1} << a);
      }
      const int len = static_cast<int>(r.size());
      for (int inv = 0; inv < 2; ++inv) {
        for (int rot = 0; rot < len; ++rot) {
          for (int split = 1; split <= len; ++split) {
            auto [x, y] = relator_piece(r, inv != 0, rot, split);
            Source src{source, lemma, inv != 0, rot, split};
            std::string xc = encode(x), yc = encode(y);
            if (is_commutator(code)) {
              // Commutators only contribute their swap moves.
              if (split == 2) {
                auto& slot = swap_[index2(xc[0], xc[1])];
                if (!slot) slot = src;
              }
              continue;
            }
            if (seen.insert({xc, yc}).second) {
              by_first_[static_cast<Code>(xc[0])].push_back(static_cast<int>(rules_.size()));
              rules_.push_back({std::move(xc), std::move(yc), src});
            }
          }
        }
      }
    };
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      ingest(p.relations[i].lhs, p.relations[i].rhs, static_cast<int>(i), false);
    }
    for (std::size_t i = 0; i < lemmas.size(); ++i) {
      if (!p.covers(lemmas[i].lhs) || !p.covers(lemmas[i].rhs)) {
        throw Error("lemma [" + lemmas[i].tag + "] is not over the presentation alphabet");
      }
      ingest(lemmas[i].lhs, lemmas[i].rhs, static_cast<int>(i), true);
    }
  }

  std::string encode(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (const auto& l : w) {
      auto it = gid_.find(l.gen);
      if (it == gid_.end()) throw Error("letter " + l.gen.label() + " is not in the presentation alphabet");
      out.push_back(static_cast<char>(2 * it->second + (l.sign > 0 ? 0 : 1)));
    }
    return out;
  }

  Word decode(const std::string& s) const {
    std::vector<Letter> raw;
    for (char ch : s) {
      const Code c = static_cast<Code>(ch);
      raw.push_back({gens_[c >> 1], static_cast<std::int8_t>((c & 1) ? -1 : 1)});
    }
    return Word(raw);
  }

  ProofResult prove(const Word& a, const Word& b, const ProverBudget& budget);

 private:
  const Presentation& p_;
  std::span<const Lemma> lemmas_;
  std::vector<GeneratorId> gens_;
  std::map<GeneratorId, int> gid_;
  std::vector<Mask> dep_;  // dep_[g]: generators that do not commute with g (g included)
  std::vector<std::optional<Source>> swap_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_first_;

  std::size_t index2(char a, char b) const {
    return static_cast<Code>(a) * (2 * gens_.size()) + static_cast<Code>(b);
  }
  static bool is_commutator(const std::string& c) {
    return c.size() == 4 && (c[0] >> 1) != (c[1] >> 1) && (c[2] ^ 1) == c[0] && (c[3] ^ 1) == c[1];
  }
  static int gen_of(char c) { return static_cast<Code>(c) >> 1; }
  bool indep(char a, char b) const { return (dep_[gen_of(a)] >> gen_of(b) & 1) == 0; }

  static void reduce(std::string& w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w) {
      if (!out.empty() && (out.back() ^ 1) == c) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    w.swap(out);
  }

  ProofStep make_step(int side, int pos, const Source& s) const {
    ProofStep st;
    st.side = side;
    st.position = pos;
    st.source = s.source;
    st.lemma = s.lemma;
    st.inverse = s.inverse;
    st.rotation = s.rotation;
    st.split = s.split;
    st.tag = s.lemma ? "lemma:" + lemmas_[s.source].tag : p_.relations[s.source].tag;
    return st;
  }

  void swap_at(std::string& w, std::size_t k, std::vector<ProofStep>* sink, int side) const {
    const auto& src = swap_[index2(w[k], w[k + 1])];
    if (!src) throw Error("internal: swap without a commutation relation");
    if (sink) sink->push_back(make_step(side, static_cast<int>(k), *src));
    std::swap(w[k], w[k + 1]);
    reduce(w);
  }

  // Cancels letters that meet across commuting letters, then moves to the
  // lexicographically least representative modulo the commutations.
  void canonicalize(std::string& w, std::vector<ProofStep>* sink, int side) const {
    reduce(w);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < w.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if ((w[j] ^ 1) == w[i]) {
            for (std::size_t k = j - 1; k > i; --k) {
              const std::size_t before = w.size();
              swap_at(w, k, sink, side);
              if (w.size() != before) break;
            }
            changed = true;
            break;
          }
          if (!indep(w[i], w[j])) break;
        }
      }
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::size_t best = k;
      Mask seen = 0;
      for (std::size_t j = k; j < w.size(); ++j) {
        const int g = gen_of(w[j]);
        if ((dep_[g] & seen) == 0 && static_cast<Code>(w[j]) < static_cast<Code>(w[best])) best = j;
        seen |= Mask{1} << g;
      }
      for (std::size_t j = best; j > k; --j) swap_at(w, j - 1, sink, side);
    }
  }

  template <class F>
  void occurrences(const std::string& w, const std::string& x, int first, F&& emit) const {
    const int m = static_cast<int>(x.size());
    Mask suffix[65];
    suffix[m] = 0;
    for (int t = m - 1; t >= 0; --t) suffix[t] = suffix[t + 1] | (Mask{1} << gen_of(x[t]));
    const int n = static_cast<int>(w.size());
    auto dfs = [&](auto&& self, int t, int q, Mask chosen, Mask left, Mask chosen_g, Mask right_g,
                   int last) -> void {
      if (t == m) {
        emit(Occurrence{chosen, left, first, last});
        return;
      }
      if (q >= n) return;
      const char c = w[q];
      const Mask dg = dep_[gen_of(c)];
      if (c == x[t] && (dg & right_g) == 0) {
        self(self, t + 1, q + 1, chosen | (Mask{1} << q), left, chosen_g | (Mask{1} << gen_of(c)), right_g, q);
      }
      const bool can_left = (dg & chosen_g) == 0 && (dg & right_g) == 0;
      const bool can_right = (dg & suffix[t]) == 0;
      if (can_left) {
        self(self, t, q + 1, chosen, left | (Mask{1} << q), chosen_g, right_g, last);
      } else if (can_right) {
        self(self, t, q + 1, chosen, left, chosen_g, right_g | (Mask{1} << gen_of(c)), last);
      }
    };
    if (w[first] != x[0]) return;
    dfs(dfs, 1, first + 1, Mask{1} << first, 0, Mask{1} << gen_of(w[first]), 0, first);
  }

  static std::string rearranged(const std::string& w, const Occurrence& o) {
    std::string out = w.substr(0, o.first);
    std::string mid, right;
    for (int q = o.first; q <= o.last; ++q) {
      if (o.left >> q & 1) {
        out.push_back(w[q]);
      } else if (o.chosen >> q & 1) {
        mid.push_back(w[q]);
      } else {
        right.push_back(w[q]);
      }
    }
    return out + mid + right + w.substr(o.last + 1);
  }

  // Successor of w through rule r at occurrence o, not yet canonical.
  static std::string rewrite(const std::string& w, const Occurrence& o, const Rule& r) {
    const std::string arranged = rearranged(w, o);
    const std::size_t pos = o.first + std::popcount(o.left);
    std::string out = arranged.substr(0, pos) + r.y + arranged.substr(pos + r.x.size());
    reduce(out);
    return out;
  }

  struct Node {
    std::uint32_t parent;
    std::uint32_t rule;
    std::uint16_t ordinal;
    std::uint8_t pos;
    std::uint8_t side;
  };

  // Replays the edge from canonical word w and appends the steps.
  void replay_edge(std::string& w, const Node& nd, std::vector<ProofStep>& sink, int side) const {
    const Rule& r = rules_[nd.rule];
    int count = 0;
    std::optional<Occurrence> hit;
    occurrences(w, r.x, nd.pos, [&](const Occurrence& o) {
      if (count++ == nd.ordinal) hit = o;
    });
    if (!hit) throw Error("internal: lost occurrence during chain reconstruction");
    const Occurrence o = *hit;
    // Bubble the span into the order left | chosen | right.
    std::vector<int> rank(w.size(), 0);
    int next = 0;
    for (int pass = 0; pass < 3; ++pass) {
      for (int q = o.first; q <= o.last; ++q) {
        const bool l = o.left >> q & 1, c = o.chosen >> q & 1;
        if ((pass == 0 && l) || (pass == 1 && c) || (pass == 2 && !l && !c)) rank[q] = next++;
      }
    }
    for (bool moved = true; moved;) {
      moved = false;
      for (int k = o.first; k < o.last; ++k) {
        if (rank[k] > rank[k + 1]) {
          const std::size_t before = w.size();
          swap_at(w, k, &sink, side);
          if (w.size() != before) throw Error("internal: cancellation while rearranging");
          std::swap(rank[k], rank[k + 1]);
          moved = true;
        }
      }
    }
    const std::size_t pos = o.first + std::popcount(o.left);
    if (w.compare(pos, r.x.size(), r.x) != 0) throw Error("internal: rearranged word does not expose the rule");
    sink.push_back(make_step(side, static_cast<int>(pos), r.src));
    w = w.substr(0, pos) + r.y + w.substr(pos + r.x.size());
    reduce(w);
    canonicalize(w, &sink, side);
  }

  std::vector<ProofStep> path_steps(const std::vector<Node>& nodes, const std::deque<std::string>& words,
                                    std::uint32_t id, const std::string& start, int side) const {
    std::vector<std::uint32_t> trail;
    for (std::uint32_t cur = id; nodes[cur].parent != cur; cur = nodes[cur].parent) trail.push_back(cur);
    std::vector<ProofStep> steps;
    std::string w = start;
    canonicalize(w, &steps, side);
    std::uint32_t root = id;
    while (nodes[root].parent != root) root = nodes[root].parent;
    if (w != words[root]) throw Error("internal: root canonical form mismatch");
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      replay_edge(w, nodes[*it], steps, side);
      if (w != words[*it]) throw Error("internal: chain reconstruction diverged");
    }
    return steps;
  }
};

ProofResult Engine::prove(const Word& a, const Word& b, const ProverBudget& budget) {
  ProofResult res;
  const int bound = budget.length_bound(a, b);
  if (budget.max_nodes < 1) throw Error("degenerate budget: max_nodes must be positive");
  if (bound < static_cast<int>(std::max(a.size(), b.size()))) {
    throw Error("degenerate budget: max_word_length below the operand length");
  }
  if (bound > 64) throw Error("prover supports words of length at most 64");
  const std::string ea = encode(a), eb = encode(b);
  res.stats.max_length = static_cast<int>(std::max(a.size(), b.size()));
  if (a == b) {
    res.status = ProofStatus::Proved;
    res.meet = a;
    res.stats.nodes = 1;
    return res;
  }

  std::vector<Node> nodes;
  std::deque<std::string> words;
  std::unordered_map<std::string_view, std::uint32_t> index;
  std::vector<std::uint32_t> frontier[2];
  const std::string starts[2] = {ea, eb};

  auto finish = [&](std::uint32_t id0, std::uint32_t id1) {
    res.status = ProofStatus::Proved;
    auto s0 = path_steps(nodes, words, id0, starts[0], 0);
    auto s1 = path_steps(nodes, words, id1, starts[1], 1);
    res.chain = std::move(s0);
    res.chain.insert(res.chain.end(), s1.begin(), s1.end());
    res.meet = decode(words[id0]);
    res.stats.nodes = static_cast<std::int64_t>(nodes.size());
  };

  for (int side = 0; side < 2; ++side) {
    std::string w = starts[side];
    canonicalize(w, nullptr, side);
    auto it = index.find(w);
    if (it != index.end()) {
      // Both operands already share a canonical form.
      res.status = ProofStatus::Proved;
      std::string w0 = starts[0];
      canonicalize(w0, &res.chain, 0);
      std::string w1 = starts[1];
      canonicalize(w1, &res.chain, 1);
      res.meet = decode(w0);
      res.stats.nodes = 1;
      return res;
    }
    const auto id = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({id, 0, 0, 0, static_cast<std::uint8_t>(side)});
    words.push_back(std::move(w));
    index.emplace(words.back(), id);
    frontier[side].push_back(id);
  }

  auto shortlex_less = [&](std::uint32_t x, std::uint32_t y) {
    const auto& wx = words[x];
    const auto& wy = words[y];
    if (wx.size() != wy.size()) return wx.size() < wy.size();
    return wx < wy;
  };

  while (!frontier[0].empty() || !frontier[1].empty()) {
    int side = 0;
    if (frontier[0].empty() || (!frontier[1].empty() && frontier[1].size() < frontier[0].size())) side = 1;
    std::vector<std::uint32_t> next;
    for (std::uint32_t id : frontier[side]) {
      ++res.stats.expanded;
      const std::string w = words[id];
      for (int first = 0; first < static_cast<int>(w.size()); ++first) {
        for (int ri : by_first_[static_cast<Code>(w[first])]) {
          const Rule& r = rules_[ri];
          int ordinal = 0;
          std::optional<std::pair<std::uint32_t, std::uint32_t>> met;
          occurrences(w, r.x, first, [&](const Occurrence& o) {
            const int ord = ordinal++;
            if (met || nodes.size() >= static_cast<std::size_t>(budget.max_nodes)) return;
            std::string s = rewrite(w, o, r);
            if (static_cast<int>(s.size()) > bound) return;
            canonicalize(s, nullptr, side);
            auto it = index.find(s);
            if (it != index.end()) {
              if (nodes[it->second].side != side) {
                const auto nid = static_cast<std::uint32_t>(nodes.size());
                nodes.push_back({id, static_cast<std::uint32_t>(ri), static_cast<std::uint16_t>(ord),
                                 static_cast<std::uint8_t>(first), static_cast<std::uint8_t>(side)});
                words.push_back(s);
                met = side == 0 ? std::make_pair(nid, it->second) : std::make_pair(it->second, nid);
              }
              return;
            }
            res.stats.max_length = std::max(res.stats.max_length, static_cast<int>(s.size()));
            const auto nid = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back({id, static_cast<std::uint32_t>(ri), static_cast<std::uint16_t>(ord),
                             static_cast<std::uint8_t>(first), static_cast<std::uint8_t>(side)});
            words.push_back(std::move(s));
            index.emplace(words.back(), nid);
            next.push_back(nid);
          });
          if (met) {
            finish(met->first, met->second);
            return res;
          }
          if (nodes.size() >= static_cast<std::size_t>(budget.max_nodes)) {
            res.stats.nodes = static_cast<std::int64_t>(nodes.size());
            return res;
          }
        }
      }
    }
    if (budget.deterministic_order) std::sort(next.begin(), next.end(), shortlex_less);
    frontier[side] = std::move(next);
  }
  res.stats.nodes = static_cast<std::int64_t>(nodes.size());
  return res;
}

}  // namespace

ProofResult prove_equal(const Presentation& p, const Word& a, const Word& b, const ProverBudget& budget,
                        std::span<const Lemma> lemmas) {
  if (!p.covers(a) || !p.covers(b)) throw Error("prove_equal: operand uses a letter outside the alphabet");
  Engine e(p, lemmas);
  return e.prove(a, b, budget);
}

Word apply_step(const Presentation& p, std::span<const Lemma> lemmas, const Word& w, const ProofStep& s) {
  Word lhs, rhs;
  if (s.lemma) {
    if (s.source < 0 || s.source >= static_cast<int>(lemmas.size())) throw Error("step names a missing lemma");
    lhs = lemmas[s.source].lhs;
    rhs = lemmas[s.source].rhs;
  } else {
    if (s.source < 0 || s.source >= static_cast<int>(p.relations.size())) {
      throw Error("step names a missing relation");
    }
    lhs = p.relations[s.source].lhs;
    rhs = p.relations[s.source].rhs;
  }
  auto [x, y] = relator_piece(relator_of(lhs, rhs), s.inverse, s.rotation, s.split);
  if (s.position < 0 || s.position + x.size() > w.size()) throw Error("step position out of range");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(w[s.position + k] == x[k])) throw Error("step does not match the word at its position");
  }
  std::vector<Letter> raw(w.begin(), w.begin() + s.position);
  raw.insert(raw.end(), y.begin(), y.end());
  raw.insert(raw.end(), w.begin() + s.position + x.size(), w.end());
  return Word(raw);
}

Word replay(const Presentation& p, std::span<const Lemma> lemmas, const Word& start,
            std::span<const ProofStep> chain, int side) {
  Word w = start;
  for (const auto& s : chain) {
    if (s.side == side) w = apply_step(p, lemmas, w, s);
  }
  return w;
}

bool verify_lemmas(const Presentation& p, std::span<const Lemma> lemmas) {
  for (const auto& l : lemmas) {
    if (!verify_proof(p, l.deps, l.lhs, l.rhs, l.proof)) return false;
  }
  return true;
}

bool verify_proof(const Presentation& p, std::span<const Lemma> lemmas, const Word& a, const Word& b,
                  const ProofResult& r) {
  if (!r.proved()) return false;
  try {
    for (const auto& s : r.chain) {
      if (s.lemma && s.source >= static_cast<int>(lemmas.size())) return false;
    }
    if (!verify_lemmas(p, lemmas)) return false;
    return replay(p, lemmas, a, r.chain, 0) == r.meet && replay(p, lemmas, b, r.chain, 1) == r.meet;
  } catch (const Error&) {
    return false;
  }
}

ProofResult reversed(const ProofResult& r) {
  ProofResult out = r;
  std::vector<ProofStep> first, second;
  for (auto s : r.chain) {
    s.side = 1 - s.side;
    (s.side == 0 ? first : second).push_back(s);
  }
  out.chain = std::move(first);
  out.chain.insert(out.chain.end(), second.begin(), second.end());
  return out;
}

ObligationReport verify_obligations(const Presentation& p, const std::vector<Obligation>& obligations,
                                    const ProverBudget& budget, std::span<const Lemma> lemmas) {
  ObligationReport rep;
  for (const auto& ob : obligations) {
    ObligationOutcome out{ob, prove_equal(p, ob.lhs, ob.rhs, budget, lemmas)};
    rep.pass = rep.pass && out.result.proved();
    rep.entries.push_back(std::move(out));
  }
  return rep;
}

}  // namespace orbi
