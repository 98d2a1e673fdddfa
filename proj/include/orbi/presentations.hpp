// Presentations of orbifold braid groups, their rewritten forms, Artin and
// Coxeter presentations from weighted graphs, and presentation file I/O.
#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbi/words.hpp"

namespace orbi {

struct Relation {
  Word lhs;
  Word rhs;
  std::string tag;
};

class Presentation {
 public:
  std::string name;
  std::map<std::string, int> params;
  std::vector<GeneratorId> generators;
  std::vector<Relation> relations;

  bool has_generator(const GeneratorId& g) const;
  // Position in `generators`, or -1.
  int index_of(const GeneratorId& g) const;
  bool covers(const Word& w) const;
  int param(const std::string& key, int fallback = 0) const;

  void add_generator(const GeneratorId& g);
  // Rejects relations whose sides coincide or that use undeclared generators.
  void add_relation(Word lhs, Word rhs, std::string tag);
  void add_commutator(const Word& a, const Word& b, std::string tag);
  void add_braid(const Word& a, const Word& b, int length, std::string tag);

  // Throws if some relation letter is not a declared generator.
  void validate() const;
};

// The defining words of the pure generators in terms of h_j, t_lambda, u_nu:
//   a(j,i) = h_{j-1}^-1 ... h_{i+1}^-1 h_i^2 h_{i+1} ... h_{j-1}
//   b(k,l) = h_{k-1}^-1 ... h_1^-1 t_l h_1 ... h_{k-1}
//   c(k,v) = h_{k-1}^-1 ... h_1^-1 u_v h_1 ... h_{k-1}
Word expand_pure_generator(const GeneratorId& g);
Word expand_pure_word(const Word& w);

// h_1 h_2 ... h_k (ascending) and its inverse.
Word ascending_h(int k);

Presentation build_orbifold_braid(int n, int L, const std::vector<int>& cone_orders);
Presentation build_pure_orbifold(int n, int L, const std::vector<int>& cone_orders);
Presentation build_prop32_presentation(int n, int m, int mprime);
Presentation build_prop36_presentation(int n, int m);
Presentation build_cor35_presentation(int n, int m);
Presentation build_remark34_presentation(int m, int mprime);

// Indices (k, primed) of the extra R3' relations for the n = 3 two-cone case.
// The first element lists k, the second k', for a cone order `order`.
std::pair<std::vector<int>, std::vector<int>> remark34_ranges(int order);

struct WeightedGraph {
  static constexpr int kInfinity = 0;
  struct Edge {
    int a = 0;
    int b = 0;
    int weight = 3;  // kInfinity means no relation
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> triple_marks;

  // Vertices are numbered 1..vertex_count.
  std::optional<int> weight(int a, int b) const;
  void validate() const;
};

Presentation artin_from_graph(const WeightedGraph& g);
WeightedGraph path_graph(int vertices, int weight = 3);

using GeneratorFilter = std::function<bool(const GeneratorId&)>;
// Generators that get g^2 = 1 by default: the h family, conjugate h generators
// and weighted-graph vertices.
bool is_reflection_like(const GeneratorId& g);
bool is_torsion_generator(const GeneratorId& g);
Presentation coxeterize(const Presentation& p, const GeneratorFilter& filter = is_reflection_like);
// Keeps the generators accepted by `keep` and the relations that only use them.
Presentation restrict_to(const Presentation& p, const GeneratorFilter& keep);

std::string format_presentation(const Presentation& p);
void write_presentation(std::ostream& os, const Presentation& p);
Presentation parse_presentation(const std::string& text);
Presentation read_presentation_file(const std::string& path);
void write_presentation_file(const std::string& path, const Presentation& p);

}  // namespace orbi
