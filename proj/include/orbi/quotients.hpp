// Monomial matrix groups G(m,p,n) and the wreath quotient A wr S_n with
// A = Z_{m_1} x ... x Z_{m_N} x Z^L, used as exact homomorphic images.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbi/presentations.hpp"
#include "orbi/words.hpp"

namespace orbi {

// The label coordinates: one cyclic coordinate per modulus > 0, one free
// coordinate per modulus == 0.
struct ExponentGroup {
  std::vector<int> moduli;

  std::size_t rank() const { return moduli.size(); }
  bool operator==(const ExponentGroup&) const = default;
  static ExponentGroup cyclic(int m) { return {{m}}; }
};

// (sigma, a) with matrix entries M[sigma(j)][j] = theta^{a_j}. Strands are
// 0-based internally and printed 1-based.
class MonomialElement {
 public:
  MonomialElement() = default;
  MonomialElement(int n, ExponentGroup group);
  MonomialElement(std::vector<int> perm, std::vector<std::vector<long long>> exps, ExponentGroup group);

  static MonomialElement identity(int n, const ExponentGroup& group) { return {n, group}; }
  static MonomialElement transposition(int n, const ExponentGroup& group, int j);  // swaps j, j+1 (1-based)
  static MonomialElement diagonal_unit(int n, const ExponentGroup& group, int strand, int coord);

  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<std::vector<long long>>& exps() const { return exps_; }
  const ExponentGroup& group() const { return group_; }

  bool is_identity() const;
  MonomialElement inverse() const;
  // Sum over strands of the given coordinate (reduced for cyclic coordinates).
  long long exponent_sum(int coord) const;

  auto operator<=>(const MonomialElement& o) const {
    if (auto c = perm_ <=> o.perm_; c != 0) return c;
    return exps_ <=> o.exps_;
  }
  bool operator==(const MonomialElement& o) const { return perm_ == o.perm_ && exps_ == o.exps_; }

  // "(1 2)(3) | [1,0,0]" style; free coordinates are appended per strand.
  std::string str() const;

 private:
  std::vector<int> perm_;
  std::vector<std::vector<long long>> exps_;
  ExponentGroup group_;

  void normalize();
};

MonomialElement monomial_mul(const MonomialElement& a, const MonomialElement& b);

// Standard images: h_j -> (s_j, 0), u_nu -> (id, e_1 in the nu-th cyclic
// coordinate), t_lambda -> (id, e_1 in the lambda-th free coordinate) when
// punctures are tracked, identity otherwise. Every other generator is
// evaluated through its defining word in h, t, u.
struct WreathAssignment {
  int n = 1;
  std::vector<int> cone_orders;
  int punctures = 0;
  bool track_punctures = true;

  ExponentGroup group() const;
  static WreathAssignment standard_for(const Presentation& p, bool track_punctures = true);
};

// Defining word of a generator in terms of h_j, t_lambda, u_nu. For example
// u' -> c(n,2), ubar -> c(n,1), hu1 -> u h1 u^-1.
Word defining_word(const GeneratorId& g, int n);

MonomialElement evaluate_generator(const WreathAssignment& asgn, const GeneratorId& g);
MonomialElement evaluate_word(const WreathAssignment& asgn, const Word& w);
MonomialElement evaluate_letters(const WreathAssignment& asgn, std::span<const Letter> raw);

struct QuotientCheck {
  std::string tag;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct QuotientReport {
  std::vector<QuotientCheck> entries;
  bool pass = true;
};

QuotientReport check_relations_in_quotient(const Presentation& p, const WreathAssignment& asgn);

struct GroupEnumeration {
  long long count = 0;
  std::vector<MonomialElement> elements;
};

// All of G(m,p,n): exponents in Z_m with exponent sum divisible by p.
GroupEnumeration enumerate_G(int m, int p, int n, long long cap = 5'000'000);
long long order_G(int m, int p, int n);

// Closure of a generating set under multiplication (breadth-first).
GroupEnumeration generated_subgroup(const std::vector<MonomialElement>& gens, long long cap = 5'000'000);

// True iff the images differ, which proves a != b in the presented group.
bool separate(const WreathAssignment& asgn, const Word& a, const Word& b);

inline constexpr const char* kMonomialConvention = "M[sigma(j)][j] = theta^{a_j}; (s,a)(t,b) = (s t, c), c_j = b_j + a_{t(j)}";

}  // namespace orbi
