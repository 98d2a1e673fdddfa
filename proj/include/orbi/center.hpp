// The central element theta_n = gamma_n ... gamma_1 of the orbifold braid
// group with one cone point, its pure-generator form, the degree map on pure
// words and the membership test for powers of theta_n in the normal subgroup.
#pragma once

#include <vector>

#include "orbi/presentations.hpp"
#include "orbi/words.hpp"

namespace orbi {

struct CentralWitness {
  int n = 0;
  int m = 0;
  Word theta;
  std::vector<Word> gamma;  // gamma[0] is gamma_1

  static CentralWitness make(int n, int m);
};

// h_{j-1} ... h_1 u h_1 ... h_{j-1}; requires 1 <= j <= n.
Word gamma(int j, int n, int m);
Word theta(int n, int m);
// a(j,j-1) a(j,j-2) ... a(j,1) c(j,1).
Word gamma_pure(int j);
Word theta_pure(int n);
// Signed count of a(j,1) letters with j >= 2. Throws on a non-pure letter.
long long pure_degree(const Word& w);

// Smallest l > 0 with m | l n.
int theta_order_modulus(int n, int m);

struct ThetaMembership {
  bool member = false;
  int l = 0;
  // k n mod m, computed arithmetically.
  int quotient_exponent = 0;
  // The u exponent of the semidirect normal form of theta_n^k.
  int normal_form_exponent = 0;
};
ThetaMembership theta_power_membership(int n, int m, int k);

// The normal-subgroup word for theta_n^l:
//   ((h1 hu1)(h2 h1 hu1 h2) ... (h_{n-1} ... h1 hu1 h2 ... h_{n-1}))^l
Word theta_normal_word(int n, int l);

}  // namespace orbi
