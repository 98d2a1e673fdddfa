#include <numeric>
#include <string>

#include "doctest.h"
#include "orbi/center.hpp"
#include "orbi/homomorphisms.hpp"
#include "orbi/prover.hpp"
#include "orbi/quotients.hpp"

using namespace orbi;

namespace {

Word w(const std::string& s) { return parse_word(s); }

// Oracle: the defining word spelled out as text.
std::string gamma_text(int j) {
  std::string s;
  for (int k = j - 1; k >= 1; --k) s += "h" + std::to_string(k) + "*";
  s += "u";
  for (int k = 1; k <= j - 1; ++k) s += "*h" + std::to_string(k);
  return s;
}

}  // namespace

TEST_CASE("gamma and theta words") {
  CHECK(gamma(1, 3, 2) == w("u"));
  CHECK(gamma(2, 3, 2) == w("h1*u*h1"));
  CHECK(gamma(3, 3, 2) == w("h2*h1*u*h1*h2"));
  CHECK(theta(1, 2) == w("u"));
  CHECK(theta(2, 2) == w("h1*u*h1*u"));
  CHECK(theta(3, 2) == w("h2*h1*u*h1*h2*h1*u*h1*u"));
  CHECK_THROWS_AS(gamma(0, 3, 2), Error);
  CHECK_THROWS_AS(gamma(4, 3, 2), Error);

  for (int n = 1; n <= 8; ++n) {
    std::string th;
    for (int j = n; j >= 1; --j) th += (th.empty() ? "" : "*") + gamma_text(j);
    CHECK(theta(n, 3) == w(th));
    const auto cw = CentralWitness::make(n, 3);
    CHECK(cw.theta == theta(n, 3));
    REQUIRE(cw.gamma.size() == static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) CHECK(cw.gamma[j - 1] == w(gamma_text(j)));
  }
}

TEST_CASE("pure-generator forms") {
  CHECK(gamma_pure(1) == w("c(1,1)"));
  CHECK(gamma_pure(2) == w("a(2,1)*c(2,1)"));
  CHECK(gamma_pure(3) == w("a(3,2)*a(3,1)*c(3,1)"));
  for (int j = 1; j <= 8; ++j) CHECK(expand_pure_word(gamma_pure(j)) == gamma(j, 8, 2));
  for (int n = 1; n <= 8; ++n) {
    CHECK(expand_pure_word(theta_pure(n)) == theta(n, 2));
    CHECK(pure_degree(theta_pure(n)) == n - 1);
  }
  CHECK(pure_degree(w("c(3,1)")) == 0);
  CHECK(pure_degree(w("a(3,1)^-1")) == -1);
  CHECK(pure_degree(w("a(3,2)*a(2,1)^2")) == 2);
  CHECK_THROWS_AS(pure_degree(w("h1")), Error);
}

TEST_CASE("theta is central in the wreath quotient") {
  for (int n = 2; n <= 6; ++n) {
    for (int m = 2; m <= 6; ++m) {
      const auto p = build_orbifold_braid(n, 0, {m});
      const auto a = WreathAssignment::standard_for(p);
      const auto th = evaluate_word(a, theta(n, m));
      for (const auto& g : p.generators) {
        const auto x = evaluate_generator(a, g);
        CHECK(monomial_mul(th, x) == monomial_mul(x, th));
      }
      // theta maps to the scalar matrix with every exponent 1
      CHECK(th.perm() == MonomialElement::identity(n, a.group()).perm());
      for (const auto& e : th.exps()) CHECK(e[0] == 1);
    }
  }
}

TEST_CASE("theta is central at small size by proof") {
  const auto p = build_orbifold_braid(2, 0, {2});
  const Word th = theta(2, 2);
  for (const auto& g : p.generators) {
    const Word x = Word::of(g);
    const auto r = prove_equal(p, x * th, th * x);
    CHECK(r.proved());
    CHECK(verify_proof(p, {}, x * th, th * x, r));
  }
}

TEST_CASE("membership criterion") {
  const auto a = theta_power_membership(2, 2, 1);
  CHECK(a.l == 1);
  CHECK(a.member);
  const auto b = theta_power_membership(3, 2, 1);
  CHECK(b.l == 2);
  CHECK_FALSE(b.member);
  CHECK(u_exponent(theta(3, 2), 2) == 1);
  const auto c = theta_power_membership(3, 3, 3);
  CHECK(c.l == 1);
  CHECK(c.member);
  CHECK(c.quotient_exponent == 0);

  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 6; ++m) {
      CHECK(theta_order_modulus(n, m) == m / std::gcd(m, n));
      for (int k = 0; k <= 2 * m; ++k) {
        const auto r = theta_power_membership(n, m, k);
        CHECK(r.quotient_exponent == (k * n) % m);
        CHECK(r.normal_form_exponent == r.quotient_exponent);
        CHECK(r.member == (k % r.l == 0));
        CHECK(r.member == (r.quotient_exponent == 0));
      }
    }
  }
}

TEST_CASE("normal-subgroup word for theta powers") {
  CHECK(theta_normal_word(2, 1) == w("h1*hu1"));
  CHECK(theta_normal_word(3, 1) == w("h1*hu1*h2*h1*hu1*h2"));
  CHECK(theta_normal_word(2, 3) == power(w("h1*hu1"), 3));
  // theta_n = N * u^n in the wreath quotient, and N lies in the normal subgroup
  for (int n = 2; n <= 5; ++n) {
    for (int m = 2; m <= 4; ++m) {
      const auto p = build_cor35_presentation(n, m);
      const auto asgn = WreathAssignment::standard_for(p);
      CHECK_FALSE(separate(asgn, theta(n, m), theta_normal_word(n, 1) * power(w("u"), n)));
      const Word nw = theta_normal_word(n, 1);
      for (const auto& l : nw) CHECK_FALSE(is_torsion_generator(l.gen));
    }
  }
}
