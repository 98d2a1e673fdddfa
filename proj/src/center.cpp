#include "orbi/center.hpp"

#include <numeric>

#include "orbi/homomorphisms.hpp"

namespace orbi {

namespace {

void check_index(int j, int n) {
  if (j < 1 || j > n) throw Error("gamma: index " + std::to_string(j) + " outside 1.." + std::to_string(n));
}

}  // namespace

CentralWitness CentralWitness::make(int n, int m) {
  CentralWitness w{n, m, orbi::theta(n, m), {}};
  for (int j = 1; j <= n; ++j) w.gamma.push_back(orbi::gamma(j, n, m));
  return w;
}

Word gamma(int j, int n, int m) {
  check_index(j, n);
  if (m < 2) throw Error("gamma: cone order must be at least 2");
  std::vector<Letter> raw;
  for (int i = j - 1; i >= 1; --i) raw.push_back({GeneratorId::h(i), 1});
  raw.push_back({GeneratorId::u(), 1});
  for (int i = 1; i <= j - 1; ++i) raw.push_back({GeneratorId::h(i), 1});
  return Word(raw);
}

Word theta(int n, int m) {
  if (n < 1) throw Error("theta: need at least one strand");
  Word w;
  for (int j = n; j >= 1; --j) w = concat(w, gamma(j, n, m));
  return w;
}

Word gamma_pure(int j) {
  if (j < 1) throw Error("gamma_pure: index must be positive");
  std::vector<Letter> raw;
  for (int i = j - 1; i >= 1; --i) raw.push_back({GeneratorId::a(j, i), 1});
  raw.push_back({GeneratorId::c(j, 1), 1});
  return Word(raw);
}

Word theta_pure(int n) {
  Word w;
  for (int j = n; j >= 1; --j) w = concat(w, gamma_pure(j));
  return w;
}

long long pure_degree(const Word& w) {
  long long d = 0;
  for (const auto& l : w) {
    const auto f = l.gen.family;
    if (f != Family::Aji && f != Family::Bkl && f != Family::Ckv) {
      throw Error("pure_degree: " + l.gen.label() + " is not a pure generator");
    }
    if (f == Family::Aji && l.gen.j == 1 && l.gen.i >= 2) d += l.sign;
  }
  return d;
}

int theta_order_modulus(int n, int m) {
  if (n < 1 || m < 1) throw Error("theta_order_modulus: arguments must be positive");
  return m / std::gcd(m, n);
}

ThetaMembership theta_power_membership(int n, int m, int k) {
  if (n < 2 || m < 2 || k < 0) throw Error("theta_power_membership: need n >= 2, m >= 2, k >= 0");
  ThetaMembership r;
  r.l = theta_order_modulus(n, m);
  r.member = k % r.l == 0;
  r.quotient_exponent = static_cast<int>((static_cast<long long>(k) * n) % m);
  const Presentation p = build_cor35_presentation(n, m);
  const auto form = semidirect_normal_form(p, power(theta(n, m), k));
  r.normal_form_exponent = form.quotient_exponents.empty() ? 0 : form.quotient_exponents.front();
  return r;
}

Word theta_normal_word(int n, int l) {
  if (n < 2 || l < 0) throw Error("theta_normal_word: need n >= 2, l >= 0");
  Word base;
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<Letter> raw;
    for (int i = j; i >= 1; --i) raw.push_back({GeneratorId::h(i), 1});
    raw.push_back({GeneratorId::hu(1), 1});
    for (int i = 2; i <= j; ++i) raw.push_back({GeneratorId::h(i), 1});
    base = concat(base, Word(raw));
  }
  return power(base, l);
}

}  // namespace orbi
