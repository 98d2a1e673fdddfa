// Signed generator letters, freely reduced words and their text syntax.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The declaration order is also the shortlex order used for tie-breaking.
enum class Family : std::uint8_t { H, U, UPrime, UBar, T, Aji, Bkl, Ckv, HUConj, Named };

// Index conventions per family:
//   H(j)           h_j
//   U(nu)          cone generator tau_nu; U(1) prints as "u"
//   UPrime, UBar   u' and ubar, no indices
//   T(lambda)      puncture generator; T(1) prints as "t"
//   Aji(j,i), Bkl(k,lambda), Ckv(k,nu)   pure generators
//   HUConj(j,0)    h_j conjugated by u (or by ubar), prints "hu<j>"
//   HUConj(j,1)    h_j conjugated by u', prints "hu'<j>"
//   Named(i)       weighted-graph vertex, prints "v<i>"
struct GeneratorId {
  Family family = Family::H;
  std::int16_t i = 0;
  std::int16_t j = 0;

  auto operator<=>(const GeneratorId&) const = default;

  std::string label() const;

  static GeneratorId h(int j) { return {Family::H, static_cast<std::int16_t>(j), 0}; }
  static GeneratorId u(int nu = 1) { return {Family::U, static_cast<std::int16_t>(nu), 0}; }
  static GeneratorId uprime() { return {Family::UPrime, 0, 0}; }
  static GeneratorId ubar() { return {Family::UBar, 0, 0}; }
  static GeneratorId t(int lambda = 1) { return {Family::T, static_cast<std::int16_t>(lambda), 0}; }
  static GeneratorId a(int j, int i) {
    return {Family::Aji, static_cast<std::int16_t>(j), static_cast<std::int16_t>(i)};
  }
  static GeneratorId b(int k, int lambda) {
    return {Family::Bkl, static_cast<std::int16_t>(k), static_cast<std::int16_t>(lambda)};
  }
  static GeneratorId c(int k, int nu) {
    return {Family::Ckv, static_cast<std::int16_t>(k), static_cast<std::int16_t>(nu)};
  }
  static GeneratorId hu(int j) { return {Family::HUConj, static_cast<std::int16_t>(j), 0}; }
  static GeneratorId huprime(int j) { return {Family::HUConj, static_cast<std::int16_t>(j), 1}; }
  static GeneratorId named(int i) { return {Family::Named, static_cast<std::int16_t>(i), 0}; }
};

struct Letter {
  GeneratorId gen;
  std::int8_t sign = 1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  bool operator==(const Letter&) const = default;
  // Family, then indices, then sign with + before -.
  std::strong_ordering operator<=>(const Letter& o) const {
    if (auto c = gen <=> o.gen; c != 0) return c;
    return o.sign <=> sign;
  }
};

// A freely reduced word. Every constructor reduces, so two Words compare equal
// exactly when they are the same element of the free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);
  static Word of(GeneratorId g, int power = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool operator==(const Word&) const = default;
  // Shortlex: shorter words first, then letterwise.
  std::strong_ordering operator<=>(const Word& o) const;

  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> parts);
Word invert(const Word& w);
Word power(const Word& w, int k);
// a*b*a*... with exactly k factors.
Word alternating_word(const Word& a, const Word& b, int k);
// Shorthand for concat.
Word operator*(const Word& a, const Word& b);

GeneratorId parse_generator(std::string_view text);
// Accepts identifiers, '*', '^k', '^-1', parentheses for grouping and '1'.
Word parse_word(std::string_view text);

}  // namespace orbi
