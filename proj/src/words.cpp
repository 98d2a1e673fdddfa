#include "orbi/words.hpp"

#include <cctype>
#include <charconv>

namespace orbi {

std::string GeneratorId::label() const {
  auto n = [](int v) { return std::to_string(v); };
  switch (family) {
    case Family::H: return "h" + n(i);
    case Family::U: return i == 1 ? "u" : "u" + n(i);
    case Family::UPrime: return "u'";
    case Family::UBar: return "ubar";
    case Family::T: return i == 1 ? "t" : "t" + n(i);
    case Family::Aji: return "a(" + n(i) + "," + n(j) + ")";
    case Family::Bkl: return "b(" + n(i) + "," + n(j) + ")";
    case Family::Ckv: return "c(" + n(i) + "," + n(j) + ")";
    case Family::HUConj: return (j == 0 ? "hu" : "hu'") + n(i);
    case Family::Named: return "v" + n(i);
  }
  return "?";
}

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (const auto& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<Letter> raw) : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::of(GeneratorId g, int power) {
  std::vector<Letter> raw(static_cast<std::size_t>(power < 0 ? -power : power),
                          Letter{g, static_cast<std::int8_t>(power < 0 ? -1 : 1)});
  return Word(raw);
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (auto c = letters_[k] <=> o.letters_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < letters_.size()) {
    // Collapse runs of the same letter into powers.
    std::size_t run = 1;
    while (k + run < letters_.size() && letters_[k + run] == letters_[k]) ++run;
    if (!out.empty()) out += '*';
    out += letters_[k].gen.label();
    int e = static_cast<int>(run) * letters_[k].sign;
    if (e != 1) out += "^" + std::to_string(e);
    k += run;
  }
  return out;
}

Word free_reduce(std::span<const Letter> raw) { return Word(raw); }

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw(a.begin(), a.end());
  raw.insert(raw.end(), b.begin(), b.end());
  return Word(raw);
}

Word concat(std::initializer_list<Word> parts) {
  std::vector<Letter> raw;
  for (const auto& p : parts) raw.insert(raw.end(), p.begin(), p.end());
  return Word(raw);
}

Word operator*(const Word& a, const Word& b) { return concat(a, b); }

Word invert(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (std::size_t k = w.size(); k-- > 0;) raw.push_back(w[k].inverse());
  return Word(raw);
}

Word power(const Word& w, int k) {
  const Word base = k < 0 ? invert(w) : w;
  std::vector<Letter> raw;
  for (int r = 0; r < (k < 0 ? -k : k); ++r) raw.insert(raw.end(), base.begin(), base.end());
  return Word(raw);
}

Word alternating_word(const Word& a, const Word& b, int k) {
  if (k < 0) throw Error("alternating_word: k must be non-negative");
  std::vector<Letter> raw;
  for (int r = 0; r < k; ++r) {
    const Word& f = (r % 2 == 0) ? a : b;
    raw.insert(raw.end(), f.begin(), f.end());
  }
  return Word(raw);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw Error("bad generator index in '" + std::string(whole) + "'");
  }
  return v;
}

std::int16_t i16(int v) { return static_cast<std::int16_t>(v); }

}  // namespace

GeneratorId parse_generator(std::string_view text) {
  const std::string_view whole = text;
  auto starts = [&](std::string_view p) { return text.substr(0, p.size()) == p; };
  auto pair = [&](Family f, std::string_view rest) {
    if (rest.size() < 5 || rest.front() != '(' || rest.back() != ')') {
      throw Error("expected (j,i) indices in '" + std::string(whole) + "'");
    }
    rest = rest.substr(1, rest.size() - 2);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw Error("expected comma in '" + std::string(whole) + "'");
    return GeneratorId{f, i16(parse_int(rest.substr(0, comma), whole)),
                       i16(parse_int(rest.substr(comma + 1), whole))};
  };
  if (text == "ubar") return GeneratorId::ubar();
  if (text == "u'") return GeneratorId::uprime();
  if (starts("hu'")) return GeneratorId::huprime(parse_int(text.substr(3), whole));
  if (starts("hu")) return GeneratorId::hu(parse_int(text.substr(2), whole));
  if (text.empty()) throw Error("empty generator name");
  const char head = text.front();
  const std::string_view rest = text.substr(1);
  switch (head) {
    case 'h': return GeneratorId::h(parse_int(rest, whole));
    case 'u': return GeneratorId::u(rest.empty() ? 1 : parse_int(rest, whole));
    case 't': return GeneratorId::t(rest.empty() ? 1 : parse_int(rest, whole));
    case 'v': return GeneratorId::named(parse_int(rest, whole));
    case 'a': return pair(Family::Aji, rest);
    case 'b': return pair(Family::Bkl, rest);
    case 'c': return pair(Family::Ckv, rest);
    default: break;
  }
  throw Error("unknown generator '" + std::string(whole) + "'");
}

namespace {

// Recursive-descent parser:
//   word   := factor (('*' | whitespace) factor)*
//   factor := atom ('^' integer)*
//   atom   := '1' | identifier | '(' word ')'
class WordParser {
 public:
  explicit WordParser(std::string_view s) : s_(s) {}

  Word parse() {
    skip();
    Word w = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse word '" + std::string(s_) + "': " + what + " at offset " +
                std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_atom_start() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  Word word() {
    std::vector<Letter> raw;
    auto append = [&](const Word& w) { raw.insert(raw.end(), w.begin(), w.end()); };
    append(factor());
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
        append(factor());
      } else if (at_atom_start()) {
        append(factor());
      } else {
        break;
      }
    }
    return Word(raw);
  }

  Word factor() {
    Word w = atom();
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '^') break;
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      int e = 0;
      std::string_view num = s_.substr(start, pos_ - start);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), e);
      if (ec != std::errc() || p != num.data() + num.size()) fail("bad exponent");
      w = power(w, e);
    }
    return w;
  }

  Word atom() {
    skip();
    if (pos_ >= s_.size()) fail("expected a generator");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      skip();
      Word w = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return w;
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a generator");
    if (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
    if ((name == "a" || name == "b" || name == "c") && pos_ < s_.size() && s_[pos_] == '(') {
      while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
      if (pos_ >= s_.size()) fail("missing ')' in pure generator");
      ++pos_;
    } else {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string id;
    for (char ch : s_.substr(start, pos_ - start)) {
      if (!std::isspace(static_cast<unsigned char>(ch))) id += ch;
    }
    return Word::of(parse_generator(id));
  }
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

}  // namespace orbi
