#pragma once

// Exact word algebra in finitely generated free groups. Generators are the
// meridians x_1, x_2, ...; a Word is kept freely reduced at all times, so
// word equality is plain sequence equality. Letters are stored one per
// entry; exponent compression is a formatting concern only.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnorkit/errors.hpp"

namespace milnorkit {

struct Letter {
  int gen = 1;    // 1-based generator index
  int sign = 1;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

class Word {
public:
  Word() = default;

  explicit Word(Letter l) : letters_{l} { check_letter(l); }

  // Freely reduces an arbitrary letter sequence. Idempotent.
  static Word reduce(const std::vector<Letter>& raw, const Guards& g = {}) {
    Word w;
    w.letters_.reserve(raw.size());
    for (const Letter& l : raw) w.push_reduced(l, g);
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

  // Appends one letter, cancelling against the current tail.
  void push_reduced(Letter l, const Guards& g = {}) {
    check_letter(l);
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().sign == -l.sign) {
      letters_.pop_back();
      return;
    }
    if (letters_.size() >= g.max_word_letters) {
      throw ResourceError("word length guard exceeded (" +
                          std::to_string(g.max_word_letters) + " letters)");
    }
    letters_.push_back(l);
  }

private:
  static void check_letter(Letter l) {
    if (l.gen < 1 || (l.sign != 1 && l.sign != -1)) {
      throw std::invalid_argument("invalid letter: generator index must be >= 1 and sign +-1");
    }
  }

  std::vector<Letter> letters_;
};

inline Word multiply(const Word& u, const Word& v, const Guards& g = {}) {
  Word w = u;
  for (const Letter& l : v.letters()) w.push_reduced(l, g);
  return w;
}

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return Word::reduce(out);
}

// reduce(u v u^-1 v^-1)
inline Word commutator(const Word& u, const Word& v, const Guards& g = {}) {
  return multiply(multiply(u, v, g), multiply(invert(u), invert(v), g), g);
}

// reduce(by w by^-1)
inline Word conjugate(const Word& w, const Word& by, const Guards& g = {}) {
  return multiply(multiply(by, w, g), invert(by), g);
}

inline Word power(const Word& w, long long e, const Guards& g = {}) {
  const Word& base = e >= 0 ? w : invert(w);
  Word out;
  for (long long i = 0, n = e >= 0 ? e : -e; i < n; ++i) out = multiply(out, base, g);
  return out;
}

inline long long exponent_sum(const Word& w, int gen) {
  long long s = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) s += l.sign;
  }
  return s;
}

inline int max_generator(const Word& w) {
  int m = 0;
  for (const Letter& l : w.letters()) m = std::max(m, l.gen);
  return m;
}

// Grammar: whitespace separated tokens, token = "x" INT | "x" INT "^-1"
// | "x" INT "^" SIGNED_INT (expanded to |exponent| letters). The empty
// string is the identity. Reports the byte offset of the offending token.
inline Word parse_word(std::string_view text, int n_generators,
                       const Guards& g = {}) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](std::size_t pos, const std::string& what) -> void {
    throw ParseError("word syntax error at position " + std::to_string(pos) +
                     ": " + what);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t tok_start = i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    if (tok[0] != 'x') fail(tok_start, "expected token of the form xN or xN^E");
    std::size_t k = 1;
    std::size_t digits_end = k;
    while (digits_end < tok.size() &&
           std::isdigit(static_cast<unsigned char>(tok[digits_end]))) {
      ++digits_end;
    }
    if (digits_end == k) fail(tok_start, "missing generator index after 'x'");
    int gen = 0;
    auto [p1, ec1] = std::from_chars(tok.data() + k, tok.data() + digits_end, gen);
    if (ec1 != std::errc() || gen < 1) fail(tok_start, "bad generator index");
    if (gen > n_generators) {
      throw ParseError("generator index x" + std::to_string(gen) +
                       " at position " + std::to_string(tok_start) +
                       " exceeds the declared count " + std::to_string(n_generators));
    }
    long long exp = 1;
    if (digits_end < tok.size()) {
      if (tok[digits_end] != '^') fail(tok_start, "expected '^' before exponent");
      std::string_view es = tok.substr(digits_end + 1);
      if (es.empty()) fail(tok_start, "missing exponent after '^'");
      auto [p2, ec2] = std::from_chars(es.data(), es.data() + es.size(), exp);
      if (ec2 != std::errc() || p2 != es.data() + es.size()) {
        fail(tok_start, "bad exponent");
      }
    }
    const int sign = exp >= 0 ? 1 : -1;
    for (long long n = exp >= 0 ? exp : -exp; n > 0; --n) {
      w.push_reduced({gen, sign}, g);
    }
  }
  return w;
}

// Emits "x1 x2^-1" style with exponent compression of adjacent equal letters.
inline std::string format_word(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long long e = static_cast<long long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(ls[i].gen);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    i = j;
  }
  return out;
}

}  // namespace milnorkit
