#pragma once

// Alphabets, words of the free monoid, module words and the textual word
// syntax shared by the rest of the library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsb/error.hpp"

namespace gsb {

/// Interned letter: an index into an Alphabet. Index 0 is the greatest letter.
using Symbol = std::uint32_t;

inline constexpr std::string_view kInverseSuffix = "^-1";

namespace detail {

inline bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
inline bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

/// Length of the symbol token starting at `s[0]` (identifier with optional
/// `^-1`), or 0 if there is none.
inline std::size_t scan_symbol(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return 0;
  std::size_t n = 1;
  while (n < s.size() && is_ident_char(s[n])) ++n;
  if (s.substr(n).starts_with(kInverseSuffix)) n += kInverseSuffix.size();
  return n;
}

inline bool is_symbol_name(std::string_view s) {
  return !s.empty() && scan_symbol(s) == s.size();
}

}  // namespace detail

class Word {
 public:
  using const_iterator = std::vector<Symbol>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Symbol> letters) : letters_(letters) {}
  template <std::input_iterator It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t degree() const noexcept { return letters_.size(); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Symbol> letters() const noexcept { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix_from(std::size_t pos) const {
    return subword(pos, letters_.size() - pos);
  }

  /// True if `pattern` occurs in this word starting at `pos`.
  bool matches_at(const Word& pattern, std::size_t pos) const noexcept {
    if (pos + pattern.size() > size()) return false;
    return std::equal(pattern.begin(), pattern.end(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  bool has_suffix(const Word& w) const noexcept {
    return w.size() <= size() && matches_at(w, size() - w.size());
  }
  bool has_prefix(const Word& w) const noexcept { return matches_at(w, 0); }
  bool contains(const Word& w) const noexcept {
    if (w.size() > size()) return false;
    for (std::size_t i = 0; i + w.size() <= size(); ++i) {
      if (matches_at(w, i)) return true;
    }
    return false;
  }

  void push_back(Symbol s) { letters_.push_back(s); }
  void append(const Word& w) {
    letters_.insert(letters_.end(), w.begin(), w.end());
  }

  // Structural order only; monomial orderings live in ordering.hpp.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Symbol s : w) {
      h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.append(v);
  return r;
}

inline Word concat(const Word& a, const Word& s, const Word& b) {
  Word r = a;
  r.append(s);
  r.append(b);
  return r;
}

/// Power of a single letter.
inline Word power(Symbol s, std::size_t n) {
  return Word(std::vector<Symbol>(n, s));
}

/// Element u·y of X*Y: a word acting on a module generator.
struct ModuleWord {
  Word prefix;
  Symbol generator = 0;

  std::size_t degree() const noexcept { return prefix.degree(); }
  friend auto operator<=>(const ModuleWord&, const ModuleWord&) = default;
  friend bool operator==(const ModuleWord&, const ModuleWord&) = default;
};

/// Left action of a word on a module word.
inline ModuleWord concat(const Word& a, const ModuleWord& m) {
  return ModuleWord{concat(a, m.prefix), m.generator};
}

/// Ordered set of symbol names; earlier symbols are greater. Used both for
/// the letters X of the free algebra and for a module basis Y.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> symbols)
      : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const std::string& name = symbols_[i];
      if (!detail::is_symbol_name(name)) {
        throw Error(ErrorCode::SyntaxError,
                    "invalid symbol name '" + name + "'", i);
      }
      if (!index_.emplace(name, static_cast<Symbol>(i)).second) {
        throw Error(ErrorCode::SymbolClash,
                    "duplicate symbol '" + name + "'", i);
      }
    }
    inverse_.assign(symbols_.size(), std::nullopt);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      std::string_view name = symbols_[i];
      if (!name.ends_with(kInverseSuffix)) continue;
      std::string base(name.substr(0, name.size() - kInverseSuffix.size()));
      if (auto it = index_.find(base); it != index_.end()) {
        inverse_[i] = it->second;
        inverse_[it->second] = static_cast<Symbol>(i);
      }
    }
  }

  Alphabet(std::initializer_list<std::string> symbols)
      : Alphabet(std::vector<std::string>(symbols)) {}

  /// Parses "a > b > c".
  static Alphabet parse(std::string_view text) {
    std::vector<std::string> names;
    text = detail::trim(text);
    if (text.empty()) return Alphabet();
    std::size_t start = 0;
    while (true) {
      std::size_t gt = text.find('>', start);
      std::string_view part = detail::trim(text.substr(
          start, gt == std::string_view::npos ? std::string_view::npos
                                              : gt - start));
      if (!detail::is_symbol_name(part)) {
        throw Error(ErrorCode::SyntaxError,
                    "bad symbol '" + std::string(part) + "' in alphabet",
                    start);
      }
      names.emplace_back(part);
      if (gt == std::string_view::npos) break;
      start = gt + 1;
    }
    return Alphabet(std::move(names));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const std::string& name(Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<Symbol> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Symbol at(std::string_view name) const {
    if (auto s = find(name)) return *s;
    throw Error(ErrorCode::UnknownSymbol, "'" + std::string(name) + "'");
  }

  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// Formal inverse partner (x <-> x^-1) when both are present.
  std::optional<Symbol> inverse(Symbol s) const { return inverse_.at(s); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i) out += " > ";
      out += symbols_[i];
    }
    return out;
  }

  /// Throws AlphabetMismatch unless every letter of `w` is in range.
  void check(const Word& w) const {
    for (Symbol s : w) {
      if (s >= symbols_.size()) {
        throw Error(ErrorCode::AlphabetMismatch,
                    "letter index " + std::to_string(s) +
                        " outside alphabet of size " +
                        std::to_string(symbols_.size()));
      }
    }
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Symbol> index_;
  std::vector<std::optional<Symbol>> inverse_;
};

/// Parses `a*a*b`, `a^-1*t`, or `1` (the empty word).
inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::string_view body = detail::trim(text);
  if (body == "1") return Word();
  if (body.empty()) throw Error(ErrorCode::SyntaxError, "empty word text", 0);
  const std::size_t offset = static_cast<std::size_t>(body.data() - text.data());
  std::vector<Symbol> letters;
  std::size_t pos = 0;
  while (true) {
    while (pos < body.size() && body[pos] == ' ') ++pos;
    std::size_t n = detail::scan_symbol(body.substr(pos));
    if (n == 0) {
      throw Error(ErrorCode::SyntaxError, "expected symbol in '" +
                                              std::string(text) + "'",
                  offset + pos);
    }
    letters.push_back(alphabet.at(body.substr(pos, n)));
    pos += n;
    while (pos < body.size() && body[pos] == ' ') ++pos;
    if (pos == body.size()) break;
    if (body[pos] != '*') {
      throw Error(ErrorCode::SyntaxError,
                  "expected '*' in '" + std::string(text) + "'", offset + pos);
    }
    ++pos;
  }
  return Word(std::move(letters));
}

inline std::string print_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += alphabet.name(w[i]);
  }
  return out;
}

inline std::string print_module_word(const ModuleWord& m,
                                     const Alphabet& alphabet,
                                     const Alphabet& basis) {
  if (m.prefix.empty()) return basis.name(m.generator);
  return print_word(m.prefix, alphabet) + "*" + basis.name(m.generator);
}

struct Factorization {
  Word left;
  Word right;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// All factorizations host = left·pattern·right, by increasing |left|.
inline std::vector<Factorization> occurrences(const Word& pattern,
                                              const Word& host) {
  if (pattern.empty()) {
    throw Error(ErrorCode::EmptyPattern, "occurrence search needs a pattern");
  }
  std::vector<Factorization> out;
  for (std::size_t i = 0; i + pattern.size() <= host.size(); ++i) {
    if (host.matches_at(pattern, i)) {
      out.push_back({host.prefix(i), host.suffix_from(i + pattern.size())});
    }
  }
  return out;
}

}  // namespace gsb
