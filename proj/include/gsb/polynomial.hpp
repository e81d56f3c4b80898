#pragma once

// Noncommutative polynomials with exact rational coefficients, and elements
// of the free left module over them.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/ordering.hpp"
#include "gsb/word.hpp"

namespace gsb {

using Rational = mpq_class;

/// Finite formal sum of keys with nonzero rational coefficients. Storage is
/// keyed structurally; orderings are supplied at query time.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational>;
  using key_type = Key;

  LinearCombination() = default;
  explicit LinearCombination(const Key& k, const Rational& c = 1) {
    add_term(k, c);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Key& k, Rational c) {
    c.canonicalize();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a,
                                     const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a,
                                     const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(LinearCombination a) {
    for (auto& [k, v] : a.terms_) v = -v;
    return a;
  }
  friend LinearCombination operator*(const Rational& c, LinearCombination a) {
    return a *= c;
  }
  friend bool operator==(const LinearCombination& a,
                         const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

using Polynomial = LinearCombination<Word>;
using ModuleElement = LinearCombination<ModuleWord>;

inline Polynomial constant(const Rational& c) { return Polynomial(Word(), c); }

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial scalar_mul(const Rational& c, const Polynomial& p) {
  return c * p;
}

inline Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  for (const auto& [u, a] : p) {
    for (const auto& [v, b] : q) r.add_term(concat(u, v), a * b);
  }
  return r;
}

inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// a · p · b for words a, b.
inline Polynomial multiply(const Word& a, const Polynomial& p, const Word& b) {
  Polynomial r;
  for (const auto& [u, c] : p) r.add_term(concat(a, u, b), c);
  return r;
}

/// Left action of the free algebra on the free module.
inline ModuleElement act(const Polynomial& p, const ModuleElement& m) {
  ModuleElement r;
  for (const auto& [u, a] : p) {
    for (const auto& [w, b] : m) r.add_term(concat(u, w), a * b);
  }
  return r;
}

inline ModuleElement act(const Word& a, const ModuleElement& m) {
  ModuleElement r;
  for (const auto& [w, c] : m) r.add_term(concat(a, w), c);
  return r;
}

template <class Key>
struct LeadingTerm {
  Rational coeff;
  Key word;
};

namespace detail {

inline std::strong_ordering compare_keys(const OrderingSpec& spec,
                                         const Word& u, const Word& v) {
  return compare_words(spec, u, v);
}
inline std::strong_ordering compare_keys(const OrderingSpec& spec,
                                         const ModuleWord& u,
                                         const ModuleWord& v) {
  return compare_module_words(spec, u, v);
}

}  // namespace detail

/// Ordering-greatest term of p.
template <class Key>
LeadingTerm<Key> leading(const LinearCombination<Key>& p,
                         const OrderingSpec& spec) {
  if (p.is_zero()) {
    throw Error(ErrorCode::ZeroPolynomial, "zero has no leading word");
  }
  auto best = p.begin();
  for (auto it = std::next(p.begin()); it != p.end(); ++it) {
    if (detail::compare_keys(spec, it->first, best->first) > 0) best = it;
  }
  return {best->second, best->first};
}

template <class Key>
std::size_t deg_of(const LinearCombination<Key>& p, const OrderingSpec& spec) {
  return leading(p, spec).word.degree();
}

template <class Key>
LinearCombination<Key> make_monic(const LinearCombination<Key>& p,
                                  const OrderingSpec& spec) {
  Rational lc = leading(p, spec).coeff;
  if (lc == 1) return p;
  Rational inv = 1 / lc;
  return inv * p;
}

template <class Key>
bool is_monic(const LinearCombination<Key>& p, const OrderingSpec& spec) {
  return !p.is_zero() && leading(p, spec).coeff == 1;
}

/// Terms sorted by decreasing ordering.
template <class Key>
std::vector<std::pair<Key, Rational>> sorted_terms(
    const LinearCombination<Key>& p, const OrderingSpec& spec) {
  std::vector<std::pair<Key, Rational>> v(p.begin(), p.end());
  std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
    return detail::compare_keys(spec, x.first, y.first) > 0;
  });
  return v;
}

/// Highest degree among the terms (not the degree of the leading word).
template <class Key>
std::size_t max_degree(const LinearCombination<Key>& p) {
  std::size_t d = 0;
  for (const auto& [k, c] : p) d = std::max(d, k.degree());
  return d;
}

// ---- text syntax --------------------------------------------------------

namespace detail {

inline std::string format_term(const Rational& abs_coeff,
                               const std::string& word, bool unit) {
  if (unit) return abs_coeff.get_str();
  if (abs_coeff == 1) return word;
  return abs_coeff.get_str() + "*" + word;
}

template <class Key, class PrintKey>
std::string print_linear(const LinearCombination<Key>& p,
                         const OrderingSpec& spec, PrintKey&& print_key) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : sorted_terms(p, spec)) {
    Rational a = abs(c);
    bool unit = false;
    if constexpr (std::is_same_v<Key, Word>) unit = k.empty();
    std::string t = format_term(a, unit ? std::string() : print_key(k), unit);
    if (first) {
      out += (c < 0 ? "-" : "") + t;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + t;
    }
  }
  return out;
}

struct ParsedTerm {
  Rational coeff{1};
  Word word;
  std::optional<Symbol> generator;
};

/// Shared scanner for polynomial and module-element syntax. `basis` is null
/// for plain polynomials.
inline std::vector<ParsedTerm> parse_terms(std::string_view text,
                                           const Alphabet& alphabet,
                                           const Alphabet* basis) {
  std::vector<ParsedTerm> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\r' || text[pos] == '\n')) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::SyntaxError,
                 what + " in '" + std::string(text) + "'", pos);
  };
  skip_ws();
  if (pos == text.size()) throw fail("empty expression");
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  while (true) {
    ParsedTerm term;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw fail("bad fraction");
          }
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        Rational c(std::string(text.substr(start, pos - start)));
        if (c.get_den() == 0) throw fail("zero denominator");
        c.canonicalize();
        term.coeff *= c;
      } else if (std::size_t n = scan_symbol(text.substr(pos)); n > 0) {
        std::string_view name = text.substr(pos, n);
        if (term.generator) throw fail("generator must be the last factor");
        if (basis && basis->contains(name)) {
          term.generator = basis->at(name);
        } else {
          term.word.push_back(alphabet.at(name));
        }
        pos += n;
      } else {
        throw fail("expected coefficient or symbol");
      }
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw fail("empty term");
    if (negative) term.coeff = -term.coeff;
    terms.push_back(std::move(term));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') throw fail("expected '+' or '-'");
    negative = text[pos] == '-';
    ++pos;
  }
  return terms;
}

}  // namespace detail

/// Parses `a*a*b - x1`, `1/2*a*b + 1`, `0`.
inline Polynomial parse_polynomial(std::string_view text,
                                   const Alphabet& alphabet) {
  Polynomial p;
  for (auto& t : detail::parse_terms(text, alphabet, nullptr)) {
    p.add_term(t.word, t.coeff);
  }
  return p;
}

/// Parses `a*b*y1 - 2*y2`; every nonzero term needs exactly one trailing
/// basis symbol.
inline ModuleElement parse_module_element(std::string_view text,
                                          const Alphabet& alphabet,
                                          const Alphabet& basis) {
  for (const auto& name : basis.symbols()) {
    if (alphabet.contains(name)) {
      throw Error(ErrorCode::SymbolClash,
                  "'" + name + "' is both a letter and a basis symbol");
    }
  }
  ModuleElement m;
  for (auto& t : detail::parse_terms(text, alphabet, &basis)) {
    if (!t.generator) {
      if (t.coeff == 0) continue;
      throw Error(ErrorCode::SyntaxError,
                  "module term without generator in '" + std::string(text) +
                      "'");
    }
    m.add_term(ModuleWord{t.word, *t.generator}, t.coeff);
  }
  return m;
}

inline std::string print_polynomial(const Polynomial& p,
                                    const Alphabet& alphabet,
                                    const OrderingSpec& spec) {
  return detail::print_linear(
      p, spec, [&](const Word& w) { return print_word(w, alphabet); });
}

inline std::string print_module_element(const ModuleElement& m,
                                        const Alphabet& alphabet,
                                        const Alphabet& basis,
                                        const OrderingSpec& spec) {
  return detail::print_linear(m, spec, [&](const ModuleWord& w) {
    return print_module_word(w, alphabet, basis);
  });
}

}  // namespace gsb
