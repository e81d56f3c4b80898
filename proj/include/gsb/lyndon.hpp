#pragma once

// Lyndon-Shirshov words in the greater-rotation convention.
//
// Words are compared lexicographically with the greater letter first and a
// proper prefix counting as greater than its extensions (u > uv). Under that
// order an ALSW u satisfies vw > wv for every split u = vw.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/word.hpp"

namespace gsb {

/// Lexicographic order on X*: letters by alphabet precedence (index 0 is the
/// greatest); a proper prefix is greater than the longer word.
inline std::strong_ordering lex_compare(const Word& u, const Word& v) noexcept {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  return v.size() <=> u.size();
}

inline bool is_alsw(const Word& u) {
  if (u.empty()) throw Error(ErrorCode::EmptyWord, "ALSW test needs a letter");
  for (std::size_t k = 1; k < u.size(); ++k) {
    Word v = u.prefix(k);
    Word w = u.suffix_from(k);
    if (lex_compare(concat(v, w), concat(w, v)) <= 0) return false;
  }
  return true;
}

/// All ALSWs over `alphabet_size` letters of length 1..max_len, grouped by
/// length, each group in descending lexicographic order.
inline std::vector<Word> alsw_up_to(std::size_t alphabet_size,
                                    std::size_t max_len) {
  if (max_len == 0) {
    throw Error(ErrorCode::InvalidArgument, "max_len must be at least 1");
  }
  std::vector<std::vector<Word>> by_len(max_len + 1);
  if (alphabet_size == 0) return {};
  // Duval's generation over symbol indices visits the words in increasing
  // index-lexicographic order, which is descending in the order above.
  const auto k = static_cast<Symbol>(alphabet_size);
  std::vector<Symbol> w{0};
  while (!w.empty()) {
    by_len[w.size()].push_back(Word(w));
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::vector<Word> out;
  for (auto& group : by_len) {
    for (auto& word : group) out.push_back(std::move(word));
  }
  return out;
}

/// Binary tree with letters at the leaves.
class BracketedWord {
 public:
  static BracketedWord leaf(Symbol s) {
    BracketedWord b;
    b.letter_ = s;
    b.word_ = Word{s};
    return b;
  }
  static BracketedWord join(const BracketedWord& l, const BracketedWord& r) {
    BracketedWord b;
    b.left_ = std::make_shared<const BracketedWord>(l);
    b.right_ = std::make_shared<const BracketedWord>(r);
    b.word_ = concat(l.word_, r.word_);
    return b;
  }

  bool is_leaf() const noexcept { return !left_; }
  Symbol letter() const noexcept { return letter_; }
  const BracketedWord& left() const { return *left_; }
  const BracketedWord& right() const { return *right_; }
  const Word& flatten() const noexcept { return word_; }

  /// `[[x2,x1],x1]`.
  std::string to_string(const Alphabet& alphabet) const {
    if (is_leaf()) return alphabet.name(letter_);
    return "[" + left_->to_string(alphabet) + "," + right_->to_string(alphabet) +
           "]";
  }

  friend bool operator==(const BracketedWord& a, const BracketedWord& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.letter_ == b.letter_;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
  }

 private:
  BracketedWord() = default;
  Symbol letter_ = 0;
  std::shared_ptr<const BracketedWord> left_;
  std::shared_ptr<const BracketedWord> right_;
  Word word_;
};

/// Judge for the NLSW conditions: the flattened word is an ALSW, both halves
/// are NLSWs, and for (u) = ((v1 v2) w) the word v2 is at most w.
inline bool is_nlsw(const BracketedWord& b) {
  if (b.is_leaf()) return true;
  if (!is_alsw(b.flatten())) return false;
  if (!is_nlsw(b.left()) || !is_nlsw(b.right())) return false;
  if (!b.left().is_leaf() &&
      lex_compare(b.left().right().flatten(), b.right().flatten()) > 0) {
    return false;
  }
  return true;
}

/// Every binary bracketing of u (Catalan many).
inline std::vector<BracketedWord> all_bracketings(const Word& u) {
  if (u.empty()) throw Error(ErrorCode::EmptyWord, "cannot bracket 1");
  if (u.size() == 1) return {BracketedWord::leaf(u[0])};
  std::vector<BracketedWord> out;
  for (std::size_t k = 1; k < u.size(); ++k) {
    auto ls = all_bracketings(u.prefix(k));
    auto rs = all_bracketings(u.suffix_from(k));
    for (const auto& l : ls) {
      for (const auto& r : rs) out.push_back(BracketedWord::join(l, r));
    }
  }
  return out;
}

/// The bracketing that makes u an NLSW: split off the longest proper suffix
/// that is an ALSW and recurse on both sides.
inline BracketedWord std_bracketing(const Word& u) {
  if (u.empty() || !is_alsw(u)) {
    throw Error(ErrorCode::NotALSW, "standard bracketing needs an ALSW");
  }
  if (u.size() == 1) return BracketedWord::leaf(u[0]);
  for (std::size_t k = 1; k < u.size(); ++k) {
    Word w = u.suffix_from(k);
    if (is_alsw(w)) {
      return BracketedWord::join(std_bracketing(u.prefix(k)), std_bracketing(w));
    }
  }
  throw Error(ErrorCode::NotALSW, "no ALSW suffix");  // unreachable: last letter
}

/// u = u1 u2 ... uk with every ui an ALSW and u1 <= u2 <= ... <= uk.
inline std::vector<Word> clf_factorize(const Word& u) {
  if (u.empty()) throw Error(ErrorCode::EmptyWord, "cannot factor 1");
  // Duval's algorithm on symbol indices.
  std::vector<Word> out;
  const std::size_t n = u.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && u[k] <= u[j]) {
      k = u[k] < u[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(u.subword(i, j - k));
      i += j - k;
    }
  }
  return out;
}

/// Number of NLSWs (equivalently ALSWs) of the given degree:
/// (1/n) * sum over d | n of mu(d) * k^(n/d).
inline mpz_class nlsw_basis_count(std::size_t alphabet_size, std::size_t deg) {
  if (deg == 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  auto mobius = [](std::size_t m) {
    int sign = 1;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      sign = -sign;
    }
    return m > 1 ? -sign : sign;
  };
  mpz_class total = 0;
  for (std::size_t d = 1; d <= deg; ++d) {
    if (deg % d) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), alphabet_size, deg / d);
    total += mu * term;
  }
  return total / static_cast<unsigned long>(deg);
}

}  // namespace gsb
