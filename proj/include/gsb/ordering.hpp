#pragma once

// Monomial orderings on X* and on the module words X*Y.
//
// Letter precedence is the alphabet order: symbol 0 is the greatest letter.
//
//   DegLex     degree first, then left-to-right letter precedence.
//   Tower      u = u0 t^e1 u1 ... t^en un is weighed as
//              (n, u0, t^e1, u1, ..., t^en, un) and compared
//              lexicographically: segments by deg-lex on the base letters,
//              t > t^-1.
//   ModuleTop  u1·y1 < u2·y2 iff u1 < u2 (deg-lex), or u1 = u2 and y1 < y2.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/word.hpp"

namespace gsb {

enum class OrderingKind { DegLex, Tower, ModuleTop };

class OrderingSpec {
 public:
  OrderingSpec() = default;

  static OrderingSpec deg_lex(std::size_t alphabet_size) {
    OrderingSpec s;
    s.kind_ = OrderingKind::DegLex;
    s.alphabet_size_ = alphabet_size;
    return s;
  }

  static OrderingSpec tower(std::size_t alphabet_size, Symbol t, Symbol t_inv) {
    if (t >= alphabet_size || t_inv >= alphabet_size || t == t_inv) {
      throw Error(ErrorCode::TowerSymbolMissing,
                  "tower letters must be two distinct alphabet members");
    }
    OrderingSpec s;
    s.kind_ = OrderingKind::Tower;
    s.alphabet_size_ = alphabet_size;
    s.t_ = t;
    s.t_inv_ = t_inv;
    return s;
  }

  static OrderingSpec tower(const Alphabet& alphabet, std::string_view t,
                            std::string_view t_inv) {
    auto ts = alphabet.find(t);
    auto tis = alphabet.find(t_inv);
    if (!ts || !tis) {
      throw Error(ErrorCode::TowerSymbolMissing,
                  "tower letters '" + std::string(t) + "', '" +
                      std::string(t_inv) + "' not in alphabet");
    }
    return tower(alphabet.size(), *ts, *tis);
  }

  static OrderingSpec module_top(std::size_t alphabet_size,
                                 std::size_t basis_size) {
    OrderingSpec s;
    s.kind_ = OrderingKind::ModuleTop;
    s.alphabet_size_ = alphabet_size;
    s.basis_size_ = basis_size;
    return s;
  }

  OrderingKind kind() const noexcept { return kind_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t basis_size() const noexcept { return basis_size_; }
  Symbol tower_letter() const noexcept { return t_; }
  Symbol tower_inverse() const noexcept { return t_inv_; }
  bool is_tower_letter(Symbol s) const noexcept {
    return kind_ == OrderingKind::Tower && (s == t_ || s == t_inv_);
  }

  /// Text form used in presentation files.
  std::string to_string(const Alphabet& alphabet) const {
    switch (kind_) {
      case OrderingKind::DegLex: return "deglex";
      case OrderingKind::ModuleTop: return "module-top";
      case OrderingKind::Tower:
        return "tower(" + alphabet.name(t_) + ", " + alphabet.name(t_inv_) +
               ")";
    }
    return "deglex";
  }

  friend bool operator==(const OrderingSpec&, const OrderingSpec&) = default;

 private:
  OrderingKind kind_ = OrderingKind::DegLex;
  std::size_t alphabet_size_ = 0;
  std::size_t basis_size_ = 0;
  Symbol t_ = 0;
  Symbol t_inv_ = 0;
};

namespace detail {

// Letter precedence: smaller index is the greater letter.
inline std::strong_ordering compare_letters(Symbol x, Symbol y) noexcept {
  return y <=> x;
}

template <class It>
std::strong_ordering deg_lex_range(It ub, It ue, It vb, It ve) noexcept {
  auto un = ue - ub;
  auto vn = ve - vb;
  if (un != vn) return un <=> vn;
  for (; ub != ue; ++ub, ++vb) {
    if (*ub != *vb) return compare_letters(*ub, *vb);
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering deg_lex(const Word& u, const Word& v) noexcept {
  return deg_lex_range(u.begin(), u.end(), v.begin(), v.end());
}

inline std::strong_ordering tower(const OrderingSpec& spec, const Word& u,
                                  const Word& v) noexcept {
  auto count = [&](const Word& w) {
    std::size_t n = 0;
    for (Symbol s : w) n += spec.is_tower_letter(s) ? 1 : 0;
    return n;
  };
  const std::size_t nu = count(u);
  const std::size_t nv = count(v);
  if (nu != nv) return nu <=> nv;
  auto ub = u.begin();
  auto vb = v.begin();
  while (true) {
    auto ue = ub;
    while (ue != u.end() && !spec.is_tower_letter(*ue)) ++ue;
    auto ve = vb;
    while (ve != v.end() && !spec.is_tower_letter(*ve)) ++ve;
    if (auto c = deg_lex_range(ub, ue, vb, ve); c != 0) return c;
    if (ue == u.end()) return std::strong_ordering::equal;
    // Both words have the same number of tower letters, so ve is one too.
    if (*ue != *ve) {
      return *ue == spec.tower_letter() ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
    }
    ub = ue + 1;
    vb = ve + 1;
  }
}

/// Unchecked comparison used by inner loops.
inline std::strong_ordering compare_words(const OrderingSpec& spec,
                                          const Word& u,
                                          const Word& v) noexcept {
  if (spec.kind() == OrderingKind::Tower) return tower(spec, u, v);
  return deg_lex(u, v);
}

inline std::strong_ordering compare_module_words(
    const OrderingSpec& spec, const ModuleWord& a,
    const ModuleWord& b) noexcept {
  if (auto c = compare_words(spec, a.prefix, b.prefix); c != 0) return c;
  return compare_letters(a.generator, b.generator);
}

inline void check_letters(const OrderingSpec& spec, const Word& w) {
  for (Symbol s : w) {
    if (s >= spec.alphabet_size()) {
      throw Error(ErrorCode::AlphabetMismatch,
                  "letter index " + std::to_string(s) +
                      " outside alphabet of size " +
                      std::to_string(spec.alphabet_size()));
    }
  }
}

}  // namespace detail

/// Total order on words; equal only for identical words.
inline std::strong_ordering compare(const OrderingSpec& spec, const Word& u,
                                    const Word& v) {
  detail::check_letters(spec, u);
  detail::check_letters(spec, v);
  return detail::compare_words(spec, u, v);
}

inline std::strong_ordering compare_module(const OrderingSpec& spec,
                                           const ModuleWord& w1,
                                           const ModuleWord& w2) {
  if (spec.kind() != OrderingKind::ModuleTop) {
    throw Error(ErrorCode::BasisMismatch, "module comparison needs module-top");
  }
  for (const ModuleWord* m : {&w1, &w2}) {
    detail::check_letters(spec, m->prefix);
    if (m->generator >= spec.basis_size()) {
      throw Error(ErrorCode::BasisMismatch,
                  "generator index " + std::to_string(m->generator) +
                      " outside basis of size " +
                      std::to_string(spec.basis_size()));
    }
  }
  return detail::compare_module_words(spec, w1, w2);
}

/// Comparator adaptor for ordered containers.
struct WordLess {
  const OrderingSpec* spec;
  bool operator()(const Word& u, const Word& v) const noexcept {
    return detail::compare_words(*spec, u, v) < 0;
  }
};

struct ModuleWordLess {
  const OrderingSpec* spec;
  bool operator()(const ModuleWord& u, const ModuleWord& v) const noexcept {
    return detail::compare_module_words(*spec, u, v) < 0;
  }
};

/// wt(u) = (n, u0, t^e1, u1, ..., t^en, un).
struct WeightTuple {
  std::size_t n = 0;
  std::vector<Word> segments;         // n + 1 base-letter segments
  std::vector<Symbol> tower_letters;  // n signed tower letters

  Word reassemble() const {
    Word out = segments.front();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(tower_letters[i]);
      out.append(segments[i + 1]);
    }
    return out;
  }
};

inline WeightTuple weight_tuple(const OrderingSpec& spec, const Word& u) {
  if (spec.kind() != OrderingKind::Tower) {
    throw Error(ErrorCode::TowerSymbolMissing,
                "weight tuples need a tower ordering");
  }
  detail::check_letters(spec, u);
  WeightTuple wt;
  wt.segments.emplace_back();
  for (Symbol s : u) {
    if (spec.is_tower_letter(s)) {
      ++wt.n;
      wt.tower_letters.push_back(s);
      wt.segments.emplace_back();
    } else {
      wt.segments.back().push_back(s);
    }
  }
  return wt;
}

struct MonomialityViolation {
  Word u;
  Word v;
  Word left;   // context: left · _ · right
  Word right;
  std::size_t generator_u = 0;  // module checks only
  std::size_t generator_v = 0;
};

struct MonomialityReport {
  std::size_t samples = 0;
  std::vector<MonomialityViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline Word random_word(std::mt19937_64& rng, std::size_t alphabet_size,
                        std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Symbol> letter(
      0, static_cast<Symbol>(alphabet_size - 1));
  Word w;
  for (std::size_t n = len(rng); n > 0; --n) w.push_back(letter(rng));
  return w;
}

}  // namespace detail

/// Samples u < v and a context (l, r), and checks l·u·r < l·v·r. For
/// module-top, checks left compatibility w < w' => a·w < a·w' instead.
inline MonomialityReport check_monomial(const OrderingSpec& spec,
                                        std::size_t samples,
                                        std::uint64_t seed,
                                        std::size_t max_len = 6) {
  if (samples == 0) {
    throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  }
  if (spec.alphabet_size() == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty alphabet");
  }
  std::mt19937_64 rng(seed);
  MonomialityReport report;
  report.samples = samples;
  const bool module = spec.kind() == OrderingKind::ModuleTop;
  std::uniform_int_distribution<std::size_t> gen(
      0, module ? spec.basis_size() - 1 : 0);
  std::size_t remaining = samples;
  while (remaining > 0) {
    Word u = detail::random_word(rng, spec.alphabet_size(), max_len);
    Word v = detail::random_word(rng, spec.alphabet_size(), max_len);
    if (module) {
      ModuleWord a{u, static_cast<Symbol>(gen(rng))};
      ModuleWord b{v, static_cast<Symbol>(gen(rng))};
      auto c = compare_module(spec, a, b);
      if (c == 0) continue;
      if (c > 0) std::swap(a, b);
      Word ctx = detail::random_word(rng, spec.alphabet_size(), max_len);
      if (compare_module(spec, concat(ctx, a), concat(ctx, b)) >= 0) {
        report.violations.push_back(
            {a.prefix, b.prefix, ctx, Word(), a.generator, b.generator});
      }
    } else {
      auto c = compare(spec, u, v);
      if (c == 0) continue;
      if (c > 0) std::swap(u, v);
      Word l = detail::random_word(rng, spec.alphabet_size(), max_len);
      Word r = detail::random_word(rng, spec.alphabet_size(), max_len);
      if (compare(spec, concat(l, u, r), concat(l, v, r)) >= 0) {
        report.violations.push_back({u, v, l, r});
      }
    }
    --remaining;
  }
  return report;
}

}  // namespace gsb
