#pragma once

// Builders for the embedding presentations: the HNN group tower, the
// two-generator algebra embedding, one stage of the simple-algebra tower,
// the cyclic module embedding and the Lie embedding words. Every builder
// runs the composition check on its output and throws CertificationFailed
// if the expected certificate does not hold.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsb/completion.hpp"
#include "gsb/error.hpp"
#include "gsb/lyndon.hpp"
#include "gsb/module.hpp"
#include "gsb/ordering.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/presentation.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/word.hpp"

namespace gsb {

/// Finite group {1, g1, ..., gn}. Products and inverses use 0 for the
/// identity and j for g_j.
struct GroupTable {
  std::vector<std::string> names;  // g1..gn
  std::vector<std::vector<std::optional<std::size_t>>> product;  // n x n
  std::vector<std::optional<std::size_t>> inverse;               // n

  std::size_t size() const noexcept { return names.size(); }

  /// Cyclic group of the given order, g_i = g^i.
  static GroupTable cyclic(std::size_t order) {
    if (order < 2) throw Error(ErrorCode::InvalidArgument, "order must be >= 2");
    GroupTable t;
    const std::size_t n = order - 1;
    for (std::size_t i = 1; i <= n; ++i) t.names.push_back("g" + std::to_string(i));
    t.product.assign(n, std::vector<std::optional<std::size_t>>(n));
    t.inverse.assign(n, std::nullopt);
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) t.product[j - 1][k - 1] = (j + k) % order;
      t.inverse[j - 1] = order - j;
    }
    return t;
  }

  /// Throws TableIncomplete / IndexOutOfRange / InvalidArgument unless the
  /// table is a full group table.
  void validate() const {
    const std::size_t n = size();
    if (n == 0) throw Error(ErrorCode::TableIncomplete, "group table has no elements");
    if (product.size() != n || inverse.size() != n) {
      throw Error(ErrorCode::TableIncomplete, "table shape does not match elements");
    }
    auto mul = [&](std::size_t x, std::size_t y) -> std::size_t {
      if (x == 0) return y;
      if (y == 0) return x;
      return *product[x - 1][y - 1];
    };
    for (std::size_t j = 0; j < n; ++j) {
      if (product[j].size() != n) {
        throw Error(ErrorCode::TableIncomplete, "short product row", j + 1);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!product[j][k]) {
          throw Error(ErrorCode::TableIncomplete,
                      "missing product " + names[j] + "*" + names[k], j + 1);
        }
        if (*product[j][k] > n) {
          throw Error(ErrorCode::IndexOutOfRange, "product outside the table", j + 1);
        }
      }
      if (!inverse[j]) {
        throw Error(ErrorCode::TableIncomplete, "missing inverse of " + names[j], j + 1);
      }
      if (*inverse[j] == 0 || *inverse[j] > n) {
        throw Error(ErrorCode::IndexOutOfRange, "inverse outside the table", j + 1);
      }
    }
    for (std::size_t x = 1; x <= n; ++x) {
      if (mul(x, *inverse[x - 1]) != 0 || mul(*inverse[x - 1], x) != 0) {
        throw Error(ErrorCode::InvalidArgument, "inverse of " + names[x - 1] + " is wrong");
      }
      for (std::size_t y = 1; y <= n; ++y) {
        for (std::size_t z = 1; z <= n; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw Error(ErrorCode::InvalidArgument, "product is not associative");
          }
        }
      }
    }
  }
};

/// Structure constants x_i x_j = {x_i, x_j} over the basis x1..xn and the
/// unit. `product` maps (i, j) to a polynomial over `basis`, only
/// constants and single letters allowed.
struct MultTable {
  Alphabet basis;
  std::map<std::pair<Symbol, Symbol>, Polynomial> product;
};

struct SimplePair {
  std::string f;  // polynomial text over the output alphabet
  std::string g;
  std::string x_name;
  std::string y_name;
};

struct SimpleStepInput {
  std::vector<SimplePair> pairs;
};

/// A built presentation with the composition check that certifies it.
struct Construction {
  Presentation presentation;
  CheckReport certificate;
  /// Builder-specific injectivity witness (original generators keep
  /// distinct nonzero normal forms); true when not applicable.
  bool embedding_witness = true;
};

struct ModuleConstruction {
  Presentation presentation;
  ModuleCheckReport certificate;
  bool embedding_witness = true;
};

namespace detail {

inline Polynomial word_poly(const Word& w) { return Polynomial(w); }

inline Polynomial oriented(const Word& lhs, const Polynomial& rhs,
                           const OrderingSpec& spec, const std::string& family) {
  Polynomial rel = word_poly(lhs) - rhs;
  auto lt = leading(rel, spec);
  if (lt.word != lhs || lt.coeff != 1) {
    throw Error(ErrorCode::OrientationMismatch,
                "left side of " + family + " is not the leading word");
  }
  return rel;
}

inline void require_certificate(const CheckReport& r, const std::string& what) {
  if (!r.is_certificate()) {
    throw Error(ErrorCode::CertificationFailed,
                what + ": " + std::to_string(r.nontrivial.size()) +
                    " nontrivial compositions");
  }
}

inline std::string fresh_name(const std::string& stem,
                              const std::vector<const Alphabet*>& taken) {
  auto used = [&](const std::string& s) {
    return std::any_of(taken.begin(), taken.end(),
                       [&](const Alphabet* a) { return a->contains(s); });
  };
  if (!used(stem)) return stem;
  for (std::size_t i = 0;; ++i) {
    std::string s = stem + "_" + std::to_string(i);
    if (!used(s)) return s;
  }
}

/// Word a·b^i·... helper: letter repeated.
inline void append_power(Word& w, Symbol s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) w.push_back(s);
}

}  // namespace detail

/// HNN relations 1-8 for i <= index_bound under the tower ordering.
/// Family 1 is emitted for the whole table so products stay closed.
inline Construction build_hnn(const GroupTable& table, std::size_t index_bound) {
  table.validate();
  const std::size_t n = table.size();
  if (index_bound < 1 || index_bound > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index bound must lie in 1.." + std::to_string(n));
  }
  for (const auto& name : table.names) {
    if (name == "a" || name == "b" || name == "t" || name.ends_with("^-1")) {
      throw Error(ErrorCode::SymbolClash, "group element named '" + name + "'");
    }
  }
  // Precedence: t > t^-1 (tower letters), then b^-1 > b > a^-1 > a > g_n > ... > g_1.
  std::vector<std::string> names{"t", "t^-1", "b^-1", "b", "a^-1", "a"};
  for (std::size_t j = n; j >= 1; --j) names.push_back(table.names[j - 1]);
  Presentation p;
  p.alphabet = Alphabet(names);
  p.spec = OrderingSpec::tower(p.alphabet, "t", "t^-1");
  const Alphabet& A = p.alphabet;
  const Symbol t = A.at("t"), ti = A.at("t^-1"), a = A.at("a"), ai = A.at("a^-1"),
               b = A.at("b"), bi = A.at("b^-1");
  auto g = [&](std::size_t j) { return A.at(table.names[j - 1]); };
  auto elem = [&](std::size_t j) { return j == 0 ? Word() : Word{g(j)}; };
  auto ginv = [&](std::size_t j) { return g(*table.inverse[j - 1]); };
  auto pw = [](Symbol s, std::size_t k) { return power(s, k); };
  const auto& spec = p.spec;

  std::vector<Polynomial> rels;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      rels.push_back(detail::oriented(Word{g(j), g(k)},
                                      detail::word_poly(elem(*table.product[j - 1][k - 1])),
                                      spec, "family 1"));
    }
  }
  for (auto [x, y] : {std::pair{a, b}, std::pair{ai, bi}}) {
    rels.push_back(detail::oriented(Word{x, t}, detail::word_poly(Word{t, y}), spec,
                                    "family 2"));
  }
  for (auto [x, y] : {std::pair{b, a}, std::pair{bi, ai}}) {
    rels.push_back(detail::oriented(Word{x, ti}, detail::word_poly(Word{ti, y}), spec,
                                    "family 3"));
  }
  for (std::size_t i = 1; i <= index_bound; ++i) {
    // 4. a b^i t = b^i t g_i a^-i b a^i
    Word l4 = concat(Word{a}, pw(b, i), Word{t});
    Word r4 = concat(pw(b, i), Word{t, g(i)}, pw(ai, i));
    r4.push_back(b);
    r4.append(pw(a, i));
    rels.push_back(detail::oriented(l4, detail::word_poly(r4), spec, "family 4"));
    // 5. a^-1 b^i t = b^i t a^-i b^-1 a^i g_i^-1
    Word l5 = concat(Word{ai}, pw(b, i), Word{t});
    Word r5 = concat(pw(b, i), Word{t}, pw(ai, i));
    r5.push_back(bi);
    r5.append(pw(a, i));
    r5.push_back(ginv(i));
    rels.push_back(detail::oriented(l5, detail::word_poly(r5), spec, "family 5"));
    // 6. b a^i t^-1 = a^i g_i^-1 t^-1 b^-i a b^i
    Word l6 = concat(Word{b}, pw(a, i), Word{ti});
    Word r6 = concat(pw(a, i), Word{ginv(i), ti}, pw(bi, i));
    r6.push_back(a);
    r6.append(pw(b, i));
    rels.push_back(detail::oriented(l6, detail::word_poly(r6), spec, "family 6"));
    // 7. b^-1 a^i g_i^-1 t^-1 = a^i t^-1 b^-i a^-1 b^i
    Word l7 = concat(Word{bi}, pw(a, i), Word{ginv(i), ti});
    Word r7 = concat(pw(a, i), Word{ti}, pw(bi, i));
    r7.push_back(ai);
    r7.append(pw(b, i));
    rels.push_back(detail::oriented(l7, detail::word_poly(r7), spec, "family 7"));
  }
  for (auto [x, y] : {std::pair{a, ai}, std::pair{b, bi}, std::pair{t, ti}}) {
    rels.push_back(detail::oriented(Word{x, y}, constant(1), spec, "family 8"));
    rels.push_back(detail::oriented(Word{y, x}, constant(1), spec, "family 8"));
  }
  p.relations = normalize_relations(std::move(rels), spec);
  Construction c;
  c.certificate = check_gsb(p.relations, spec);
  detail::require_certificate(c.certificate, "HNN presentation");
  // Group elements stay distinct and nontrivial in the quotient.
  Rewriter rw(p.relations, spec);
  std::set<Polynomial::Terms> seen;
  for (std::size_t j = 1; j <= n; ++j) {
    Polynomial f = rw.reduce(detail::word_poly(elem(j)));
    if (f.is_zero() || f == constant(1) || !seen.insert(f.terms()).second) {
      c.embedding_witness = false;
    }
  }
  c.presentation = std::move(p);
  return c;
}

/// Adjoins a > b above the alphabet of a certified deg-lex presentation and
/// the relations a a b^i a b - x_i for i <= n.
inline Construction build_malcev(const Presentation& s, std::size_t n) {
  if (s.is_module() || s.spec.kind() != OrderingKind::DegLex) {
    throw Error(ErrorCode::InvalidArgument, "base presentation must use deglex");
  }
  if (n < 1 || n > s.alphabet.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "n must lie in 1.." + std::to_string(s.alphabet.size()));
  }
  if (s.alphabet.contains("a") || s.alphabet.contains("b")) {
    throw Error(ErrorCode::SymbolClash, "base alphabet already uses a or b");
  }
  if (!check_gsb(s.relations, s.spec).is_certificate()) {
    throw Error(ErrorCode::UncertifiedBasis, "base presentation is not a GSB");
  }
  std::vector<std::string> names{"a", "b"};
  for (const auto& x : s.alphabet.symbols()) names.push_back(x);
  Presentation p;
  p.alphabet = Alphabet(names);
  p.spec = OrderingSpec::deg_lex(p.alphabet.size());
  const Symbol a = 0, b = 1;
  auto shift = [](const Word& w) {
    Word r;
    for (Symbol x : w) r.push_back(x + 2);
    return r;
  };
  std::vector<Polynomial> rels;
  for (const auto& f : s.relations) {
    Polynomial g;
    for (const auto& [w, c] : f) g.add_term(shift(w), c);
    rels.push_back(std::move(g));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    Word l{a, a};
    detail::append_power(l, b, i);
    l.push_back(a);
    l.push_back(b);
    rels.push_back(detail::oriented(l, detail::word_poly(Word{static_cast<Symbol>(i + 1)}),
                                    p.spec, "embedding relation"));
  }
  p.relations = normalize_relations(std::move(rels), p.spec);
  Construction c;
  c.certificate = check_gsb(p.relations, p.spec);
  detail::require_certificate(c.certificate, "two-generator embedding");
  Rewriter rw(p.relations, p.spec);
  for (std::size_t i = 1; i <= n; ++i) {
    Polynomial x = detail::word_poly(Word{static_cast<Symbol>(i + 1)});
    Polynomial before = Rewriter(s.relations, s.spec)
                            .reduce(detail::word_poly(Word{static_cast<Symbol>(i - 1)}));
    // x_i irreducible in the base stays irreducible after the embedding.
    if (before == detail::word_poly(Word{static_cast<Symbol>(i - 1)}) &&
        rw.reduce(x) != x) {
      c.embedding_witness = false;
    }
  }
  c.presentation = std::move(p);
  return c;
}

/// One stage of the simple-algebra tower: table relations (1), the
/// generator relations (2)-(4) for 1 <= m <= m_bound, 1 <= n <= n_bound,
/// and x^(deg g + 1) f y - g for every pair. Letter precedence:
/// X letters > a > b > table basis > Y letters, all under deg-lex.
inline Construction build_simple_step(const MultTable& base,
                                      const SimpleStepInput& input,
                                      std::size_t m_bound, std::size_t n_bound) {
  if (base.basis.empty()) {
    throw Error(ErrorCode::TableIncomplete, "table basis is empty");
  }
  std::vector<std::string> xs, ys;
  for (std::size_t nn = 1; nn <= n_bound; ++nn) {
    for (std::size_t m = 1; m <= m_bound; ++m) {
      xs.push_back("X" + std::to_string(nn) + "_" + std::to_string(m));
      ys.push_back("Y" + std::to_string(nn) + "_" + std::to_string(m));
    }
  }
  std::set<std::string> pair_letters;
  for (std::size_t k = 0; k < input.pairs.size(); ++k) {
    const auto& pr = input.pairs[k];
    if (pr.x_name == pr.y_name || !pair_letters.insert(pr.x_name).second ||
        !pair_letters.insert(pr.y_name).second) {
      throw Error(ErrorCode::SymbolClash, "pair letters must be distinct", k);
    }
    if (std::find(xs.begin(), xs.end(), pr.x_name) == xs.end()) xs.push_back(pr.x_name);
    if (std::find(ys.begin(), ys.end(), pr.y_name) == ys.end()) ys.push_back(pr.y_name);
  }
  std::vector<std::string> names = xs;
  names.push_back("a");
  names.push_back("b");
  for (const auto& s : base.basis.symbols()) names.push_back(s);
  names.insert(names.end(), ys.begin(), ys.end());
  Presentation p;
  p.alphabet = Alphabet(names);  // throws SymbolClash on reuse
  p.spec = OrderingSpec::deg_lex(p.alphabet.size());
  const Alphabet& A = p.alphabet;
  const Symbol a = A.at("a"), b = A.at("b");
  auto lift = [&](const Polynomial& f) {
    Polynomial r;
    for (const auto& [w, c] : f) {
      Word u;
      for (Symbol s : w) u.push_back(A.at(base.basis.name(s)));
      r.add_term(u, c);
    }
    return r;
  };

  std::vector<Polynomial> rels;
  for (const auto& [ij, value] : base.product) {
    if (max_degree(value) > 1) {
      throw Error(ErrorCode::InvalidArgument, "table entries must be linear");
    }
    Word l{A.at(base.basis.name(ij.first)), A.at(base.basis.name(ij.second))};
    rels.push_back(detail::oriented(l, lift(value), p.spec, "relation (1)"));
  }
  auto gen_word = [&](std::size_t nn, std::size_t bpow) {
    Word w{a, a};
    for (std::size_t k = 0; k < nn; ++k) {
      w.push_back(a);
      w.push_back(b);
    }
    detail::append_power(w, b, bpow);
    w.push_back(a);
    w.push_back(b);
    return w;
  };
  for (std::size_t nn = 1; nn <= n_bound; ++nn) {
    for (std::size_t m = 1; m <= m_bound; ++m) {
      std::string suffix = std::to_string(nn) + "_" + std::to_string(m);
      rels.push_back(detail::oriented(gen_word(nn, 2 * m + 1),
                                      detail::word_poly(Word{A.at("X" + suffix)}),
                                      p.spec, "relation (2)"));
      rels.push_back(detail::oriented(gen_word(nn, 2 * m),
                                      detail::word_poly(Word{A.at("Y" + suffix)}),
                                      p.spec, "relation (3)"));
    }
  }
  rels.push_back(detail::oriented(gen_word(0, 2), detail::word_poly(Word{A.at(
                                                      base.basis.name(0))}),
                                  p.spec, "relation (4)"));
  // Canonical words: irreducible modulo (1)-(4).
  std::vector<Polynomial> core = normalize_relations(rels, p.spec);
  Rewriter canon(core, p.spec);
  std::set<std::string> stage_letters(xs.begin(), xs.end());
  stage_letters.insert(ys.begin(), ys.end());
  for (std::size_t k = 0; k < input.pairs.size(); ++k) {
    const auto& pr = input.pairs[k];
    Polynomial f = parse_polynomial(pr.f, A);
    Polynomial g = parse_polynomial(pr.g, A);
    if (f.is_zero() || g.is_zero()) {
      throw Error(ErrorCode::ZeroPolynomial, "pair polynomials must be nonzero", k);
    }
    for (const Polynomial* h : {&f, &g}) {
      for (const auto& [w, c] : *h) {
        for (Symbol s : w) {
          if (stage_letters.count(A.name(s))) {
            throw Error(ErrorCode::SymbolClash,
                        "pair uses this stage's letter '" + A.name(s) + "'", k);
          }
        }
        if (canon.is_reducible(w)) {
          throw Error(ErrorCode::NonCanonicalSupport,
                      "pair " + std::to_string(k) + " has a non-canonical word", k);
        }
      }
    }
    const std::size_t e = deg_of(g, p.spec) + 1;
    Word l = power(A.at(pr.x_name), e);
    Polynomial rel = multiply(l, f, Word{A.at(pr.y_name)}) - g;
    rels.push_back(make_monic(rel, p.spec));
  }
  p.relations = normalize_relations(std::move(rels), p.spec);
  Construction c;
  c.certificate = check_gsb(p.relations, p.spec);
  detail::require_certificate(c.certificate, "simple-algebra stage");
  Rewriter rw(p.relations, p.spec);
  for (Symbol s = 0; s < base.basis.size(); ++s) {
    Polynomial x = detail::word_poly(Word{A.at(base.basis.name(s))});
    if (rw.reduce(x) != x) c.embedding_witness = false;
  }
  c.presentation = std::move(p);
  return c;
}

namespace detail {

/// Relations prefix_i · y - y_i for i = 1..n, where prefix_i = a b^i.
/// With a == b this is the single-letter shape x^(i+1) y - y_i.
inline std::vector<ModuleElement> cyclic_relations(Symbol a, Symbol b, Symbol y,
                                                   std::size_t n) {
  std::vector<ModuleElement> out;
  for (std::size_t i = 1; i <= n; ++i) {
    Word u{a};
    append_power(u, b, i);
    ModuleElement m(ModuleWord{u, y});
    m.add_term(ModuleWord{Word(), static_cast<Symbol>(i)}, -1);
    out.push_back(std::move(m));
  }
  return out;
}

/// Basis with a fresh greatest generator in front; old generator j moves to
/// index j + 1.
inline ModuleElement shift_generators(const ModuleElement& m) {
  ModuleElement r;
  for (const auto& [w, c] : m) r.add_term(ModuleWord{w.prefix, w.generator + 1}, c);
  return r;
}

}  // namespace detail

/// Adjoins a fresh generator y (greatest) and the relations a b^i y - y_i,
/// i <= n, where a > b are the two greatest letters.
inline ModuleConstruction build_module_cyclic(const ModulePresentation& t,
                                              std::size_t n) {
  detail::check_module_spec(t.spec);
  if (t.alphabet.size() < 2) {
    throw Error(ErrorCode::SingleLetterAlphabet,
                "a single letter cannot separate the generators: the module "
                "does not embed into a cyclic one over one letter");
  }
  if (n < 1 || n > t.basis.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "n must lie in 1.." + std::to_string(t.basis.size()));
  }
  if (!check_module_gsb(t.relations, t.spec).is_certificate()) {
    throw Error(ErrorCode::UncertifiedBasis, "base module presentation is not a GSB");
  }
  std::string y = detail::fresh_name("y", {&t.alphabet, &t.basis});
  std::vector<std::string> names{y};
  for (const auto& s : t.basis.symbols()) names.push_back(s);
  ModulePresentation out{t.alphabet, Alphabet(names),
                         OrderingSpec::module_top(t.alphabet.size(), names.size()), {}};
  std::vector<ModuleElement> rels;
  for (const auto& m : t.relations) rels.push_back(detail::shift_generators(m));
  for (auto& m : detail::cyclic_relations(0, 1, 0, n)) rels.push_back(std::move(m));
  out.relations = normalize_relations(std::move(rels), out.spec);
  ModuleConstruction c;
  c.certificate = check_module_gsb(out.relations, out.spec);
  if (!c.certificate.is_certificate()) {
    throw Error(ErrorCode::CertificationFailed, "cyclic module embedding");
  }
  ModuleRewriter rw(out.relations, out.spec);
  std::set<ModuleElement::Terms> seen;
  for (std::size_t i = 1; i < names.size(); ++i) {
    ModuleElement nf = rw.reduce(ModuleElement(ModuleWord{Word(), static_cast<Symbol>(i)}));
    if (nf.is_zero() || !seen.insert(nf.terms()).second) c.embedding_witness = false;
  }
  c.presentation = Presentation::from_module(out);
  return c;
}

/// The words a a b^i a b (a > b) for i <= i_max with their standard
/// bracketings.
inline std::vector<std::pair<Word, BracketedWord>> bracket_embedding_words(
    std::size_t i_max) {
  if (i_max < 1) throw Error(ErrorCode::InvalidArgument, "i_max must be >= 1");
  std::vector<std::pair<Word, BracketedWord>> out;
  for (std::size_t i = 1; i <= i_max; ++i) {
    Word w{0, 0};
    detail::append_power(w, 1, i);
    w.push_back(0);
    w.push_back(1);
    if (!is_alsw(w)) throw Error(ErrorCode::NotALSW, "embedding word is not an ALSW");
    out.emplace_back(w, std_bracketing(w));
  }
  return out;
}

}  // namespace gsb
