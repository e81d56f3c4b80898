#pragma once

// Groebner-Shirshov machinery for free left modules over the free algebra.
// Module words u·y are only multiplied on the left, so a leading word v·y
// can only occur as a right factor: u·y is reducible by v·y iff u = a·v.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gsb/completion.hpp"
#include "gsb/error.hpp"
#include "gsb/ordering.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/word.hpp"

namespace gsb {

struct ModulePresentation {
  Alphabet alphabet;
  Alphabet basis;
  OrderingSpec spec;
  std::vector<ModuleElement> relations;
};

/// f̄ = a·ḡ.
struct ModuleAmbiguity {
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  Word a;
  ModuleWord w;
  friend bool operator==(const ModuleAmbiguity&, const ModuleAmbiguity&) = default;
};

class ModuleRewriter {
 public:
  struct Match {
    std::size_t rule;
    std::size_t position;  // |a|
  };

  ModuleRewriter(std::span<const ModuleElement> relations, const OrderingSpec& spec)
      : spec_(spec) {
    by_generator_.resize(spec.basis_size());
    for (std::size_t i = 0; i < relations.size(); ++i) {
      const ModuleElement& s = relations[i];
      if (s.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero relation", i);
      auto lt = leading(s, spec);
      if (lt.coeff != 1) {
        throw Error(ErrorCode::NonMonicRelation,
                    "relation " + std::to_string(i) + " is not monic", i);
      }
      Rule r;
      r.lead = lt.word;
      for (const auto& [w, c] : s) {
        detail::check_letters(spec, w.prefix);
        if (w.generator >= spec.basis_size()) {
          throw Error(ErrorCode::BasisMismatch, "generator outside basis", i);
        }
        if (w != r.lead) r.tail.emplace_back(w, c);
      }
      by_generator_[r.lead.generator].push_back(i);
      rules_.push_back(std::move(r));
    }
  }

  std::size_t size() const noexcept { return rules_.size(); }
  const ModuleWord& lead(std::size_t i) const { return rules_[i].lead; }

  /// Longest matching right factor (shortest a); lowest rule index on ties.
  std::optional<Match> find_match(const ModuleWord& w) const {
    std::optional<Match> best;
    for (std::size_t r : by_generator_.at(w.generator)) {
      const Word& v = rules_[r].lead.prefix;
      if (!w.prefix.has_suffix(v)) continue;
      std::size_t pos = w.prefix.size() - v.size();
      if (!best || pos < best->position) best = Match{r, pos};
    }
    return best;
  }

  bool is_reducible(const ModuleWord& w) const { return find_match(w).has_value(); }

  ModuleElement reduce(const ModuleElement& m) const {
    Work work(ModuleWordLess{&spec_});
    for (const auto& [w, c] : m) work.emplace(w, c);
    ModuleElement out;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      ModuleWord w = it->first;
      Rational c = std::move(it->second);
      work.erase(it);
      auto match = find_match(w);
      if (!match) {
        out.add_term(w, c);
        continue;
      }
      apply(work, w, c, *match);
    }
    return out;
  }

  /// Rewrites a random reducible term with a random matching rule.
  ModuleElement reduce_randomized(const ModuleElement& m, std::mt19937_64& rng) const {
    Work work(ModuleWordLess{&spec_});
    for (const auto& [w, c] : m) work.emplace(w, c);
    while (true) {
      std::vector<Work::iterator> reducible;
      for (auto it = work.begin(); it != work.end(); ++it) {
        if (is_reducible(it->first)) reducible.push_back(it);
      }
      if (reducible.empty()) break;
      auto it = reducible[std::uniform_int_distribution<std::size_t>(
          0, reducible.size() - 1)(rng)];
      ModuleWord w = it->first;
      Rational c = it->second;
      work.erase(it);
      std::vector<Match> matches;
      for (std::size_t r : by_generator_[w.generator]) {
        const Word& v = rules_[r].lead.prefix;
        if (w.prefix.has_suffix(v)) matches.push_back({r, w.prefix.size() - v.size()});
      }
      apply(work, w, c,
            matches[std::uniform_int_distribution<std::size_t>(
                0, matches.size() - 1)(rng)]);
    }
    ModuleElement out;
    for (const auto& [w, c] : work) out.add_term(w, c);
    return out;
  }

 private:
  struct Rule {
    ModuleWord lead;
    std::vector<std::pair<ModuleWord, Rational>> tail;
  };
  using Work = std::map<ModuleWord, Rational, ModuleWordLess>;

  void apply(Work& work, const ModuleWord& w, const Rational& c, Match m) const {
    Word a = w.prefix.prefix(m.position);
    for (const auto& [v, d] : rules_[m.rule].tail) {
      auto [jt, inserted] = work.try_emplace(concat(a, v), 0);
      jt->second -= c * d;
      if (jt->second == 0) work.erase(jt);
    }
  }

  OrderingSpec spec_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_generator_;
};

namespace detail {

/// a_len values with f = a·g, |a| = a_len. Equal leading words are
/// reported only for `report_equal`.
inline std::vector<std::size_t> module_overlaps(const ModuleWord& f,
                                                const ModuleWord& g, bool same,
                                                bool report_equal) {
  if (same || f.generator != g.generator || !f.prefix.has_suffix(g.prefix)) {
    return {};
  }
  if (f.prefix.size() == g.prefix.size() && !report_equal) return {};
  return {f.prefix.size() - g.prefix.size()};
}

inline void check_module_spec(const OrderingSpec& spec) {
  if (spec.kind() != OrderingKind::ModuleTop) {
    throw Error(ErrorCode::BasisMismatch, "module operations need module-top");
  }
}

}  // namespace detail

/// Every pair with lead(f) = a·lead(g), sorted by (w, f_index, g_index).
inline std::vector<ModuleAmbiguity> module_ambiguities(
    std::span<const ModuleElement> relations, const OrderingSpec& spec) {
  detail::check_module_spec(spec);
  std::vector<ModuleWord> leads;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    auto lt = leading(relations[i], spec);
    if (lt.coeff != 1) {
      throw Error(ErrorCode::NonMonicRelation,
                  "relation " + std::to_string(i) + " is not monic", i);
    }
    leads.push_back(lt.word);
  }
  std::vector<ModuleAmbiguity> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    for (std::size_t j = 0; j < leads.size(); ++j) {
      for (std::size_t k : detail::module_overlaps(leads[i], leads[j], i == j, i < j)) {
        out.push_back({i, j, leads[i].prefix.prefix(k), leads[i]});
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    if (auto c = detail::compare_module_words(spec, x.w, y.w); c != 0) return c < 0;
    return std::tie(x.f_index, x.g_index) < std::tie(y.f_index, y.g_index);
  });
  return out;
}

/// f - a·g.
inline ModuleElement module_composition(const ModuleElement& f,
                                        const ModuleElement& g, const Word& a,
                                        const OrderingSpec& spec) {
  auto lf = leading(f, spec);
  auto lg = leading(g, spec);
  if (lf.coeff != 1 || lg.coeff != 1) {
    throw Error(ErrorCode::NonMonicRelation, "composition needs monic inputs");
  }
  if (concat(a, lg.word) != lf.word) {
    throw Error(ErrorCode::MalformedAmbiguity, "lead(f) is not a·lead(g)");
  }
  return f - act(a, g);
}

inline ModuleElement module_nf(const ModuleElement& m,
                               std::span<const ModuleElement> relations,
                               const OrderingSpec& spec) {
  detail::check_module_spec(spec);
  return ModuleRewriter(relations, spec).reduce(m);
}

using ModuleCheckReport = BasicCheckReport<ModuleAmbiguity, ModuleElement>;
using ModuleCompletionReport = BasicCompletionReport<ModuleAmbiguity, ModuleElement>;

inline ModuleCheckReport check_module_gsb(
    std::span<const ModuleElement> relations, const OrderingSpec& spec,
    std::optional<std::size_t> max_deg = std::nullopt) {
  auto ambs = module_ambiguities(relations, spec);
  ModuleRewriter rw(relations, spec);
  ModuleCheckReport report;
  report.total = ambs.size();
  for (const auto& a : ambs) {
    if (max_deg && a.w.degree() > *max_deg) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    auto h = rw.reduce(module_composition(relations[a.f_index],
                                          relations[a.g_index], a.a, spec));
    if (!h.is_zero()) report.nontrivial.push_back({a, std::move(h)});
  }
  return report;
}

namespace detail {

struct ModuleTraits {
  using Element = ModuleElement;
  using Ambiguity = ModuleAmbiguity;
  using Overlap = std::size_t;
  using Rewriter = ModuleRewriter;

  static std::vector<Overlap> overlaps(const ModuleWord& f, const ModuleWord& g,
                                       bool same, bool report_equal) {
    return module_overlaps(f, g, same, report_equal);
  }
  static ModuleWord ambiguity_word(const ModuleWord& f, const ModuleWord&,
                                   const Overlap&) {
    return f;
  }
  static Ambiguity make(std::span<const ModuleElement>, std::size_t fi,
                        std::size_t gi, const Overlap& k, const ModuleWord& f,
                        const ModuleWord&) {
    return {fi, gi, f.prefix.prefix(k), f};
  }
  static std::vector<Ambiguity> find(std::span<const ModuleElement> s,
                                     const OrderingSpec& spec) {
    return module_ambiguities(s, spec);
  }
  static ModuleElement compose(std::span<const ModuleElement> s,
                               const Ambiguity& a, const OrderingSpec& spec) {
    return module_composition(s[a.f_index], s[a.g_index], a.a, spec);
  }
  static std::size_t degree(const Ambiguity& a) { return a.w.degree(); }
  static bool divides(const ModuleWord& lead, const ModuleWord& w) {
    return lead.generator == w.generator && w.prefix.has_suffix(lead.prefix);
  }
};

}  // namespace detail

inline ModuleCompletionReport module_complete(
    std::span<const ModuleElement> relations, const OrderingSpec& spec,
    CompletionLimits limits = {}) {
  detail::check_module_spec(spec);
  if (limits.max_steps == 0) {
    throw Error(ErrorCode::InvalidArgument, "max_steps must be positive");
  }
  using C = detail::Completer<detail::ModuleTraits>;
  C c(spec, limits);
  auto r = c.run(relations);
  r.inputs_reduce_to_zero =
      r.inputs_reduce_to_zero && C::all_reduce(relations, r.basis, spec);
  return r;
}

/// Irreducible module words u·y with deg(u) <= max_deg, increasing.
inline std::vector<ModuleWord> module_irr(std::span<const ModuleElement> relations,
                                          const OrderingSpec& spec,
                                          std::size_t max_deg) {
  detail::check_module_spec(spec);
  ModuleRewriter rw(relations, spec);
  std::vector<ModuleWord> out;
  std::vector<ModuleWord> level;
  for (Symbol y = 0; y < spec.basis_size(); ++y) {
    ModuleWord w{Word(), y};
    if (!rw.is_reducible(w)) level.push_back(w);
  }
  out = level;
  for (std::size_t d = 1; d <= max_deg && !level.empty(); ++d) {
    std::vector<ModuleWord> next;
    for (const auto& w : level) {
      for (Symbol s = 0; s < spec.alphabet_size(); ++s) {
        // Right factors of an irreducible word stay irreducible, so only
        // the whole extended word can match.
        ModuleWord x = concat(Word{s}, w);
        if (!rw.is_reducible(x)) next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), ModuleWordLess{&spec});
  return out;
}

}  // namespace gsb
