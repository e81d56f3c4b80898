#pragma once

// Reduction to normal form, irreducible-word enumeration, and the
// linear-algebra oracle for quotient dimensions.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/ordering.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/word.hpp"

namespace gsb {

using RelationSet = std::vector<Polynomial>;

/// One rewriting step: `coefficient · left · s_rule · right` was subtracted,
/// eliminating the term on `rewritten = left · lead(s_rule) · right`.
struct ReductionStep {
  std::size_t rule = 0;
  Word left;
  Word right;
  Word rewritten;
  Rational coefficient;
};

/// Replayable record of a reduction. The input decomposes as
///   input = residual + sum_j coefficient_j · left_j · s_j · right_j
/// with every residual word irreducible and every left_j·lead(s_j)·right_j
/// at most the input's leading word.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial residual;

  /// Recomputes residual + sum of subtracted multiples.
  Polynomial replay(std::span<const Polynomial> relations) const {
    Polynomial total = residual;
    for (const auto& s : steps) {
      total += s.coefficient * multiply(s.left, relations[s.rule], s.right);
    }
    return total;
  }
};

class Rewriter {
 public:
  struct Match {
    std::size_t rule;
    std::size_t position;
  };

  /// Relations must be monic under `spec`.
  Rewriter(std::span<const Polynomial> relations, const OrderingSpec& spec)
      : spec_(spec) {
    rules_.reserve(relations.size());
    by_first_.resize(spec.alphabet_size());
    by_last_.resize(spec.alphabet_size());
    for (std::size_t i = 0; i < relations.size(); ++i) {
      const Polynomial& s = relations[i];
      if (s.is_zero()) {
        throw Error(ErrorCode::ZeroPolynomial, "zero relation", i);
      }
      auto lt = leading(s, spec);
      if (lt.coeff != 1) {
        throw Error(ErrorCode::NonMonicRelation,
                    "relation " + std::to_string(i) + " is not monic", i);
      }
      Rule r;
      r.lead = lt.word;
      for (const auto& [w, c] : s) {
        detail::check_letters(spec, w);
        if (w != r.lead) r.tail.emplace_back(w, c);
      }
      if (r.lead.empty()) {
        empty_.push_back(i);
      } else {
        by_first_[r.lead[0]].push_back(i);
        by_last_[r.lead[r.lead.size() - 1]].push_back(i);
      }
      rules_.push_back(std::move(r));
    }
  }

  std::size_t size() const noexcept { return rules_.size(); }
  const Word& lead(std::size_t i) const { return rules_[i].lead; }
  const OrderingSpec& spec() const noexcept { return spec_; }

  /// Leftmost occurrence of any leading word; lowest rule index among the
  /// rules matching there.
  std::optional<Match> find_match(const Word& w) const {
    if (!empty_.empty()) return Match{empty_.front(), 0};
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t r : by_first_[w[pos]]) {
        if (w.matches_at(rules_[r].lead, pos)) return Match{r, pos};
      }
    }
    return std::nullopt;
  }

  bool is_reducible(const Word& w) const { return find_match(w).has_value(); }

  /// True if some leading word is a suffix of w.
  bool has_suffix_match(const Word& w) const {
    if (!empty_.empty()) return true;
    if (w.empty()) return false;
    for (std::size_t r : by_last_[w[w.size() - 1]]) {
      if (w.has_suffix(rules_[r].lead)) return true;
    }
    return false;
  }

  /// Canonical strategy: always rewrite the ordering-greatest reducible word
  /// at its leftmost occurrence.
  Polynomial reduce(const Polynomial& p, ReductionTrace* trace = nullptr) const {
    Work work(WordLess{&spec_});
    for (const auto& [w, c] : p) work.emplace(w, c);
    Polynomial out;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      Word w = it->first;
      Rational c = std::move(it->second);
      work.erase(it);
      auto m = find_match(w);
      if (!m) {
        out.add_term(w, c);
        continue;
      }
      apply(work, w, c, *m, trace);
    }
    if (trace) trace->residual = out;
    return out;
  }

  /// Rewrites a uniformly chosen reducible word at a uniformly chosen
  /// occurrence until nothing is reducible.
  Polynomial reduce_randomized(const Polynomial& p, std::mt19937_64& rng) const {
    Work work(WordLess{&spec_});
    for (const auto& [w, c] : p) work.emplace(w, c);
    while (true) {
      std::vector<Work::iterator> reducible;
      for (auto it = work.begin(); it != work.end(); ++it) {
        if (is_reducible(it->first)) reducible.push_back(it);
      }
      if (reducible.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, reducible.size() - 1);
      auto it = reducible[pick(rng)];
      Word w = it->first;
      Rational c = it->second;
      work.erase(it);
      auto matches = all_matches(w);
      std::uniform_int_distribution<std::size_t> pm(0, matches.size() - 1);
      apply(work, w, c, matches[pm(rng)], nullptr);
    }
    Polynomial out;
    for (const auto& [w, c] : work) out.add_term(w, c);
    return out;
  }

  std::vector<Match> all_matches(const Word& w) const {
    std::vector<Match> out;
    for (std::size_t r : empty_) {
      for (std::size_t pos = 0; pos <= w.size(); ++pos) out.push_back({r, pos});
    }
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t r : by_first_[w[pos]]) {
        if (w.matches_at(rules_[r].lead, pos)) out.push_back({r, pos});
      }
    }
    return out;
  }

 private:
  struct Rule {
    Word lead;
    std::vector<std::pair<Word, Rational>> tail;
  };
  using Work = std::map<Word, Rational, WordLess>;

  void apply(Work& work, const Word& w, const Rational& c, Match m,
             ReductionTrace* trace) const {
    const Rule& rule = rules_[m.rule];
    Word left = w.prefix(m.position);
    Word right = w.suffix_from(m.position + rule.lead.size());
    for (const auto& [v, d] : rule.tail) {
      auto [jt, inserted] = work.try_emplace(concat(left, v, right), 0);
      jt->second -= c * d;
      if (jt->second == 0) work.erase(jt);
    }
    if (trace) {
      trace->steps.push_back({m.rule, std::move(left), std::move(right), w, c});
    }
  }

  OrderingSpec spec_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::vector<std::size_t>> by_last_;
  std::vector<std::size_t> empty_;
};

struct NormalFormResult {
  Polynomial nf;
  std::optional<ReductionTrace> trace;
};

inline NormalFormResult normal_form(const Polynomial& p,
                                    std::span<const Polynomial> relations,
                                    const OrderingSpec& spec,
                                    bool with_trace = false) {
  Rewriter rw(relations, spec);
  NormalFormResult r;
  if (with_trace) {
    r.trace.emplace();
    r.nf = rw.reduce(p, &*r.trace);
  } else {
    r.nf = rw.reduce(p);
  }
  return r;
}

/// Words of degree <= max_deg avoiding every leading word, increasing.
inline std::vector<Word> irr_words(std::span<const Polynomial> relations,
                                   const OrderingSpec& spec,
                                   std::size_t max_deg) {
  Rewriter rw(relations, spec);
  std::vector<Word> out;
  if (rw.has_suffix_match(Word())) return out;
  std::vector<Word> level{Word()};
  out.push_back(Word());
  for (std::size_t d = 1; d <= max_deg && !level.empty(); ++d) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Symbol s = 0; s < spec.alphabet_size(); ++s) {
        Word x = w;
        x.push_back(s);
        // Prefixes are irreducible, so only occurrences ending here matter.
        if (!rw.has_suffix_match(x)) next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), WordLess{&spec});
  return out;
}

inline constexpr std::size_t kDefaultOracleCapacity = 20000;

namespace detail {

/// Row echelon form of span{a·s·b} inside the space of words of degree
/// <= max_deg, by fraction-free integer elimination. Columns are numbered by
/// degree and then by letter index; the numbering is independent of any
/// OrderingSpec.
class MultipleSpan {
 public:
  using Row = std::vector<std::pair<std::uint32_t, mpz_class>>;  // desc cols

  MultipleSpan(std::span<const Polynomial> relations, std::size_t alphabet_size,
               std::size_t max_deg, std::size_t capacity)
      : q_(alphabet_size), max_deg_(max_deg) {
    offsets_.push_back(0);
    std::size_t count = 1, layer = 1;
    for (std::size_t d = 1; d <= max_deg; ++d) {
      offsets_.push_back(count);
      layer *= q_;
      count += layer;
      if (count > capacity || (q_ > 1 && layer > capacity)) {
        throw Error(ErrorCode::CapacityExceeded,
                    "more than " + std::to_string(capacity) +
                        " words of degree <= " + std::to_string(max_deg));
      }
    }
    offsets_.push_back(count);
    columns_ = count;
    pivots_.resize(columns_);

    for (const Polynomial& s : relations) {
      if (s.is_zero()) continue;
      for (const auto& [w, c] : s) {
        for (Symbol x : w) {
          if (x >= q_) {
            throw Error(ErrorCode::AlphabetMismatch,
                        "relation letter outside alphabet");
          }
        }
      }
      const std::size_t m = max_degree(s);
      if (m > max_deg) continue;
      const std::size_t slack = max_deg - m;
      for (std::size_t la = 0; la <= slack; ++la) {
        for (std::size_t lb = 0; la + lb <= slack; ++lb) {
          for_each_word(la, [&](const Word& a) {
            for_each_word(lb, [&](const Word& b) {
              insert(to_row(multiply(a, s, b)));
            });
          });
        }
      }
    }
  }

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return rank_; }

  bool contains(const Polynomial& p) const {
    if (max_degree(p) > max_deg_) return false;
    Row r = to_row(p);
    reduce(r);
    return r.empty();
  }

 private:
  std::uint32_t column(const Word& w) const {
    std::size_t v = 0;
    for (Symbol x : w) v = v * q_ + (q_ - 1 - x);
    return static_cast<std::uint32_t>(offsets_[w.size()] + v);
  }

  template <class F>
  void for_each_word(std::size_t len, F&& f) const {
    std::vector<Symbol> digits(len, 0);
    while (true) {
      f(Word(digits));
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (++digits[i] < q_) break;
        digits[i] = 0;
        if (i == 0) return;
      }
      if (len == 0) return;
    }
  }

  Row to_row(const Polynomial& p) const {
    mpz_class den = 1;
    for (const auto& [w, c] : p) den = lcm(den, mpz_class(c.get_den()));
    Row row;
    row.reserve(p.size());
    for (const auto& [w, c] : p) {
      mpz_class v = c.get_num() * (den / c.get_den());
      row.emplace_back(column(w), v);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return row;
  }

  static void make_primitive(Row& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : r) {
      g = gcd(g, v);
      if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& [c, v] : r) v /= g;
    }
  }

  // row <- p·row - r·pivot, where p, r are the two lead entries.
  static Row eliminate(const Row& row, const Row& pivot) {
    const mpz_class& p = pivot.front().second;
    const mpz_class& r = row.front().second;
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() ||
          (i < row.size() && row[i].first > pivot[j].first)) {
        out.emplace_back(row[i].first, p * row[i].second);
        ++i;
      } else if (i == row.size() || pivot[j].first > row[i].first) {
        out.emplace_back(pivot[j].first, -r * pivot[j].second);
        ++j;
      } else {
        mpz_class v = p * row[i].second - r * pivot[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    return out;
  }

  void reduce(Row& row) const {
    while (!row.empty()) {
      const auto& pv = pivots_[row.front().first];
      if (!pv) return;
      row = eliminate(row, *pv);
    }
  }

  void insert(Row row) {
    make_primitive(row);
    reduce(row);
    if (row.empty()) return;
    pivots_[row.front().first] = std::move(row);
    ++rank_;
  }

  std::size_t q_;
  std::size_t max_deg_;
  std::vector<std::size_t> offsets_;
  std::size_t columns_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::optional<Row>> pivots_;
};

}  // namespace detail

/// dim( span(words of deg <= max_deg) / span{a·s·b of deg <= max_deg} ),
/// computed by exact elimination. A multiple a·s·b counts when all of its
/// terms have degree <= max_deg.
inline std::size_t quotient_dim_oracle(
    std::span<const Polynomial> relations, std::size_t alphabet_size,
    std::size_t max_deg, std::size_t capacity = kDefaultOracleCapacity) {
  detail::MultipleSpan span(relations, alphabet_size, max_deg, capacity);
  return span.columns() - span.rank();
}

inline std::size_t quotient_dim_oracle(
    std::span<const Polynomial> relations, const OrderingSpec& spec,
    std::size_t max_deg, std::size_t capacity = kDefaultOracleCapacity) {
  return quotient_dim_oracle(relations, spec.alphabet_size(), max_deg,
                             capacity);
}

/// True if p lies in span{a·s·b : all terms of degree <= max_deg}.
inline bool oracle_contains(std::span<const Polynomial> relations,
                            std::size_t alphabet_size, std::size_t max_deg,
                            const Polynomial& p,
                            std::size_t capacity = kDefaultOracleCapacity) {
  detail::MultipleSpan span(relations, alphabet_size, max_deg, capacity);
  return span.contains(p);
}

}  // namespace gsb
