#pragma once

// The acceptance suite as a library: ten checks, each with a pinned
// instance size, seed and time limit. Used by `gsb selftest` and by the
// acceptance test binary.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsb/completion.hpp"
#include "gsb/constructions.hpp"
#include "gsb/lyndon.hpp"
#include "gsb/module.hpp"
#include "gsb/ordering.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/word.hpp"

namespace gsb::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
};

// ---- random inputs ------------------------------------------------------

inline Word random_word_of_degree(std::mt19937_64& rng, std::size_t alphabet_size,
                                  std::size_t deg) {
  std::uniform_int_distribution<Symbol> letter(0, static_cast<Symbol>(alphabet_size - 1));
  Word w;
  for (std::size_t i = 0; i < deg; ++i) w.push_back(letter(rng));
  return w;
}

/// Monic relation with leading word of degree 1..max_lead_deg and up to
/// two smaller tail terms with small integer coefficients.
inline Polynomial random_relation(std::mt19937_64& rng, const OrderingSpec& spec,
                                  std::size_t max_lead_deg) {
  const std::size_t n = spec.alphabet_size();
  std::uniform_int_distribution<std::size_t> deg(1, max_lead_deg);
  Word lead = random_word_of_degree(rng, n, deg(rng));
  Polynomial p(lead);
  std::uniform_int_distribution<int> tails(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = tails(rng); k > 0; --k) {
    std::uniform_int_distribution<std::size_t> td(0, lead.size());
    Word w = random_word_of_degree(rng, n, td(rng));
    if (detail::compare_words(spec, w, lead) >= 0) continue;
    p.add_term(w, coeff(rng));
  }
  return p;
}

inline std::vector<Polynomial> random_relations(std::mt19937_64& rng,
                                                const OrderingSpec& spec,
                                                std::size_t max_relations,
                                                std::size_t max_lead_deg) {
  std::uniform_int_distribution<std::size_t> count(1, max_relations);
  std::vector<Polynomial> out;
  for (std::size_t k = count(rng); k > 0; --k) {
    out.push_back(random_relation(rng, spec, max_lead_deg));
  }
  return out;
}

/// u - v for distinct words u, v of degree 1..max_deg (u the larger).
inline Polynomial random_binomial(std::mt19937_64& rng, const OrderingSpec& spec,
                                  std::size_t min_deg, std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> deg(min_deg, max_deg);
  while (true) {
    Word u = random_word_of_degree(rng, spec.alphabet_size(), deg(rng));
    Word v = random_word_of_degree(rng, spec.alphabet_size(), deg(rng));
    auto c = detail::compare_words(spec, u, v);
    if (c == 0) continue;
    if (c < 0) std::swap(u, v);
    Polynomial p(u);
    p.add_term(v, -1);
    return p;
  }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t alphabet_size,
                                    std::size_t max_terms, std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Polynomial p;
  for (std::size_t k = terms(rng); k > 0; --k) {
    p.add_term(random_word_of_degree(rng, alphabet_size, deg(rng)),
               Rational(num(rng), den(rng)));
  }
  return p;
}

inline bool is_binomial(const Polynomial& p) {
  if (p.size() != 2) return false;
  auto it = p.begin();
  const Rational& c1 = it->second;
  const Rational& c2 = std::next(it)->second;
  return (c1 == 1 && c2 == -1) || (c1 == -1 && c2 == 1);
}

// ---- criteria -------------------------------------------------------------

namespace detail {

template <class F>
CriterionResult timed(int id, std::string name, double limit, F&& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit_seconds = limit;
  auto t0 = std::chrono::steady_clock::now();
  try {
    std::ostringstream detail;
    r.passed = body(detail);
    r.detail = detail.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && r.seconds > limit) {
    r.passed = false;
    r.detail += " [over time limit]";
  }
  return r;
}

}  // namespace detail

/// 1. For seeded random presentations completed to degree 6, the number of
/// irreducible words equals the quotient dimension at every degree <= 6.
inline CriterionResult oracle_equivalence(std::size_t count = 100,
                                          std::uint64_t seed = 20261016) {
  return detail::timed(1, "composition-diamond oracle equivalence", 300, [&](std::ostream& out) {
    constexpr std::size_t kDeg = 6;
    std::mt19937_64 rng(seed);
    std::size_t mismatches = 0, certified = 0, bounded = 0, exhausted = 0;
    for (std::size_t k = 0; k < count; ++k) {
      std::uniform_int_distribution<std::size_t> letters(1, 3);
      auto spec = OrderingSpec::deg_lex(letters(rng));
      auto rels = random_relations(rng, spec, 3, 3);
      auto rep = shirshov_complete(rels, spec, {kDeg, 10000});
      switch (rep.status) {
        case CompletionStatus::CertifiedGSB: ++certified; break;
        case CompletionStatus::CompleteUpToDegree: ++bounded; break;
        case CompletionStatus::BudgetExhausted: ++exhausted; break;
      }
      auto irr = irr_words(rep.basis, spec, kDeg);
      std::vector<std::size_t> by_deg(kDeg + 1, 0);
      for (const auto& w : irr) ++by_deg[w.degree()];
      std::size_t cumulative = 0;
      for (std::size_t d = 0; d <= kDeg; ++d) {
        cumulative += by_deg[d];
        if (cumulative != quotient_dim_oracle(rep.basis, spec, d)) {
          ++mismatches;
          break;
        }
      }
    }
    out << count << " presentations (" << certified << " certified, " << bounded
        << " complete to degree 6, " << exhausted << " over budget), " << mismatches
        << " mismatches";
    return mismatches == 0 && exhausted == 0;
  });
}

/// 2. {aa - b} completes to {aa - b, ab - ba} with irr counts 1, 2, 2, 2.
inline CriterionResult worked_completion() {
  return detail::timed(2, "worked completion {aa-b}", 1, [](std::ostream& out) {
    Alphabet A = Alphabet::parse("a > b");
    auto spec = OrderingSpec::deg_lex(2);
    std::vector<Polynomial> s{parse_polynomial("a*a - b", A)};
    auto rep = shirshov_complete(s, spec);
    std::vector<Polynomial> expect{parse_polynomial("a*b - b*a", A),
                                   parse_polynomial("a*a - b", A)};
    std::set<Polynomial::Terms> got, want;
    for (const auto& p : rep.basis) got.insert(p.terms());
    for (const auto& p : expect) want.insert(p.terms());
    std::vector<std::size_t> counts(4, 0);
    for (const auto& w : irr_words(rep.basis, spec, 3)) ++counts[w.degree()];
    out << "status " << to_string(rep.status) << ", basis size " << rep.basis.size()
        << ", irr counts " << counts[0] << "," << counts[1] << "," << counts[2] << ","
        << counts[3];
    return rep.status == CompletionStatus::CertifiedGSB && got == want &&
           counts == std::vector<std::size_t>{1, 2, 2, 2};
  });
}

/// 3. HNN relations at index bound 2 form a GSB under the tower ordering.
inline CriterionResult hnn_certification() {
  return detail::timed(3, "HNN certification (index bound 2)", 60, [](std::ostream& out) {
    auto c = build_hnn(GroupTable::cyclic(3), 2);
    auto report = check_gsb(c.presentation.relations, c.presentation.spec);
    out << c.presentation.relations.size() << " relations, " << report.total
        << " ambiguities, " << report.nontrivial.size() << " nontrivial";
    return report.is_certificate() && report.total > 0;
  });
}

/// Random certified homogeneous quadratic binomial GSB over x1..x5 with no
/// single-letter leading word.
inline std::vector<Polynomial> random_certified_base(std::mt19937_64& rng,
                                                     const OrderingSpec& spec) {
  while (true) {
    std::uniform_int_distribution<std::size_t> count(1, 3);
    std::vector<Polynomial> rels;
    for (std::size_t k = count(rng); k > 0; --k) {
      rels.push_back(random_binomial(rng, spec, 2, 2));
    }
    auto rep = shirshov_complete(rels, spec, {8, 2000});
    if (rep.status == CompletionStatus::CertifiedGSB) return rep.basis;
  }
}

/// 4. Twenty random certified bases plus aab^i ab - x_i (i <= 5): no new
/// nontrivial compositions and nf(x_i) = x_i.
inline CriterionResult malcev_certification(std::size_t count = 20,
                                            std::uint64_t seed = 4242) {
  return detail::timed(4, "two-generator embedding certification", 0,
                       [&](std::ostream& out) {
    std::mt19937_64 rng(seed);
    Alphabet X = Alphabet::parse("x1 > x2 > x3 > x4 > x5");
    auto spec = OrderingSpec::deg_lex(5);
    std::size_t failures = 0, binomial_failures = 0;
    for (std::size_t k = 0; k < count; ++k) {
      Presentation s{X, {}, spec, random_certified_base(rng, spec), {}};
      auto c = build_malcev(s, 5);
      const auto& p = c.presentation;
      Rewriter rw(p.relations, p.spec);
      bool ok = c.certificate.is_certificate() && c.embedding_witness;
      for (std::size_t i = 1; i <= 5; ++i) {
        Polynomial x(Word{p.alphabet.at("x" + std::to_string(i))});
        ok = ok && rw.reduce(x) == x;
      }
      for (const auto& f : p.relations) {
        if (!is_binomial(f)) ++binomial_failures;
      }
      if (!ok) ++failures;
    }
    out << count << " bases, " << failures << " failures, " << binomial_failures
        << " non-binomial outputs";
    return failures == 0 && binomial_failures == 0;
  });
}

/// Toy stage: left-zero band {x1, x2} (x_i x_j = x_i) and two pairs with
/// deg(g) = 1.
inline Construction simple_toy() {
  MultTable t;
  t.basis = Alphabet::parse("x1 > x2");
  for (Symbol i = 0; i < 2; ++i) {
    for (Symbol j = 0; j < 2; ++j) t.product[{i, j}] = Polynomial(Word{i});
  }
  SimpleStepInput in;
  in.pairs.push_back({"x1", "x2", "X1_1", "Y1_1"});
  in.pairs.push_back({"2*x2 + 1", "x1 - 1", "X1_2", "Y1_2"});
  return build_simple_step(t, in, 2, 1);
}

/// 5. Every ambiguity of the toy stage has shape x_i x_j x_k and is
/// trivial; relation (5) uses exponent deg(g) + 1.
inline CriterionResult simple_stage() {
  return detail::timed(5, "simple-algebra stage ambiguities", 0, [](std::ostream& out) {
    auto c = simple_toy();
    const auto& p = c.presentation;
    auto ambs = find_ambiguities(p.relations, p.spec);
    const Symbol x1 = p.alphabet.at("x1"), x2 = p.alphabet.at("x2");
    bool shapes = !ambs.empty();
    for (const auto& a : ambs) {
      shapes = shapes && a.w.size() == 3 &&
               std::all_of(a.w.begin(), a.w.end(),
                           [&](Symbol s) { return s == x1 || s == x2; });
    }
    bool exponents = true;
    std::size_t pair_relations = 0;
    for (const auto& [xn, yn, deg_g] :
         {std::tuple{"X1_1", "Y1_1", 1}, std::tuple{"X1_2", "Y1_2", 1}}) {
      const Symbol x = p.alphabet.at(xn), y = p.alphabet.at(yn);
      for (const auto& f : p.relations) {
        Word lead = leading(f, p.spec).word;
        if (lead.empty() || lead[lead.size() - 1] != y) continue;
        ++pair_relations;
        std::size_t e = 0;
        while (e < lead.size() && lead[e] == x) ++e;
        exponents = exponents && e == static_cast<std::size_t>(deg_g) + 1;
      }
    }
    out << ambs.size() << " ambiguities, shapes " << (shapes ? "ok" : "bad")
        << ", nontrivial " << c.certificate.nontrivial.size() << ", exponents "
        << (exponents ? "ok" : "bad");
    return shapes && exponents && pair_relations == 2 && c.certificate.is_certificate();
  });
}

/// 6. Cyclic module embedding over {a > b}, five generators, n = 5.
inline CriterionResult module_embedding() {
  return detail::timed(6, "cyclic module embedding", 5, [](std::ostream& out) {
    ModulePresentation t{Alphabet::parse("a > b"), Alphabet::parse("y1 > y2 > y3 > y4 > y5"),
                         OrderingSpec::module_top(2, 5), {}};
    auto c = build_module_cyclic(t, 5);
    auto m = c.presentation.as_module();
    auto rep = module_complete(m.relations, m.spec);
    bool rejected = false;
    try {
      ModulePresentation single{Alphabet::parse("x"), Alphabet::parse("y1 > y2"),
                                OrderingSpec::module_top(1, 2), {}};
      build_module_cyclic(single, 2);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::SingleLetterAlphabet;
    }
    out << "status " << to_string(rep.status) << ", added " << rep.added.size()
        << ", witness " << (c.embedding_witness ? "distinct" : "collapsed")
        << ", single letter " << (rejected ? "rejected" : "accepted");
    return rep.status == CompletionStatus::CertifiedGSB && rep.added.empty() &&
           c.embedding_witness && rejected;
  });
}

/// 7. ALSW counts by brute force, unique NLSW bracketing, flattening.
inline CriterionResult lyndon_suite() {
  return detail::timed(7, "Lyndon-Shirshov words", 30, [](std::ostream& out) {
    const std::vector<std::size_t> expect{2, 1, 2, 3, 6, 9, 18, 30};
    std::vector<std::size_t> counts(9, 0);
    for (std::size_t len = 1; len <= 8; ++len) {
      for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
        Word w;
        for (std::size_t i = 0; i < len; ++i) w.push_back((bits >> (len - 1 - i)) & 1u);
        if (is_alsw(w)) ++counts[len];
      }
    }
    bool counts_ok = true;
    for (std::size_t len = 1; len <= 8; ++len) {
      counts_ok = counts_ok && counts[len] == expect[len - 1];
    }
    bool unique = true, flat = true;
    std::size_t checked = 0;
    for (const auto& u : alsw_up_to(2, 6)) {
      std::size_t valid = 0;
      for (const auto& b : all_bracketings(u)) valid += is_nlsw(b) ? 1 : 0;
      auto s = std_bracketing(u);
      unique = unique && valid == 1 && is_nlsw(s);
      flat = flat && s.flatten() == u;
      ++checked;
    }
    out << "counts " << (counts_ok ? "match" : "differ") << ", " << checked
        << " ALSWs bracketed, unique " << (unique ? "yes" : "no") << ", flatten "
        << (flat ? "ok" : "bad");
    return counts_ok && unique && flat;
  });
}

/// 8. Completion of binomial relation sets only produces binomials.
inline CriterionResult binomial_closure(std::size_t count = 100,
                                        std::uint64_t seed = 808) {
  return detail::timed(8, "semigroup binomial closure", 0, [&](std::ostream& out) {
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < count; ++k) {
      std::uniform_int_distribution<std::size_t> letters(2, 3);
      auto spec = OrderingSpec::deg_lex(letters(rng));
      std::uniform_int_distribution<std::size_t> nrel(1, 3);
      std::vector<Polynomial> rels;
      for (std::size_t r = nrel(rng); r > 0; --r) {
        rels.push_back(random_binomial(rng, spec, 1, 3));
      }
      auto rep = shirshov_complete(rels, spec, {6, 2000});
      for (const auto& f : rep.basis) bad += is_binomial(f) ? 0 : 1;
      for (const auto& f : rep.added) bad += is_binomial(f) ? 0 : 1;
    }
    out << count << " sets, " << bad << " non-binomial relations";
    return bad == 0;
  });
}

/// 9. Monomiality of deg-lex, tower and module-top on 10^4 samples each.
inline CriterionResult ordering_properties(std::size_t samples = 10000) {
  return detail::timed(9, "ordering monomiality", 0, [&](std::ostream& out) {
    auto d = check_monomial(OrderingSpec::deg_lex(3), samples, 1);
    auto t = check_monomial(OrderingSpec::tower(5, 0, 1), samples, 2);
    auto m = check_monomial(OrderingSpec::module_top(3, 3), samples, 3);
    out << "violations: deglex " << d.violations.size() << ", tower "
        << t.violations.size() << ", module-top " << m.violations.size();
    return d.ok() && t.ok() && m.ok();
  });
}

/// 10. Canonical and randomized reduction agree against {aa - b, ab - ba}.
inline CriterionResult strategy_independence(std::size_t count = 1000,
                                             std::uint64_t seed = 1010) {
  return detail::timed(10, "strategy independence", 0, [&](std::ostream& out) {
    Alphabet A = Alphabet::parse("a > b");
    auto spec = OrderingSpec::deg_lex(2);
    std::vector<Polynomial> s{parse_polynomial("a*b - b*a", A),
                              parse_polynomial("a*a - b", A)};
    Rewriter rw(s, spec);
    std::mt19937_64 rng(seed);
    std::size_t disagree = 0;
    for (std::size_t k = 0; k < count; ++k) {
      Polynomial p = random_polynomial(rng, 2, 5, 6);
      if (rw.reduce(p) != rw.reduce_randomized(p, rng)) ++disagree;
    }
    out << count << " polynomials, " << disagree << " disagreements";
    return disagree == 0;
  });
}

inline std::vector<CriterionResult> run_all() {
  return {oracle_equivalence(),  worked_completion(),   hnn_certification(),
          malcev_certification(), simple_stage(),       module_embedding(),
          lyndon_suite(),         binomial_closure(),   ordering_properties(),
          strategy_independence()};
}

inline std::string format(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " -- "
      << r.detail << " (" << std::fixed;
  out.precision(2);
  out << r.seconds << "s";
  if (r.limit_seconds > 0) out << ", limit " << r.limit_seconds << "s";
  out << ")";
  return out.str();
}

}  // namespace gsb::selftest
