#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "gsb/constructions.hpp"
#include "gsb/module.hpp"
#include "gsb/presentation.hpp"

using namespace gsb;

namespace {

const Alphabet kAB = Alphabet::parse("a > b");
const Alphabet kY = Alphabet::parse("y1 > y2");
const OrderingSpec kMT = OrderingSpec::module_top(2, 2);

ModuleElement M(const char* text) { return parse_module_element(text, kAB, kY); }

ModuleWord random_module_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Symbol> letter(0, 1), gen(0, 1);
  Word w;
  for (std::size_t k = len(rng); k > 0; --k) w.push_back(letter(rng));
  return {w, gen(rng)};
}

ModuleElement random_module_relation(std::mt19937_64& rng) {
  ModuleWord lead = random_module_word(rng, 3);
  ModuleElement m(lead);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int k = 0; k < 2; ++k) {
    ModuleWord w = random_module_word(rng, 3);
    if (compare_module(kMT, w, lead) < 0) m.add_term(w, coeff(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("module normal form examples") {
  std::vector<ModuleElement> s{M("a*y1 - y2")};
  CHECK(module_nf(M("b*a*y1"), s, kMT) == M("b*y2"));
  CHECK(module_nf(M("a*b*y1"), s, kMT) == M("a*b*y1"));
  CHECK(module_nf(M("a*y1 + y1"), s, kMT) == M("y2 + y1"));
  try {
    module_nf(M("y1"), s, OrderingSpec::deg_lex(2));
    FAIL("expected BasisMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
}

TEST_CASE("rewriting prefers the longest suffix match") {
  std::vector<ModuleElement> s{M("a*y1 - y2"), M("b*a*y1 - b*y2")};
  ModuleRewriter rw(s, kMT);
  auto m = rw.find_match(ModuleWord{Word{1, 0}, 0});
  REQUIRE(m.has_value());
  CHECK(m->rule == 1);
}

TEST_CASE("module ambiguities agree with a suffix scan") {
  std::mt19937_64 rng(91);
  for (int k = 0; k < 300; ++k) {
    std::vector<ModuleElement> s;
    for (int i = 0; i < 3; ++i) s.push_back(random_module_relation(rng));
    std::size_t brute = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == j) continue;
        auto f = leading(s[i], kMT).word, g = leading(s[j], kMT).word;
        if (f.generator != g.generator || g.prefix.size() > f.prefix.size()) continue;
        if (f.prefix.suffix_from(f.prefix.size() - g.prefix.size()) != g.prefix) continue;
        if (f == g && i > j) continue;
        ++brute;
      }
    }
    auto amb = module_ambiguities(s, kMT);
    REQUIRE(amb.size() == brute);
    for (const auto& a : amb) {
      auto h = module_composition(s[a.f_index], s[a.g_index], a.a, kMT);
      if (!h.is_zero()) REQUIRE(compare_module(kMT, leading(h, kMT).word, a.w) < 0);
    }
  }
}

TEST_CASE("module ordering is compatible with the left action") {
  std::mt19937_64 rng(97);
  for (int k = 0; k < 2000; ++k) {
    ModuleWord u = random_module_word(rng, 4), v = random_module_word(rng, 4);
    Word a = random_module_word(rng, 3).prefix;
    auto c = compare_module(kMT, u, v);
    REQUIRE(compare_module(kMT, concat(a, u), concat(a, v)) == c);
  }
}

TEST_CASE("completion of the empty set") {
  auto r = module_complete(std::vector<ModuleElement>{}, kMT);
  CHECK(r.status == CompletionStatus::CertifiedGSB);
  CHECK(r.basis.empty());
  CHECK(module_irr(std::vector<ModuleElement>{}, kMT, 2).size() == 2 * 7);
}

TEST_CASE("certified module completions pass the checker") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 100; ++k) {
    std::vector<ModuleElement> s;
    for (int i = 0; i < 3; ++i) s.push_back(make_monic(random_module_relation(rng), kMT));
    auto r = module_complete(s, kMT, {8, 2000});
    if (r.status != CompletionStatus::CertifiedGSB) continue;
    REQUIRE(check_module_gsb(r.basis, kMT).is_certificate());
    REQUIRE(r.inputs_reduce_to_zero);
  }
}

TEST_CASE("cyclic embedding of a free module") {
  auto p = parse_presentation(
      "alphabet: a > b\nordering: module-top\nbasis: y1 > y2 > y3\nrelations:\n");
  auto c = build_module_cyclic(p.as_module(), 3);
  CHECK(c.certificate.is_certificate());
  CHECK(c.certificate.nontrivial.empty());
  CHECK(c.embedding_witness);
  CHECK(c.presentation.basis.size() == 4);
  CHECK(c.presentation.basis.name(0) == "y");
  CHECK(c.presentation.module_relations.size() == 3);
  // a b^i y = y_i for the old generators
  ModuleRewriter rw(c.presentation.module_relations, c.presentation.spec);
  CHECK(rw.reduce(ModuleElement(ModuleWord{Word{0, 1, 1}, 0})) ==
        ModuleElement(ModuleWord{Word(), 2}));
}

TEST_CASE("cyclic embedding errors") {
  auto single = parse_presentation("alphabet: x\nordering: module-top\nbasis: y1 > y2\n");
  try {
    build_module_cyclic(single.as_module(), 2);
    FAIL("expected SingleLetterAlphabet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingleLetterAlphabet);
  }
  auto free2 = parse_presentation("alphabet: a > b\nordering: module-top\nbasis: y1 > y2\n");
  for (std::size_t n : {0u, 3u}) {
    try {
      build_module_cyclic(free2.as_module(), n);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
  }
  ModulePresentation bad{kAB, kY, kMT, {M("a*y1 - y2"), M("a*y1 - y1")}};
  try {
    build_module_cyclic(bad, 1);
    FAIL("expected UncertifiedBasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UncertifiedBasis);
  }
}

TEST_CASE("one letter yields a new composition") {
  // x^(i+1) y - y_i over the single letter x
  auto rels = detail::cyclic_relations(0, 0, 0, 2);
  auto spec = OrderingSpec::module_top(1, 3);
  auto report = check_module_gsb(rels, spec);
  REQUIRE(report.nontrivial.size() == 1);
  Alphabet x = Alphabet::parse("x");
  Alphabet y = Alphabet::parse("y > y1 > y2");
  auto r = module_complete(rels, spec);
  CHECK(r.status == CompletionStatus::CertifiedGSB);
  // inter-reduction rewrites x^3 y - y2 into the new relation
  auto fresh = parse_module_element("x*y1 - y2", x, y);
  CHECK(std::find(r.basis.begin(), r.basis.end(), fresh) != r.basis.end());
  CHECK(r.inputs_reduce_to_zero);
}
