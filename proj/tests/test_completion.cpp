#include <catch_amalgamated.hpp>

#include <random>

#include "gsb/completion.hpp"
#include "gsb/selftest.hpp"

using namespace gsb;

namespace {

const Alphabet kAB = Alphabet::parse("a > b");
const OrderingSpec kDL = OrderingSpec::deg_lex(2);

Polynomial P(const char* text) { return parse_polynomial(text, kAB); }

// Overlaps by brute force: proper suffix/prefix matches for every ordered
// pair, occurrences of a shorter leading word inside a longer one, and one
// inclusion per pair of equal leading words.
std::size_t brute_ambiguity_count(const std::vector<Word>& leads) {
  auto at = [](const Word& host, const Word& pat, std::size_t pos) {
    for (std::size_t t = 0; t < pat.size(); ++t) {
      if (host[pos + t] != pat[t]) return false;
    }
    return true;
  };
  std::size_t n = 0;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    for (std::size_t j = 0; j < leads.size(); ++j) {
      const Word& f = leads[i];
      const Word& g = leads[j];
      for (std::size_t k = 1; k < f.size() && k < g.size(); ++k) {
        if (at(f, g.prefix(k), f.size() - k)) ++n;
      }
      if (i == j) continue;
      if (f == g) {
        if (i < j) ++n;
      } else if (g.size() < f.size()) {
        for (std::size_t p = 0; p + g.size() <= f.size(); ++p) n += at(f, g, p);
      }
    }
  }
  return n;
}

}  // namespace

TEST_CASE("ambiguity examples") {
  std::vector<Polynomial> s{P("a*a*b - 1"), P("b*a - a")};
  auto amb = find_ambiguities(s, kDL);
  REQUIRE(amb.size() == 2);
  CHECK(amb[0].w == parse_word("b*a*a*b", kAB));
  CHECK(amb[1].kind == AmbiguityKind::Intersection);
  CHECK(amb[1].w == parse_word("a*a*b*a", kAB));
  CHECK(amb[1].f_index == 0);
  CHECK(amb[1].g_index == 1);
  CHECK(amb[1].a == parse_word("a*a", kAB));
  CHECK(amb[1].b == Word{0});

  std::vector<Polynomial> inc{P("a*b - 1"), P("b - 1")};
  auto ia = find_ambiguities(inc, kDL);
  REQUIRE(ia.size() == 1);
  CHECK(ia[0].kind == AmbiguityKind::Inclusion);
  CHECK(ia[0].a == Word{0});
  CHECK(ia[0].b.empty());

  Alphabet xyz = Alphabet::parse("x > y");
  std::vector<Polynomial> disjoint{parse_polynomial("x*x - 1", xyz),
                                   parse_polynomial("y*y - 1", xyz)};
  // self-overlaps only
  CHECK(find_ambiguities(disjoint, kDL).size() == 2);
}

TEST_CASE("ambiguity count matches a brute-force scan") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 300; ++k) {
    auto rels = selftest::random_relations(rng, kDL, 3, 4);
    std::vector<Word> leads;
    for (const auto& r : rels) leads.push_back(leading(r, kDL).word);
    REQUIRE(find_ambiguities(rels, kDL).size() == brute_ambiguity_count(leads));
  }
}

TEST_CASE("composition examples") {
  std::vector<Polynomial> s{P("a*a - b")};
  auto amb = find_ambiguities(s, kDL);
  REQUIRE(amb.size() == 1);
  CHECK(amb[0].w == parse_word("a*a*a", kAB));
  CHECK(composition(s[0], s[0], amb[0], kDL) == P("a*b - b*a"));

  std::vector<Polynomial> same{P("a*b - b"), P("a*b - b")};
  auto eq = find_ambiguities(same, kDL);
  REQUIRE(eq.size() == 1);
  CHECK(composition(same[0], same[1], eq[0], kDL).is_zero());

  Ambiguity bad{AmbiguityKind::Intersection, 0, 0, Word{0, 0}, Word{0}, Word{0}};
  try {
    composition(s[0], s[0], bad, kDL);
    FAIL("expected MalformedAmbiguity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedAmbiguity);
  }
}

TEST_CASE("compositions lie below their ambiguity word") {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 300; ++k) {
    auto rels = selftest::random_relations(rng, kDL, 3, 4);
    for (const auto& a : find_ambiguities(rels, kDL)) {
      auto h = composition(rels[a.f_index], rels[a.g_index], a, kDL);
      if (!h.is_zero()) REQUIRE(compare(kDL, leading(h, kDL).word, a.w) < 0);
    }
  }
}

TEST_CASE("triviality") {
  std::vector<Polynomial> s{P("a*a - b"), P("a*b - b*a")};
  CHECK(is_trivial(Polynomial(), s, Word{0}, kDL));
  CHECK(is_trivial(P("a*b - b*a"), s, Word{0, 0, 0}, kDL));
  CHECK_FALSE(is_trivial(P("b"), s, Word{0, 0, 0}, kDL));
  try {
    is_trivial(P("a*a*a"), s, Word{0, 0, 0}, kDL);
    FAIL("expected LeadingNotBelowW");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LeadingNotBelowW);
  }
}

TEST_CASE("check_gsb on a*a - b") {
  std::vector<Polynomial> s{P("a*a - b")};
  auto r = check_gsb(s, kDL);
  CHECK(r.total == 1);
  REQUIRE(r.nontrivial.size() == 1);
  CHECK(r.nontrivial[0].ambiguity.w == Word{0, 0, 0});
  CHECK_FALSE(r.is_certificate());

  std::vector<Polynomial> done{P("a*a - b"), P("a*b - b*a")};
  CHECK(check_gsb(done, kDL).is_certificate());

  auto skipped = check_gsb(s, kDL, 2);
  CHECK(skipped.skipped == 1);
  CHECK(skipped.nontrivial.empty());
  CHECK_FALSE(skipped.is_certificate());
}

TEST_CASE("threaded check matches the serial report") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 50; ++k) {
    auto rels = selftest::random_relations(rng, kDL, 4, 4);
    auto one = check_gsb(rels, kDL, std::nullopt, 1);
    auto four = check_gsb(rels, kDL, std::nullopt, 4);
    REQUIRE(one.nontrivial.size() == four.nontrivial.size());
    for (std::size_t i = 0; i < one.nontrivial.size(); ++i) {
      CHECK(one.nontrivial[i].ambiguity == four.nontrivial[i].ambiguity);
      CHECK(one.nontrivial[i].residual == four.nontrivial[i].residual);
    }
  }
}

TEST_CASE("completion of a*a - b") {
  std::vector<Polynomial> s{P("a*a - b")};
  auto r = shirshov_complete(s, kDL);
  CHECK(r.status == CompletionStatus::CertifiedGSB);
  REQUIRE(r.added.size() == 1);
  CHECK(r.added[0] == P("a*b - b*a"));
  CHECK(r.inputs_reduce_to_zero);
  CHECK(check_gsb(r.basis, kDL).is_certificate());
  CHECK_NOTHROW(CertifiedBasis::from(r, kDL));
}

TEST_CASE("completion limits") {
  std::vector<Polynomial> s{P("a*a - b")};
  try {
    shirshov_complete(s, kDL, {12, 0});
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  // a*b*a - b*a*b has no finite basis under a > b
  std::vector<Polynomial> inf{P("a*b*a - b*a*b")};
  auto r = shirshov_complete(inf, kDL, {6, 10000});
  CHECK(r.status != CompletionStatus::CertifiedGSB);
  try {
    CertifiedBasis::from(r, kDL);
    FAIL("expected UncertifiedBasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UncertifiedBasis);
  }
}

TEST_CASE("certified completions pass the checker and keep the ideal") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 100; ++k) {
    auto rels = selftest::random_relations(rng, kDL, 3, 3);
    auto r = shirshov_complete(rels, kDL, {8, 2000});
    if (r.status != CompletionStatus::CertifiedGSB) continue;
    REQUIRE(check_gsb(r.basis, kDL).is_certificate());
    REQUIRE(r.inputs_reduce_to_zero);
    Rewriter rw(r.basis, kDL);
    for (const auto& p : rels) REQUIRE(rw.reduce(p).is_zero());
  }
}

TEST_CASE("irreducible words count the quotient on homogeneous inputs") {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> rels;
    for (int i = 0; i < 2; ++i) {
      Word u = selftest::random_word_of_degree(rng, 2, 2);
      Word v = selftest::random_word_of_degree(rng, 2, 2);
      if (u == v) continue;
      rels.push_back(make_monic(Polynomial(u) - Polynomial(v), kDL));
    }
    auto r = shirshov_complete(rels, kDL, {6, 2000});
    if (r.status == CompletionStatus::BudgetExhausted) continue;
    for (std::size_t d = 0; d <= 5; ++d) {
      REQUIRE(irr_words(r.basis, kDL, d).size() == quotient_dim_oracle(rels, kDL, d));
    }
  }
}

TEST_CASE("binomial inputs complete to binomials") {
  std::mt19937_64 rng(83);
  for (int k = 0; k < 60; ++k) {
    std::vector<Polynomial> rels;
    for (int i = 0; i < 3; ++i) rels.push_back(selftest::random_binomial(rng, kDL, 1, 3));
    auto r = shirshov_complete(rels, kDL, {7, 2000});
    for (const auto& p : r.basis) REQUIRE(selftest::is_binomial(p));
  }
}
