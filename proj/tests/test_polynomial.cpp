#include <catch_amalgamated.hpp>

#include <random>

#include "gsb/polynomial.hpp"

using namespace gsb;

namespace {

const Alphabet kAB = Alphabet::parse("a > b");

Polynomial P(const char* text) { return parse_polynomial(text, kAB); }

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), len(0, 3), num(-4, 4), den(1, 3);
  std::uniform_int_distribution<Symbol> letter(0, 1);
  Polynomial p;
  for (int k = terms(rng); k > 0; --k) {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(letter(rng));
    p.add_term(w, Rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((P("a + b") * P("a - b")) == P("a*a - a*b + b*a - b*b"));
  Polynomial p = P("3*a*b - 1/2");
  CHECK((p + Rational(-1) * p).is_zero());
  CHECK(add(P("a"), P("b")) == P("b + a"));
  CHECK(scalar_mul(2, P("a - 1/2")) == P("2*a - 1"));
}

TEST_CASE("zero coefficients are never stored") {
  Polynomial p = P("a - a + b");
  CHECK(p.size() == 1);
  CHECK(P("0").is_zero());
  CHECK(P("2/4*a") == P("1/2*a"));
}

TEST_CASE("module action") {
  Alphabet Y = Alphabet::parse("y1 > y2");
  ModuleElement m = parse_module_element("b*y1 + y2", kAB, Y);
  CHECK(act(P("a"), m) == parse_module_element("a*b*y1 + a*y2", kAB, Y));
  CHECK(act(Word{0}, m) == act(P("a"), m));
}

TEST_CASE("leading term examples") {
  auto s = OrderingSpec::deg_lex(2);
  auto l1 = leading(P("a*a - b"), s);
  CHECK(l1.word == Word{0, 0});
  CHECK(l1.coeff == 1);
  CHECK(leading(P("a*b - b*a"), s).word == Word{0, 1});
  auto l3 = leading(P("3/2*b + 2*a"), s);
  CHECK(l3.word == Word{0});
  CHECK(l3.coeff == 2);
  CHECK(deg_of(P("b*b*b + a"), s) == 3);
  try {
    leading(Polynomial(), s);
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPolynomial);
  }
}

TEST_CASE("make_monic") {
  auto s = OrderingSpec::deg_lex(2);
  CHECK(make_monic(P("2*a*a - 4*b"), s) == P("a*a - 2*b"));
  Polynomial m = P("a*a - 2*b");
  CHECK(make_monic(m, s) == m);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    Polynomial p = random_poly(rng);
    if (p.is_zero()) continue;
    REQUIRE(leading(make_monic(p, s), s).coeff == 1);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE((p + q) * r == p * r + q * r);
    REQUIRE(p + q == q + p);
    REQUIRE(constant(1) * p == p);
  }
}

TEST_CASE("leading word of a product is the product of leading words") {
  std::mt19937_64 rng(23);
  for (auto s : {OrderingSpec::deg_lex(2), OrderingSpec::tower(2, 0, 1)}) {
    for (int k = 0; k < 500; ++k) {
      Polynomial p = random_poly(rng), q = random_poly(rng);
      if (p.is_zero() || q.is_zero()) continue;
      REQUIRE(leading(p * q, s).word == concat(leading(p, s).word, leading(q, s).word));
    }
  }
}

TEST_CASE("printing round-trips through the parser") {
  auto s = OrderingSpec::deg_lex(2);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 500; ++k) {
    Polynomial p = random_poly(rng);
    REQUIRE(parse_polynomial(print_polynomial(p, kAB, s), kAB) == p);
  }
  CHECK(print_polynomial(P("1/2*a*b + 1 - b"), kAB, s) == "1/2*a*b - b + 1");
}

TEST_CASE("polynomial syntax errors") {
  for (const char* bad : {"", "a +", "a ** b", "1/0*a", "a $ b"}) {
    try {
      P(bad);
      FAIL("expected an error for '" << bad << "'");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
    }
  }
  try {
    P("a*c");
    FAIL("expected UnknownSymbol");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSymbol);
  }
}

TEST_CASE("module element syntax") {
  Alphabet Y = Alphabet::parse("y1 > y2");
  try {
    parse_module_element("a*b", kAB, Y);
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
  }
  try {
    parse_module_element("y1*a", kAB, Y);
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
  }
  try {
    parse_module_element("a*y1", kAB, Alphabet::parse("a > y1"));
    FAIL("expected SymbolClash");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SymbolClash);
  }
}
