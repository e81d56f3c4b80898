#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "gsb/presentation.hpp"
#include "gsb/selftest.hpp"

using namespace gsb;

namespace {

ErrorCode parse_error(const char* text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse a deg-lex presentation") {
  auto p = parse_presentation(
      "# comment\nalphabet: a > b\nordering: deglex\nrelations:\na*a - b  # trailing\n\n");
  CHECK(p.alphabet.size() == 2);
  CHECK(p.spec.kind() == OrderingKind::DegLex);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0] == parse_polynomial("a*a - b", p.alphabet));
  CHECK_FALSE(p.is_module());
}

TEST_CASE("ordering defaults to deg-lex and relations may share the header line") {
  auto p = parse_presentation("alphabet: x > y\nrelations: x*y - y*x\ny*y - 1\n");
  CHECK(p.spec.kind() == OrderingKind::DegLex);
  CHECK(p.relations.size() == 2);
}

TEST_CASE("tower and module orderings") {
  auto t = parse_presentation("alphabet: t > t^-1 > a\nordering: tower(t, t^-1)\n");
  CHECK(t.spec.kind() == OrderingKind::Tower);
  auto m = parse_presentation(
      "alphabet: a > b\nordering: module-top\nbasis: y1 > y2\nrelations:\na*y1 - y2\n");
  CHECK(m.is_module());
  CHECK(m.module_relations.size() == 1);
  CHECK(m.relations.empty());
}

TEST_CASE("presentation errors") {
  CHECK(parse_error("alphabet: a\ncolour: red\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("a*a\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("relations:\na\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("alphabet: a\nordering: module-top\n") == ErrorCode::BasisMismatch);
  CHECK(parse_error("alphabet: a\nbasis: y\n") == ErrorCode::BasisMismatch);
  CHECK(parse_error("alphabet: a\nordering: random\n") == ErrorCode::SyntaxError);
  CHECK(parse_error("alphabet: a\nordering: tower(t, t^-1)\n") ==
        ErrorCode::TowerSymbolMissing);
  CHECK(parse_error("alphabet: a\nrelations:\na*c\n") == ErrorCode::UnknownSymbol);
  try {
    parse_presentation("alphabet: a\nrelations:\na\na +\n");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.detail() == std::size_t{4});
  }
}

TEST_CASE("write then parse round-trips random presentations") {
  std::mt19937_64 rng(107);
  for (int k = 0; k < 200; ++k) {
    Presentation p;
    p.alphabet = Alphabet::parse("x > y > z");
    p.spec = OrderingSpec::deg_lex(3);
    p.relations = selftest::random_relations(rng, p.spec, 4, 4);
    auto q = parse_presentation(write_presentation(p));
    REQUIRE(q == p);
  }
  auto m = parse_presentation(
      "alphabet: a > b\nordering: module-top\nbasis: y1 > y2\nrelations:\n1/2*a*y1 - b*y2\n");
  CHECK(parse_presentation(write_presentation(m)) == m);
  auto t = parse_presentation(
      "alphabet: t > t^-1 > a\nordering: tower(t, t^-1)\nrelations:\na*t - t*a\n");
  CHECK(parse_presentation(write_presentation(t)) == t);
}

TEST_CASE("normalization makes relations monic, unique and sorted") {
  Alphabet ab = Alphabet::parse("a > b");
  auto s = OrderingSpec::deg_lex(2);
  std::vector<Polynomial> in{parse_polynomial("2*a*a - 2*b", ab), parse_polynomial("b*a - 1", ab),
                             parse_polynomial("a*a - b", ab), Polynomial()};
  auto out = normalize_relations(in, s);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == parse_polynomial("b*a - 1", ab));
  CHECK(out[1] == parse_polynomial("a*a - b", ab));
}

TEST_CASE("file input and output") {
  auto dir = std::filesystem::temp_directory_path() / "gsb_presentation_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "p.pres").string();
  auto p = parse_presentation("alphabet: a > b\nrelations:\na*b - b*a\n");
  write_file(path, write_presentation(p));
  CHECK(load_presentation(path) == p);
  try {
    load_presentation((dir / "missing.pres").string());
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
  std::filesystem::remove_all(dir);
}
