#pragma once

// Text formats for builder inputs.
//
// Group table:
//   elements: g1 > g2
//   product: g1*g1 = g2        (1 is the identity)
//   inverse: g1 = g2
//
// Multiplication table with pairs for one simple-algebra stage:
//   basis: x1 > x2
//   product: x1*x2 = x1
//   pair: <f> | <g>              (letters default to X1_k, Y1_k)
//   pair: <f> | <g> | X1_3 | Y1_3

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/constructions.hpp"
#include "gsb/error.hpp"
#include "gsb/presentation.hpp"
#include "gsb/word.hpp"

namespace gsb {

namespace detail {

struct KeyLine {
  std::size_t lineno;
  std::string key;
  std::string value;
};

inline std::vector<KeyLine> key_lines(std::string_view text) {
  std::vector<KeyLine> out;
  std::size_t no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++no;
    std::string_view line = strip_comment(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(no) + ": expected 'key: value'", no);
    }
    out.push_back({no, std::string(trim(line.substr(0, colon))),
                   std::string(trim(line.substr(colon + 1)))});
  }
  return out;
}

inline std::pair<std::string, std::string> split_once(const std::string& s, char sep,
                                                      std::size_t lineno) {
  auto pos = s.find(sep);
  if (pos == std::string::npos) {
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(lineno) + ": missing '" + std::string(1, sep) + "'",
                lineno);
  }
  return {std::string(trim(std::string_view(s).substr(0, pos))),
          std::string(trim(std::string_view(s).substr(pos + 1)))};
}

inline std::vector<std::string> split_all(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(trim(std::string_view(s).substr(
        start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline GroupTable parse_group_table(std::string_view text) {
  GroupTable t;
  Alphabet elems;
  bool have = false;
  for (const auto& kl : detail::key_lines(text)) {
    if (kl.key == "elements") {
      elems = Alphabet::parse(kl.value);
      t.names = elems.symbols();
      t.product.assign(t.size(), std::vector<std::optional<std::size_t>>(t.size()));
      t.inverse.assign(t.size(), std::nullopt);
      have = true;
      continue;
    }
    if (!have) {
      throw Error(ErrorCode::SyntaxError, "elements must come first", kl.lineno);
    }
    auto element = [&](const std::string& name) -> std::size_t {
      if (name == "1") return 0;
      return elems.at(name) + 1;
    };
    if (kl.key == "product") {
      auto [lhs, rhs] = detail::split_once(kl.value, '=', kl.lineno);
      Word w = parse_word(lhs, elems);
      if (w.size() != 2) {
        throw Error(ErrorCode::SyntaxError, "product needs two factors", kl.lineno);
      }
      t.product[w[0]][w[1]] = element(rhs);
    } else if (kl.key == "inverse") {
      auto [lhs, rhs] = detail::split_once(kl.value, '=', kl.lineno);
      t.inverse[elems.at(lhs)] = element(rhs);
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown key '" + kl.key + "'", kl.lineno);
    }
  }
  if (!have) throw Error(ErrorCode::TableIncomplete, "missing elements line");
  return t;
}

struct SimpleStepFile {
  MultTable table;
  SimpleStepInput input;
};

inline SimpleStepFile parse_mult_table(std::string_view text) {
  SimpleStepFile out;
  bool have = false;
  for (const auto& kl : detail::key_lines(text)) {
    if (kl.key == "basis") {
      out.table.basis = Alphabet::parse(kl.value);
      have = true;
      continue;
    }
    if (!have) throw Error(ErrorCode::SyntaxError, "basis must come first", kl.lineno);
    if (kl.key == "product") {
      auto [lhs, rhs] = detail::split_once(kl.value, '=', kl.lineno);
      Word w = parse_word(lhs, out.table.basis);
      if (w.size() != 2) {
        throw Error(ErrorCode::SyntaxError, "product needs two factors", kl.lineno);
      }
      out.table.product[{w[0], w[1]}] = parse_polynomial(rhs, out.table.basis);
    } else if (kl.key == "pair") {
      auto parts = detail::split_all(kl.value, '|');
      if (parts.size() != 2 && parts.size() != 4) {
        throw Error(ErrorCode::SyntaxError, "pair needs 'f | g' or 'f | g | X | Y'",
                    kl.lineno);
      }
      std::size_t k = out.input.pairs.size() + 1;
      SimplePair p{parts[0], parts[1], "X1_" + std::to_string(k), "Y1_" + std::to_string(k)};
      if (parts.size() == 4) {
        p.x_name = parts[2];
        p.y_name = parts[3];
      }
      out.input.pairs.push_back(std::move(p));
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown key '" + kl.key + "'", kl.lineno);
    }
  }
  if (!have) throw Error(ErrorCode::TableIncomplete, "missing basis line");
  return out;
}

}  // namespace gsb
