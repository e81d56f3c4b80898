#pragma once

// Presentation files:
//
//   # comment
//   alphabet: a > b > x1
//   ordering: deglex | tower(t, t^-1) | module-top
//   basis: y1 > y2            (modules only)
//   relations:
//   a*a - b
//   a*y1 - y2
//
// A line with a ':' starts a section; the relations section runs to the end
// of the file or the next section.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/module.hpp"
#include "gsb/ordering.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/word.hpp"

namespace gsb {

struct Presentation {
  Alphabet alphabet;
  Alphabet basis;  // empty unless the ordering is module-top
  OrderingSpec spec;
  std::vector<Polynomial> relations;
  std::vector<ModuleElement> module_relations;

  bool is_module() const noexcept { return spec.kind() == OrderingKind::ModuleTop; }

  ModulePresentation as_module() const {
    return {alphabet, basis, spec, module_relations};
  }
  static Presentation from_module(const ModulePresentation& m) {
    Presentation p;
    p.alphabet = m.alphabet;
    p.basis = m.basis;
    p.spec = m.spec;
    p.module_relations = m.relations;
    return p;
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

inline std::string_view strip_comment(std::string_view line) {
  if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
  return trim(line);
}

inline OrderingSpec parse_ordering(std::string_view text, const Alphabet& alphabet,
                                   const Alphabet& basis, bool has_basis) {
  text = trim(text);
  if (text == "deglex") return OrderingSpec::deg_lex(alphabet.size());
  if (text == "module-top") {
    if (!has_basis) {
      throw Error(ErrorCode::BasisMismatch, "module-top needs a basis section");
    }
    return OrderingSpec::module_top(alphabet.size(), basis.size());
  }
  if (text.starts_with("tower(") && text.ends_with(")")) {
    std::string_view inner = text.substr(6, text.size() - 7);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::SyntaxError, "tower(t, t^-1) needs two symbols");
    }
    return OrderingSpec::tower(alphabet, trim(inner.substr(0, comma)),
                               trim(inner.substr(comma + 1)));
  }
  throw Error(ErrorCode::SyntaxError, "unknown ordering '" + std::string(text) + "'");
}

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) {
  std::string alphabet_text;
  std::string ordering_text = "deglex";
  std::string basis_text;
  bool has_alphabet = false;
  bool has_basis = false;
  std::vector<std::pair<std::size_t, std::string>> relation_lines;
  bool in_relations = false;
  std::size_t lineno = 0;
  for (std::string_view raw : detail::split_lines(text)) {
    ++lineno;
    std::string_view line = detail::strip_comment(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (!in_relations) {
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) + " outside any section", lineno);
      }
      relation_lines.emplace_back(lineno, std::string(line));
      continue;
    }
    std::string_view key = detail::trim(line.substr(0, colon));
    std::string_view value = detail::trim(line.substr(colon + 1));
    in_relations = false;
    if (key == "alphabet") {
      alphabet_text = value;
      has_alphabet = true;
    } else if (key == "ordering") {
      ordering_text = value;
    } else if (key == "basis") {
      basis_text = value;
      has_basis = true;
    } else if (key == "relations") {
      if (!value.empty()) relation_lines.emplace_back(lineno, std::string(value));
      in_relations = true;
    } else {
      throw Error(ErrorCode::SyntaxError,
                  "unknown section '" + std::string(key) + "' on line " +
                      std::to_string(lineno),
                  lineno);
    }
  }
  if (!has_alphabet) throw Error(ErrorCode::SyntaxError, "missing alphabet section");
  Presentation p;
  p.alphabet = Alphabet::parse(alphabet_text);
  if (has_basis) p.basis = Alphabet::parse(basis_text);
  p.spec = detail::parse_ordering(ordering_text, p.alphabet, p.basis, has_basis);
  if (has_basis && !p.is_module()) {
    throw Error(ErrorCode::BasisMismatch, "basis section needs ordering module-top");
  }
  for (const auto& [no, line] : relation_lines) {
    try {
      if (p.is_module()) {
        auto m = parse_module_element(line, p.alphabet, p.basis);
        if (!m.is_zero()) p.module_relations.push_back(std::move(m));
      } else {
        auto f = parse_polynomial(line, p.alphabet);
        if (!f.is_zero()) p.relations.push_back(std::move(f));
      }
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(no) + ": " + e.what(), no);
    }
  }
  return p;
}

inline std::string write_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "alphabet: " << p.alphabet.to_string() << "\n";
  out << "ordering: " << p.spec.to_string(p.alphabet) << "\n";
  if (p.is_module()) out << "basis: " << p.basis.to_string() << "\n";
  out << "relations:\n";
  if (p.is_module()) {
    for (const auto& m : p.module_relations) {
      out << print_module_element(m, p.alphabet, p.basis, p.spec) << "\n";
    }
  } else {
    for (const auto& f : p.relations) {
      out << print_polynomial(f, p.alphabet, p.spec) << "\n";
    }
  }
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << content;
}

inline Presentation load_presentation(const std::string& path) {
  return parse_presentation(read_file(path));
}

/// Monic relations sorted by leading word, duplicates removed.
inline std::vector<Polynomial> normalize_relations(std::vector<Polynomial> rels,
                                                   const OrderingSpec& spec) {
  std::vector<Polynomial> out;
  for (auto& r : rels) {
    if (r.is_zero()) continue;
    Polynomial m = make_monic(r, spec);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return detail::compare_words(spec, leading(x, spec).word, leading(y, spec).word) < 0;
  });
  return out;
}

inline std::vector<ModuleElement> normalize_relations(std::vector<ModuleElement> rels,
                                                      const OrderingSpec& spec) {
  std::vector<ModuleElement> out;
  for (auto& r : rels) {
    if (r.is_zero()) continue;
    ModuleElement m = make_monic(r, spec);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return detail::compare_module_words(spec, leading(x, spec).word,
                                        leading(y, spec).word) < 0;
  });
  return out;
}

}  // namespace gsb
