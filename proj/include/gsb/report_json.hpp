#pragma once

// JSON forms of check and completion reports.
//
//   completion: {"status", "complete_degree", "processed", "input_size",
//                "added": [poly], "basis": [poly], "discarded",
//                "inputs_reduce_to_zero", "nontrivial": [entry]}
//   check:      {"status": "GSB" | "NotGSB" | "Partial", "total",
//                "checked", "skipped", "nontrivial": [entry]}
//   entry:      {"kind", "f", "g", "w", "a", "b", "residual"}
//
// Polynomials are written in the presentation syntax.

#include <json.hpp>

#include <span>
#include <string>

#include "gsb/completion.hpp"
#include "gsb/module.hpp"
#include "gsb/presentation.hpp"

namespace gsb {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json entry_json(const NontrivialComposition& n, const Presentation& p) {
  const auto& a = n.ambiguity;
  return Json{{"kind", std::string(to_string(a.kind))},
              {"f", a.f_index},
              {"g", a.g_index},
              {"w", print_word(a.w, p.alphabet)},
              {"a", print_word(a.a, p.alphabet)},
              {"b", print_word(a.b, p.alphabet)},
              {"residual", print_polynomial(n.residual, p.alphabet, p.spec)}};
}

inline Json entry_json(const BasicNontrivial<ModuleAmbiguity, ModuleElement>& n,
                       const Presentation& p) {
  const auto& a = n.ambiguity;
  return Json{{"kind", "inclusion"},
              {"f", a.f_index},
              {"g", a.g_index},
              {"w", print_module_word(a.w, p.alphabet, p.basis)},
              {"a", print_word(a.a, p.alphabet)},
              {"b", "1"},
              {"residual", print_module_element(n.residual, p.alphabet, p.basis, p.spec)}};
}

inline std::string print_element(const Polynomial& f, const Presentation& p) {
  return print_polynomial(f, p.alphabet, p.spec);
}
inline std::string print_element(const ModuleElement& m, const Presentation& p) {
  return print_module_element(m, p.alphabet, p.basis, p.spec);
}

}  // namespace detail

template <class Amb, class Element>
std::string check_status(const BasicCheckReport<Amb, Element>& r) {
  if (!r.nontrivial.empty()) return "NotGSB";
  return r.skipped == 0 ? "GSB" : "Partial";
}

template <class Amb, class Element>
Json check_json(const BasicCheckReport<Amb, Element>& r, const Presentation& p) {
  Json nontrivial = Json::array();
  for (const auto& n : r.nontrivial) nontrivial.push_back(detail::entry_json(n, p));
  return Json{{"status", check_status(r)},
              {"total", r.total},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"nontrivial", nontrivial}};
}

template <class Amb, class Element>
Json completion_json(const BasicCompletionReport<Amb, Element>& r,
                     const Presentation& p) {
  Json added = Json::array();
  for (const auto& f : r.added) added.push_back(detail::print_element(f, p));
  Json basis = Json::array();
  for (const auto& f : r.basis) basis.push_back(detail::print_element(f, p));
  Json nontrivial = Json::array();
  for (const auto& n : r.nontrivial_log) nontrivial.push_back(detail::entry_json(n, p));
  Json j{{"status", std::string(to_string(r.status))}};
  if (r.status == CompletionStatus::CompleteUpToDegree) {
    j["complete_degree"] = r.complete_degree;
  }
  j["processed"] = r.processed;
  j["input_size"] = r.input_size;
  j["added"] = added;
  j["basis"] = basis;
  j["discarded"] = r.discarded;
  j["inputs_reduce_to_zero"] = r.inputs_reduce_to_zero;
  j["nontrivial"] = nontrivial;
  return j;
}

}  // namespace gsb
