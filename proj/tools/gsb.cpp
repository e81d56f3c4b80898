// gsb: command-line front end.
//
// Exit codes: 0 success or certified, 2 not a GSB / nontrivial
// compositions / failed check, 1 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "gsb/gsb.hpp"
#include "gsb/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNotGsb = 2;

std::size_t oracle_capacity() {
  if (const char* env = std::getenv("GSB_MAX_WORDS")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw gsb::Error(gsb::ErrorCode::InvalidArgument, "GSB_MAX_WORDS must be a number");
    }
  }
  return gsb::kDefaultOracleCapacity;
}

gsb::Presentation load(const std::string& path, bool module) {
  auto p = gsb::load_presentation(path);
  if (module && !p.is_module()) {
    throw gsb::Error(gsb::ErrorCode::BasisMismatch, path + " is not a module presentation");
  }
  return p;
}

void print_json(const gsb::Json& j) { std::cout << j.dump(2) << "\n"; }

template <class Report>
void print_check_text(const Report& r, const gsb::Presentation& p) {
  std::cout << gsb::check_status(r) << ": " << r.total << " ambiguities, " << r.checked
            << " checked, " << r.skipped << " skipped, " << r.nontrivial.size()
            << " nontrivial\n";
  auto j = gsb::check_json(r, p);
  for (const auto& e : j["nontrivial"]) {
    std::cout << "  " << e["kind"].template get<std::string>() << " (" << e["f"].template get<std::size_t>()
              << ", " << e["g"].template get<std::size_t>() << ") w = " << e["w"].template get<std::string>()
              << ": " << e["residual"].template get<std::string>() << "\n";
  }
}

template <class Report>
void print_completion_text(const Report& r, const gsb::Presentation& p) {
  std::cout << "status: " << gsb::to_string(r.status);
  if (r.status == gsb::CompletionStatus::CompleteUpToDegree) {
    std::cout << " (degree " << r.complete_degree << ")";
  }
  std::cout << "\nprocessed: " << r.processed << "\nadded: " << r.added.size() << "\n";
  for (const auto& f : r.added) std::cout << "  " << gsb::detail::print_element(f, p) << "\n";
  std::cout << "basis:\n";
  for (const auto& f : r.basis) std::cout << "  " << gsb::detail::print_element(f, p) << "\n";
}

struct Options {
  std::string file;
  std::string out;
  std::string cert;
  std::string poly;
  std::string alphabet;
  std::size_t max_deg = 12;
  std::optional<std::size_t> check_deg;
  std::size_t max_steps = 10000;
  std::size_t max_len = 6;
  std::size_t bound = 2;
  std::size_t n = 1;
  std::size_t m_bound = 1;
  std::size_t n_bound = 1;
  std::size_t cyclic = 0;
  unsigned threads = 1;
  bool json = false;
  bool trace = false;
  bool module = false;
  bool bracket = false;
  bool count_only = false;
};

int cmd_complete(const Options& o) {
  auto p = load(o.file, o.module);
  gsb::CompletionLimits limits{o.max_deg, o.max_steps};
  auto emit = [&](const auto& r, auto basis_setter) {
    if (o.json) {
      print_json(gsb::completion_json(r, p));
    } else {
      print_completion_text(r, p);
    }
    if (!o.out.empty()) {
      gsb::Presentation q = p;
      basis_setter(q, r.basis);
      gsb::write_file(o.out, gsb::write_presentation(q));
    }
    return r.status == gsb::CompletionStatus::CertifiedGSB ? kOk : kNotGsb;
  };
  if (p.is_module()) {
    auto r = gsb::module_complete(p.module_relations, p.spec, limits);
    return emit(r, [](gsb::Presentation& q, const auto& b) { q.module_relations = b; });
  }
  auto r = gsb::shirshov_complete(p.relations, p.spec, limits);
  return emit(r, [](gsb::Presentation& q, const auto& b) { q.relations = b; });
}

int cmd_check(const Options& o) {
  auto p = load(o.file, o.module);
  auto emit = [&](const auto& r) {
    if (o.json) {
      print_json(gsb::check_json(r, p));
    } else {
      print_check_text(r, p);
    }
    return r.is_certificate() ? kOk : kNotGsb;
  };
  if (p.is_module()) return emit(gsb::check_module_gsb(p.module_relations, p.spec, o.check_deg));
  return emit(gsb::check_gsb(p.relations, p.spec, o.check_deg, o.threads));
}

int cmd_nf(const Options& o) {
  auto p = load(o.file, o.module);
  if (p.is_module()) {
    auto m = gsb::parse_module_element(o.poly, p.alphabet, p.basis);
    auto nf = gsb::module_nf(m, p.module_relations, p.spec);
    std::string text = gsb::print_module_element(nf, p.alphabet, p.basis, p.spec);
    if (o.json) {
      print_json(gsb::Json{{"input", o.poly}, {"nf", text}});
    } else {
      std::cout << text << "\n";
    }
    return kOk;
  }
  auto f = gsb::parse_polynomial(o.poly, p.alphabet);
  auto r = gsb::normal_form(f, p.relations, p.spec, o.trace);
  std::string text = gsb::print_polynomial(r.nf, p.alphabet, p.spec);
  if (o.json) {
    gsb::Json j{{"input", o.poly}, {"nf", text}};
    if (r.trace) {
      gsb::Json steps = gsb::Json::array();
      for (const auto& s : r.trace->steps) {
        steps.push_back({{"rule", s.rule},
                         {"coefficient", s.coefficient.get_str()},
                         {"left", gsb::print_word(s.left, p.alphabet)},
                         {"right", gsb::print_word(s.right, p.alphabet)},
                         {"rewritten", gsb::print_word(s.rewritten, p.alphabet)}});
      }
      j["trace"] = steps;
    }
    print_json(j);
  } else {
    if (r.trace) {
      for (const auto& s : r.trace->steps) {
        std::cout << "  " << gsb::print_word(s.rewritten, p.alphabet) << "  by "
                  << s.coefficient.get_str() << " * " << gsb::print_word(s.left, p.alphabet)
                  << " . s" << s.rule << " . " << gsb::print_word(s.right, p.alphabet)
                  << "\n";
      }
    }
    std::cout << text << "\n";
  }
  return kOk;
}

int cmd_irr(const Options& o) {
  auto p = load(o.file, o.module);
  gsb::Json words = gsb::Json::array();
  if (p.is_module()) {
    for (const auto& w : gsb::module_irr(p.module_relations, p.spec, o.max_deg)) {
      words.push_back(gsb::print_module_word(w, p.alphabet, p.basis));
    }
  } else {
    for (const auto& w : gsb::irr_words(p.relations, p.spec, o.max_deg)) {
      words.push_back(gsb::print_word(w, p.alphabet));
    }
  }
  if (o.json) {
    print_json(gsb::Json{{"max_deg", o.max_deg}, {"count", words.size()}, {"words", words}});
  } else if (o.count_only) {
    std::cout << words.size() << "\n";
  } else {
    for (const auto& w : words) std::cout << w.get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_dim(const Options& o) {
  auto p = load(o.file, false);
  if (p.is_module()) {
    throw gsb::Error(gsb::ErrorCode::InvalidArgument, "dim works on algebra presentations");
  }
  auto d = gsb::quotient_dim_oracle(p.relations, p.spec, o.max_deg, oracle_capacity());
  if (o.json) {
    print_json(gsb::Json{{"max_deg", o.max_deg}, {"dim", d}});
  } else {
    std::cout << d << "\n";
  }
  return kOk;
}

int cmd_lyndon(const Options& o) {
  auto a = gsb::Alphabet::parse(o.alphabet);
  if (a.empty()) throw gsb::Error(gsb::ErrorCode::InvalidArgument, "empty alphabet");
  auto words = gsb::alsw_up_to(a.size(), o.max_len);
  if (o.count_only) {
    std::vector<std::size_t> counts(o.max_len + 1, 0);
    for (const auto& w : words) ++counts[w.size()];
    for (std::size_t len = 1; len <= o.max_len; ++len) {
      std::cout << len << " " << counts[len] << "\n";
    }
    return kOk;
  }
  for (const auto& w : words) {
    std::cout << gsb::print_word(w, a);
    if (o.bracket) std::cout << "  " << gsb::std_bracketing(w).to_string(a);
    std::cout << "\n";
  }
  return kOk;
}

template <class Construction>
int finish_construction(const Construction& c, const Options& o) {
  const auto& p = c.presentation;
  std::string text = gsb::write_presentation(p);
  auto cert = gsb::check_json(c.certificate, p);
  cert["embedding_witness"] = c.embedding_witness;
  if (o.out.empty()) {
    std::cout << text;
  } else {
    gsb::write_file(o.out, text);
    gsb::write_file(o.cert.empty() ? o.out + ".cert.json" : o.cert, cert.dump(2) + "\n");
  }
  std::cerr << "certificate: " << cert["status"].template get<std::string>() << ", "
            << c.certificate.total << " ambiguities, " << c.certificate.nontrivial.size()
            << " nontrivial\n";
  return c.certificate.is_certificate() ? kOk : kNotGsb;
}

int cmd_construct(const std::string& kind, const Options& o) {
  if (kind == "hnn") {
    gsb::GroupTable t = o.cyclic > 0 ? gsb::GroupTable::cyclic(o.cyclic)
                                     : gsb::parse_group_table(gsb::read_file(o.file));
    return finish_construction(gsb::build_hnn(t, o.bound), o);
  }
  if (kind == "malcev") {
    return finish_construction(gsb::build_malcev(load(o.file, false), o.n), o);
  }
  if (kind == "simple") {
    auto f = gsb::parse_mult_table(gsb::read_file(o.file));
    return finish_construction(gsb::build_simple_step(f.table, f.input, o.m_bound, o.n_bound), o);
  }
  if (kind == "module-cyclic") {
    return finish_construction(gsb::build_module_cyclic(load(o.file, true).as_module(), o.n), o);
  }
  if (kind == "lie-words") {
    gsb::Alphabet ab = gsb::Alphabet::parse("a > b");
    for (const auto& [w, b] : gsb::bracket_embedding_words(o.n)) {
      std::cout << gsb::print_word(w, ab) << "  " << b.to_string(ab) << "\n";
    }
    return kOk;
  }
  throw gsb::Error(gsb::ErrorCode::InvalidArgument, "unknown construction '" + kind + "'");
}

int cmd_selftest() {
  bool all = true;
  for (const auto& r : gsb::selftest::run_all()) {
    std::cout << gsb::selftest::format(r) << std::endl;
    all = all && r.passed;
  }
  return all ? kOk : kNotGsb;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov bases: completion, normal forms and embedding constructions"};
  app.require_subcommand(1);
  Options o;
  std::string construct_kind;

  auto common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "presentation file")->required();
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_flag("--module", o.module, "require a module presentation");
  };

  auto* complete = app.add_subcommand("complete", "Shirshov completion");
  common(complete, true);
  complete->add_option("--max-deg", o.max_deg, "degree limit")->check(CLI::PositiveNumber);
  complete->add_option("--max-steps", o.max_steps, "step limit")->check(CLI::PositiveNumber);
  complete->add_option("--threads", o.threads, "worker cap");
  complete->add_option("-o,--output", o.out, "write the completed presentation");

  auto* check = app.add_subcommand("check", "evaluate every composition");
  common(check, true);
  check->add_option("--max-deg", o.check_deg, "only ambiguities up to this degree");
  check->add_option("--threads", o.threads, "worker cap")->check(CLI::PositiveNumber);

  auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
  common(nf, true);
  nf->add_option("--poly", o.poly, "polynomial or module element")->required();
  nf->add_flag("--trace", o.trace, "print the reduction steps");

  auto* irr = app.add_subcommand("irr", "irreducible words");
  common(irr, true);
  irr->add_option("--max-deg", o.max_deg, "degree bound")->required();
  irr->add_flag("--count-only", o.count_only, "print only the count");

  auto* dim = app.add_subcommand("dim", "quotient dimension by linear algebra");
  common(dim, true);
  dim->add_option("--max-deg", o.max_deg, "degree bound")->required();

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon-Shirshov words");
  lyndon->add_option("--alphabet", o.alphabet, "letters, greatest first, e.g. \"x2>x1\"")
      ->required();
  lyndon->add_option("--max-len", o.max_len, "maximum length")->check(CLI::PositiveNumber);
  lyndon->add_flag("--bracket", o.bracket, "print standard bracketings");
  lyndon->add_flag("--count-only", o.count_only, "print counts per length");

  auto* construct = app.add_subcommand("construct", "build an embedding presentation");
  construct->add_option("kind", construct_kind, "hnn|malcev|simple|module-cyclic|lie-words")
      ->required()
      ->check(CLI::IsMember({"hnn", "malcev", "simple", "module-cyclic", "lie-words"}));
  construct->add_option("file", o.file, "input table or presentation");
  construct->add_option("-o,--output", o.out, "output presentation file");
  construct->add_option("--cert", o.cert, "certificate path (default <output>.cert.json)");
  construct->add_option("--index-bound", o.bound, "hnn: index bound");
  construct->add_option("--cyclic", o.cyclic, "hnn: use the cyclic group of this order");
  construct->add_option("-n,--n", o.n, "malcev, module-cyclic: relation count; lie-words: i_max");
  construct->add_option("--m-bound", o.m_bound, "simple: bound on m");
  construct->add_option("--n-bound", o.n_bound, "simple: bound on n");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*complete) return cmd_complete(o);
    if (*check) return cmd_check(o);
    if (*nf) return cmd_nf(o);
    if (*irr) return cmd_irr(o);
    if (*dim) return cmd_dim(o);
    if (*lyndon) return cmd_lyndon(o);
    if (*construct) {
      if (construct_kind != "lie-words" && o.file.empty() &&
          !(construct_kind == "hnn" && o.cyclic > 0)) {
        std::cerr << "error: construct " << construct_kind << " needs an input file\n";
        return kUsage;
      }
      return cmd_construct(construct_kind, o);
    }
    if (*selftest) return cmd_selftest();
  } catch (const gsb::Error& e) {
    std::cerr << "error [" << gsb::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == gsb::ErrorCode::CertificationFailed ? kNotGsb : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
