#pragma once

// Compositions (noncommutative critical pairs), triviality checks, Shirshov
// completion and certification of Groebner-Shirshov bases.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "gsb/error.hpp"
#include "gsb/ordering.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/word.hpp"

namespace gsb {

enum class AmbiguityKind { Intersection, Inclusion };

constexpr std::string_view to_string(AmbiguityKind k) noexcept {
  return k == AmbiguityKind::Intersection ? "intersection" : "inclusion";
}

/// Intersection: w = lead(f)·b = a·lead(g), proper overlap.
/// Inclusion:    w = lead(f) = a·lead(g)·b.
struct Ambiguity {
  AmbiguityKind kind = AmbiguityKind::Intersection;
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  Word w;
  Word a;
  Word b;
  friend bool operator==(const Ambiguity&, const Ambiguity&) = default;
};

namespace detail {

struct Overlap {
  AmbiguityKind kind;
  std::size_t a_len;  // |a|
};

/// Ways the leading words f, g collide, for the ordered pair (f, g).
/// `same` marks f and g as one relation; `report_equal` selects the
/// orientation that reports an equal-leading-word inclusion.
inline std::vector<Overlap> overlaps(const Word& f, const Word& g, bool same,
                                     bool report_equal) {
  std::vector<Overlap> out;
  if (f.empty() || g.empty()) {
    // A constant relation makes the whole algebra trivial; report it once
    // as an inclusion at the front of f.
    if (g.empty() && !same && (!f.empty() || report_equal)) {
      out.push_back({AmbiguityKind::Inclusion, 0});
    }
    return out;
  }
  // Proper overlaps: suffix of f of length k equals prefix of g.
  for (std::size_t k = 1; k < f.size() && k < g.size(); ++k) {
    if (std::equal(f.end() - static_cast<std::ptrdiff_t>(k), f.end(),
                   g.begin())) {
      out.push_back({AmbiguityKind::Intersection, f.size() - k});
    }
  }
  if (!same) {
    if (g.size() < f.size()) {
      for (std::size_t i = 0; i + g.size() <= f.size(); ++i) {
        if (f.matches_at(g, i)) out.push_back({AmbiguityKind::Inclusion, i});
      }
    } else if (g == f && report_equal) {
      out.push_back({AmbiguityKind::Inclusion, 0});
    }
  }
  return out;
}

inline Ambiguity make_ambiguity(const Word& f, const Word& g, std::size_t fi,
                                std::size_t gi, const Overlap& o) {
  Ambiguity amb;
  amb.kind = o.kind;
  amb.f_index = fi;
  amb.g_index = gi;
  if (o.kind == AmbiguityKind::Intersection) {
    std::size_t k = f.size() - o.a_len;
    amb.a = f.prefix(o.a_len);
    amb.b = g.suffix_from(k);
    amb.w = concat(f, amb.b);
  } else {
    amb.w = f;
    amb.a = f.prefix(o.a_len);
    amb.b = f.suffix_from(std::min(f.size(), o.a_len + g.size()));
  }
  return amb;
}

inline std::vector<Word> leading_words(std::span<const Polynomial> relations,
                                       const OrderingSpec& spec) {
  std::vector<Word> leads;
  leads.reserve(relations.size());
  for (std::size_t i = 0; i < relations.size(); ++i) {
    auto lt = leading(relations[i], spec);
    if (lt.coeff != 1) {
      throw Error(ErrorCode::NonMonicRelation,
                  "relation " + std::to_string(i) + " is not monic", i);
    }
    leads.push_back(std::move(lt.word));
  }
  return leads;
}

}  // namespace detail

/// Every ambiguity among the relations, sorted by (w, f_index, g_index).
inline std::vector<Ambiguity> find_ambiguities(
    std::span<const Polynomial> relations, const OrderingSpec& spec) {
  auto leads = detail::leading_words(relations, spec);
  std::vector<Ambiguity> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    for (std::size_t j = 0; j < leads.size(); ++j) {
      for (const auto& o : detail::overlaps(leads[i], leads[j], i == j, i < j)) {
        out.push_back(detail::make_ambiguity(leads[i], leads[j], i, j, o));
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const Ambiguity& x, const Ambiguity& y) {
    if (auto c = detail::compare_words(spec, x.w, y.w); c != 0) return c < 0;
    return std::tie(x.f_index, x.g_index, x.kind, x.a) <
           std::tie(y.f_index, y.g_index, y.kind, y.a);
  });
  return out;
}

/// (f, g)_w: f·b - a·g for intersections, f - a·g·b for inclusions.
inline Polynomial composition(const Polynomial& f, const Polynomial& g,
                              const Ambiguity& amb, const OrderingSpec& spec) {
  auto lf = leading(f, spec);
  auto lg = leading(g, spec);
  if (lf.coeff != 1 || lg.coeff != 1) {
    throw Error(ErrorCode::NonMonicRelation, "composition needs monic inputs");
  }
  if (amb.kind == AmbiguityKind::Intersection) {
    if (concat(lf.word, amb.b) != amb.w || concat(amb.a, lg.word) != amb.w ||
        lf.word.size() + lg.word.size() <= amb.w.size()) {
      throw Error(ErrorCode::MalformedAmbiguity,
                  "intersection does not reassemble");
    }
    return multiply(Word(), f, amb.b) - multiply(amb.a, g, Word());
  }
  if (lf.word != amb.w || concat(amb.a, lg.word, amb.b) != amb.w) {
    throw Error(ErrorCode::MalformedAmbiguity, "inclusion does not reassemble");
  }
  return f - multiply(amb.a, g, amb.b);
}

/// h is trivial modulo (S, w) iff it reduces to zero; every reduction step
/// uses a multiple whose leading word is at most lead(h) < w.
inline bool is_trivial(const Polynomial& h, std::span<const Polynomial> relations,
                       const Word& w, const OrderingSpec& spec) {
  if (h.is_zero()) return true;
  if (detail::compare_words(spec, leading(h, spec).word, w) >= 0) {
    throw Error(ErrorCode::LeadingNotBelowW,
                "leading word of the composition is not below w");
  }
  return Rewriter(relations, spec).reduce(h).is_zero();
}

template <class Amb, class Element>
struct BasicNontrivial {
  Amb ambiguity;
  Element residual;
};

template <class Amb, class Element>
struct BasicCheckReport {
  std::size_t total = 0;    // ambiguities found
  std::size_t checked = 0;  // ambiguities evaluated
  std::size_t skipped = 0;  // above the degree bound
  std::vector<BasicNontrivial<Amb, Element>> nontrivial;
  /// Every ambiguity was evaluated and all reduced to zero.
  bool is_certificate() const noexcept {
    return nontrivial.empty() && skipped == 0;
  }
};

using NontrivialComposition = BasicNontrivial<Ambiguity, Polynomial>;
using CheckReport = BasicCheckReport<Ambiguity, Polynomial>;

/// Evaluates every ambiguity (only deg(w) <= max_deg if given). Reductions
/// run on up to `threads` workers; the report order is the ambiguity order.
inline CheckReport check_gsb(std::span<const Polynomial> relations,
                             const OrderingSpec& spec,
                             std::optional<std::size_t> max_deg = std::nullopt,
                             unsigned threads = 1) {
  auto ambs = find_ambiguities(relations, spec);
  Rewriter rw(relations, spec);
  CheckReport report;
  report.total = ambs.size();
  std::vector<const Ambiguity*> todo;
  for (const auto& a : ambs) {
    if (max_deg && a.w.size() > *max_deg) {
      ++report.skipped;
    } else {
      todo.push_back(&a);
    }
  }
  report.checked = todo.size();
  std::vector<Polynomial> residuals(todo.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < todo.size(); i += step) {
      const Ambiguity& a = *todo[i];
      residuals[i] = rw.reduce(composition(relations[a.f_index],
                                           relations[a.g_index], a, spec));
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::max<std::size_t>(1, todo.size()))));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < todo.size(); ++i) {
    if (!residuals[i].is_zero()) {
      report.nontrivial.push_back({*todo[i], std::move(residuals[i])});
    }
  }
  return report;
}

enum class CompletionStatus { CertifiedGSB, CompleteUpToDegree, BudgetExhausted };

constexpr std::string_view to_string(CompletionStatus s) noexcept {
  switch (s) {
    case CompletionStatus::CertifiedGSB: return "CertifiedGSB";
    case CompletionStatus::CompleteUpToDegree: return "CompleteUpToDegree";
    case CompletionStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "BudgetExhausted";
}

struct CompletionLimits {
  std::size_t max_deg = 12;
  std::size_t max_steps = 10000;
};

template <class Amb, class Element>
struct BasicCompletionReport {
  std::size_t input_size = 0;
  std::vector<Element> added;    // monic residuals, in order of addition
  std::size_t processed = 0;     // ambiguities evaluated
  CompletionStatus status = CompletionStatus::BudgetExhausted;
  std::size_t complete_degree = 0;  // meaningful for CompleteUpToDegree
  std::vector<BasicNontrivial<Amb, Element>> nontrivial_log;
  std::vector<Element> basis;    // final set, sorted by leading word
  std::size_t discarded = 0;     // relations removed by inter-reduction
  /// Every input relation and every discarded relation reduces to zero
  /// against the final basis.
  bool inputs_reduce_to_zero = false;
};

using CompletionReport = BasicCompletionReport<Ambiguity, Polynomial>;

namespace detail {

/// Shared driver for associative and module completion. `Traits` supplies
/// the element type, leading-word access, reduction and ambiguity search.
template <class Traits>
class Completer {
 public:
  using Element = typename Traits::Element;
  using Key = typename Element::key_type;
  using Amb = typename Traits::Ambiguity;
  using Report = BasicCompletionReport<Amb, Element>;

  Completer(const OrderingSpec& spec, CompletionLimits limits)
      : spec_(spec), limits_(limits), pending_(PendingLess{&spec_}) {}

  Report run(std::span<const Element> input) {
    Report report;
    report.input_size = input.size();
    for (const auto& p : input) {
      if (p.is_zero()) continue;
      Element m = make_monic(p, spec_);
      if (std::none_of(basis_.begin(), basis_.end(),
                       [&](const Entry& e) { return e.p == m; })) {
        add_entry(std::move(m));
      }
    }
    removed_.clear();
    inter_reduce_all(report);
    for (std::size_t i = 0; i < basis_.size(); ++i) enqueue_for(i);

    std::size_t steps = 0;
    while (true) {
      auto next = pop_eligible();
      if (!next) {
        // Final sweep: re-evaluate everything against the final set so the
        // status reflects this basis and not earlier snapshots.
        auto polys = current();
        auto ambs = Traits::find(polys, spec_);
        typename Traits::Rewriter rw(polys, spec_);
        bool clean = true;
        bool above = false;
        for (const auto& a : ambs) {
          Element h = rw.reduce(Traits::compose(polys, a, spec_));
          if (h.is_zero()) continue;
          if (Traits::degree(a) > limits_.max_deg) {
            above = true;
            continue;
          }
          if (steps >= limits_.max_steps) {
            report.status = CompletionStatus::BudgetExhausted;
            return finish(report);
          }
          ++steps;
          ++report.processed;
          accept(report, a, std::move(h));
          clean = false;
          break;
        }
        if (!clean) continue;
        report.status = above ? CompletionStatus::CompleteUpToDegree
                              : CompletionStatus::CertifiedGSB;
        report.complete_degree = limits_.max_deg;
        return finish(report);
      }
      if (steps >= limits_.max_steps) {
        report.status = CompletionStatus::BudgetExhausted;
        return finish(report);
      }
      ++steps;
      ++report.processed;
      auto polys = current();
      Amb a = Traits::make(polys, index_of(next->f_id), index_of(next->g_id),
                           next->overlap, lead_of(next->f_id), lead_of(next->g_id));
      Element h = typename Traits::Rewriter(polys, spec_)
                      .reduce(Traits::compose(polys, a, spec_));
      if (!h.is_zero()) accept(report, a, std::move(h));
    }
  }

 private:
  struct Entry {
    Element p;
    Key lead;
    std::uint64_t id;
  };
  struct Pending {
    Key w;
    std::uint64_t f_id;
    std::uint64_t g_id;
    typename Traits::Overlap overlap;
  };
  struct PendingLess {
    const OrderingSpec* spec;
    bool operator()(const Pending& x, const Pending& y) const {
      if (auto c = compare_keys(*spec, x.w, y.w); c != 0) return c < 0;
      return std::tie(x.f_id, x.g_id, x.overlap) <
             std::tie(y.f_id, y.g_id, y.overlap);
    }
  };

  std::vector<Element> current() const {
    std::vector<Element> v;
    v.reserve(basis_.size());
    for (const auto& e : basis_) v.push_back(e.p);
    return v;
  }

  std::size_t index_of(std::uint64_t id) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].id == id) return i;
    }
    return basis_.size();
  }
  const Key& lead_of(std::uint64_t id) const { return basis_[index_of(id)].lead; }
  bool alive(std::uint64_t id) const { return index_of(id) < basis_.size(); }

  void add_entry(Element p) {
    Key lead = leading(p, spec_).word;
    Entry e{std::move(p), std::move(lead), next_id_++};
    auto pos = std::upper_bound(
        basis_.begin(), basis_.end(), e, [&](const Entry& x, const Entry& y) {
          return compare_keys(spec_, x.lead, y.lead) < 0;
        });
    basis_.insert(pos, std::move(e));
  }

  void enqueue_for(std::size_t i) {
    const Entry& e = basis_[i];
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      const Entry& o = basis_[j];
      const bool same = i == j;
      for (const auto& ov : Traits::overlaps(e.lead, o.lead, same, e.id < o.id)) {
        pending_.insert({Traits::ambiguity_word(e.lead, o.lead, ov), e.id, o.id, ov});
      }
      if (same) continue;
      for (const auto& ov : Traits::overlaps(o.lead, e.lead, false, o.id < e.id)) {
        pending_.insert({Traits::ambiguity_word(o.lead, e.lead, ov), o.id, e.id, ov});
      }
    }
  }

  std::optional<Pending> pop_eligible() {
    for (auto it = pending_.begin(); it != pending_.end();) {
      if (!alive(it->f_id) || !alive(it->g_id)) {
        it = pending_.erase(it);
        continue;
      }
      if (it->w.degree() > limits_.max_deg) {
        ++it;
        continue;
      }
      Pending p = *it;
      pending_.erase(it);
      return p;
    }
    return std::nullopt;
  }

  void accept(Report& report, const Amb& a, Element h) {
    Element m = make_monic(h, spec_);
    report.nontrivial_log.push_back({a, h});
    report.added.push_back(m);
    add_entry(m);
    const std::uint64_t id = next_id_ - 1;
    inter_reduce_after(report, id);
  }

  /// Reduces relation i by all the others; returns true if it changed.
  bool reduce_one(Report& report, std::size_t i, std::vector<std::uint64_t>& changed) {
    std::vector<Element> others;
    others.reserve(basis_.size() - 1);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (j != i) others.push_back(basis_[j].p);
    }
    Element r = typename Traits::Rewriter(others, spec_).reduce(basis_[i].p);
    if (r == basis_[i].p) return false;
    removed_.push_back(basis_[i].p);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    ++report.discarded;
    if (!r.is_zero()) {
      add_entry(make_monic(r, spec_));
      changed.push_back(next_id_ - 1);
    }
    return true;
  }

  void inter_reduce_all(Report& report) {
    std::vector<std::uint64_t> changed;
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (reduce_one(report, i, changed)) {
          again = true;
          break;
        }
      }
    }
  }

  /// After adding `id`, reduce every relation that mentions a newly
  /// introduced leading word, cascading through replacements.
  void inter_reduce_after(Report& report, std::uint64_t id) {
    std::vector<std::uint64_t> queue{id};
    while (!queue.empty()) {
      std::uint64_t cur = queue.back();
      queue.pop_back();
      if (!alive(cur)) continue;
      enqueue_for(index_of(cur));
      Key lead = lead_of(cur);
      bool restart = true;
      while (restart) {
        restart = false;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
          if (basis_[i].id == cur) continue;
          bool touched = false;
          for (const auto& [k, c] : basis_[i].p) {
            if (Traits::divides(lead, k)) {
              touched = true;
              break;
            }
          }
          if (touched && reduce_one(report, i, queue)) {
            restart = true;
            break;
          }
        }
      }
    }
  }

  Report finish(Report& report) {
    auto polys = current();
    typename Traits::Rewriter rw(polys, spec_);
    bool ok = true;
    for (const auto& p : removed_) ok = ok && rw.reduce(p).is_zero();
    report.basis = std::move(polys);
    report.inputs_reduce_to_zero = ok;
    return report;
  }

 public:
  /// Inputs are checked separately from discarded relations.
  static bool all_reduce(std::span<const Element> input,
                         std::span<const Element> basis,
                         const OrderingSpec& spec) {
    typename Traits::Rewriter rw(basis, spec);
    for (const auto& p : input) {
      if (!rw.reduce(p).is_zero()) return false;
    }
    return true;
  }

 private:
  OrderingSpec spec_;
  CompletionLimits limits_;
  std::vector<Entry> basis_;
  std::set<Pending, PendingLess> pending_;
  std::vector<Element> removed_;
  std::uint64_t next_id_ = 0;
};

struct AssociativeTraits {
  using Element = Polynomial;
  using Ambiguity = gsb::Ambiguity;
  using Overlap = std::pair<int, std::size_t>;  // (kind, |a|)
  using Rewriter = gsb::Rewriter;

  static std::vector<Overlap> overlaps(const Word& f, const Word& g, bool same,
                                       bool report_equal) {
    std::vector<Overlap> out;
    for (const auto& o : detail::overlaps(f, g, same, report_equal)) {
      out.emplace_back(static_cast<int>(o.kind), o.a_len);
    }
    return out;
  }
  static Word ambiguity_word(const Word& f, const Word& g, const Overlap& o) {
    return detail::make_ambiguity(
               f, g, 0, 0, {static_cast<AmbiguityKind>(o.first), o.second})
        .w;
  }
  static Ambiguity make(std::span<const Polynomial>, std::size_t fi,
                        std::size_t gi, const Overlap& o, const Word& f,
                        const Word& g) {
    return detail::make_ambiguity(
        f, g, fi, gi, {static_cast<AmbiguityKind>(o.first), o.second});
  }
  static std::vector<Ambiguity> find(std::span<const Polynomial> s,
                                     const OrderingSpec& spec) {
    return find_ambiguities(s, spec);
  }
  static Polynomial compose(std::span<const Polynomial> s, const Ambiguity& a,
                            const OrderingSpec& spec) {
    return composition(s[a.f_index], s[a.g_index], a, spec);
  }
  static std::size_t degree(const Ambiguity& a) { return a.w.degree(); }
  static bool divides(const Word& lead, const Word& w) {
    return lead.empty() || w.contains(lead);
  }
};

}  // namespace detail

/// Shirshov completion: process the smallest unprocessed ambiguity, adjoin
/// its nonzero reduced composition (made monic), inter-reduce, repeat.
inline CompletionReport shirshov_complete(std::span<const Polynomial> relations,
                                          const OrderingSpec& spec,
                                          CompletionLimits limits = {}) {
  if (limits.max_steps == 0) {
    throw Error(ErrorCode::InvalidArgument, "max_steps must be positive");
  }
  detail::Completer<detail::AssociativeTraits> c(spec, limits);
  CompletionReport r = c.run(relations);
  r.inputs_reduce_to_zero =
      r.inputs_reduce_to_zero &&
      detail::Completer<detail::AssociativeTraits>::all_reduce(relations,
                                                               r.basis, spec);
  return r;
}

/// A relation set that has passed check_gsb with full coverage.
class CertifiedBasis {
 public:
  static CertifiedBasis certify(std::vector<Polynomial> relations,
                                const OrderingSpec& spec) {
    auto report = check_gsb(relations, spec);
    if (!report.is_certificate()) {
      throw Error(ErrorCode::UncertifiedBasis,
                  std::to_string(report.nontrivial.size()) +
                      " nontrivial compositions");
    }
    return CertifiedBasis(std::move(relations), spec);
  }

  static CertifiedBasis from(const CompletionReport& report,
                             const OrderingSpec& spec) {
    if (report.status != CompletionStatus::CertifiedGSB) {
      throw Error(ErrorCode::UncertifiedBasis,
                  "completion ended with status " +
                      std::string(to_string(report.status)));
    }
    return CertifiedBasis(report.basis, spec);
  }

  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  const OrderingSpec& spec() const noexcept { return spec_; }

 private:
  CertifiedBasis(std::vector<Polynomial> r, const OrderingSpec& spec)
      : relations_(std::move(r)), spec_(spec) {}
  std::vector<Polynomial> relations_;
  OrderingSpec spec_;
};

/// Ideal membership, decided by reduction against a certified basis.
inline bool is_member(const Polynomial& f, const CertifiedBasis& basis) {
  return Rewriter(basis.relations(), basis.spec()).reduce(f).is_zero();
}

}  // namespace gsb
