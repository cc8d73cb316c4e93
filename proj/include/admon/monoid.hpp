#pragma once

// The initial adjunction monoid as an algebra: elements are canonical words,
// with the product, the index-shift endomorphism f, the defining identities,
// the submonoid N = eps f(M), and the iso-criteria evaluator.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "admon/detail/parallel.hpp"
#include "admon/rewrite.hpp"
#include "admon/word.hpp"

namespace admon {

/// An element of the monoid, stored as its canonical word. Two elements are
/// equal exactly when their canonical words are.
template <class Index>
class basic_element {
 public:
  using word_type = basic_word<Index>;

  basic_element() = default;

  static basic_element from_word(word_type w) { return basic_element(normalize(std::move(w))); }

  static basic_element from_normal(word_type w) {
    if (!is_normal(w)) throw std::invalid_argument("word is not in canonical form: " + print(w));
    return basic_element(std::move(w));
  }

  static basic_element identity() { return {}; }
  static basic_element eta() { return basic_element(word_type{make_eta<Index>(Index{0})}); }
  static basic_element eps() { return basic_element(word_type{make_eps<Index>(Index{0})}); }

  [[nodiscard]] const word_type& nf() const noexcept { return nf_; }

  friend basic_element operator*(const basic_element& a, const basic_element& b) {
    return from_word(a.nf_ * b.nf_);
  }

  friend bool operator==(const basic_element&, const basic_element&) = default;
  friend auto operator<=>(const basic_element& a, const basic_element& b) { return a.nf_ <=> b.nf_; }

 private:
  explicit basic_element(word_type nf) : nf_(std::move(nf)) {}

  word_type nf_;
};

using element = basic_element<std::uint64_t>;

template <class Index>
basic_element<Index> mul(const basic_element<Index>& a, const basic_element<Index>& b) {
  return a * b;
}

/// f on the free monoid: every index goes up by one.
template <class Index>
basic_word<Index> apply_f_word(const basic_word<Index>& w) {
  typename basic_word<Index>::container out;
  out.reserve(w.size());
  for (const auto& g : w) out.push_back({g.kind, detail::successor(g.index)});
  return basic_word<Index>(std::move(out));
}

// Shifting indices keeps the canonical ordering, so no renormalization.
template <class Index>
basic_element<Index> apply_f(const basic_element<Index>& a) {
  return basic_element<Index>::from_normal(apply_f_word(a.nf()));
}

template <class Index>
basic_word<Index> apply_f_word(const basic_word<Index>& w, std::size_t times) {
  basic_word<Index> out = w;
  for (std::size_t t = 0; t < times; ++t) out = apply_f_word(out);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of canonical words

namespace detail {

inline void extend_normal(std::vector<word>& out, word& cur, std::size_t remaining, std::uint64_t max_index) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  const bool in_eps_block = !cur.empty() && cur[cur.size() - 1].is_eps();
  if (!in_eps_block) {
    const std::uint64_t lo = cur.empty() ? 0 : cur[cur.size() - 1].index;
    for (std::uint64_t k = lo; k <= max_index; ++k) {
      cur.push_back(eta(k));
      extend_normal(out, cur, remaining - 1, max_index);
      cur.mutable_letters().pop_back();
    }
  }
  const std::uint64_t hi = in_eps_block ? cur[cur.size() - 1].index : max_index;
  for (std::uint64_t k = 0; k <= hi; ++k) {
    cur.push_back(eps(k));
    extend_normal(out, cur, remaining - 1, max_index);
    cur.mutable_letters().pop_back();
  }
}

inline void extend_normal_by_degree(std::vector<word>& out, word& cur, std::uint64_t budget) {
  out.push_back(cur);
  const bool in_eps_block = !cur.empty() && cur[cur.size() - 1].is_eps();
  if (!in_eps_block) {
    const std::uint64_t lo = cur.empty() ? 0 : cur[cur.size() - 1].index;
    for (std::uint64_t k = lo; k + 1 <= budget; ++k) {
      cur.push_back(eta(k));
      extend_normal_by_degree(out, cur, budget - (k + 1));
      cur.mutable_letters().pop_back();
    }
  }
  const std::uint64_t hi = in_eps_block ? cur[cur.size() - 1].index : budget;
  for (std::uint64_t k = 0; k <= hi && k + 1 <= budget; ++k) {
    cur.push_back(eps(k));
    extend_normal_by_degree(out, cur, budget - (k + 1));
    cur.mutable_letters().pop_back();
  }
}

}  // namespace detail

/// Canonical words of length <= max_len with indices <= max_index, ordered
/// by (length, lexicographic).
inline std::vector<word> normal_forms(std::size_t max_len, std::uint64_t max_index) {
  std::vector<word> out;
  word cur;
  for (std::size_t len = 0; len <= max_len; ++len) detail::extend_normal(out, cur, len, max_index);
  return out;
}

/// Canonical words of degree <= max_degree, ordered by (degree, length, lexicographic).
inline std::vector<word> normal_forms_by_degree(std::uint64_t max_degree) {
  std::vector<word> out;
  word cur;
  detail::extend_normal_by_degree(out, cur, max_degree);
  std::sort(out.begin(), out.end(), [](const word& a, const word& b) { return degree_less(a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// Identity checks

struct counterexample {
  std::vector<word> at;  // the instantiated variables (empty for closed identities)
  word lhs;
  word rhs;
};

struct identity_check {
  std::string id;
  std::size_t instances = 0;
  std::optional<counterexample> failure;

  [[nodiscard]] bool passed() const noexcept { return !failure.has_value(); }
};

struct identity_report {
  std::vector<identity_check> checks;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const identity_check& c) { return c.passed(); });
  }
  [[nodiscard]] const identity_check* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

namespace detail {

inline const word eta0{eta(0)};
inline const word eps0{eps(0)};

// Checks lhs(x) = rhs(x) in the monoid for every x in `instances`; the first
// failure in enumeration order is kept.
template <class Instance, class Instantiate>
identity_check check_identity(std::string id, const std::vector<Instance>& instances, Instantiate instantiate,
                              unsigned jobs) {
  std::vector<std::optional<counterexample>> results(instances.size());
  parallel_for(instances.size(), jobs, [&](std::size_t n) {
    auto [at, lhs, rhs] = instantiate(instances[n]);
    word l = normalize(std::move(lhs));
    word r = normalize(std::move(rhs));
    if (l != r) results[n] = counterexample{std::move(at), std::move(l), std::move(r)};
  });
  identity_check out{std::move(id), instances.size(), std::nullopt};
  for (auto& r : results) {
    if (r) {
      out.failure = std::move(r);
      break;
    }
  }
  return out;
}

struct identity_sides {
  std::vector<word> at;
  word lhs;
  word rhs;
};

}  // namespace detail

namespace identity_ids {
inline constexpr std::string_view eps_eta = "eps*eta=1";
inline constexpr std::string_view eps_f_eta = "eps*f(eta)=1";
inline constexpr std::string_view eps_f_eps = "eps*f(eps)=eps^2";
inline constexpr std::string_view eps_f2 = "eps*f^2(m)=f(m)*eps";
inline constexpr std::string_view f_eta = "f(m)*eta=eta*m";
inline constexpr std::string_view eps_f_eps_f = "eps*f(eps*f(m))=eps*f(m)*eps";
inline constexpr std::string_view retraction = "m=eps*f(m)*eta";
inline constexpr std::string_view n_closure = "eps*f(m1)*eps*f(m2)=eps*f(eps*f(m1)*m2)";
inline constexpr std::string_view n_retraction = "n=eps*f(n*eta)";
}  // namespace identity_ids

/// Verifies the defining identities of an adjunction monoid on every element
/// whose canonical word has length <= max_len and indices <= max_index.
inline identity_report check_axioms(std::size_t max_len, std::uint64_t max_index, unsigned jobs = 1) {
  if (max_len < 1 || max_index < 1) throw std::invalid_argument("check_axioms bounds must be >= 1");
  using detail::eps0;
  using detail::eta0;
  using sides = detail::identity_sides;
  const auto ms = normal_forms(max_len, max_index);
  const std::vector<word> closed{word{}};
  auto f = [](const word& w) { return apply_f_word(w); };

  identity_report r;
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::eps_eta), closed, [&](const word&) { return sides{{}, eps0 * eta0, word{}}; },
      jobs));
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::eps_f_eta), closed, [&](const word&) { return sides{{}, eps0 * f(eta0), word{}}; },
      jobs));
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::eps_f_eps), closed,
      [&](const word&) { return sides{{}, eps0 * f(eps0), eps0 * eps0}; }, jobs));
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::eps_f2), ms,
      [&](const word& m) { return sides{{m}, eps0 * f(f(m)), f(m) * eps0}; }, jobs));
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::f_eta), ms, [&](const word& m) { return sides{{m}, f(m) * eta0, eta0 * m}; },
      jobs));
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::eps_f_eps_f), ms,
      [&](const word& m) { return sides{{m}, eps0 * f(eps0 * f(m)), eps0 * f(m) * eps0}; }, jobs));
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::retraction), ms,
      [&](const word& m) { return sides{{m}, m, eps0 * f(m) * eta0}; }, jobs));
  return r;
}

// ---------------------------------------------------------------------------
// The submonoid N = eps f(M)

/// eps * f(m), i.e. the image of m in N.
inline element n_image(const element& m) { return element::from_word(detail::eps0 * apply_f_word(m.nf())); }

/// Bounded search for m' with degree(m') <= search_bound and eps*f(m') = a.
/// A miss is not a proof that a lies outside N.
inline std::optional<element> in_N(const element& a, std::uint64_t search_bound) {
  for (const auto& m : normal_forms_by_degree(search_bound)) {
    auto candidate = element::from_normal(m);
    if (n_image(candidate) == a) return candidate;
  }
  return std::nullopt;
}

/// The witness for a product of two members of N: eps f(m1) eps f(m2) = eps f(eps f(m1) m2).
inline element n_product_witness(const element& m1, const element& m2) { return n_image(m1) * m2; }

/// Precomputed image table for many membership queries: every canonical m'
/// of degree <= max_degree, keeping the first (smallest) witness per image.
class n_membership {
 public:
  explicit n_membership(std::uint64_t max_degree) : max_degree_(max_degree) {
    for (const auto& m : normal_forms_by_degree(max_degree)) {
      auto candidate = element::from_normal(m);
      witness_.try_emplace(n_image(candidate).nf(), std::move(candidate));
      ++searched_;
    }
  }

  [[nodiscard]] std::optional<element> witness(const element& a) const {
    auto it = witness_.find(a.nf());
    if (it == witness_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::uint64_t max_degree() const noexcept { return max_degree_; }
  [[nodiscard]] std::size_t searched() const noexcept { return searched_; }

 private:
  std::uint64_t max_degree_;
  std::size_t searched_ = 0;
  std::unordered_map<word, element> witness_;
};

/// Closure of N under products and the retraction n = eps f(n eta), over all
/// m, m1, m2 with canonical length <= max_len and indices <= max_index.
inline identity_report check_N_closure(std::size_t max_len, std::uint64_t max_index, unsigned jobs = 1) {
  if (max_len < 1 || max_index < 1) throw std::invalid_argument("check_N_closure bounds must be >= 1");
  using detail::eps0;
  using detail::eta0;
  using sides = detail::identity_sides;
  const auto ms = normal_forms(max_len, max_index);
  auto f = [](const word& w) { return apply_f_word(w); };

  std::vector<std::pair<word, word>> pairs;
  pairs.reserve(ms.size() * ms.size());
  for (const auto& a : ms)
    for (const auto& b : ms) pairs.emplace_back(a, b);

  identity_report r;
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::n_closure), pairs,
      [&](const std::pair<word, word>& p) {
        const auto& [m1, m2] = p;
        return sides{{m1, m2}, eps0 * f(m1) * eps0 * f(m2), eps0 * f(eps0 * f(m1) * m2)};
      },
      jobs));
  r.checks.push_back(detail::check_identity(
      std::string(identity_ids::n_retraction), ms,
      [&](const word& m) {
        const word n = normalize(eps0 * f(m));
        return sides{{n}, n, eps0 * f(n * eta0)};
      },
      jobs));
  return r;
}

// ---------------------------------------------------------------------------
// Criteria for f being an isomorphism

struct condition_result {
  std::string id;
  bool holds = false;
  std::optional<word> at;  // the m that decided a universally quantified condition
  word lhs;                // canonical forms of both sides at the deciding instance
  word rhs;
};

/// The four decidable criteria, each equivalent to "f is an isomorphism".
/// Surjectivity of f, bijectivity of f and N = M are equivalent to them but
/// quantify over all of M; they are reported through `derived_iso()`.
struct prop3_report {
  condition_result f_fixes_eta;      // f(eta) = eta
  condition_result f_fixes_eps;      // f(eps) = eps
  condition_result eta_eps_is_unit;  // eta*eps = 1
  condition_result f_is_inner;       // f(m) = eta*m*eps for all m

  /// Propagates the common value of the equivalent criteria; empty when they
  /// disagree, which would contradict their equivalence.
  static std::optional<bool> derive(bool d, bool e, bool f, bool g) {
    if (d == e && e == f && f == g) return d;
    return std::nullopt;
  }

  [[nodiscard]] std::optional<bool> derived_iso() const {
    return derive(f_fixes_eta.holds, f_fixes_eps.holds, eta_eps_is_unit.holds, f_is_inner.holds);
  }
};

namespace prop3_ids {
inline constexpr std::string_view f_fixes_eta = "f(eta)=eta";
inline constexpr std::string_view f_fixes_eps = "f(eps)=eps";
inline constexpr std::string_view eta_eps_is_unit = "eta*eps=1";
inline constexpr std::string_view f_is_inner = "f(m)=eta*m*eps";
inline constexpr std::string_view derived = "f-surjective/f-iso/N=M";
}  // namespace prop3_ids

/// `inner_search` bounds the m tried for the universally quantified criterion;
/// m = 1 is tried first and already refutes it.
inline prop3_report evaluate_prop3(std::size_t inner_search_len = 2, std::uint64_t inner_search_index = 2) {
  using detail::eps0;
  using detail::eta0;
  auto closed = [](std::string_view id, word lhs, word rhs) {
    condition_result c{std::string(id), false, std::nullopt, normalize(std::move(lhs)), normalize(std::move(rhs))};
    c.holds = c.lhs == c.rhs;
    return c;
  };
  prop3_report r;
  r.f_fixes_eta = closed(prop3_ids::f_fixes_eta, apply_f_word(eta0), eta0);
  r.f_fixes_eps = closed(prop3_ids::f_fixes_eps, apply_f_word(eps0), eps0);
  r.eta_eps_is_unit = closed(prop3_ids::eta_eps_is_unit, eta0 * eps0, word{});

  r.f_is_inner = {std::string(prop3_ids::f_is_inner), true, std::nullopt, {}, {}};
  for (const auto& m : normal_forms(inner_search_len, inner_search_index)) {
    word lhs = normalize(apply_f_word(m));
    word rhs = normalize(eta0 * m * eps0);
    if (lhs != rhs) {
      r.f_is_inner = {std::string(prop3_ids::f_is_inner), false, m, std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Is every adjunction between monoids an isomorphism?

enum class iso_verdict { iso, not_iso };

struct open_question_verdict {
  iso_verdict verdict = iso_verdict::iso;
  trace eta_eps;          // eta*eps, already canonical and != 1
  trace eps_eta;          // eps*eta -> 1
  word eta_eps_squared;   // canonical form of (eta*eps)^2
  prop3_report criteria;
  // "Distinct canonical words are distinct elements" rests on confluence;
  // certified_answer() in confluence.hpp fills this from the audit.
  std::optional<bool> confluence_certified;
};

inline open_question_verdict answer_open_question() {
  using detail::eps0;
  using detail::eta0;
  open_question_verdict v;
  v.eta_eps = normalize_trace(eta0 * eps0);
  v.eps_eta = normalize_trace(eps0 * eta0);
  v.eta_eps_squared = normalize(eta0 * eps0 * eta0 * eps0);
  v.criteria = evaluate_prop3();
  const bool eta_eps_is_unit = v.eta_eps.result().empty();
  v.verdict = eta_eps_is_unit ? iso_verdict::iso : iso_verdict::not_iso;
  return v;
}

}  // namespace admon
