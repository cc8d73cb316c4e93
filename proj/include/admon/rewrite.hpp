#pragma once

// The length-two rewrite rules, single steps, leftmost normalization and
// exhaustive reduction graphs.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "admon/word.hpp"

namespace admon {

/// Which rule schema fired. The five eps*eta cases partition the index pairs (i, j).
enum class rule_case : std::uint8_t {
  eps_eps,               // e_i e_j -> e_{j-1} e_i        (j > i)
  eta_eta,               // h_j h_i -> h_i h_{j-1}        (j > i)
  eps_eta_j_gt_i_plus_1, // e_i h_j -> h_{j-1} e_i        (j > i+1)
  eps_eta_i_gt_j,        // e_i h_j -> h_j e_{i-1}        (i > j)
  eps_eta_i_eq_j_pos,    // e_i h_i -> e_{i-1} h_i        (i > 0)
  eps_eta_j_eq_i_plus_1, // e_i h_{i+1} -> e_i h_i
  eps_eta_zero,          // e_0 h_0 -> 1
};

inline constexpr rule_case all_rule_cases[] = {
    rule_case::eps_eps,            rule_case::eta_eta,
    rule_case::eps_eta_j_gt_i_plus_1, rule_case::eps_eta_i_gt_j,
    rule_case::eps_eta_i_eq_j_pos, rule_case::eps_eta_j_eq_i_plus_1,
    rule_case::eps_eta_zero,
};

constexpr std::string_view to_string(rule_case c) noexcept {
  switch (c) {
    case rule_case::eps_eps: return "EpsEps";
    case rule_case::eta_eta: return "EtaEta";
    case rule_case::eps_eta_j_gt_i_plus_1: return "EpsEta_JGtIPlus1";
    case rule_case::eps_eta_i_gt_j: return "EpsEta_IGtJ";
    case rule_case::eps_eta_i_eq_j_pos: return "EpsEta_IEqJPos";
    case rule_case::eps_eta_j_eq_i_plus_1: return "EpsEta_JEqIPlus1";
    case rule_case::eps_eta_zero: return "EpsEta_Zero";
  }
  return "?";
}

template <class Index>
struct basic_rule_instance {
  rule_case which;
  basic_word<Index> lhs;  // always two letters
  basic_word<Index> rhs;  // two letters, or empty for eps_eta_zero

  friend bool operator==(const basic_rule_instance&, const basic_rule_instance&) = default;
};

using rule_instance = basic_rule_instance<std::uint64_t>;

/// The unique rule whose left side is `a b`, if any.
template <class Index>
std::optional<basic_rule_instance<Index>> match_rule(const basic_generator<Index>& a,
                                                     const basic_generator<Index>& b) {
  using G = basic_generator<Index>;
  auto make = [&](rule_case c, std::vector<G> rhs) {
    return basic_rule_instance<Index>{c, basic_word<Index>{a, b}, basic_word<Index>(std::move(rhs))};
  };
  if (a.is_eps() && b.is_eps()) {
    const Index &i = a.index, &j = b.index;
    if (j > i) return make(rule_case::eps_eps, {make_eps<Index>(j - 1), make_eps<Index>(i)});
    return std::nullopt;
  }
  if (a.is_eta() && b.is_eta()) {
    const Index &j = a.index, &i = b.index;
    if (j > i) return make(rule_case::eta_eta, {make_eta<Index>(i), make_eta<Index>(j - 1)});
    return std::nullopt;
  }
  if (a.is_eps() && b.is_eta()) {
    const Index &i = a.index, &j = b.index;
    if (j > i && j - i > 1) return make(rule_case::eps_eta_j_gt_i_plus_1, {make_eta<Index>(j - 1), make_eps<Index>(i)});
    if (i > j) return make(rule_case::eps_eta_i_gt_j, {make_eta<Index>(j), make_eps<Index>(i - 1)});
    if (i == j && i > 0) return make(rule_case::eps_eta_i_eq_j_pos, {make_eps<Index>(i - 1), make_eta<Index>(i)});
    if (j > i && j - i == 1) return make(rule_case::eps_eta_j_eq_i_plus_1, {make_eps<Index>(i), make_eta<Index>(i)});
    return make(rule_case::eps_eta_zero, {});
  }
  return std::nullopt;  // eta followed by eps is never a redex
}

template <class Index>
bool is_redex(const basic_generator<Index>& a, const basic_generator<Index>& b) {
  if (a.is_eps() && b.is_eta()) return true;
  if (a.kind != b.kind) return false;
  return a.is_eps() ? b.index > a.index : a.index > b.index;
}

template <class Index>
struct basic_redex {
  std::size_t position;
  basic_rule_instance<Index> rule;
};

template <class Index>
std::vector<basic_redex<Index>> redexes(const basic_word<Index>& w) {
  std::vector<basic_redex<Index>> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (auto r = match_rule(w[p], w[p + 1])) out.push_back({p, std::move(*r)});
  }
  return out;
}

class not_a_redex : public std::invalid_argument {
 public:
  explicit not_a_redex(std::size_t position)
      : std::invalid_argument("no rule applies at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

template <class Index>
struct basic_step {
  std::size_t position;
  basic_rule_instance<Index> rule;
  basic_word<Index> before;
  basic_word<Index> after;
};

template <class Index>
struct basic_trace {
  basic_word<Index> start;
  std::vector<basic_step<Index>> steps;

  [[nodiscard]] const basic_word<Index>& result() const { return steps.empty() ? start : steps.back().after; }
};

using step = basic_step<std::uint64_t>;
using trace = basic_trace<std::uint64_t>;

namespace detail {

template <class Index>
basic_word<Index> splice(const basic_word<Index>& w, std::size_t position, const basic_word<Index>& rhs) {
  typename basic_word<Index>::container out;
  out.reserve(w.size() + rhs.size() - 2);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), rhs.begin(), rhs.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(position + 2), w.end());
  return basic_word<Index>(std::move(out));
}

}  // namespace detail

/// One rewrite step at `position`; throws not_a_redex when no rule matches there.
template <class Index>
basic_word<Index> apply(const basic_word<Index>& w, std::size_t position) {
  if (position + 1 >= w.size()) throw not_a_redex(position);
  auto r = match_rule(w[position], w[position + 1]);
  if (!r) throw not_a_redex(position);
  return detail::splice(w, position, r->rhs);
}

template <class Index>
basic_step<Index> make_step(const basic_word<Index>& w, std::size_t position) {
  if (position + 1 >= w.size()) throw not_a_redex(position);
  auto r = match_rule(w[position], w[position + 1]);
  if (!r) throw not_a_redex(position);
  auto after = detail::splice(w, position, r->rhs);
  return {position, std::move(*r), w, std::move(after)};
}

namespace detail {

// Leftmost-redex reduction in place. After a step at p, nothing left of p-1
// can have become a redex, so scanning resumes there.
template <class Index, class OnStep>
basic_word<Index> leftmost_reduce(basic_word<Index> w, OnStep&& on_step) {
  auto& ls = w.mutable_letters();
  std::size_t p = 0;
  while (p + 1 < ls.size()) {
    if (!is_redex(ls[p], ls[p + 1])) {
      ++p;
      continue;
    }
    auto r = *match_rule(ls[p], ls[p + 1]);
    on_step(std::as_const(w), p, r);
    if (r.rhs.empty()) {
      ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p), ls.begin() + static_cast<std::ptrdiff_t>(p + 2));
    } else {
      ls[p] = r.rhs[0];
      ls[p + 1] = r.rhs[1];
    }
    if (p > 0) --p;
  }
  return w;
}

}  // namespace detail

/// Leftmost-redex normalization to the canonical form.
template <class Index>
basic_word<Index> normalize(basic_word<Index> w) {
  return detail::leftmost_reduce(std::move(w), [](const auto&, std::size_t, const auto&) {});
}

template <class Index>
basic_trace<Index> normalize_trace(const basic_word<Index>& w) {
  basic_trace<Index> t{w, {}};
  detail::leftmost_reduce(w, [&](const basic_word<Index>& before, std::size_t p,
                                 const basic_rule_instance<Index>& r) {
    t.steps.push_back({p, r, before, detail::splice(before, p, r.rhs)});
  });
  return t;
}

/// Canonical shape: an eta block with non-decreasing indices followed by an
/// eps block with non-increasing indices.
template <class Index>
bool is_normal(const basic_word<Index>& w) {
  std::size_t p = 0;
  for (; p < w.size() && w[p].is_eta(); ++p) {
    if (p > 0 && w[p].index < w[p - 1].index) return false;
  }
  const std::size_t eps_start = p;
  for (; p < w.size(); ++p) {
    if (!w[p].is_eps()) return false;
    if (p > eps_start && w[p].index > w[p - 1].index) return false;
  }
  return true;
}

template <class Index>
bool has_redex(const basic_word<Index>& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (is_redex(w[p], w[p + 1])) return true;
  return false;
}

/// Every word reachable by rewrite steps, deduplicated; node 0 is the start.
/// Nodes are numbered in breadth-first order, edges by (source, position).
template <class Index>
class basic_reduction_graph {
 public:
  struct edge {
    std::size_t from;
    std::size_t to;
    std::size_t position;
    rule_case which;
  };

  explicit basic_reduction_graph(const basic_word<Index>& start) {
    intern(start);
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
      const basic_word<Index> w = nodes_[n];
      for (const auto& r : redexes(w)) {
        const std::size_t to = intern(detail::splice(w, r.position, r.rule.rhs));
        edges_.push_back({n, to, r.position, r.rule.which});
      }
      out_degree_.push_back(edges_.size());
    }
    for (std::size_t n = nodes_.size(); n-- > 1;) out_degree_[n] -= out_degree_[n - 1];
  }

  [[nodiscard]] const std::vector<basic_word<Index>>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] bool contains(const basic_word<Index>& w) const { return ids_.contains(w); }
  [[nodiscard]] std::optional<std::size_t> find(const basic_word<Index>& w) const {
    auto it = ids_.find(w);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::vector<basic_word<Index>> sinks() const {
    std::vector<basic_word<Index>> out;
    for (std::size_t n = 0; n < nodes_.size(); ++n)
      if (out_degree_[n] == 0) out.push_back(nodes_[n]);
    return out;
  }

  /// Length of the longest rewrite sequence from the start word.
  [[nodiscard]] std::size_t longest_chain() const {
    // Every edge goes from a node to one of strictly smaller degree, so a
    // reverse degree order is a topological order.
    std::vector<std::size_t> order(nodes_.size());
    for (std::size_t n = 0; n < order.size(); ++n) order[n] = n;
    std::vector<Index> deg;
    deg.reserve(nodes_.size());
    for (const auto& w : nodes_) deg.push_back(degree(w));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
    std::vector<std::vector<std::size_t>> succ(nodes_.size());
    for (const auto& e : edges_) succ[e.from].push_back(e.to);
    std::vector<std::size_t> longest(nodes_.size(), 0);
    for (std::size_t n : order)
      for (std::size_t t : succ[n]) longest[n] = std::max(longest[n], longest[t] + 1);
    return longest.empty() ? 0 : longest[0];
  }

 private:
  std::size_t intern(basic_word<Index> w) {
    auto [it, inserted] = ids_.try_emplace(w, nodes_.size());
    if (inserted) nodes_.push_back(std::move(w));
    return it->second;
  }

  std::vector<basic_word<Index>> nodes_;
  std::vector<edge> edges_;
  std::vector<std::size_t> out_degree_;
  std::unordered_map<basic_word<Index>, std::size_t> ids_;
};

using reduction_graph = basic_reduction_graph<std::uint64_t>;

template <class Index>
basic_reduction_graph<Index> make_reduction_graph(const basic_word<Index>& w) {
  return basic_reduction_graph<Index>(w);
}

}  // namespace admon
