#pragma once

// Mechanical audit of unique normal forms: termination by degree, local
// confluence of every overlap family, and a bounded equivalence oracle that
// never looks at normal forms.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "admon/detail/parallel.hpp"
#include "admon/monoid.hpp"
#include "admon/rewrite.hpp"
#include "admon/word.hpp"

namespace admon {

/// Shapes of a parent word with two redexes. `disjoint` covers a parent with
/// two non-overlapping redexes; the rest are three-letter overlaps.
enum class overlap_family : std::uint8_t {
  disjoint,
  eps_eps_eps,  // e_i e_j e_k, i < j < k
  eta_eta_eta,  // h_i h_j h_k, i > j > k
  // e_i e_j h_k, i < j
  eeh_a,  // k > j+1
  eeh_b,  // k = j+1
  eeh_c,  // k = j
  eeh_d,  // i+1 < k < j
  eeh_e,  // k = i+1 < j
  eeh_f,  // k = i
  eeh_g,  // k < i
  // e_i h_j h_k, j > k
  ehh_a,  // i > j
  ehh_b,  // i = j
  ehh_c,  // i = j-1
  ehh_d,  // k < i < j-1
  ehh_e,  // k = i < j-1
  ehh_f,  // k = i+1
  ehh_g,  // k > i+1
};

inline constexpr std::size_t overlap_family_count = 17;

inline constexpr std::array<overlap_family, overlap_family_count> all_overlap_families = {
    overlap_family::disjoint, overlap_family::eps_eps_eps, overlap_family::eta_eta_eta,
    overlap_family::eeh_a,    overlap_family::eeh_b,       overlap_family::eeh_c,
    overlap_family::eeh_d,    overlap_family::eeh_e,       overlap_family::eeh_f,
    overlap_family::eeh_g,    overlap_family::ehh_a,       overlap_family::ehh_b,
    overlap_family::ehh_c,    overlap_family::ehh_d,       overlap_family::ehh_e,
    overlap_family::ehh_f,    overlap_family::ehh_g,
};

constexpr std::string_view to_string(overlap_family f) noexcept {
  constexpr std::array<std::string_view, overlap_family_count> names = {
      "I",     "II",    "III",   "IV_a", "IV_b", "IV_c", "IV_d", "IV_e", "IV_f",
      "IV_g",  "V_a",   "V_b",   "V_c",  "V_d",  "V_e",  "V_f",  "V_g",
  };
  return names[static_cast<std::size_t>(f)];
}

constexpr bool is_three_letter(overlap_family f) noexcept { return f != overlap_family::disjoint; }

/// e_i e_j h_k with i < j.
constexpr overlap_family eeh_subcase(std::uint64_t i, std::uint64_t j, std::uint64_t k) noexcept {
  if (k > j + 1) return overlap_family::eeh_a;
  if (k == j + 1) return overlap_family::eeh_b;
  if (k == j) return overlap_family::eeh_c;
  if (k > i + 1) return overlap_family::eeh_d;
  if (k == i + 1) return overlap_family::eeh_e;
  if (k == i) return overlap_family::eeh_f;
  return overlap_family::eeh_g;
}

/// e_i h_j h_k with j > k.
constexpr overlap_family ehh_subcase(std::uint64_t i, std::uint64_t j, std::uint64_t k) noexcept {
  if (i > j) return overlap_family::ehh_a;
  if (i == j) return overlap_family::ehh_b;
  if (i + 1 == j) return overlap_family::ehh_c;
  if (i > k) return overlap_family::ehh_d;
  if (i == k) return overlap_family::ehh_e;
  if (k == i + 1) return overlap_family::ehh_f;
  return overlap_family::ehh_g;
}

/// Family of a three-letter word whose two length-two factors are both
/// redexes; nullopt if they are not.
inline std::optional<overlap_family> classify_overlap(const word& p) {
  if (p.size() != 3 || !is_redex(p[0], p[1]) || !is_redex(p[1], p[2])) return std::nullopt;
  const auto i = p[0].index, j = p[1].index, k = p[2].index;
  if (p[0].is_eps() && p[1].is_eps() && p[2].is_eps()) return overlap_family::eps_eps_eps;
  if (p[0].is_eta() && p[1].is_eta() && p[2].is_eta()) return overlap_family::eta_eta_eta;
  if (p[0].is_eps() && p[1].is_eps() && p[2].is_eta()) return eeh_subcase(i, j, k);
  if (p[0].is_eps() && p[1].is_eta() && p[2].is_eta()) return ehh_subcase(i, j, k);
  // A middle letter that ends one redex and starts another must be eps
  // followed by eps/eta, or eta between two etas; eta*eps is never a redex.
  throw std::logic_error("unexpected overlap shape: " + print(p));
}

/// The closed-form common lower bound known for each overlap family, at the
/// parent's indices. The h h h bound is the mirror of the e e e one.
inline std::optional<word> stated_bound(overlap_family f, std::uint64_t i, std::uint64_t j, std::uint64_t k) {
  switch (f) {
    case overlap_family::disjoint: return std::nullopt;
    case overlap_family::eps_eps_eps: return word{eps(k - 2), eps(j - 1), eps(i)};
    case overlap_family::eta_eta_eta: return word{eta(k), eta(j - 1), eta(i - 2)};
    case overlap_family::eeh_a: return word{eta(k - 2), eps(j - 1), eps(i)};
    case overlap_family::eeh_b: return word{eps(i)};
    case overlap_family::eeh_c: return word{eps(i)};
    case overlap_family::eeh_d: return word{eta(k - 1), eps(j - 2), eps(i)};
    case overlap_family::eeh_e: return word{eps(j - 1)};
    case overlap_family::eeh_f: return word{eps(j - 1)};
    case overlap_family::eeh_g: return word{eta(k), eps(j - 2), eps(i - 1)};
    case overlap_family::ehh_a: return word{eta(k), eta(j - 1), eps(i - 2)};
    case overlap_family::ehh_b: return word{eta(k)};
    case overlap_family::ehh_c: return word{eta(k)};
    case overlap_family::ehh_d: return word{eta(k), eta(j - 2), eps(i - 1)};
    case overlap_family::ehh_e: return word{eta(j - 1)};
    case overlap_family::ehh_f: return word{eta(j - 1)};
    case overlap_family::ehh_g: return word{eta(k - 1), eta(j - 2), eps(i)};
  }
  return std::nullopt;
}

/// The e_i h_j h_k (k > i+1) bound as it is sometimes displayed,
/// e_k h_{j-2} h_{i-1}. It is not a word when i = 0, and otherwise is not a
/// reduct; the audit records whether it is ever reached.
inline std::optional<word> displayed_ehh_g_bound(std::uint64_t i, std::uint64_t j, std::uint64_t k) {
  if (i == 0 || j < 2) return std::nullopt;
  return word{eps(k), eta(j - 2), eta(i - 1)};
}

struct critical_pair {
  word parent;
  word left_reduct;
  word right_reduct;
  overlap_family family = overlap_family::disjoint;
  std::size_t left_position = 0;
  std::size_t right_position = 1;

  // Filled by resolve().
  std::optional<word> bound_found;
  std::vector<word> common_reducts;  // sorted by degree_less
  std::optional<word> stated;        // closed-form bound for the family
  bool stated_reached = false;
  std::optional<word> displayed_variant;  // ehh_g only
  bool displayed_variant_reached = false;
  bool resolved = false;

  [[nodiscard]] bool joinable() const noexcept { return bound_found.has_value(); }
};

namespace detail {

inline word splice_two(const word& w, std::size_t p, const word& mu, std::size_t q, const word& nu) {
  // w = a . w[p..p+1] . b . w[q..q+1] . c  ->  a . mu . b . nu . c
  word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  out *= mu;
  out *= word(w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.begin() + static_cast<std::ptrdiff_t>(q));
  out *= nu;
  out *= word(w.begin() + static_cast<std::ptrdiff_t>(q + 2), w.end());
  return out;
}

}  // namespace detail

/// The pair of one-step reducts of a three-letter overlap.
inline critical_pair make_overlap_pair(const word& parent) {
  auto fam = classify_overlap(parent);
  if (!fam) throw std::invalid_argument("not a two-redex overlap: " + print(parent));
  critical_pair cp;
  cp.parent = parent;
  cp.left_reduct = apply(parent, 0);
  cp.right_reduct = apply(parent, 1);
  cp.family = *fam;
  cp.left_position = 0;
  cp.right_position = 1;
  const auto i = parent[0].index, j = parent[1].index, k = parent[2].index;
  cp.stated = stated_bound(*fam, i, j, k);
  if (*fam == overlap_family::ehh_g) cp.displayed_variant = displayed_ehh_g_bound(i, j, k);
  return cp;
}

/// A parent with non-overlapping redexes at p and q >= p+2. Its stated bound
/// applies both rules.
inline critical_pair make_disjoint_pair(const word& parent, std::size_t p, std::size_t q) {
  if (q < p + 2) throw std::invalid_argument("redexes overlap");
  if (q + 1 >= parent.size() || !is_redex(parent[p], parent[p + 1]) || !is_redex(parent[q], parent[q + 1]))
    throw std::invalid_argument("positions are not both redexes in " + print(parent));
  critical_pair cp;
  cp.parent = parent;
  cp.family = overlap_family::disjoint;
  cp.left_position = p;
  cp.right_position = q;
  cp.left_reduct = apply(parent, p);
  cp.right_reduct = apply(parent, q);
  const auto mu = *match_rule(parent[p], parent[p + 1]);
  const auto nu = *match_rule(parent[q], parent[q + 1]);
  cp.stated = detail::splice_two(parent, p, mu.rhs, q, nu.rhs);
  return cp;
}

/// Every three-letter word over indices <= max_index with two overlapping
/// redexes, ordered by parent word.
inline std::vector<critical_pair> enumerate_overlaps(std::uint64_t max_index) {
  if (max_index < 2) throw std::invalid_argument("enumerate_overlaps needs max_index >= 2");
  const auto letters = alphabet(max_index);
  std::vector<critical_pair> out;
  for (const auto& a : letters)
    for (const auto& b : letters) {
      if (!is_redex(a, b)) continue;
      for (const auto& c : letters)
        if (is_redex(b, c)) out.push_back(make_overlap_pair(word{a, b, c}));
    }
  return out;
}

/// Deterministic sample of words with two disjoint redexes. Always starts
/// with e0 h0 e0 h0.
inline std::vector<critical_pair> sample_disjoint_pairs(std::uint64_t max_index, std::size_t count,
                                                        std::uint64_t seed = 0x5eed) {
  std::vector<critical_pair> out;
  if (count == 0) return out;
  out.push_back(make_disjoint_pair(word{eps(0), eta(0), eps(0), eta(0)}, 0, 2));
  const auto letters = alphabet(max_index);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_letter(0, letters.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_len(4, 7);
  for (std::size_t attempts = 0; out.size() < count && attempts < 1000 * count; ++attempts) {
    word w;
    const std::size_t len = pick_len(rng);
    for (std::size_t n = 0; n < len; ++n) w.push_back(letters[pick_letter(rng)]);
    std::vector<std::size_t> at;
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (is_redex(w[p], w[p + 1])) at.push_back(p);
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t x = 0; x < at.size(); ++x)
      for (std::size_t y = x + 1; y < at.size(); ++y)
        if (at[y] >= at[x] + 2) options.emplace_back(at[x], at[y]);
    if (options.empty()) continue;
    const auto [p, q] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    out.push_back(make_disjoint_pair(w, p, q));
  }
  return out;
}

/// Joins the two reducts by intersecting their full reduction graphs. Does
/// not call normalize(), whose correctness is what is being audited.
inline critical_pair resolve(critical_pair cp) {
  const reduction_graph left(cp.left_reduct);
  const reduction_graph right(cp.right_reduct);
  cp.bound_found.reset();
  cp.common_reducts.clear();
  for (const auto& w : left.nodes()) {
    if (!right.contains(w)) continue;
    if (!cp.bound_found) cp.bound_found = w;
    cp.common_reducts.push_back(w);
  }
  std::sort(cp.common_reducts.begin(), cp.common_reducts.end(),
            [](const word& a, const word& b) { return degree_less(a, b); });
  auto reached = [&](const std::optional<word>& w) {
    return w && left.contains(*w) && right.contains(*w);
  };
  cp.stated_reached = reached(cp.stated);
  cp.displayed_variant_reached = reached(cp.displayed_variant);
  cp.resolved = true;
  return cp;
}

/// Both reduction graphs, for reporting a pair that failed to join.
inline std::pair<reduction_graph, reduction_graph> not_joinable_evidence(const critical_pair& cp) {
  return {reduction_graph(cp.left_reduct), reduction_graph(cp.right_reduct)};
}

struct family_row {
  overlap_family family = overlap_family::disjoint;
  std::size_t instances = 0;
  std::size_t joinable = 0;
  std::size_t stated_checked = 0;
  std::size_t stated_reached = 0;
  std::size_t displayed_checked = 0;
  std::size_t displayed_reached = 0;
  std::optional<critical_pair> sample;  // first instance in parent order
};

struct confluence_report {
  std::uint64_t max_index = 0;
  std::vector<family_row> rows;  // one per overlap_family, in enum order
  std::vector<critical_pair> pairs;
  std::vector<critical_pair> not_joinable;
  std::vector<critical_pair> stated_missed;

  [[nodiscard]] const family_row& row(overlap_family f) const { return rows[static_cast<std::size_t>(f)]; }

  [[nodiscard]] std::vector<overlap_family> not_instantiated() const {
    std::vector<overlap_family> out;
    for (const auto& r : rows)
      if (r.instances == 0) out.push_back(r.family);
    return out;
  }
  [[nodiscard]] bool all_instantiated() const { return not_instantiated().empty(); }
  [[nodiscard]] bool passed() const { return not_joinable.empty() && stated_missed.empty(); }
};

/// Resolves every overlap with indices <= max_index plus `disjoint_samples`
/// words with disjoint redexes.
inline confluence_report audit_local_confluence(std::uint64_t max_index, std::size_t disjoint_samples = 64,
                                                unsigned jobs = 1) {
  auto pairs = sample_disjoint_pairs(max_index, disjoint_samples);
  auto overlaps = enumerate_overlaps(max_index);
  pairs.insert(pairs.end(), std::make_move_iterator(overlaps.begin()), std::make_move_iterator(overlaps.end()));

  detail::parallel_for(pairs.size(), jobs, [&](std::size_t n) { pairs[n] = resolve(std::move(pairs[n])); });

  confluence_report r;
  r.max_index = max_index;
  for (auto f : all_overlap_families) {
    family_row row;
    row.family = f;
    r.rows.push_back(std::move(row));
  }
  for (const auto& cp : pairs) {
    auto& row = r.rows[static_cast<std::size_t>(cp.family)];
    ++row.instances;
    if (cp.joinable()) ++row.joinable;
    else r.not_joinable.push_back(cp);
    if (cp.stated) {
      ++row.stated_checked;
      if (cp.stated_reached) ++row.stated_reached;
      else r.stated_missed.push_back(cp);
    }
    if (cp.displayed_variant) {
      ++row.displayed_checked;
      if (cp.displayed_variant_reached) ++row.displayed_reached;
    }
    if (!row.sample) row.sample = cp;
  }
  r.pairs = std::move(pairs);
  return r;
}

/// Answers the open question and attaches the confluence audit as certificate.
inline open_question_verdict certified_answer(std::uint64_t audit_max_index = 6, unsigned jobs = 1) {
  auto v = answer_open_question();
  const auto audit = audit_local_confluence(audit_max_index, 64, jobs);
  v.confluence_certified = audit.passed() && audit.all_instantiated();
  return v;
}

// ---------------------------------------------------------------------------
// Termination and unique normal forms over a finite population of words

struct termination_report {
  std::size_t words = 0;
  std::size_t steps = 0;
  std::size_t zero_steps = 0;  // e0 h0 -> 1 steps, degree gap 2
  std::size_t longest_chain = 0;
  std::vector<std::string> violations;

  [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// Every redex of every word of length <= max_len, indices <= max_index,
/// lowers degree by exactly 1 (2 for e0 h0 -> 1), and no rewrite sequence is
/// longer than the start word's degree.
inline termination_report audit_termination(std::size_t max_len, std::uint64_t max_index, unsigned jobs = 1) {
  if (max_len < 1 || max_index < 1) throw std::invalid_argument("audit_termination bounds must be >= 1");
  const auto words = all_words(max_len, max_index);
  struct per_word {
    std::size_t steps = 0, zero_steps = 0, chain = 0;
    std::vector<std::string> violations;
  };
  std::vector<per_word> results(words.size());
  detail::parallel_for(words.size(), jobs, [&](std::size_t n) {
    const word& w = words[n];
    auto& out = results[n];
    const auto d = degree(w);
    for (const auto& r : redexes(w)) {
      const word after = apply(w, r.position);
      const auto gap = d - degree(after);
      const std::uint64_t expected = r.rule.which == rule_case::eps_eta_zero ? 2 : 1;
      ++out.steps;
      if (r.rule.which == rule_case::eps_eta_zero) ++out.zero_steps;
      if (degree(after) >= d || gap != expected)
        out.violations.push_back(print(w) + " @ " + std::to_string(r.position) + ": degree " + std::to_string(d) +
                                 " -> " + std::to_string(degree(after)));
    }
    out.chain = reduction_graph(w).longest_chain();
    if (out.chain > d)
      out.violations.push_back(print(w) + ": chain of length " + std::to_string(out.chain) + " exceeds degree " +
                               std::to_string(d));
  });
  termination_report rep;
  rep.words = words.size();
  for (auto& r : results) {
    rep.steps += r.steps;
    rep.zero_steps += r.zero_steps;
    rep.longest_chain = std::max(rep.longest_chain, r.chain);
    for (auto& v : r.violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

struct uniqueness_report {
  std::size_t words = 0;
  std::size_t normal_words = 0;
  std::size_t graph_nodes = 0;
  std::vector<std::string> violations;

  [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// For every word within bounds: the reduction graph has exactly one sink and
/// it equals normalize(w); and the shape predicate, the empty-redex predicate
/// and "no outgoing edge" agree.
inline uniqueness_report audit_unique_normal_forms(std::size_t max_len, std::uint64_t max_index, unsigned jobs = 1) {
  const auto words = all_words(max_len, max_index);
  struct per_word {
    bool normal = false;
    std::size_t nodes = 0;
    std::vector<std::string> violations;
  };
  std::vector<per_word> results(words.size());
  detail::parallel_for(words.size(), jobs, [&](std::size_t n) {
    const word& w = words[n];
    auto& out = results[n];
    const reduction_graph g(w);
    const auto sinks = g.sinks();
    const word nf = normalize(w);
    out.nodes = g.nodes().size();
    if (sinks.size() != 1) out.violations.push_back(print(w) + ": " + std::to_string(sinks.size()) + " sinks");
    for (const auto& s : sinks)
      if (s != nf) out.violations.push_back(print(w) + ": sink " + print(s) + " != normalize " + print(nf));
    const bool shape = is_normal(w);
    const bool no_redex = redexes(w).empty();
    const bool is_sink = g.edges().empty();
    if (shape != no_redex || no_redex != is_sink)
      out.violations.push_back(print(w) + ": normality predicates disagree");
    out.normal = shape;
  });
  uniqueness_report rep;
  rep.words = words.size();
  for (auto& r : results) {
    rep.normal_words += r.normal ? 1 : 0;
    rep.graph_nodes += r.nodes;
    for (auto& v : r.violations) rep.violations.push_back(std::move(v));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Bounded equivalence oracle

struct oracle_result {
  bool equivalent = false;
  bool truncated = false;  // some neighbour was cut off by the degree bound
  std::size_t explored = 0;
};

/// Explores the undirected step graph (forward rule applications and their
/// inverses, including inserting e0 h0 anywhere) on words of degree <=
/// max_degree. Rule instances are generated here from the schemas directly;
/// nothing from the normalizer is used.
class bounded_oracle {
 public:
  explicit bounded_oracle(std::uint64_t max_degree) : max_degree_(max_degree) {
    const std::uint64_t top = max_degree;  // letters in range have index < max_degree
    auto add = [&](generator a, generator b, word rhs) {
      word lhs{a, b};
      if (rhs.size() == 2) backward_[rhs].push_back(lhs);
      forward_.emplace(std::move(lhs), std::move(rhs));
    };
    for (std::uint64_t x = 0; x <= top; ++x) {
      for (std::uint64_t y = 0; y <= top; ++y) {
        if (x < y) {
          add(eps(x), eps(y), word{eps(y - 1), eps(x)});
          add(eta(y), eta(x), word{eta(x), eta(y - 1)});
        }
        // eps_x eta_y
        if (x == 0 && y == 0) add(eps(x), eta(y), word{});
        else if (y == x + 1) add(eps(x), eta(y), word{eps(x), eta(x)});
        else if (y == x) add(eps(x), eta(y), word{eps(x - 1), eta(x)});
        else if (y < x) add(eps(x), eta(y), word{eta(y), eps(x - 1)});
        else add(eps(x), eta(y), word{eta(y - 1), eps(x)});
      }
    }
    for (auto& [rhs, lhss] : backward_) std::sort(lhss.begin(), lhss.end());
  }

  [[nodiscard]] std::uint64_t max_degree() const noexcept { return max_degree_; }
  [[nodiscard]] std::size_t rule_count() const noexcept { return forward_.size(); }

  struct neighbourhood {
    std::vector<word> down;  // one forward step
    std::vector<word> up;    // one inverse step, within the degree bound
    bool truncated = false;
  };

  [[nodiscard]] neighbourhood neighbours(const word& w) const {
    neighbourhood out;
    const auto d = degree(w);
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const word factor{w[p], w[p + 1]};
      if (auto it = forward_.find(factor); it != forward_.end()) out.down.push_back(replace(w, p, 2, it->second));
      if (auto it = backward_.find(factor); it != backward_.end()) {
        for (const auto& lhs : it->second) {
          // An inverse step raises the degree by exactly one.
          if (d + 1 <= max_degree_) out.up.push_back(replace(w, p, 2, lhs));
          else out.truncated = true;
        }
      }
    }
    const word unit_lhs{eps(0), eta(0)};
    for (std::size_t p = 0; p <= w.size(); ++p) {
      if (d + 2 <= max_degree_) out.up.push_back(replace(w, p, 0, unit_lhs));
      else out.truncated = true;
    }
    return out;
  }

  /// Connected component of u, in breadth-first order.
  [[nodiscard]] std::vector<word> component(const word& u, bool* truncated = nullptr) const {
    check_bound(u);
    std::vector<word> order{u};
    std::unordered_set<word> seen{u};
    bool cut = false;
    for (std::size_t n = 0; n < order.size(); ++n) {
      auto nb = neighbours(order[n]);
      cut = cut || nb.truncated;
      for (auto* list : {&nb.down, &nb.up})
        for (auto& w : *list)
          if (seen.insert(w).second) order.push_back(std::move(w));
    }
    if (truncated) *truncated = cut;
    return order;
  }

  [[nodiscard]] oracle_result equivalent(const word& u, const word& v) const {
    check_bound(u);
    check_bound(v);
    oracle_result r;
    if (u == v) {
      r.equivalent = true;
      r.explored = 1;
      return r;
    }
    std::vector<word> order{u};
    std::unordered_set<word> seen{u};
    for (std::size_t n = 0; n < order.size(); ++n) {
      auto nb = neighbours(order[n]);
      r.truncated = r.truncated || nb.truncated;
      for (auto* list : {&nb.down, &nb.up})
        for (auto& w : *list) {
          if (w == v) {
            r.equivalent = true;
            r.explored = seen.size() + 1;
            return r;
          }
          if (seen.insert(w).second) order.push_back(std::move(w));
        }
    }
    r.explored = seen.size();
    return r;
  }

 private:
  void check_bound(const word& w) const {
    if (degree(w) > max_degree_)
      throw std::invalid_argument("word " + print(w) + " has degree above the oracle bound " +
                                  std::to_string(max_degree_));
  }

  static word replace(const word& w, std::size_t p, std::size_t len, const word& with) {
    word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    out *= with;
    out *= word(w.begin() + static_cast<std::ptrdiff_t>(p + len), w.end());
    return out;
  }

  std::uint64_t max_degree_;
  std::unordered_map<word, word> forward_;
  std::unordered_map<word, std::vector<word>> backward_;
};

inline oracle_result equivalent_bounded(const word& u, const word& v, std::uint64_t max_degree) {
  return bounded_oracle(max_degree).equivalent(u, v);
}

struct oracle_discrepancy {
  word u;
  word v;
  bool oracle_equivalent;
  bool normal_forms_equal;
};

struct oracle_report {
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::size_t agree_equivalent = 0;
  std::size_t agree_inequivalent = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
  std::size_t truncated_components = 0;
  std::vector<oracle_discrepancy> discrepancies;

  [[nodiscard]] bool passed() const noexcept { return discrepancies.empty(); }
};

/// Compares the oracle with normal-form equality on every ordered pair of
/// words of length <= max_len and indices <= max_index. Since both words of
/// an equivalent pair reach their common normal form through words of no
/// larger degree, a bound at least the largest word degree makes every
/// answer definite.
inline oracle_report cross_check_oracle(std::size_t max_len, std::uint64_t max_index, std::uint64_t max_degree,
                                        unsigned jobs = 1) {
  if (max_degree < max_len * (max_index + 1))
    throw std::invalid_argument("oracle degree bound below the largest word degree");
  const bounded_oracle oracle(max_degree);
  const auto words = all_words(max_len, max_index);
  std::unordered_map<word, std::size_t> index_of;
  for (std::size_t n = 0; n < words.size(); ++n) index_of.emplace(words[n], n);

  // Component ids for the population, one BFS per unseen component.
  std::vector<std::size_t> component_of(words.size(), SIZE_MAX);
  oracle_report rep;
  rep.words = words.size();
  for (std::size_t n = 0; n < words.size(); ++n) {
    if (component_of[n] != SIZE_MAX) continue;
    bool cut = false;
    const auto members = oracle.component(words[n], &cut);
    const std::size_t id = rep.components++;
    rep.largest_component = std::max(rep.largest_component, members.size());
    if (cut) ++rep.truncated_components;
    for (const auto& m : members)
      if (auto it = index_of.find(m); it != index_of.end()) component_of[it->second] = id;
  }

  std::vector<word> nfs(words.size());
  detail::parallel_for(words.size(), jobs, [&](std::size_t n) { nfs[n] = normalize(words[n]); });

  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      ++rep.pairs;
      const bool by_oracle = component_of[a] == component_of[b];
      const bool by_nf = nfs[a] == nfs[b];
      if (by_oracle != by_nf) rep.discrepancies.push_back({words[a], words[b], by_oracle, by_nf});
      else if (by_oracle) ++rep.agree_equivalent;
      else ++rep.agree_inequivalent;
    }
  }
  return rep;
}

}  // namespace admon
