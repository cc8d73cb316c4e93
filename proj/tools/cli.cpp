#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "admon/admon.hpp"
#include "admon/json.hpp"

namespace admon::cli {
namespace {

struct options {
  bool json = false;
  unsigned jobs = 1;
};

class printer {
 public:
  printer(std::ostream& out, bool json) : out_(out), json_(json) {}

  [[nodiscard]] bool json() const noexcept { return json_; }

  void line(const std::string& text) { out_ << text << '\n'; }
  void record(const nlohmann::json& j) { out_ << j.dump() << '\n'; }

 private:
  std::ostream& out_;
  bool json_;
};

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string check_line(const identity_check& c) {
  if (c.passed()) return c.id + "  PASS (" + std::to_string(c.instances) + " instances)";
  std::string at;
  for (const auto& w : c.failure->at) at += (at.empty() ? "" : ",") + print(w);
  if (c.failure->at.size() > 1) at = "(" + at + ")";
  return c.id + "  FAIL at m=" + (at.empty() ? "-" : at) + ": lhs=" + print(c.failure->lhs) +
         " rhs=" + print(c.failure->rhs);
}

int emit_report(printer& p, const identity_report& r) {
  for (const auto& c : r.checks) {
    if (p.json()) p.record(to_json(c));
    else p.line(check_line(c));
  }
  return r.passed() ? exit_ok : exit_fail;
}

std::string condition_line(const condition_result& c) {
  if (c.holds) return c.id + "  HOLDS";
  std::string s = c.id + "  DOES NOT HOLD";
  if (c.at) s += " at m=" + print(*c.at);
  return s + ": lhs=" + print(c.lhs) + " rhs=" + print(c.rhs);
}

void emit_prop3(printer& p, const prop3_report& r) {
  for (const auto* c : {&r.f_fixes_eta, &r.f_fixes_eps, &r.eta_eps_is_unit, &r.f_is_inner}) {
    if (p.json()) p.record(to_json(*c));
    else p.line(condition_line(*c));
  }
  const auto derived = r.derived_iso();
  const std::string value = derived ? (*derived ? "true" : "false") : "inconsistent";
  if (p.json()) {
    p.record({{"id", prop3_ids::derived}, {"derived", value}});
  } else {
    p.line(std::string(prop3_ids::derived) + "  DERIVED " + value + " (equivalent to the criteria above)");
  }
}

void emit_trace(printer& p, const trace& t) {
  if (p.json()) {
    p.record(to_json(t));
    return;
  }
  for (const auto& s : t.steps)
    p.line(print(s.before) + "  [" + std::string(to_string(s.rule.which)) + " @ " + std::to_string(s.position) + "]");
  p.line(print(t.result()));
}

int emit_confluence(printer& p, const confluence_report& r) {
  if (!p.json()) p.line(pad("family", 8) + pad("instances", 11) + pad("joinable", 10) + pad("stated", 10) + "sample bound");
  for (const auto& row : r.rows) {
    if (p.json()) {
      p.record(to_json(row));
      continue;
    }
    std::string sample = "NOT INSTANTIATED";
    if (row.sample) {
      sample = print(row.sample->parent) + " -> " +
               (row.sample->bound_found ? print(*row.sample->bound_found) : std::string("NOT_JOINABLE"));
    }
    const std::string stated =
        row.stated_checked == 0 ? "-" : std::to_string(row.stated_reached) + "/" + std::to_string(row.stated_checked);
    p.line(pad(to_string(row.family), 8) + pad(std::to_string(row.instances), 11) +
           pad(std::to_string(row.joinable), 10) + pad(stated, 10) + sample);
  }
  const auto& g = r.row(overlap_family::ehh_g);
  for (const auto& cp : r.not_joinable) {
    if (p.json()) {
      p.record({{"not_joinable", to_json(cp)}});
    } else {
      const auto [left, right] = not_joinable_evidence(cp);
      p.line("NOT_JOINABLE " + print(cp.parent) + ": " + std::to_string(left.nodes().size()) + " vs " +
             std::to_string(right.nodes().size()) + " reachable words, none shared");
    }
  }
  std::string missing;
  for (auto f : r.not_instantiated()) missing += (missing.empty() ? "" : " ") + std::string(to_string(f));
  if (p.json()) {
    p.record({{"displayed_V_g_bound_reached", g.displayed_reached},
              {"displayed_V_g_bound_checked", g.displayed_checked},
              {"not_instantiated", missing},
              {"local_confluence", r.passed() ? "PASS" : "FAIL"}});
  } else {
    p.line("V_g displayed bound e_k h_{j-2} h_{i-1} reached: " + std::to_string(g.displayed_reached) + "/" +
           std::to_string(g.displayed_checked) + " (derived bound h_{k-1} h_{j-2} e_i: " +
           std::to_string(g.stated_reached) + "/" + std::to_string(g.stated_checked) + ")");
    if (!missing.empty()) p.line("NOT INSTANTIATED: " + missing);
    p.line(std::string("local confluence  ") + (r.passed() ? "PASS" : "FAIL"));
  }
  return r.passed() ? exit_ok : exit_fail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical forms and audits for the initial monoid adjunction", "admon"};
  app.require_subcommand(1);
  app.fallthrough();
  options opts;
  app.add_flag("--json", opts.json, "line-delimited JSON output");
  app.add_option("--jobs", opts.jobs, "worker threads for audits")->check(CLI::PositiveNumber);

  std::function<int()> action;
  std::vector<std::string> words;
  // Per-verb bounds: CLI11 writes a default into its variable when declared.
  struct bounds {
    std::size_t max_len = 0;
    std::uint64_t max_index = 0;
  } axioms_b, ncheck_b, audit_b, oracle_b, answer_b;
  std::uint64_t max_degree = 9;
  std::size_t samples = 64;
  std::uint64_t search_bound = 12;
  std::optional<std::string> member;


  auto* normalize_cmd = app.add_subcommand("normalize", "print the canonical form of each word");
  normalize_cmd->add_option("words", words, "words")->required();
  normalize_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      for (const auto& text : words) {
        const word w = parse(text);
        const word nf = normalize(w);
        if (pr.json()) pr.record({{"input", print(w)}, {"normal_form", print(nf)}});
        else pr.line(print(nf));
      }
      return exit_ok;
    };
  });

  auto* trace_cmd = app.add_subcommand("trace", "show the leftmost reduction to canonical form");
  trace_cmd->add_option("word", words, "word")->required()->expected(1);
  trace_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      emit_trace(pr, normalize_trace(parse(words.at(0))));
      return exit_ok;
    };
  });

  auto* eq_cmd = app.add_subcommand("eq", "decide whether two words denote the same element");
  eq_cmd->add_option("words", words, "two words")->required()->expected(2);
  eq_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      const word a = normalize(parse(words.at(0)));
      const word b = normalize(parse(words.at(1)));
      if (pr.json())
        pr.record({{"u", words[0]}, {"v", words[1]}, {"equal", a == b}, {"normal_forms", {print(a), print(b)}}});
      else
        pr.line(a == b ? "equal" : "not-equal");
      return exit_ok;
    };
  });

  auto* mul_cmd = app.add_subcommand("mul", "canonical form of the product of the words");
  mul_cmd->add_option("words", words, "factors")->required();
  mul_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      element acc = element::identity();
      for (const auto& text : words) acc = acc * element::from_word(parse(text));
      if (pr.json()) pr.record({{"product", print(acc.nf())}});
      else pr.line(print(acc.nf()));
      return exit_ok;
    };
  });

  auto* f_cmd = app.add_subcommand("f", "apply the index-shift endomorphism f");
  f_cmd->add_option("word", words, "word")->required()->expected(1);
  f_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      const element a = apply_f(element::from_word(parse(words.at(0))));
      if (pr.json()) pr.record({{"input", words[0]}, {"f", print(a.nf())}});
      else pr.line(print(a.nf()));
      return exit_ok;
    };
  });

  auto* degree_cmd = app.add_subcommand("degree", "sum of (index + 1) over the letters");
  degree_cmd->add_option("word", words, "word")->required()->expected(1);
  degree_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      const auto d = degree(parse(words.at(0)));
      if (pr.json()) pr.record({{"input", words[0]}, {"degree", d}});
      else pr.line(std::to_string(d));
      return exit_ok;
    };
  });

  auto* axioms_cmd = app.add_subcommand("axioms", "check the defining identities on all small elements");
  axioms_cmd->add_option("--max-len", axioms_b.max_len, "canonical length bound")->default_val(4);
  axioms_cmd->add_option("--max-index", axioms_b.max_index, "letter index bound")->default_val(3);
  axioms_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      return emit_report(pr, check_axioms(axioms_b.max_len, axioms_b.max_index, opts.jobs));
    };
  });

  auto* ncheck_cmd = app.add_subcommand("ncheck", "closure of N = eps f(M), or membership of one element");
  ncheck_cmd->add_option("--max-len", ncheck_b.max_len, "canonical length bound")->default_val(3);
  ncheck_cmd->add_option("--max-index", ncheck_b.max_index, "letter index bound")->default_val(2);
  ncheck_cmd->add_option("--member", member, "search for a witness m' with eps*f(m') = WORD");
  ncheck_cmd->add_option("--bound", search_bound, "degree bound for the witness search")->default_val(12);
  ncheck_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      if (member) {
        const element a = element::from_word(parse(*member));
        const auto w = in_N(a, search_bound);
        if (pr.json()) {
          nlohmann::json j{{"element", print(a.nf())}, {"member", w.has_value()}, {"bound", search_bound}};
          if (w) j["witness"] = print(w->nf());
          pr.record(j);
        } else if (w) {
          pr.line("member  witness m'=" + print(w->nf()));
        } else {
          pr.line("no witness with degree <= " + std::to_string(search_bound));
        }
        return exit_ok;
      }
      return emit_report(pr, check_N_closure(ncheck_b.max_len, ncheck_b.max_index, opts.jobs));
    };
  });

  auto* prop3_cmd = app.add_subcommand("prop3", "evaluate the criteria equivalent to f being an isomorphism");
  prop3_cmd->callback([&] {
    action = [&] {
      printer pr(out, opts.json);
      emit_prop3(pr, evaluate_prop3());
      return exit_ok;
    };
  });

  auto* audit_cmd = app.add_subcommand("audit", "termination and local confluence audit");
  audit_cmd->add_option("--max-index", audit_b.max_index, "letter index bound for overlaps")->default_val(6);
  audit_cmd->add_option("--samples", samples, "disjoint-redex sample size")->default_val(64);
  audit_cmd->add_option("--max-len", audit_b.max_len, "word length bound for termination/uniqueness")->default_val(4);
  audit_cmd->callback([&] {
    action = [&]() -> int {
      if (audit_b.max_index < 2) throw CLI::ValidationError("--max-index", "must be at least 2");
      printer pr(out, opts.json);
      int status = emit_confluence(pr, audit_local_confluence(audit_b.max_index, samples, opts.jobs));
      const std::uint64_t word_index = std::min<std::uint64_t>(audit_b.max_index, 3);
      const auto term = audit_termination(audit_b.max_len, word_index, opts.jobs);
      const auto uniq = audit_unique_normal_forms(audit_b.max_len, word_index, opts.jobs);
      const std::string population =
          "words len<=" + std::to_string(audit_b.max_len) + " index<=" + std::to_string(word_index);
      if (pr.json()) {
        pr.record({{"termination", term.passed() ? "PASS" : "FAIL"},
                   {"words", term.words},
                   {"steps", term.steps},
                   {"longest_chain", term.longest_chain}});
        pr.record({{"unique_normal_forms", uniq.passed() ? "PASS" : "FAIL"}, {"words", uniq.words}});
      } else {
        pr.line(std::string("termination  ") + (term.passed() ? "PASS" : "FAIL") + " (" + population + ", " +
                std::to_string(term.steps) + " steps)");
        for (const auto& v : term.violations) pr.line("  " + v);
        pr.line(std::string("unique normal forms  ") + (uniq.passed() ? "PASS" : "FAIL") + " (" + population + ")");
        for (const auto& v : uniq.violations) pr.line("  " + v);
      }
      if (!term.passed() || !uniq.passed()) status = exit_fail;
      return status;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "bounded equivalence without normal forms");
  oracle_cmd->add_option("words", words, "optional pair of words")->expected(0, 2);
  oracle_cmd->add_option("--max-degree", max_degree, "degree bound of explored words")->default_val(9);
  oracle_cmd->add_option("--max-len", oracle_b.max_len, "cross-check word length bound")->default_val(3);
  oracle_cmd->add_option("--max-index", oracle_b.max_index, "cross-check letter index bound")->default_val(2);
  oracle_cmd->callback([&] {
    action = [&]() -> int {
      printer pr(out, opts.json);
      if (words.size() == 1) throw CLI::ValidationError("words", "give two words or none");
      if (words.size() == 2) {
        const auto r = equivalent_bounded(parse(words[0]), parse(words[1]), max_degree);
        const std::string verdict = r.equivalent ? "equivalent" : "not-equivalent-within-bound";
        if (pr.json()) {
          pr.record({{"u", words[0]},
                     {"v", words[1]},
                     {"result", verdict},
                     {"truncated", r.truncated},
                     {"explored", r.explored}});
        } else {
          pr.line(verdict);
        }
        return exit_ok;
      }
      const auto r = cross_check_oracle(oracle_b.max_len, oracle_b.max_index, max_degree, opts.jobs);
      if (pr.json()) {
        pr.record({{"pairs", r.pairs},
                   {"agree_equivalent", r.agree_equivalent},
                   {"agree_inequivalent", r.agree_inequivalent},
                   {"discrepancies", r.discrepancies.size()},
                   {"components", r.components},
                   {"largest_component", r.largest_component},
                   {"status", r.passed() ? "PASS" : "FAIL"}});
      } else {
        pr.line("pairs " + std::to_string(r.pairs) + ", equivalent " + std::to_string(r.agree_equivalent) +
                ", inequivalent " + std::to_string(r.agree_inequivalent) + ", components " +
                std::to_string(r.components) + " (largest " + std::to_string(r.largest_component) + " words)");
        for (const auto& d : r.discrepancies)
          pr.line("DISCREPANCY " + print(d.u) + " / " + print(d.v) + ": oracle " +
                  (d.oracle_equivalent ? "equivalent" : "not equivalent") + ", normal forms " +
                  (d.normal_forms_equal ? "equal" : "differ"));
        pr.line(std::string("oracle cross-check  ") + (r.passed() ? "PASS" : "FAIL"));
      }
      return r.passed() ? exit_ok : exit_fail;
    };
  });

  auto* answer_cmd = app.add_subcommand("answer", "is every adjunction between monoids an isomorphism?");
  answer_cmd->add_option("--max-index", answer_b.max_index, "index bound of the certifying audit")->default_val(6);
  answer_cmd->callback([&] {
    action = [&]() -> int {
      if (answer_b.max_index < 2) throw CLI::ValidationError("--max-index", "must be at least 2");
      printer pr(out, opts.json);
      const auto v = certified_answer(answer_b.max_index, opts.jobs);
      const bool certified = v.confluence_certified.value_or(false);
      const std::string verdict = v.verdict == iso_verdict::not_iso ? "NOT_ISO" : "ISO";
      if (pr.json()) {
        pr.record({{"eta*eps", to_json(v.eta_eps)}});
        pr.record({{"eps*eta", to_json(v.eps_eta)}});
        pr.record({{"(eta*eps)^2", print(v.eta_eps_squared)}});
        emit_prop3(pr, v.criteria);
        pr.record({{"confluence_audit", certified ? "PASS" : "FAIL"}, {"max_index", answer_b.max_index}});
        pr.record({{"verdict", verdict}, {"witness", print(v.eta_eps.result())}});
      } else {
        pr.line("eta*eps:");
        emit_trace(pr, v.eta_eps);
        pr.line("eps*eta:");
        emit_trace(pr, v.eps_eta);
        pr.line("(eta*eps)^2 = " + print(v.eta_eps_squared));
        emit_prop3(pr, v.criteria);
        pr.line("confluence audit (max-index " + std::to_string(answer_b.max_index) + ")  " +
                (certified ? "PASS" : "FAIL"));
        if (v.verdict == iso_verdict::not_iso) {
          pr.line("verdict  NOT_ISO: eta*eps = " + print(v.eta_eps.result()) +
                  " is canonical and != 1, so some adjunction between monoids is not an isomorphism");
        } else {
          pr.line("verdict  ISO");
        }
      }
      return certified ? exit_ok : exit_fail;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    return action();
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace admon::cli
