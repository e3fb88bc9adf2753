#include "rns/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rns/batch.hpp"
#include "rns/check.hpp"
#include "rns/fractal.hpp"
#include "rns/uniqueness.hpp"

namespace rns::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

// Options shared by every subcommand.
struct Common {
  long long s = 0;
  long long r = 0;
  bool as_json = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--s", c.s, "natural base s (>= 2)")->required();
  sub->add_option("--r", c.r, "largest digit r (s <= r <= 2s-2)")->required();
  sub->add_flag("--json", c.as_json, "emit a JSON document instead of text");
}

ordered_json envelope(const std::string& command, const Params& p) {
  ordered_json doc;
  doc["command"] = command;
  doc["params"] = {{"s", p.s}, {"r", p.r}};
  doc["input"] = ordered_json::object();
  doc["result"] = nullptr;
  doc["status"] = "ok";
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic for redundant base-s digit expansions"};
  app.name("rns");
  app.require_subcommand(1);

  int exit_code = 0;
  // Error reporting context, filled in once a subcommand starts running.
  std::string active_command;
  bool active_json = false;

  // ---- eval ----------------------------------------------------------
  struct {
    Common c;
    std::string seq;
    int digits = 12;
  } ev;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a digit sequence exactly");
  add_common(eval_cmd, ev.c);
  eval_cmd->add_option("--seq", ev.seq, "digit sequence, e.g. \"0,2(1,2)\"")->required();
  eval_cmd->add_option("--digits", ev.digits, "decimal places to print (default 12)");
  eval_cmd->callback([&] {
    active_command = "eval";
    active_json = ev.c.as_json;
    const Params p = make_params(ev.c.s, ev.c.r);
    const DigitSeq seq = parse_digit_seq(ev.seq);
    const Rational x = eval(seq, p);
    ordered_json doc = envelope("eval", p);
    doc["input"] = {{"seq", format_digit_seq(seq)}};
    doc["result"] = {{"value", to_string(x)},
                     {"decimal", decimal_string(x, ev.digits)}};
    if (ev.c.as_json) {
      out << doc.dump(2) << "\n";
    } else {
      out << "value = " << to_string(x) << "\n";
      out << "decimal = " << decimal_string(x, ev.digits) << "\n";
    }
  });

  // ---- classify ------------------------------------------------------
  struct {
    Common c;
    std::string x;
    std::string seq;
    std::size_t max_states = kDefaultMaxStates;
  } cl;
  auto* classify_cmd =
      app.add_subcommand("classify", "count or classify the expansions of a number");
  add_common(classify_cmd, cl.c);
  auto* cl_x = classify_cmd->add_option("--x", cl.x, "number, e.g. \"7/12\" or \"0.625\"");
  auto* cl_seq = classify_cmd->add_option("--seq", cl.seq, "digit sequence whose value to classify");
  classify_cmd->add_option("--max-states", cl.max_states, "remainder state cap (default 1000000)");
  cl_x->excludes(cl_seq);
  cl_seq->excludes(cl_x);
  classify_cmd->callback([&] {
    active_command = "classify";
    active_json = cl.c.as_json;
    const Params p = make_params(cl.c.s, cl.c.r);
    if (cl.x.empty() == cl.seq.empty()) {
      fail(ErrorCode::ParseError, "provide exactly one of --x and --seq");
    }
    ordered_json doc = envelope("classify", p);
    Rational x;
    ordered_json seq_fields;
    if (!cl.seq.empty()) {
      const DigitSeq seq = parse_digit_seq(cl.seq);
      x = eval(seq, p);
      doc["input"] = {{"seq", format_digit_seq(seq)}};
      const bool interior = x != 0 && x != p.max_value();
      seq_fields["criterion_unique"] =
          interior ? ordered_json(criterion_unique(seq, p)) : ordered_json(nullptr);
      seq_fields["e_form"] = e_form(seq, p);
      seq_fields["has_forbidden_period"] = has_forbidden_period(seq, p);
      seq_fields["continuum_certificate"] = continuum_certificate(seq, p);
    } else {
      x = parse_number(cl.x, p);
      doc["input"] = {{"x", cl.x}};
    }
    const RemainderAutomaton a = build_automaton(x, p, cl.max_states);
    const RepClass cls = classify_automaton(a);
    ordered_json result;
    result["x"] = to_string(x);
    result["class"] = rep_tag_name(cls.tag);
    result["count"] = (cls.tag == RepTag::Unique || cls.tag == RepTag::Finite)
                          ? ordered_json(cls.count.str())
                          : ordered_json(nullptr);
    result["automaton_states"] = a.size();
    for (auto& [key, value] : seq_fields.items()) result[key] = value;
    doc["result"] = result;
    if (cl.c.as_json) {
      out << doc.dump(2) << "\n";
    } else {
      out << "x = " << to_string(x) << "\n";
      out << "class = " << to_string(cls) << "\n";
      out << "automaton states = " << a.size() << "\n";
      for (auto& [key, value] : seq_fields.items()) {
        out << key << " = " << value.dump() << "\n";
      }
    }
  });

  // ---- enumerate -----------------------------------------------------
  struct {
    Common c;
    std::string x;
    std::size_t max_pre = 2;
    std::size_t max_period = 2;
    std::size_t max_states = kDefaultMaxStates;
  } en;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list eventually periodic expansions of a number");
  add_common(enum_cmd, en.c);
  enum_cmd->add_option("--x", en.x, "number to expand")->required();
  enum_cmd->add_option("--max-pre", en.max_pre, "preperiod length bound (default 2)");
  enum_cmd->add_option("--max-period", en.max_period, "period length bound (default 2)");
  enum_cmd->add_option("--max-states", en.max_states, "remainder state cap");
  enum_cmd->callback([&] {
    active_command = "enumerate";
    active_json = en.c.as_json;
    const Params p = make_params(en.c.s, en.c.r);
    const Rational x = parse_number(en.x, p);
    const std::vector<DigitSeq> seqs =
        enumerate_lassos(x, p, en.max_pre, en.max_period, en.max_states);
    ordered_json doc = envelope("enumerate", p);
    doc["input"] = {{"x", to_string(x)},
                    {"max_pre", en.max_pre},
                    {"max_period", en.max_period}};
    ordered_json list = ordered_json::array();
    for (const DigitSeq& s : seqs) list.push_back(format_digit_seq(s));
    doc["result"] = {{"count", seqs.size()}, {"sequences", list}};
    if (en.c.as_json) {
      out << doc.dump(2) << "\n";
    } else {
      out << seqs.size() << " expansion(s)\n";
      for (const DigitSeq& s : seqs) out << format_digit_seq(s) << "\n";
    }
  });

  // ---- dimension -----------------------------------------------------
  struct {
    Common c;
    std::size_t depth = 20;
  } di;
  auto* dim_cmd = app.add_subcommand(
      "dimension", "fractal dimension of the set of uniquely represented numbers");
  add_common(dim_cmd, di.c);
  dim_cmd->add_option("--depth", di.depth, "prefix depth for the growth estimate (default 20)");
  dim_cmd->callback([&] {
    active_command = "dimension";
    active_json = di.c.as_json;
    const Params p = make_params(di.c.s, di.c.r);
    const DimensionReport rep = dimension_report(p, di.depth);
    ordered_json doc = envelope("dimension", p);
    doc["input"] = {{"depth", di.depth}};
    ordered_json counts = ordered_json::array();
    for (const BigInt& c : rep.prefix_counts) counts.push_back(c.str());
    doc["result"] = {{"formula", rep.formula_value},
                     {"estimate", rep.estimate ? ordered_json(*rep.estimate)
                                               : ordered_json(nullptr)},
                     {"degenerate", rep.degenerate},
                     {"depth", rep.depth},
                     {"prefix_counts", counts}};
    if (di.c.as_json) {
      out << doc.dump(2) << "\n";
    } else {
      out << "formula = " << format_double(rep.formula_value) << "\n";
      if (rep.estimate) {
        out << "estimate = " << format_double(*rep.estimate) << "\n";
      } else {
        out << "estimate = n/a (single-digit window: prefix counts stop growing)\n";
      }
      out << "prefix counts (depth 1.." << rep.depth + 1 << "): ";
      for (std::size_t i = 0; i < rep.prefix_counts.size(); ++i) {
        if (i > 0) out << ", ";
        out << rep.prefix_counts[i].str();
      }
      out << "\n";
    }
  });

  // ---- measure -------------------------------------------------------
  auto* measure_cmd =
      app.add_subcommand("measure", "Lebesgue-measure evidence for the middle-window sets");
  measure_cmd->require_subcommand(1);

  struct {
    Common c;
    std::size_t n = 1;
    std::size_t depth = 0;
  } mb;
  auto* bound_cmd = measure_cmd->add_subcommand(
      "bound", "exact cylinder-cover bounds for B_n, shrinking geometrically");
  add_common(bound_cmd, mb.c);
  bound_cmd->add_option("--n", mb.n, "window position cutoff n (>= 1)")->required();
  bound_cmd->add_option("--depth", mb.depth, "largest cover depth (default n+9)");
  bound_cmd->callback([&] {
    active_command = "measure bound";
    active_json = mb.c.as_json;
    const Params p = make_params(mb.c.s, mb.c.r);
    const std::size_t depth = mb.depth == 0 ? mb.n + 9 : mb.depth;
    ordered_json doc = envelope("measure", p);
    doc["command"] = "measure bound";
    doc["input"] = {{"n", mb.n}, {"depth", depth}};
    ordered_json rows = ordered_json::array();
    for (std::size_t d = mb.n; d <= depth; ++d) {
      const MeasureBound b = measure_bound_Bn(p, mb.n, d);
      rows.push_back({{"depth", d},
                      {"bound", to_string(b.bound)},
                      {"decimal", decimal_string(b.bound, 12)}});
    }
    const Rational step(p.middle_size(), p.s);
    doc["result"] = {{"rows", rows}, {"step_ratio", to_string(step)}};
    if (mb.c.as_json) {
      out << doc.dump(2) << "\n";
    } else {
      out << "cover bounds for B_" << mb.n << " (each step shrinks by "
          << to_string(step) << ")\n";
      for (std::size_t d = mb.n; d <= depth; ++d) {
        const MeasureBound b = measure_bound_Bn(p, mb.n, d);
        out << "depth " << d << ": " << to_string(b.bound) << " = "
            << decimal_string(b.bound, 12) << "\n";
      }
    }
  });

  struct {
    Common c;
    std::uint64_t q_max = 500;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::size_t max_states = kDefaultMaxStates;
  } mc;
  auto* mc_cmd = measure_cmd->add_subcommand(
      "mc", "classify random rationals and report the continuum fraction");
  add_common(mc_cmd, mc.c);
  mc_cmd->add_option("--qmax", mc.q_max, "denominators drawn uniformly from [2, qmax]");
  mc_cmd->add_option("--samples", mc.samples, "number of random rationals (default 10000)");
  mc_cmd->add_option("--seed", mc.seed, "RNG seed (default 1)");
  mc_cmd->add_option("--max-states", mc.max_states, "remainder state cap");
  mc_cmd->callback([&] {
    active_command = "measure mc";
    active_json = mc.c.as_json;
    const Params p = make_params(mc.c.s, mc.c.r);
    const MonteCarloResult res =
        monte_carlo_continuum_fraction(p, mc.q_max, mc.samples, mc.seed, mc.max_states);
    ordered_json doc = envelope("measure", p);
    doc["command"] = "measure mc";
    doc["input"] = {{"q_max", mc.q_max}, {"samples", mc.samples}, {"seed", mc.seed}};
    doc["result"] = {{"fraction", res.fraction},
                     {"tally",
                      {{"unique", res.unique_count},
                       {"finite", res.finite_count},
                       {"countably_infinite", res.countably_infinite_count},
                       {"continuum", res.continuum_count},
                       {"state_limit_exceeded", res.state_limit_count}}},
                     {"rng", res.rng_algorithm}};
    if (mc.c.as_json) {
      out << doc.dump(2) << "\n";
    } else {
      out << "samples = " << res.samples << " (seed " << mc.seed << ", q_max "
          << mc.q_max << ", rng " << res.rng_algorithm << ")\n";
      out << "continuum fraction = " << format_double(res.fraction) << "\n";
      out << "tally: unique " << res.unique_count << ", finite " << res.finite_count
          << ", countably infinite " << res.countably_infinite_count << ", continuum "
          << res.continuum_count << ", state limit " << res.state_limit_count << "\n";
    }
  });

  // ---- check ---------------------------------------------------------
  struct {
    Common c;
    int smax = 5;
    std::uint64_t cases = 500;
    std::uint64_t seed = 1;
    std::size_t max_states = kDefaultMaxStates;
    std::string report;
  } ck;
  auto* check_cmd = app.add_subcommand(
      "check", "run the seeded cross-validation suites (closed forms vs automaton)");
  check_cmd->add_option("--smax", ck.smax, "largest base to draw systems from (default 5)");
  check_cmd->add_option("--cases", ck.cases, "cases per suite (default 500)");
  check_cmd->add_option("--seed", ck.seed, "RNG seed (default 1)");
  check_cmd->add_option("--max-states", ck.max_states, "remainder state cap");
  check_cmd->add_option("--report", ck.report, "also write the JSON report to this path");
  check_cmd->add_flag("--json", ck.c.as_json, "emit a JSON document instead of text");
  check_cmd->callback([&] {
    active_command = "check";
    active_json = ck.c.as_json;
    const std::vector<SuiteResult> suites =
        run_check_suites(ck.smax, ck.cases, ck.seed, ck.max_states);
    bool all_passed = true;
    ordered_json rows = ordered_json::array();
    for (const SuiteResult& s : suites) {
      all_passed = all_passed && s.passed();
      rows.push_back({{"name", s.name},
                      {"cases", s.cases},
                      {"failures", s.failures},
                      {"failure_samples", s.failure_samples}});
    }
    ordered_json doc;
    doc["command"] = "check";
    doc["params"] = {{"smax", ck.smax}, {"cases", ck.cases}, {"seed", ck.seed}};
    doc["input"] = ordered_json::object();
    doc["result"] = {{"suites", rows}, {"passed", all_passed}};
    doc["status"] = "ok";
    if (!ck.report.empty()) {
      std::ofstream file(ck.report);
      if (!file) {
        fail(ErrorCode::ParseError, "cannot open report path " + ck.report);
      }
      file << doc.dump(2) << "\n";
    }
    if (ck.c.as_json) {
      out << doc.dump(2) << "\n";
    } else {
      for (const SuiteResult& s : suites) {
        if (s.passed()) {
          out << "PASS " << s.name << " (" << s.cases << " cases)\n";
        } else {
          out << "FAIL " << s.name << " (" << s.failures << "/" << s.cases
              << " cases failed)\n";
          for (const std::string& sample : s.failure_samples) {
            out << "     " << sample << "\n";
          }
        }
      }
      out << (all_passed ? "all suites passed" : "some suites FAILED") << "\n";
    }
    if (!all_passed) exit_code = 1;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    if (active_json) {
      ordered_json doc;
      doc["command"] = active_command;
      doc["result"] = nullptr;
      doc["status"] = "error";
      doc["error_code"] = e.code_name();
      doc["error_message"] = e.what();
      out << doc.dump(2) << "\n";
    }
    err << "error [" << e.code_name() << "] " << e.what() << "\n";
    return e.code() == ErrorCode::StateLimitExceeded ? 3 : 2;
  }
  return exit_code;
}

}  // namespace rns::cli
