#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmian/abelian_returns.hpp"
#include "sturmian/binary_word.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/delta_sequence.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"
#include "sturmian/induction.hpp"
#include "sturmian/interval_exchange.hpp"
#include "sturmian/io.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/sampling.hpp"

// Command-line surface. Everything funnels through run(args, out, err) so the
// test suite can drive the binary in-process. Exit codes: 0 success,
// 1 mathematical error (infinite return set, iteration caps), 2 parse or
// configuration error, 3 verification failure.

namespace sturmian::cli {

using Json = nlohmann::ordered_json;

struct SlopeInput {
  ContinuedFraction cf;
  FieldElement alpha;
};

// Slope text is either a continued fraction "[0;...]" (period parentheses
// required for irrationals) or a field element such as "(3-sqrt(5))/2".
// Nothing is guessed from decimals: a decimal literal is an exact rational
// and gets rejected here like any other rational slope.
inline SlopeInput parse_slope(const std::string& text) {
  ContinuedFraction cf = [&] {
    if (text.find('[') != std::string::npos) return parse_continued_fraction(text);
    const FieldElement x = parse_field_element(text);
    if (x.sign() <= 0 || x >= 1)
      throw ParseError("slope must lie strictly between 0 and 1");
    return continued_fraction_of(x);
  }();
  if (cf.is_rational())
    throw ParseError("slope must be irrational: give a periodic continued "
                     "fraction or a quadratic irrational");
  return {cf, cf_to_field(cf)};
}

namespace detail {

inline std::vector<BinaryWord> by_length_lex(const std::set<BinaryWord>& words) {
  std::vector<BinaryWord> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

inline std::string braces(const std::set<BinaryWord>& words) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : by_length_lex(words)) {
    if (!first) out += ", ";
    out += w.str();
    first = false;
  }
  return out + "}";
}

inline Json json_words(const std::set<BinaryWord>& words) {
  Json arr = Json::array();
  for (const auto& w : by_length_lex(words)) arr.push_back(w.str());
  return arr;
}

inline std::string with_approx(const FieldElement& x) {
  return to_string(x) + " ~ " + approx_string(x);
}

inline Json json_slope(const SlopeInput& slope) {
  return Json{{"cf", to_string(slope.cf)}, {"alpha", to_string(slope.alpha)}};
}

inline std::string case_name(CardinalityCase tag) {
  switch (tag) {
    case CardinalityCase::i_a: return "i_a";
    case CardinalityCase::i_b: return "i_b";
    default: return "ii";
  }
}

inline std::string permutation_name(Permutation tag) {
  return tag == Permutation::swap2 ? "(21)" : "(321)";
}

inline std::string interval_text(const FieldElement& left, const FieldElement& right) {
  return "[" + to_string(left) + ", " + to_string(right) + ")";
}

// Left-aligned column printer for the piece and delta tables.
inline std::string layout(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace detail

inline std::string cmd_apr(const SlopeInput& slope, const FieldElement& rho,
                           const std::string& format) {
  const ReturnSetResult res = apr_set(slope.cf, rho);
  const CardinalityResult card = apr_cardinality(slope.cf, rho);
  if (card.count != res.n_apr)
    throw std::logic_error("cardinality formula disagrees with the computed set");
  if (format == "json") {
    Json j{{"schema", 1},
           {"command", "apr"},
           {"slope", detail::json_slope(slope)},
           {"intercept", to_string(rho)},
           {"minimal", Json{{"k0", res.k0}, {"s0", res.s0}}},
           {"case", detail::case_name(card.tag)},
           {"r_set", detail::json_words(res.r_set)},
           {"r_prime_set", detail::json_words(res.r_prime_set)},
           {"apr", detail::json_words(res.apr)},
           {"counts", Json{{"r", res.n_r},
                           {"r_prime", res.n_rprime},
                           {"apr", res.n_apr}}}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "slope      " << to_string(slope.cf)
      << "   alpha = " << detail::with_approx(slope.alpha) << "\n";
  out << "intercept  " << detail::with_approx(rho) << "\n";
  out << "minimal    (k0,s0) = (" << res.k0 << "," << res.s0 << ")\n";
  out << "case       " << detail::case_name(card.tag) << "\n";
  out << "R    (" << res.n_r << ")  " << detail::braces(res.r_set) << "\n";
  out << "R'   (" << res.n_rprime << ")  " << detail::braces(res.r_prime_set) << "\n";
  out << "APR  (" << res.n_apr << ")  " << detail::braces(res.apr) << "\n";
  return out.str();
}

inline std::string cmd_itineraries(const SlopeInput& slope, const FieldElement& left,
                                   const FieldElement& right, long long cap,
                                   const std::string& format) {
  const InductionResult res =
      induce(make_two_iet(slope.alpha), left, right, cap);
  const IntervalExchange& ind = res.induced;
  if (format == "json") {
    Json pieces = Json::array();
    for (const auto& p : res.pieces)
      pieces.push_back(Json{{"left", to_string(p.left)},
                            {"right", to_string(p.right)},
                            {"return_time", p.return_time},
                            {"itinerary", p.itinerary.str()},
                            {"translation", to_string(p.translation)}});
    Json breakpoints = Json::array();
    for (std::size_t i = 0; i + 1 < ind.interval_count(); ++i)
      breakpoints.push_back(to_string(ind.breakpoint(i)));
    Json translations = Json::array();
    for (std::size_t i = 0; i < ind.interval_count(); ++i)
      translations.push_back(to_string(ind.translation(i)));
    Json j{{"schema", 1},
           {"command", "itineraries"},
           {"slope", detail::json_slope(slope)},
           {"interval", Json{{"left", to_string(left)}, {"right", to_string(right)}}},
           {"pieces", pieces},
           {"induced", Json{{"intervals", ind.interval_count()},
                            {"permutation", detail::permutation_name(ind.permutation())},
                            {"breakpoints", breakpoints},
                            {"translations", translations}}}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "slope     " << to_string(slope.cf)
      << "   alpha = " << detail::with_approx(slope.alpha) << "\n";
  out << "interval  " << detail::interval_text(left, right) << " ~ ["
      << approx_string(left) << ", " << approx_string(right) << ")\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"piece", "return", "itinerary", "translation"});
  for (const auto& p : res.pieces)
    rows.push_back({detail::interval_text(p.left, p.right),
                    std::to_string(p.return_time), p.itinerary.str(),
                    to_string(p.translation)});
  out << detail::layout(rows);
  out << "\ninduced map: " << ind.interval_count() << " intervals, permutation "
      << detail::permutation_name(ind.permutation()) << "\n";
  for (std::size_t i = 0; i < ind.interval_count(); ++i) {
    out << "  [" << to_string(ind.left_endpoint(i)) << ", "
        << to_string(ind.right_endpoint(i))
        << ")  ->  x + " << to_string(ind.translation(i)) << "\n";
  }
  return out.str();
}

inline std::string cmd_delta_table(const SlopeInput& slope, long long count,
                                   const FieldElement* rho,
                                   const std::string& format) {
  DeltaStream stream(slope.cf);
  std::vector<DeltaValue> values;
  for (long long i = 0; i < count; ++i) values.push_back(stream.next());
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i].value < values[i - 1].value))
      throw std::logic_error("delta stream is not strictly decreasing");
  MinimalIndices minimal;
  if (rho) minimal = minimal_indices(slope.cf, *rho);
  if (format == "json") {
    Json rows = Json::array();
    for (const auto& v : values)
      rows.push_back(Json{{"flat", v.flat_index},
                          {"k", v.k},
                          {"s", v.s},
                          {"value", to_string(v.value)}});
    Json j{{"schema", 1},
           {"command", "delta-table"},
           {"slope", detail::json_slope(slope)},
           {"rows", rows},
           {"strictly_decreasing", true}};
    if (rho)
      j["minimal"] = Json{{"intercept", to_string(*rho)},
                          {"k0", minimal.k},
                          {"s0", minimal.s},
                          {"flat", minimal.flat_index}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "slope  " << to_string(slope.cf)
      << "   alpha = " << detail::with_approx(slope.alpha) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"flat", "k", "s", "delta", "approx", ""});
  for (const auto& v : values)
    rows.push_back({std::to_string(v.flat_index), std::to_string(v.k),
                    std::to_string(v.s), to_string(v.value),
                    approx_string(v.value),
                    rho && v.flat_index == minimal.flat_index ? "<- minimal" : ""});
  out << detail::layout(rows);
  out << "\nstrictly decreasing: verified (" << values.size() << " rows)\n";
  if (rho)
    out << "minimal for intercept " << to_string(*rho) << ": (k0,s0) = ("
        << minimal.k << "," << minimal.s << "), flat " << minimal.flat_index
        << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Verification harness: seeded cross-checks between independent code paths.

struct SuiteResult {
  std::string name;
  long long cases = 0;
  std::vector<std::string> failures;
};

namespace detail {

// Golden data: the renormalization trace of the golden-ratio slope. Frozen
// by hand from the two-interval exchange; the delta column is 1/tau^n.
inline SuiteResult suite_table1(const StepOptions& opt) {
  SuiteResult res{"table1"};
  struct Row {
    const char *delta, *r, *r_prime, *concat, *epsilon;
  };
  const Row golden[5] = {
      {"1", "0", "1", "01", "[0;(1)]"},
      {"(-1+sqrt(5))/2", "0", "01", "001", "[0;2,(1)]"},
      {"(3-sqrt(5))/2", "001", "01", "00101", "[0;(1)]"},
      {"-2+sqrt(5)", "001", "00101", "00100101", "[0;2,(1)]"},
      {"(7-3*sqrt(5))/2", "00100101", "00101", "0010010100101", "[0;(1)]"},
  };
  const ContinuedFraction slope({}, {1});
  const auto rows = algorithm_trace(slope, 5, opt);
  for (std::size_t i = 0; i < 5; ++i) {
    ++res.cases;
    const auto& g = golden[i];
    const auto& r = rows[i];
    const bool ok = to_string(r.delta.value) == g.delta && r.r.str() == g.r &&
                    r.r_prime.str() == g.r_prime &&
                    r.concatenation.str() == g.concat &&
                    to_string(r.epsilon) == g.epsilon;
    if (!ok)
      res.failures.push_back(
          "row " + std::to_string(i + 1) + ": got delta=" +
          to_string(r.delta.value) + " R=" + r.r.str() + " R'=" +
          r.r_prime.str() + " RR'=" + r.concatenation.str() + " cf=" +
          to_string(r.epsilon) + ", expected delta=" + g.delta + " R=" + g.r +
          " R'=" + g.r_prime + " RR'=" + g.concat + " cf=" + g.epsilon);
  }
  return res;
}

inline std::string pair_text(const ContinuedFraction& cf, const FieldElement& rho) {
  return "slope " + to_string(cf) + " intercept " + to_string(rho);
}

inline SuiteResult suite_oracle(unsigned seed, const StepOptions& opt,
                                std::vector<ScanPair>* keep = nullptr) {
  SuiteResult res{"oracle"};
  std::mt19937 rng(seed);
  for (int i = 0; i < 6; ++i) {
    ScanPair pair = random_scan_pair(rng, 60, 100000);
    ++res.cases;
    const ReturnSetResult sets = apr_set(pair.slope, pair.rho, opt);
    if (sets.apr != pair.report.accumulated)
      res.failures.push_back(pair_text(pair.slope, pair.rho) + ": algorithm " +
                             braces(sets.apr) + " but scan " +
                             braces(pair.report.accumulated));
    if (keep) keep->push_back(std::move(pair));
  }
  return res;
}

inline SuiteResult suite_scans(unsigned seed) {
  SuiteResult res{"scans"};
  std::mt19937 rng(seed + 1);
  for (int i = 0; i < 4; ++i) {
    const ScanPair pair = random_scan_pair(rng, 60, 100000);
    res.cases += static_cast<long long>(pair.report.per_prefix.size());
    for (const auto& bad :
         scan_structure_violations(pair.report, pair.slope, pair.rho))
      res.failures.push_back(pair_text(pair.slope, pair.rho) + ": " + bad);
  }
  return res;
}

inline SuiteResult suite_cardinality(unsigned seed, const StepOptions& opt) {
  SuiteResult res{"cardinality"};
  std::mt19937 rng(seed + 2);
  for (int i = 0; i < 60; ++i) {
    const ContinuedFraction slope = random_slope(rng);
    const FieldElement alpha = cf_to_field(slope);
    const FieldElement rho = i % 3 == 0 ? middle_band_intercept(rng, alpha)
                                        : random_intercept(rng, alpha);
    ++res.cases;
    const ReturnSetResult sets = apr_set(slope, rho, opt);
    const CardinalityResult card = apr_cardinality(slope, rho);
    if (card.count != sets.n_apr)
      res.failures.push_back(pair_text(slope, rho) + ": formula " +
                             std::to_string(card.count) + " (case " +
                             case_name(card.tag) + ") but set size " +
                             std::to_string(sets.n_apr));
  }
  return res;
}

}  // namespace detail

inline std::pair<std::string, bool> cmd_verify(unsigned seed,
                                               const std::string& suite,
                                               bool inject_bug_lex,
                                               const std::string& format) {
  const StepOptions opt{inject_bug_lex};
  std::vector<SuiteResult> results;
  const bool all = suite == "all";
  if (all || suite == "table1") results.push_back(detail::suite_table1(opt));
  if (all || suite == "oracle") results.push_back(detail::suite_oracle(seed, opt));
  if (all || suite == "scans") results.push_back(detail::suite_scans(seed));
  if (all || suite == "cardinality")
    results.push_back(detail::suite_cardinality(seed, opt));
  bool ok = true;
  for (const auto& r : results) ok = ok && r.failures.empty();
  if (format == "json") {
    Json suites = Json::array();
    for (const auto& r : results) {
      Json f = Json::array();
      for (const auto& s : r.failures) f.push_back(s);
      suites.push_back(Json{{"name", r.name},
                            {"cases", r.cases},
                            {"failures", f}});
    }
    Json j{{"schema", 1},
           {"command", "verify"},
           {"seed", seed},
           {"suites", suites},
           {"ok", ok}};
    return {j.dump(2) + "\n", ok};
  }
  std::ostringstream out;
  for (const auto& r : results) {
    out << "suite " << r.name << ": "
        << (r.failures.empty() ? "PASS" : "FAIL") << " (" << r.cases
        << " cases)\n";
    for (const auto& s : r.failures) out << "  counterexample: " << s << "\n";
  }
  out << (ok ? "verification OK" : "verification FAILED") << "\n";
  return {out.str(), ok};
}

// ---------------------------------------------------------------------------

namespace detail {

inline int deliver(const std::string& rendered, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << rendered;
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot open " << out_path << "\n";
    return 2;
  }
  file << rendered;
  return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"abelian return words to prefixes of Sturmian words, exactly"};
  app.name("sturmian");
  app.require_subcommand(0, 1);

  std::string slope_text, intercept_text, interval_str, beta_text;
  std::string format = "table", out_path, suite = "all";
  long long count = 10, cap = 1'000'000, beta_delta = 0;
  unsigned seed = 2026;
  bool inject_bug_lex = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write output to a file");
  };
  const auto add_slope = [&](CLI::App* cmd) {
    cmd->add_option("--slope", slope_text,
                    "continued fraction like [0;2,(1,3)] or a field element")
        ->required();
  };

  CLI::App* apr = app.add_subcommand(
      "apr", "abelian returns to all prefixes of one Sturmian word");
  add_slope(apr);
  apr->add_option("--intercept", intercept_text, "intercept in [0,1)")->required();
  add_common(apr);

  CLI::App* itineraries = app.add_subcommand(
      "itineraries", "first-return itineraries of an interval");
  add_slope(itineraries);
  auto* target = itineraries->add_option_group("target", "interval to induce on");
  target->add_option("--interval", interval_str, "interval like \"[1/4, 1/2)\"");
  auto* beta_opt = target->add_option("--beta", beta_text, "use [0, beta)");
  auto* beta_delta_opt = target->add_option(
      "--beta-at-delta", beta_delta, "use [0, delta_n) for flat index n");
  target->require_option(1);
  itineraries->add_option("--cap", cap, "iteration cap for the induction")
      ->capture_default_str();
  add_common(itineraries);

  CLI::App* delta_table = app.add_subcommand(
      "delta-table", "leading values of the decreasing delta sequence");
  add_slope(delta_table);
  delta_table->add_option("--count", count, "rows to print")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* dt_intercept = delta_table->add_option(
      "--intercept", intercept_text, "mark the minimal row for this intercept");
  add_common(delta_table);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check independent code paths on seeded random inputs");
  verify->add_option("--seed", seed, "seed for the random cases")
      ->capture_default_str();
  verify->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"all", "table1", "oracle", "scans", "cardinality"}))
      ->capture_default_str();
  verify->add_flag("--inject-bug-lex", inject_bug_lex)->group("");
  add_common(verify);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string rendered;
    bool verified = true;
    if (apr->parsed()) {
      rendered = cmd_apr(parse_slope(slope_text),
                         parse_field_element(intercept_text), format);
    } else if (itineraries->parsed()) {
      const SlopeInput slope = parse_slope(slope_text);
      FieldElement left(0), right(1);
      if (beta_opt->count()) {
        right = parse_field_element(beta_text);
      } else if (beta_delta_opt->count()) {
        if (beta_delta < 0) throw ParseError("flat index must be >= 0");
        DeltaStream stream(slope.cf);
        for (long long i = 0; i <= beta_delta; ++i) right = stream.next().value;
      } else {
        std::tie(left, right) = parse_interval(interval_str);
      }
      rendered = cmd_itineraries(slope, left, right, cap, format);
    } else if (delta_table->parsed()) {
      const SlopeInput slope = parse_slope(slope_text);
      FieldElement rho;
      const bool with_rho = dt_intercept->count() > 0;
      if (with_rho) rho = parse_field_element(intercept_text);
      rendered = cmd_delta_table(slope, count, with_rho ? &rho : nullptr, format);
    } else if (verify->parsed()) {
      std::tie(rendered, verified) = cmd_verify(seed, suite, inject_bug_lex, format);
    } else {
      err << app.help();
      return 2;
    }
    const int rc = detail::deliver(rendered, out_path, out, err);
    if (rc != 0) return rc;
    return verified ? 0 : 3;
  } catch (const InfiniteAprError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const IterationCapError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InsufficientDataError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
             std::cerr);
}

}  // namespace sturmian::cli
