#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sturmian/abelian_returns.hpp"
#include "sturmian/binary_word.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"
#include "sturmian/interval_exchange.hpp"

namespace sturmian {

// Sliding-window scan: occurrences of the abelian class of the length-n
// prefix are the windows with the prefix's letter counts; the words between
// consecutive occurrences are the abelian returns. Independent of the
// renormalization algorithm on purpose; only the orbit coding is shared.
inline std::set<BinaryWord> abelian_returns_of_factor(const BinaryWord& word,
                                                      std::size_t n) {
  if (n < 1 || n > word.size())
    throw std::invalid_argument("prefix length outside the scanned word");
  const std::string& bits = word.str();
  std::size_t window_ones = 0;
  for (std::size_t i = 0; i < n; ++i) window_ones += bits[i] == '1';
  const std::size_t target = window_ones;

  std::vector<std::string> returns;
  std::size_t occurrences = 0;
  std::size_t previous = 0;
  for (std::size_t pos = 0;; ++pos) {
    if (window_ones == target) {
      ++occurrences;
      if (occurrences > 1) {
        std::string ret = bits.substr(previous, pos - previous);
        if (std::find(returns.begin(), returns.end(), ret) == returns.end())
          returns.push_back(std::move(ret));
      }
      previous = pos;
    }
    if (pos + n >= bits.size()) break;
    window_ones += bits[pos + n] == '1';
    window_ones -= bits[pos] == '1';
  }
  if (occurrences < 2)
    throw InsufficientDataError("fewer than two occurrences of the prefix class");
  std::set<BinaryWord> out;
  for (const auto& r : returns) out.insert(BinaryWord(r));
  return out;
}

struct OracleReport {
  std::map<long long, std::set<BinaryWord>> per_prefix;
  std::set<BinaryWord> accumulated;
  long long stabilized_at = 0;    // last prefix length that added a new word
  long long generated_length = 0; // letters of the word actually scanned
  bool stabilized = false;        // growth-free window of 2x the longest return seen
};

// Brute-force accumulation of abelian returns over prefix lengths 1..max_prefix
// of the (slope, intercept) word. The word grows (doubling, up to word_cap)
// whenever some prefix class occurs fewer than twice; if the cap is hit the
// report comes back partial with stabilized == false instead of throwing.
inline OracleReport apr_bruteforce(const ContinuedFraction& slope,
                                   const FieldElement& rho, long long max_prefix,
                                   long long word_length,
                                   long long word_cap = 1'000'000) {
  if (rho.sign() == 0)
    throw InfiniteAprError("zero intercept: the abelian return set is infinite");
  if (rho.sign() < 0 || rho >= 1)
    throw std::invalid_argument("intercept must lie in [0,1)");
  if (max_prefix < 1 || word_length < 2)
    throw std::invalid_argument("scan bounds must be positive");
  const FieldElement alpha = cf_to_field(slope);

  OracleReport report;
  bool truncated = false;
  for (;;) {
    report = OracleReport{};
    report.generated_length = word_length;
    const BinaryWord word = code_orbit(alpha, rho, word_length);
    truncated = false;
    bool grow = false;
    for (long long n = 1; n <= max_prefix && n <= word_length; ++n) {
      std::set<BinaryWord> found;
      try {
        found = abelian_returns_of_factor(word, static_cast<std::size_t>(n));
      } catch (const InsufficientDataError&) {
        if (word_length < word_cap) {
          grow = true;
        } else {
          truncated = true;  // partial report, flagged below
        }
        break;
      }
      const std::size_t before = report.accumulated.size();
      report.accumulated.insert(found.begin(), found.end());
      if (report.accumulated.size() > before) report.stabilized_at = n;
      report.per_prefix.emplace(n, std::move(found));
    }
    if (!grow) break;
    word_length = std::min(word_cap, word_length * 2);
  }

  std::size_t longest = 0;
  for (const auto& w : report.accumulated) longest = std::max(longest, w.size());
  const long long scanned = report.per_prefix.empty()
                                ? 0
                                : report.per_prefix.rbegin()->first;
  report.stabilized = !truncated && !report.per_prefix.empty() &&
                      scanned - report.stabilized_at >=
                          2 * static_cast<long long>(longest);
  return report;
}

// Structural audit of a scan: every per-prefix return set has size 2 or 3,
// and a size-3 set is two words plus their concatenation. The order of the
// concatenation is the lex order seen by the side that produced the set:
// light prefixes put the 0<1-smaller word first, heavy sets are letter
// exchanges of light sets of the complemented word, so there the pair is
// ordered by its complemented images. Returns one description per violation,
// empty when the scan is clean.
inline std::vector<std::string> scan_structure_violations(
    const OracleReport& report, const ContinuedFraction& slope,
    const FieldElement& rho) {
  const FieldElement alpha = cf_to_field(slope);
  std::vector<std::string> out;
  for (const auto& [n, words] : report.per_prefix) {
    const std::string tag = "prefix " + std::to_string(n) + ": ";
    if (words.size() != 2 && words.size() != 3) {
      out.push_back(tag + "set size " + std::to_string(words.size()));
      continue;
    }
    if (words.size() == 2) continue;
    std::vector<BinaryWord> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const BinaryWord& a, const BinaryWord& b) { return a.size() < b.size(); });
    const BinaryWord& x = sorted[0];
    const BinaryWord& y = sorted[1];
    const bool x_first = light_or_heavy(alpha, rho, n) == Weight::light
                             ? x < y
                             : x.complemented() < y.complemented();
    const BinaryWord expected = x_first ? x + y : y + x;
    if (sorted[2] != expected)
      out.push_back(tag + "triple " + x.str() + "," + y.str() + "," +
                    sorted[2].str() + " does not compose as " + expected.str());
  }
  return out;
}

// Smallest prefix length H by which the scan has provably seen every abelian
// return word of the whole word. A new word can only appear when the value
// T^{-n+1}(alpha) first enters one of finitely many open bands: between
// consecutive delta values above the intercept for the light side, mirrored
// through 1-x for the heavy side. The in-scan growth window alone can close
// early while one narrow band is still unvisited (first entry into a band of
// width w can take on the order of 1/w prefixes), so adequate scans are the
// ones with max_prefix >= this horizon.
inline long long scan_horizon(const ContinuedFraction& slope,
                              const FieldElement& rho, long long cap = 100000) {
  detail::check_intercept(rho);
  struct Band {
    FieldElement lo, hi;  // open interval for the orbit value beta
    bool seen = false;
  };
  std::vector<Band> bands;
  const auto add_side = [&bands](const ContinuedFraction& cf,
                                 const FieldElement& intercept, bool mirrored) {
    const MinimalIndices mi = minimal_indices(cf, intercept);
    DeltaStream stream(cf);
    FieldElement upper = stream.next().value;
    for (long long j = 1; j <= mi.flat_index; ++j) {
      const FieldElement next = stream.next().value;
      const FieldElement lower = next < intercept ? intercept : next;
      if (mirrored)
        bands.push_back({FieldElement(1) - upper, FieldElement(1) - lower});
      else
        bands.push_back({lower, upper});
      upper = next;
    }
  };
  add_side(slope, rho, false);
  add_side(one_minus(slope), FieldElement(1) - rho, true);

  const FieldElement alpha = cf_to_field(slope);
  const IntervalExchange map = make_two_iet(alpha);
  FieldElement beta = alpha;
  std::size_t remaining = bands.size();
  for (long long n = 1; n <= cap; ++n) {
    for (auto& band : bands)
      if (!band.seen && band.lo < beta && beta < band.hi) {
        band.seen = true;
        --remaining;
      }
    if (remaining == 0) return n;
    beta = map.apply_inverse(beta);
  }
  throw IterationCapError("scan horizon not reached within the iteration cap");
}

}  // namespace sturmian
