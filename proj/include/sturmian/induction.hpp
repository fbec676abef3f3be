#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmian/binary_word.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"
#include "sturmian/interval_exchange.hpp"

namespace sturmian {

// One maximal subinterval of I on which the first-return map acts as a
// single translation with a fixed return time and orbit itinerary.
struct InductionPiece {
  FieldElement left, right;  // [left, right) within I
  long long return_time = 0;
  BinaryWord itinerary;      // coding of x, T(x), ..., T^{return_time-1}(x)
  FieldElement translation;  // first-return map is x -> x + translation here
};

struct InductionResult {
  FieldElement interval_left, interval_right;
  std::vector<InductionPiece> pieces;  // sorted by left endpoint; a partition of I
  IntervalExchange induced;            // first-return map rescaled to [0,1)
};

namespace detail {

struct ActiveStrip {
  FieldElement left, right;  // source subinterval of I
  FieldElement shift;        // current image is [left+shift, right+shift)
  BinaryWord word;
};

inline IntervalExchange scale_induced(const FieldElement& interval_left,
                                      const FieldElement& width,
                                      const std::vector<InductionPiece>& pieces) {
  // Merge adjacent pieces that translate by the same amount; the classes are
  // the intervals of the induced exchange.
  std::vector<std::pair<FieldElement, FieldElement>> bounds;  // [left, right)
  std::vector<FieldElement> shifts;
  for (const auto& piece : pieces) {
    if (!shifts.empty() && shifts.back() == piece.translation &&
        bounds.back().second == piece.left) {
      bounds.back().second = piece.right;
    } else {
      bounds.emplace_back(piece.left, piece.right);
      shifts.push_back(piece.translation);
    }
  }
  const std::size_t n = shifts.size();
  if (n != 2 && n != 3)
    throw std::logic_error("induced map is not a 2- or 3-interval exchange");
  std::vector<FieldElement> breakpoints;
  for (std::size_t i = 0; i + 1 < n; ++i)
    breakpoints.push_back((bounds[i].second - interval_left) / width);
  std::vector<FieldElement> translations;
  for (const auto& s : shifts) translations.push_back(s / width);
  return IntervalExchange(std::move(breakpoints), std::move(translations),
                          n == 2 ? Permutation::swap2 : Permutation::perm321);
}

}  // namespace detail

// First-return decomposition of I = [left, right) under a two-interval
// exchange. Strips of I are pushed forward together; a strip splits whenever
// its image straddles the breakpoint (the next letter would differ) or the
// boundary of I (part has returned, part has not). Whatever lands inside I
// retires with its accumulated itinerary; the rest keeps moving. Every point
// returns, so the queue drains.
inline InductionResult induce(const IntervalExchange& map, const FieldElement& left,
                              const FieldElement& right,
                              long long step_cap = 1'000'000) {
  if (map.interval_count() != 2)
    throw std::invalid_argument("induction source must be a two-interval exchange");
  if (left.sign() < 0 || right > 1 || left >= right)
    throw std::invalid_argument("induction interval must be nonempty inside [0,1)");

  const FieldElement& breakpoint = map.breakpoint(0);
  std::deque<detail::ActiveStrip> queue;
  queue.push_back({left, right, FieldElement(0), BinaryWord()});
  std::vector<InductionPiece> pieces;
  long long steps = 0;

  while (!queue.empty()) {
    if (++steps > step_cap)
      throw IterationCapError("induction exceeded its step budget");
    detail::ActiveStrip strip = std::move(queue.front());
    queue.pop_front();

    const FieldElement img_left = strip.left + strip.shift;
    const FieldElement img_right = strip.right + strip.shift;
    // Split across the breakpoint so the whole strip steps in one branch.
    std::vector<detail::ActiveStrip> stepped;
    for (int branch = 0; branch < 2; ++branch) {
      const FieldElement lo = branch == 0 ? img_left : (img_left < breakpoint ? breakpoint : img_left);
      const FieldElement hi = branch == 0 ? (img_right < breakpoint ? img_right : breakpoint) : img_right;
      if (lo >= hi) continue;
      detail::ActiveStrip part;
      part.left = lo - strip.shift;
      part.right = hi - strip.shift;
      part.shift = strip.shift + map.translation(static_cast<std::size_t>(branch));
      part.word = strip.word;
      part.word.push_back(branch);
      stepped.push_back(std::move(part));
    }
    // Retire whatever stepped into I; queue the segments outside it.
    for (auto& part : stepped) {
      const FieldElement part_left = part.left + part.shift;
      const FieldElement part_right = part.right + part.shift;
      const FieldElement below_hi = part_right < left ? part_right : left;
      if (part_left < below_hi) {
        detail::ActiveStrip below = part;
        below.right = below_hi - part.shift;
        queue.push_back(std::move(below));
      }
      const FieldElement in_lo = part_left < left ? left : part_left;
      const FieldElement in_hi = part_right < right ? part_right : right;
      if (in_lo < in_hi) {
        InductionPiece done;
        done.left = in_lo - part.shift;
        done.right = in_hi - part.shift;
        done.return_time = static_cast<long long>(part.word.size());
        done.itinerary = part.word;
        done.translation = part.shift;
        pieces.push_back(std::move(done));
      }
      const FieldElement above_lo = part_left < right ? right : part_left;
      if (above_lo < part_right) {
        detail::ActiveStrip above = std::move(part);
        above.left = above_lo - above.shift;
        queue.push_back(std::move(above));
      }
    }
  }

  std::sort(pieces.begin(), pieces.end(),
            [](const InductionPiece& x, const InductionPiece& y) { return x.left < y.left; });
  FieldElement cursor = left;
  for (const auto& piece : pieces) {
    if (piece.left != cursor)
      throw std::logic_error("induction pieces do not partition the interval");
    cursor = piece.right;
  }
  if (cursor != right)
    throw std::logic_error("induction pieces do not cover the interval");

  IntervalExchange induced = detail::scale_induced(left, right - left, pieces);
  return InductionResult{left, right, std::move(pieces), std::move(induced)};
}

// Distinct itineraries of [0, beta) under the slope-alpha map. There are two
// or three; with three, the longest is the lex-smaller of the short ones
// followed by the lex-larger.
inline std::set<BinaryWord> itineraries_zero_beta(const FieldElement& alpha,
                                                  const FieldElement& beta,
                                                  long long step_cap = 1'000'000) {
  const IntervalExchange map = make_two_iet(alpha);
  const InductionResult result = induce(map, FieldElement(0), beta, step_cap);
  std::set<BinaryWord> words;
  for (const auto& piece : result.pieces) words.insert(piece.itinerary);
  if (words.size() != 2 && words.size() != 3)
    throw std::logic_error("prefix interval must have 2 or 3 itineraries");
  if (words.size() == 3) {
    std::vector<BinaryWord> by_length(words.begin(), words.end());
    std::sort(by_length.begin(), by_length.end(), length_lex_less);
    const BinaryWord& lex_min = std::min(by_length[0], by_length[1]);
    const BinaryWord& lex_max = std::max(by_length[0], by_length[1]);
    if (lex_min + lex_max != by_length[2])
      throw std::logic_error("third itinerary is not the ordered concatenation");
  }
  return words;
}

}  // namespace sturmian
