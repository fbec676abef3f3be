#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sturmian {

// Finite word over {0,1} with its abelian vector (zero count, one count)
// kept alongside. Ordering is plain lexicographic with '0' < '1'; a proper
// prefix sorts before its extensions.
class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::string_view bits) : bits_(bits) {
    for (char ch : bits_) {
      if (ch == '1')
        ++ones_;
      else if (ch != '0')
        throw std::invalid_argument("binary word letter outside {0,1}");
    }
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  const std::string& str() const { return bits_; }
  std::size_t ones() const { return ones_; }
  std::size_t zeros() const { return bits_.size() - ones_; }
  std::pair<std::size_t, std::size_t> ab_vector() const { return {zeros(), ones()}; }

  char operator[](std::size_t i) const { return bits_[i]; }

  void push_back(int bit) {
    bits_.push_back(bit ? '1' : '0');
    if (bit) ++ones_;
  }

  BinaryWord operator+(const BinaryWord& o) const {
    BinaryWord r = *this;
    r.bits_ += o.bits_;
    r.ones_ += o.ones_;
    return r;
  }

  // Image under the letter exchange 0 <-> 1.
  BinaryWord complemented() const {
    BinaryWord r;
    r.bits_.reserve(bits_.size());
    for (char ch : bits_) r.bits_.push_back(ch == '0' ? '1' : '0');
    r.ones_ = zeros();
    return r;
  }

  BinaryWord reversed() const {
    BinaryWord r = *this;
    std::reverse(r.bits_.begin(), r.bits_.end());
    return r;
  }

  bool abelian_equivalent(const BinaryWord& o) const {
    return size() == o.size() && ones_ == o.ones_;
  }

  auto operator<=>(const BinaryWord& o) const { return bits_ <=> o.bits_; }
  bool operator==(const BinaryWord& o) const { return bits_ == o.bits_; }

 private:
  std::string bits_;
  std::size_t ones_ = 0;
};

inline BinaryWord exchange_morphism(const BinaryWord& w) { return w.complemented(); }

// Canonical output order for word sets: by length, ties broken
// lexicographically.
inline bool length_lex_less(const BinaryWord& x, const BinaryWord& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace sturmian
