#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saea {

/// Fixed-length bitstring x in {0,1}^n, packed into 64-bit words.
///
/// Bit i (0-based, leftmost first) lives in word i / 64 at bit position
/// i % 64. Padding bits of the last word are always zero.
class Genome {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Genome() = default;
  /// All-zeros genome of length n.
  explicit Genome(std::size_t n);

  static Genome zeros(std::size_t n) { return Genome(n); }
  static Genome ones(std::size_t n);
  /// Parses a string of '0'/'1' characters, leftmost character is bit 0.
  static Genome from_string(std::string_view bits);

  std::size_t size() const { return n_; }
  bool operator[](std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  std::span<const word_type> words() const { return words_; }
  std::span<word_type> words() { return words_; }

  std::size_t count_ones() const;
  std::size_t leading_ones() const;
  bool all_zero() const;
  bool all_one() const;

  std::string to_string() const;

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<word_type> words_;
};

/// Hamming distance. Throws dimension_error on length mismatch.
std::size_t hamming(const Genome& a, const Genome& b);

}  // namespace saea
