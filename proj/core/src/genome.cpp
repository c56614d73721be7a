#include "saea/genome.hpp"

#include <algorithm>
#include <bit>

#include "saea/errors.hpp"

namespace saea {
namespace {

constexpr std::size_t word_count(std::size_t n) { return (n + Genome::kWordBits - 1) / Genome::kWordBits; }

}  // namespace

Genome::Genome(std::size_t n) : n_(n), words_(word_count(n), 0) {
  if (n == 0) throw configuration_error("genome length must be positive");
}

Genome Genome::ones(std::size_t n) {
  Genome g(n);
  std::fill(g.words_.begin(), g.words_.end(), ~word_type{0});
  if (const std::size_t tail = n % kWordBits; tail != 0) g.words_.back() = (word_type{1} << tail) - 1;
  return g;
}

Genome Genome::from_string(std::string_view bits) {
  Genome g(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      g.set(i, true);
    } else if (bits[i] != '0') {
      throw configuration_error("genome string may only contain '0' and '1'");
    }
  }
  return g;
}

void Genome::set(std::size_t i, bool value) {
  const word_type mask = word_type{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t Genome::count_ones() const {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t Genome::leading_ones() const {
  std::size_t total = 0;
  for (word_type w : words_) {
    if (w == ~word_type{0}) {
      total += kWordBits;
      continue;
    }
    total += static_cast<std::size_t>(std::countr_one(w));
    break;
  }
  return std::min(total, n_);
}

bool Genome::all_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

bool Genome::all_one() const { return leading_ones() == n_; }

std::string Genome::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

std::size_t hamming(const Genome& a, const Genome& b) {
  if (a.size() != b.size()) throw dimension_error("hamming: genomes have different lengths");
  std::size_t total = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) total += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return total;
}

}  // namespace saea
