#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qsynth {

// Fixed-width bit vector packed into 64-bit words. Used for basis states
// and bit-matrix rows.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool bit(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set_bit(int i, bool v) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }

  void flip_bit(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void operator^=(const BitVec& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  }

  int popcount() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  // parity of <this, o> over GF(2)
  bool dot(const BitVec& o) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
    return std::popcount(acc) & 1;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace qsynth
