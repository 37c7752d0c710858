#pragma once

#include <vector>

#include "qsynth/bitvec.hpp"

namespace qsynth {

// Square matrix over GF(2), one BitVec per row.
class BitMatrix {
 public:
  explicit BitMatrix(int n) : n_(n), rows_(n, BitVec(n)) {}

  static BitMatrix identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  int size() const { return n_; }
  bool get(int r, int c) const { return rows_[r].bit(c); }
  void set(int r, int c, bool v) { rows_[r].set_bit(c, v); }
  const BitVec& row(int r) const { return rows_[r]; }
  BitVec& row(int r) { return rows_[r]; }
  void xor_row(int dst, int src) { rows_[dst] ^= rows_[src]; }

  BitVec multiply(const BitVec& v) const {
    BitVec out(n_);
    for (int r = 0; r < n_; ++r) out.set_bit(r, rows_[r].dot(v));
    return out;
  }

  int rank() const;
  bool invertible() const { return rank() == n_; }

  // Returns a matrix whose row perm[r] is this matrix's row r.
  BitMatrix rows_permuted(const std::vector<int>& perm) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int n_;
  std::vector<BitVec> rows_;
};

}  // namespace qsynth
