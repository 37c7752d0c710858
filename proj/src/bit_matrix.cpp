#include "qsynth/bit_matrix.hpp"

#include <stdexcept>

namespace qsynth {

int BitMatrix::rank() const {
  std::vector<BitVec> rows = rows_;
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r) {
      if (rows[r].bit(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n_; ++r)
      if (r != rank && rows[r].bit(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::rows_permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size mismatch");
  BitMatrix out(n_);
  for (int r = 0; r < n_; ++r) out.rows_[perm[r]] = rows_[r];
  return out;
}

}  // namespace qsynth
