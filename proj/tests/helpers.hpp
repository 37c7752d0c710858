#pragma once

#include <stdexcept>
#include <cstdint>
#include <random>
#include <vector>

#include "qsynth/binary_poly.hpp"
#include "qsynth/circuit.hpp"

namespace qsynth::testing {

// Trial-division irreducibility for small degrees: independent of the
// gcd-based production test.
inline bool irreducible_by_trial_division(uint64_t mask) {
  int d = 63 - __builtin_clzll(mask);
  for (int dd = 1; dd <= d / 2; ++dd) {
    for (uint64_t q = uint64_t{1} << dd; q < (uint64_t{2} << dd); ++q) {
      uint64_t r = mask;
      while (r && (63 - __builtin_clzll(r)) >= dd) {
        int shift = (63 - __builtin_clzll(r)) - dd;
        r ^= q << shift;
      }
      if (r == 0) return false;
    }
  }
  return true;
}

// Product sieve over degree-n polynomials: marks every product of two
// lower-degree factors, leaving exactly the irreducibles unmarked.
inline std::vector<uint64_t> sieve_irreducible(int n) {
  auto mul = [](uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (a) {
      if (a & 1) r ^= b;
      a >>= 1;
      b <<= 1;
    }
    return r;
  };
  std::vector<char> composite(uint64_t{1} << (n + 1), 0);
  for (int d = 1; 2 * d <= n; ++d) {
    for (uint64_t p = uint64_t{1} << d; p < (uint64_t{2} << d); ++p) {
      for (uint64_t q = uint64_t{1} << (n - d); q < (uint64_t{2} << (n - d)); ++q) {
        uint64_t prod = mul(p, q);
        if (prod < composite.size()) composite[prod] = 1;
      }
    }
  }
  std::vector<uint64_t> out;
  for (uint64_t m = uint64_t{1} << n; m < (uint64_t{2} << n); ++m)
    if (!composite[m]) out.push_back(m);
  return out;
}

inline BinaryPolynomial poly_from_mask(uint64_t mask) {
  return BinaryPolynomial::from_mask(mask);
}

inline Circuit random_cnot_circuit(std::mt19937_64& rng, int max_width,
                                   int max_gates) {
  std::uniform_int_distribution<int> width_dist(2, max_width);
  int width = width_dist(rng);
  std::uniform_int_distribution<int> gates_dist(1, max_gates);
  std::uniform_int_distribution<int> qubit(0, width - 1);
  Circuit c(width);
  int count = gates_dist(rng);
  for (int g = 0; g < count; ++g) {
    int a = qubit(rng), b = qubit(rng);
    if (a == b) b = (b + 1) % width;
    c.append(Gate::cnot(a, b));
  }
  return c;
}

inline Circuit random_mixed_circuit(std::mt19937_64& rng, int max_width,
                                    int max_gates) {
  std::uniform_int_distribution<int> width_dist(3, max_width);
  int width = width_dist(rng);
  std::uniform_int_distribution<int> gates_dist(1, max_gates);
  std::uniform_int_distribution<int> qubit(0, width - 1);
  std::bernoulli_distribution toffoli(0.4);
  Circuit c(width);
  int count = gates_dist(rng);
  for (int g = 0; g < count; ++g) {
    int a = qubit(rng), b = qubit(rng), t = qubit(rng);
    while (b == a) b = qubit(rng);
    if (toffoli(rng)) {
      while (t == a || t == b) t = qubit(rng);
      c.append(Gate::toffoli(a, b, t));
    } else {
      c.append(Gate::cnot(a, b));
    }
  }
  return c;
}

}  // namespace qsynth::testing
