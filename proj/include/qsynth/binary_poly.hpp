#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsynth {

// Polynomial over GF(2); bit i of the word vector is the coefficient of x^i.
// The zero polynomial is represented by an empty word vector and reports
// degree() == -1.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;

  static BinaryPolynomial zero() { return {}; }
  static BinaryPolynomial one() { return from_mask(1); }
  static BinaryPolynomial x_power(int k);
  static BinaryPolynomial from_mask(uint64_t mask);

  // Accepts the monomial form "x^10+x^3+1" or a hex coefficient mask
  // "0x409" (bit i = coefficient of x^i). Throws std::invalid_argument on
  // malformed input.
  static BinaryPolynomial parse(const std::string& text);

  bool is_zero() const { return words_.empty(); }
  int degree() const;
  bool bit(int i) const;
  void set_bit(int i);
  int weight() const;

  BinaryPolynomial operator+(const BinaryPolynomial& o) const;  // XOR
  BinaryPolynomial operator*(const BinaryPolynomial& o) const;  // carry-less
  BinaryPolynomial shifted_left(int k) const;

  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

  std::string to_monomial_string() const;  // canonical output form
  std::string to_hex_string() const;

  uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

 private:
  void trim();
  std::vector<uint64_t> words_;
};

// Remainder of p modulo f, computed by repeated XOR of shifted f.
// Throws std::invalid_argument for a zero modulus.
BinaryPolynomial poly_mod(const BinaryPolynomial& p, const BinaryPolynomial& f);

BinaryPolynomial poly_gcd(BinaryPolynomial a, BinaryPolynomial b);

// Exact irreducibility over GF(2): p is reducible iff it has an irreducible
// factor of degree d <= deg(p)/2, iff gcd(p, x^(2^d) - x) != 1 for some such
// d. Throws std::invalid_argument for degree < 1.
bool is_irreducible(const BinaryPolynomial& p);

}  // namespace qsynth
