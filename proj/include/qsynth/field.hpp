#pragma once

#include <string>

#include "qsynth/binary_poly.hpp"
#include "qsynth/bit_matrix.hpp"

namespace qsynth {

// An irreducible modulus f(x) of degree n >= 2, defining GF(2^n) in
// polynomial basis. Construction checks irreducibility unless the caller
// explicitly opts out (reducible moduli are useful for exercising the
// failure paths of the synthesis code).
class FieldSpec {
 public:
  static FieldSpec from_modulus(const BinaryPolynomial& f, bool allow_reducible = false);
  static FieldSpec parse(const std::string& text, bool allow_reducible = false);

  int n() const { return n_; }
  const BinaryPolynomial& modulus() const { return modulus_; }
  std::string name() const { return modulus_.to_monomial_string(); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(BinaryPolynomial f, int n) : modulus_(std::move(f)), n_(n) {}
  BinaryPolynomial modulus_;
  int n_ = 0;
};

// An element of GF(2^n): a coefficient vector of exactly n bits bound to its
// field. Values are never widened or reduced implicitly; constructing from a
// polynomial of degree >= n is an error.
class FieldElement {
 public:
  FieldElement(const FieldSpec& spec, BinaryPolynomial value);

  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  // Low-order coefficient bits from a mask; requires n <= 64.
  static FieldElement from_bits(const FieldSpec& spec, uint64_t bits);

  const BinaryPolynomial& value() const { return value_; }
  const FieldSpec& spec() const { return spec_; }
  bool bit(int i) const { return value_.bit(i); }
  uint64_t bits() const { return value_.low_word(); }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldSpec spec_;
  BinaryPolynomial value_;
};

// Bit-wise XOR of the coefficient vectors.
FieldElement gf_add(const FieldElement& a, const FieldElement& b);

// Polynomial product reduced mod f(x).
FieldElement gf_mul(const FieldElement& a, const FieldElement& b);

// Squaring via coefficient spreading (bit i -> bit 2i) followed by reduction.
// Deliberately not implemented as gf_mul(a, a) so the two routes cross-check.
FieldElement gf_square(const FieldElement& a);

// a^(2^n - 2) mod f(x): the multiplicative inverse for a != 0. By convention
// 0 maps to 0, matching what the exponentiation circuit produces on the
// all-zero register.
FieldElement gf_exp_fermat(const FieldElement& a);

// Matrix of the squaring map: column i is the coefficient vector of
// x^(2i) mod f(x). Invertible for every irreducible f.
BitMatrix frobenius_matrix(const FieldSpec& spec);

}  // namespace qsynth
