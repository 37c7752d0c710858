#include "qsynth/field.hpp"

#include <stdexcept>

namespace qsynth {

FieldSpec FieldSpec::from_modulus(const BinaryPolynomial& f, bool allow_reducible) {
  int n = f.degree();
  if (n < 2) throw std::invalid_argument("field modulus must have degree >= 2");
  if (!f.bit(0))
    throw std::invalid_argument("field modulus must have constant term 1");
  if (!allow_reducible && !is_irreducible(f))
    throw std::invalid_argument("reducible modulus: " + f.to_monomial_string());
  return FieldSpec(f, n);
}

FieldSpec FieldSpec::parse(const std::string& text, bool allow_reducible) {
  return from_modulus(BinaryPolynomial::parse(text), allow_reducible);
}

FieldElement::FieldElement(const FieldSpec& spec, BinaryPolynomial value)
    : spec_(spec), value_(std::move(value)) {
  if (value_.degree() >= spec_.n())
    throw std::invalid_argument("element value exceeds field width");
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
  return FieldElement(spec, BinaryPolynomial::zero());
}

FieldElement FieldElement::one(const FieldSpec& spec) {
  return FieldElement(spec, BinaryPolynomial::one());
}

FieldElement FieldElement::from_bits(const FieldSpec& spec, uint64_t bits) {
  return FieldElement(spec, BinaryPolynomial::from_mask(bits));
}

namespace {
void require_same_spec(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec()))
    throw std::invalid_argument("field spec mismatch");
}
}  // namespace

FieldElement gf_add(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  return FieldElement(a.spec(), a.value() + b.value());
}

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) {
  require_same_spec(a, b);
  return FieldElement(a.spec(), poly_mod(a.value() * b.value(), a.spec().modulus()));
}

FieldElement gf_square(const FieldElement& a) {
  BinaryPolynomial spread;
  for (int i = 0; i <= a.value().degree(); ++i)
    if (a.value().bit(i)) spread.set_bit(2 * i);
  return FieldElement(a.spec(), poly_mod(spread, a.spec().modulus()));
}

FieldElement gf_exp_fermat(const FieldElement& a) {
  if (a.is_zero()) return a;
  // 2^n - 2 = 2 + 4 + ... + 2^(n-1), so the result is the product of
  // a^(2^j) for j = 1 .. n-1.
  FieldElement power = a;
  FieldElement result = FieldElement::one(a.spec());
  for (int j = 1; j < a.spec().n(); ++j) {
    power = gf_square(power);
    result = gf_mul(result, power);
  }
  return result;
}

BitMatrix frobenius_matrix(const FieldSpec& spec) {
  int n = spec.n();
  BitMatrix m(n);
  for (int i = 0; i < n; ++i) {
    BinaryPolynomial col = poly_mod(BinaryPolynomial::x_power(2 * i), spec.modulus());
    for (int j = 0; j < n; ++j)
      if (col.bit(j)) m.set(j, i, true);
  }
  return m;
}

}  // namespace qsynth
