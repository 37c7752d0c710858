#include "doctest.h"
#include "helpers.hpp"
#include "qsynth/multiplier.hpp"
#include "qsynth/sim.hpp"

using namespace qsynth;

namespace {

// register-level product oracle: (A, B, C) -> (A, B, A*B + C)
StateOracle mult_oracle(const FieldSpec& spec) {
  return [spec](const BasisState& in) {
    int n = spec.n();
    auto read = [&](int offset) {
      BinaryPolynomial v;
      for (int i = 0; i < n; ++i)
        if (in.bit(offset + i)) v.set_bit(i);
      return FieldElement(spec, v);
    };
    FieldElement a = read(0), b = read(n), c = read(2 * n);
    FieldElement out_c = gf_add(c, gf_mul(a, b));
    BasisState out = in;
    for (int i = 0; i < n; ++i) out.set_bit(2 * n + i, out_c.bit(i));
    return out;
  };
}

}  // namespace

TEST_CASE("GF(2^2) multiplier is the five expected Toffolis") {
  MultiplierCircuit mult = synth_mult(FieldSpec::parse("x^2+x+1"));
  CHECK(mult.circuit.width() == 6);
  CHECK(mult.circuit.gates() ==
        std::vector<Gate>{Gate::toffoli(0, 2, 4), Gate::toffoli(0, 3, 5),
                          Gate::toffoli(1, 2, 5), Gate::toffoli(1, 3, 4),
                          Gate::toffoli(1, 3, 5)});
  CHECK(mult_gate_cost(mult.field) == 5);
}

TEST_CASE("multiplier gate cost formula") {
  CHECK(mult_gate_cost(FieldSpec::parse("x^4+x+1")) == 22);
  CHECK(mult_gate_cost(FieldSpec::parse("x^3+x+1")) == 12);
  // every (i, j) pair contributes at least one Toffoli
  for (const char* poly : {"x^5+x^2+1", "x^8+x^4+x^3+x^2+1", "x^10+x^3+1"}) {
    auto spec = FieldSpec::parse(poly);
    uint64_t n = spec.n();
    CHECK(mult_gate_cost(spec) >= n * n);
    CHECK(mult_gate_cost(spec) == synth_mult(spec).circuit.gate_count());
  }
}

TEST_CASE("multiplier computes A*B + C exhaustively for n <= 4") {
  for (const char* poly : {"x^2+x+1", "x^3+x+1", "x^4+x+1"}) {
    auto spec = FieldSpec::parse(poly);
    MultiplierCircuit mult = synth_mult(spec);
    auto report = exhaustive_check(mult.circuit, mult_oracle(spec),
                                   uint64_t{1} << (3 * spec.n()));
    REQUIRE(report.states_checked == uint64_t{1} << (3 * spec.n()));
    REQUIRE(report.ok());
  }
}

TEST_CASE("multiplier holds on random states for n=8") {
  auto spec = FieldSpec::parse("x^8+x^4+x^3+x^2+1");
  MultiplierCircuit mult = synth_mult(spec);
  auto report = exhaustive_check(mult.circuit, mult_oracle(spec), 10000);
  CHECK(report.states_checked == 10000);
  CHECK(report.ok());
}

TEST_CASE("zero operand annihilates the product register") {
  auto spec = FieldSpec::parse("x^4+x+1");
  MultiplierCircuit mult = synth_mult(spec);
  for (uint64_t a = 0; a < 16; ++a) {
    BasisState in(12);
    in.words()[0] = a;  // B = 0, C = 0
    BasisState out = simulate(mult.circuit, in);
    CHECK(out == in);
  }
}

TEST_CASE("A and B registers pass through unchanged") {
  auto spec = FieldSpec::parse("x^4+x+1");
  MultiplierCircuit mult = synth_mult(spec);
  for (uint64_t i = 0; i < 200; ++i) {
    BasisState in = random_state(12, 11, i);
    BasisState out = simulate(mult.circuit, in);
    for (int q = 0; q < 8; ++q) REQUIRE(out.bit(q) == in.bit(q));
  }
}

TEST_CASE("reversed multiplier uncomputes the product") {
  auto spec = FieldSpec::parse("x^3+x+1");
  MultiplierCircuit mult = synth_mult(spec);
  Circuit rev = reverse_circuit(mult.circuit);

  // (A, B, A*B + C) -> (A, B, C) on every basis state
  Circuit roundtrip = mult.circuit;
  roundtrip.append_circuit(rev);
  CHECK(check_identity(roundtrip, uint64_t{1} << 9).ok());

  // in particular, applying the reverse to (a, b, a*b) clears C
  for (uint64_t a = 0; a < 8; ++a) {
    for (uint64_t b = 0; b < 8; ++b) {
      auto prod = gf_mul(FieldElement::from_bits(spec, a),
                         FieldElement::from_bits(spec, b));
      BasisState in(9);
      in.words()[0] = a | (b << 3) | (static_cast<uint64_t>(prod.bits()) << 6);
      BasisState out = simulate(rev, in);
      CHECK(out.words()[0] == (a | (b << 3)));
    }
  }
}
