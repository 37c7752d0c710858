#include "doctest.h"
#include "helpers.hpp"
#include "qsynth/exponentiation.hpp"
#include "qsynth/multiplier.hpp"
#include "qsynth/squaring.hpp"

using namespace qsynth;

namespace {

BasisState element_input(const ExpoCircuit& e, uint64_t a) {
  BasisState s(e.layout.width());
  s.words()[0] = a;  // A occupies the low qubits
  return s;
}

uint64_t read_bits(const BasisState& s, int offset, int n) {
  uint64_t v = 0;
  for (int i = 0; i < n; ++i)
    if (s.bit(offset + i)) v |= uint64_t{1} << i;
  return v;
}

}  // namespace

TEST_CASE("n=4 exponentiation of x yields the inverse of x") {
  auto spec = FieldSpec::parse("x^4+x+1");
  ExpoCircuit e = synth_exponentiation(spec);
  CHECK(e.circuit.width() == 16);

  BasisState out = simulate(e.circuit, element_input(e, 0b0010));
  CHECK(read_bits(out, e.layout.b_qubit(2, 0), 4) == 0b1001);  // x^3+1
  CHECK(read_bits(out, e.layout.a_qubit(0), 4) == 0b0010);     // A restored
  CHECK(read_bits(out, e.layout.b_qubit(0, 0), 4) == 0);
  CHECK(read_bits(out, e.layout.b_qubit(1, 0), 4) == 0);

  // cross-check against the arithmetic oracle
  auto a = FieldElement::from_bits(spec, 0b0010);
  CHECK(gf_mul(a, gf_exp_fermat(a)) == FieldElement::one(spec));
}

TEST_CASE("exponentiation fixed points") {
  auto spec = FieldSpec::parse("x^5+x^2+1");
  ExpoCircuit e = synth_exponentiation(spec);
  BasisState one_out = simulate(e.circuit, element_input(e, 1));
  CHECK(read_bits(one_out, e.layout.b_qubit(3, 0), 5) == 1);
  BasisState zero_out = simulate(e.circuit, element_input(e, 0));
  CHECK(!zero_out.any());  // 0 maps to 0 and nothing else moves
}

TEST_CASE("n=3 exponentiation matches the fermat oracle") {
  auto spec = FieldSpec::parse("x^3+x+1");
  ExpoCircuit e = synth_exponentiation(spec);
  auto a = FieldElement::from_bits(spec, 0b010);
  BasisState out = simulate(e.circuit, element_input(e, 0b010));
  CHECK(read_bits(out, e.layout.b_qubit(1, 0), 3) == gf_exp_fermat(a).bits());
  CHECK(gf_exp_fermat(a).bits() == 0b101);  // x^2+1
}

TEST_CASE("verify_exponentiation passes for n = 3..5") {
  for (const char* poly : {"x^3+x+1", "x^4+x+1", "x^5+x^2+1"}) {
    ExpoCircuit e = synth_exponentiation(FieldSpec::parse(poly));
    ExpoVerifyReport r = verify_exponentiation(e);
    CHECK(r.ok());
    CHECK(r.states_checked == uint64_t{1} << e.field.n());
    ExpoVerifyReport serial = verify_exponentiation(e, ExecMode::Serial);
    CHECK(serial.ok());
  }
}

TEST_CASE("mid-circuit state after the compute half follows the power chain") {
  for (const char* poly : {"x^4+x+1", "x^5+x^2+1"}) {
    auto spec = FieldSpec::parse(poly);
    int n = spec.n();
    ExpoCircuit e = synth_exponentiation(spec);
    Circuit step1 = e.circuit.prefix_before_segment("step2");
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
      BasisState mid = simulate(step1, element_input(e, v));
      auto a = FieldElement::from_bits(spec, v);

      // A (read through the relabeling) = a^(2^(n-1))
      FieldElement a_want = a;
      for (int j = 1; j < n; ++j) a_want = gf_square(a_want);
      for (int i = 0; i < n; ++i)
        REQUIRE(mid.bit(e.mid_a_wire[i]) == a_want.bit(i));

      // B[0] = a^2, B[i-1] = prod_{j=1..i} a^(2^j)
      FieldElement power = gf_square(a);
      FieldElement product = power;
      REQUIRE(read_bits(mid, e.layout.b_qubit(0, 0), n) == product.bits());
      for (int i = 2; i <= n - 1; ++i) {
        power = gf_square(power);
        product = gf_mul(product, power);
        REQUIRE(read_bits(mid, e.layout.b_qubit(i - 1, 0), n) == product.bits());
      }
    }
  }
}

TEST_CASE("gate counts decompose by component") {
  for (const char* poly : {"x^3+x+1", "x^4+x+1", "x^5+x^2+1", "x^6+x+1"}) {
    auto spec = FieldSpec::parse(poly);
    uint64_t n = spec.n();
    uint64_t g_k = synth_square(spec).circuit.gate_count();
    uint64_t g_u = mult_gate_cost(spec);
    // reversal preserves per-component gate counts
    CHECK(reverse_circuit(synth_square(spec).circuit).gate_count() == g_k);
    CHECK(reverse_circuit(synth_mult(spec).circuit).gate_count() == g_u);

    ExpoCircuit e = synth_exponentiation(spec);
    // forward: (n-1) squarings + (n-2) multiplications; uncompute skips the
    // result register, so only n-3 multiplications come back
    uint64_t expected =
        2 * (n - 1) * g_k + (n - 2) * g_u + (n - 3) * g_u + 2 * n;
    CHECK(e.circuit.gate_count() == expected);
    CHECK(e.circuit.toffoli_count() == (2 * n - 5) * g_u);

    CostReport cost = expo_cost(spec);
    CHECK(cost.gate_count == expected);
    CHECK(cost.breakdown_total() == cost.gate_count);
    CHECK(cost.qubit_count == n * n);
    CHECK(*cost.squaring_metric == (n - 1) * g_k);
    CHECK(*cost.squaring_gates_all == 2 * (n - 1) * g_k);
  }
}

TEST_CASE("squaring metric reproduces the tabulated values") {
  CHECK(*expo_cost(FieldSpec::parse("x^10+x^3+1")).squaring_metric == 54);
  CHECK(*expo_cost(FieldSpec::parse("x^15+x+1")).squaring_metric == 98);
  CHECK(*expo_cost(FieldSpec::parse("x^127+x+1")).squaring_metric == 7938);
  CHECK(expo_cost(FieldSpec::parse("x^10+x^3+1")).qubit_count == 100);
}

TEST_CASE("n=2 special case keeps the result in B[0]") {
  auto spec = FieldSpec::parse("x^2+x+1");
  ExpoCircuit e = synth_exponentiation(spec);
  CHECK(e.circuit.width() == 4);
  uint64_t g_k = synth_square(spec).circuit.gate_count();
  CHECK(e.circuit.gate_count() == 2 * g_k + 2);  // square, copy, unsquare
  for (uint64_t v = 0; v < 4; ++v) {
    BasisState out = simulate(e.circuit, element_input(e, v));
    auto a = FieldElement::from_bits(spec, v);
    CHECK(read_bits(out, e.layout.b_qubit(0, 0), 2) == gf_square(a).bits());
    CHECK(read_bits(out, e.layout.a_qubit(0), 2) == v);
  }
  CHECK(verify_exponentiation(e).ok());
}

TEST_CASE("register model agrees with the circuit on every basis state, n=3") {
  auto spec = FieldSpec::parse("x^3+x+1");
  ExpoCircuit e = synth_exponentiation(spec);
  auto report = exhaustive_check(
      e.circuit,
      [&](const BasisState& s) { return expo_register_model(spec, s); },
      uint64_t{1} << 9);
  CHECK(report.states_checked == 512);
  CHECK(report.ok());
}

TEST_CASE("register model agrees with the circuit on every basis state, n=4") {
  auto spec = FieldSpec::parse("x^4+x+1");
  ExpoCircuit e = synth_exponentiation(spec);
  auto report = exhaustive_check(
      e.circuit,
      [&](const BasisState& s) { return expo_register_model(spec, s); },
      uint64_t{1} << 16);
  CHECK(report.states_checked == uint64_t{1} << 16);
  CHECK(report.ok());
}

TEST_CASE("dropping a reverse multiplier leaves an ancilla dirty") {
  auto spec = FieldSpec::parse("x^4+x+1");
  ExpoCircuit e = synth_exponentiation(spec);
  uint64_t g_k = synth_square(spec).circuit.gate_count();
  uint64_t g_u = mult_gate_cost(spec);
  size_t step2 = 0;
  for (const auto& [name, pos] : e.circuit.segments())
    if (name == "step2") step2 = pos;
  REQUIRE(step2 > 0);

  // the lone reverse multiplier block sits right after the first reversed
  // squarer of the uncompute half
  size_t drop_begin = step2 + g_k;
  size_t drop_end = drop_begin + g_u;

  ExpoCircuit mutant{Circuit(e.circuit.width()), spec, e.layout, e.mid_a_wire};
  mutant.circuit.mark_segment("step1");
  for (size_t i = 0; i < e.circuit.gate_count(); ++i) {
    if (i == step2) mutant.circuit.mark_segment("step2");
    if (i >= drop_begin && i < drop_end) continue;
    mutant.circuit.append(e.circuit.gates()[i]);
  }

  ExpoVerifyReport r = verify_exponentiation(mutant);
  CHECK_FALSE(r.ok());
  CHECK(r.first_failure.find("ancilla") != std::string::npos);
}

TEST_CASE("exponentiator composed with its reverse is the identity, n=4") {
  ExpoCircuit e = synth_exponentiation(FieldSpec::parse("x^4+x+1"));
  Circuit roundtrip = e.circuit;
  roundtrip.append_circuit(reverse_circuit(e.circuit));
  auto report = check_identity(roundtrip, uint64_t{1} << 16);
  CHECK(report.states_checked == uint64_t{1} << 16);
  CHECK(report.ok());
}

TEST_CASE("verification above the enumeration bound samples 1000 elements") {
  ExpoCircuit e = synth_exponentiation(FieldSpec::parse("x^7+x+1"));
  ExpoVerifyReport r = verify_exponentiation(e);
  CHECK(r.states_checked == 1000);
  CHECK(r.ok());
}

TEST_CASE("materialized cost report adds depth and keeps the formula numbers") {
  auto spec = FieldSpec::parse("x^5+x^2+1");
  ExpoCircuit e = synth_exponentiation(spec);
  CostReport from_circuit = expo_cost(e);
  CostReport from_formula = expo_cost(spec);
  CHECK(from_circuit.gate_count == from_formula.gate_count);
  CHECK(from_circuit.gate_count == e.circuit.gate_count());
  CHECK(from_circuit.cnot_count == e.circuit.cnot_count());
  CHECK(from_circuit.toffoli_count == e.circuit.toffoli_count());
  CHECK(from_circuit.depth.has_value());
  CHECK_FALSE(from_formula.depth.has_value());
}
