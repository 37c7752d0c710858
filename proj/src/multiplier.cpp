#include "qsynth/multiplier.hpp"

namespace qsynth {

namespace {

// x^k mod f for k = 0 .. 2n-2, shared by the circuit and the cost formula
std::vector<BinaryPolynomial> power_table(const FieldSpec& spec) {
  std::vector<BinaryPolynomial> table;
  table.reserve(2 * spec.n() - 1);
  for (int k = 0; k <= 2 * (spec.n() - 1); ++k)
    table.push_back(poly_mod(BinaryPolynomial::x_power(k), spec.modulus()));
  return table;
}

}  // namespace

MultiplierCircuit synth_mult(const FieldSpec& spec) {
  int n = spec.n();
  MultiplierCircuit mult{Circuit(3 * n), spec};
  auto powers = power_table(spec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < n; ++t)
        if (powers[i + j].bit(t))
          mult.circuit.append(
              Gate::toffoli(mult.a_qubit(i), mult.b_qubit(j), mult.c_qubit(t)));
  mult.circuit.set_description("multiplier over GF(2^" + std::to_string(n) +
                               "), f(x) = " + spec.name());
  for (int i = 0; i < n; ++i) {
    mult.circuit.set_output_label(mult.a_qubit(i), "A_" + std::to_string(i));
    mult.circuit.set_output_label(mult.b_qubit(i), "B_" + std::to_string(i));
    mult.circuit.set_output_label(mult.c_qubit(i), "C_" + std::to_string(i));
  }
  return mult;
}

uint64_t mult_gate_cost(const FieldSpec& spec) {
  auto powers = power_table(spec);
  uint64_t total = 0;
  int n = spec.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) total += powers[i + j].weight();
  return total;
}

}  // namespace qsynth
