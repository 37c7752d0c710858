#pragma once

#include "qsynth/circuit.hpp"
#include "qsynth/field.hpp"

namespace qsynth {

// In-place GF(2^n) multiplier on 3n qubits: registers A = [0,n), B = [n,2n),
// C = [2n,3n), mapping (A, B, C) -> (A, B, A*B + C). A and B pass through
// unchanged.
struct MultiplierCircuit {
  Circuit circuit;
  FieldSpec field;

  int a_qubit(int i) const { return i; }
  int b_qubit(int i) const { return field.n() + i; }
  int c_qubit(int i) const { return 2 * field.n() + i; }
};

// Partial-product construction: one Toffoli with controls A_i, B_j and
// target C_t for every set bit t of x^(i+j) mod f(x), in row-major
// (i, j, t ascending) order. All Toffolis commute, so the order is free but
// fixed for reproducible output.
MultiplierCircuit synth_mult(const FieldSpec& spec);

// Toffoli count of synth_mult: sum over (i, j) of wt(x^(i+j) mod f).
uint64_t mult_gate_cost(const FieldSpec& spec);

}  // namespace qsynth
