#pragma once

#include <vector>

#include "qsynth/circuit.hpp"
#include "qsynth/field.hpp"
#include "qsynth/report.hpp"
#include "qsynth/sim.hpp"

namespace qsynth {

// Row i is x^(2i) mod f(x): the coefficients qubit i contributes to the
// square. For 2i < n the row is the single monomial x^(2i).
struct ReductionRow {
  int source_qubit = 0;
  BinaryPolynomial bits;
};

// Permutation sigma: input qubit i ends up holding output coefficient
// sigma(i). Pinned to sigma(i) = 2i for 2i < n; bit sigma(i) of row i is
// always set.
struct OutputAssignment {
  std::vector<int> sigma;
  std::vector<int> inverse() const;
};

// Ancilla-free in-place squarer: n qubits, CNOT only. When the emission
// order cannot satisfy the source-before-target constraint the circuit is
// synthesized from the Frobenius matrix by Gaussian elimination instead
// (sigma becomes the identity and the gate count no longer follows the
// weight formula).
struct SquaringCircuit {
  Circuit circuit;
  OutputAssignment assignment;
  FieldSpec field;
  bool used_gaussian_fallback = false;
};

std::vector<ReductionRow> reduction_rows(const FieldSpec& spec);

// Maximum bipartite matching of qubits {i : 2i >= n} onto the output
// indices not pinned by the low qubits, edges where the row bit is set.
// Deterministic: rows in ascending order, candidate outputs in ascending
// order, augmenting paths searched in the same order. Throws
// std::invalid_argument when no perfect matching exists (a reducible
// modulus; irreducible moduli always admit one).
OutputAssignment assign_outputs(const std::vector<ReductionRow>& rows);

struct EmitResult {
  Circuit circuit;
  OutputAssignment assignment;  // identity when the fallback was taken
  bool used_gaussian_fallback = false;
};

// One CNOT per off-assignment row bit, ordered so every CNOT sourced at a
// qubit precedes every CNOT targeting it; falls back to Gaussian synthesis
// when that precedence relation is cyclic.
EmitResult emit_cnots(const std::vector<ReductionRow>& rows,
                      const OutputAssignment& assignment);

// CNOT-only realization of an invertible GF(2) map via Gauss-Jordan
// elimination; used as the fallback emission path.
Circuit synth_linear_gaussian(const BitMatrix& m);

// Full pipeline: rows -> assignment -> CNOT emission, with the realized
// linear map verified against frobenius_matrix before returning.
SquaringCircuit synth_square(const FieldSpec& spec);

// Extracts the circuit's linear map, reorders rows by sigma and compares to
// frobenius_matrix.
bool verify_linear(const SquaringCircuit& sq);

// State-level oracle for simulation checks: the expected output has
// gf_square of the input on qubit q's coefficient sigma(q).
StateOracle squaring_state_oracle(const SquaringCircuit& sq);

// Sum over rows with 2i >= n of (weight - 1): the CNOT count of the direct
// emission path.
uint64_t squaring_gate_formula(const FieldSpec& spec);

// Cost report with schedule-derived depth.
CostReport squaring_cost(const SquaringCircuit& sq);

}  // namespace qsynth
