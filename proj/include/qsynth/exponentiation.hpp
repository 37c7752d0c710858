#pragma once

#include <string>

#include "qsynth/circuit.hpp"
#include "qsynth/field.hpp"
#include "qsynth/report.hpp"
#include "qsynth/sim.hpp"

namespace qsynth {

// Register layout of the exponentiation circuit: the input register A
// followed by n-1 ancilla registers B[0] .. B[n-2], n qubits each, for a
// total width of n^2.
struct ExpoLayout {
  int n = 0;
  int width() const { return n * n; }
  int a_qubit(int i) const { return i; }
  int b_qubit(int reg, int i) const { return n + reg * n + i; }
};

// Circuit computing a^(2^n - 2) mod f(x): on input (a, 0, ..., 0) the result
// appears in B[n-2], A is restored to a and B[0..n-3] return to zero. The
// boundary between the compute and uncompute halves is the "step2" segment.
//
// The squaring circuit leaves its output coefficients relabeled (qubit q
// holds coefficient sigma(q)), so each squarer/multiplier/copy stage is
// wired through the accumulated coefficient-to-wire map; the relabelings
// cancel by the end and every register finishes in straight order.
// mid_a_wire records the map at the step boundary: at that point coefficient
// i of the A value sits on qubit mid_a_wire[i].
struct ExpoCircuit {
  Circuit circuit;
  FieldSpec field;
  ExpoLayout layout;
  std::vector<int> mid_a_wire;
};

// Compute half: square A, copy A into B[0], then alternate squarings of A
// with multiplications accumulating into B[1] .. B[n-2]. Uncompute half:
// the same stages reversed, skipping the result register. n = 2 degenerates
// to square-copy-unsquare (the result stays in B[0]).
ExpoCircuit synth_exponentiation(const FieldSpec& spec);

// Formula-based cost report (no circuit construction, so no depth):
// qubits n^2; gates (n-1)*G_K forward squarings + (n-1)*G_K reversed,
// (n-2)*G_U multiplications + (n-3)*G_U reversed, plus the copy CNOTs.
// squaring_metric is (n-1)*G_K, counting forward squarings only;
// squaring_gates_all doubles it to include the reversed squarers.
CostReport expo_cost(const FieldSpec& spec);

// Cost report for a built circuit, including schedule depth.
CostReport expo_cost(const ExpoCircuit& e);

// Register-level model of the circuit: reads the A and B register values
// from a basis state and folds the stage sequence through the field
// arithmetic (squarings, XOR copies, multiply-accumulates). Valid for
// arbitrary register contents, not just zero ancillae, so it can oracle a
// full basis-state sweep.
BasisState expo_register_model(const FieldSpec& spec, const BasisState& in);

struct ExpoVerifyReport {
  uint64_t states_checked = 0;
  uint64_t failures = 0;
  std::string first_failure;  // human-readable description
  bool ok() const { return failures == 0; }
};

// Simulates on inputs (a, 0, ..., 0) -- every field element when n <= 6,
// at least `samples` fixed-seed random elements otherwise -- and checks the
// three output clauses (result register, A restored, ancillae zero) against
// gf_exp_fermat, plus the intermediate state after the compute half:
// A = a^(2^(n-1)) (read through mid_a_wire), B[i-1] = prod_{j=1..i} a^(2^j).
ExpoVerifyReport verify_exponentiation(const ExpoCircuit& e,
                                       ExecMode mode = ExecMode::Parallel,
                                       uint64_t samples = 1000);

}  // namespace qsynth
