#pragma once

#include <vector>

#include "qsynth/circuit.hpp"

namespace qsynth {

// Partition of a circuit's gate sequence into parallel layers. Gates within
// a layer act on pairwise disjoint qubit sets; concatenating the layers in
// order is semantically equal to the original sequence.
struct Schedule {
  std::vector<std::vector<size_t>> layers;  // gate indices, original order kept
  size_t depth() const { return layers.size(); }
};

// Greedy in-order layering: the first unplaced gate anchors a new layer, and
// a later gate joins the current layer iff it is qubit-disjoint from the
// layer and commutes with every earlier gate it jumps over. Two gates
// commute here iff they share no qubit, share only control qubits, or share
// only the target.
//
// This is the streaming formulation: a gate's layer is the smallest layer at
// or above all non-commuting earlier gates whose qubits are free there.
// Produces the identical partition to compute_schedule_reference.
Schedule compute_schedule(const Circuit& c);

// Literal multi-pass formulation of the same layering; quadratic, kept as
// the reference the fast path is tested against.
Schedule compute_schedule_reference(const Circuit& c);

// True iff two gates commute under the scheduling rule above.
bool gates_commute(const Gate& a, const Gate& b);

// Gates reordered layer by layer (a semantically equal circuit).
Circuit flatten(const Circuit& c, const Schedule& s);

// Direct assertion that every layer touches each qubit at most once.
bool layers_qubit_disjoint(const Circuit& c, const Schedule& s);

}  // namespace qsynth
