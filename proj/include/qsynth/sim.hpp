#pragma once

#include <cstdint>
#include <functional>

#include "qsynth/bit_matrix.hpp"
#include "qsynth/bitvec.hpp"
#include "qsynth/circuit.hpp"

namespace qsynth {

// Computational basis state of a circuit. All gates in scope are classical
// reversible, so simulation is exact bit pushing.
using BasisState = BitVec;

// Applies the gates in order: CNOT flips the target iff the control is set,
// Toffoli iff both controls are set.
BasisState simulate(const Circuit& c, const BasisState& in);

// GF(2) matrix M with M*x = simulate(c, x), built by simulating unit basis
// states. Throws std::invalid_argument when the circuit contains a Toffoli.
BitMatrix extract_linear(const Circuit& c);

enum class ExecMode { Serial, Parallel };

struct Mismatch {
  uint64_t index = 0;  // basis-state counter or sample number
  BasisState input, expected, actual;
};

struct CheckReport {
  uint64_t states_checked = 0;
  uint64_t mismatch_count = 0;
  std::vector<Mismatch> first_mismatches;  // lowest-index few, capped
  bool ok() const { return mismatch_count == 0; }
};

using StateOracle = std::function<BasisState(const BasisState&)>;

inline constexpr uint64_t kCheckSeed = 0x9e3779b97f4a7c15ull;

// Compares simulate() against the oracle on every basis state when
// 2^width <= limit, otherwise on `limit` pseudorandom states derived from a
// counter-based fixed-seed generator (deterministic regardless of thread
// count). Parallel mode splits the state range across OpenMP threads and
// merges per-thread mismatch lists by index.
CheckReport exhaustive_check(const Circuit& c, const StateOracle& oracle,
                             uint64_t limit, ExecMode mode = ExecMode::Parallel,
                             uint64_t seed = kCheckSeed);

// Fast path for the identity-oracle case, e.g. a circuit composed with its
// own reverse. Avoids per-state oracle calls; uses a packed 64-bit kernel
// for widths up to 64.
CheckReport check_identity(const Circuit& c, uint64_t limit,
                           ExecMode mode = ExecMode::Parallel,
                           uint64_t seed = kCheckSeed);

// Deterministic counter-based state generator used for sampled checks.
BasisState random_state(int width, uint64_t seed, uint64_t index);

}  // namespace qsynth
