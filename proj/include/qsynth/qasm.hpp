#pragma once

#include <string>

#include "qsynth/circuit.hpp"

namespace qsynth {

// OpenQASM 2.0 text: one quantum register q[width], one cx/ccx line per
// gate. The circuit description, output labels and segment boundaries are
// recorded as // comments and survive a round trip through parse_qasm.
std::string emit_qasm(const Circuit& c);

// Reads the subset of OpenQASM 2.0 produced by emit_qasm (qreg, cx, ccx,
// comments). Throws std::invalid_argument on anything else.
Circuit parse_qasm(const std::string& text);

}  // namespace qsynth
