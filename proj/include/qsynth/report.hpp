#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsynth {

// Gate/qubit/depth accounting for a synthesized circuit. gate_count always
// equals the sum of the breakdown; depth is present when a schedule was
// computed for the circuit.
struct CostReport {
  std::string field;  // canonical modulus text
  int n = 0;
  uint64_t gate_count = 0;
  uint64_t cnot_count = 0;
  uint64_t toffoli_count = 0;
  uint64_t qubit_count = 0;
  std::optional<uint64_t> depth;
  std::vector<std::pair<std::string, uint64_t>> breakdown;
  bool used_gaussian_fallback = false;

  // Exponentiation only: (n-1) * G_K, the squaring-derived gate metric, and
  // its doubled physical counterpart including the reversed squarers.
  std::optional<uint64_t> squaring_metric;
  std::optional<uint64_t> squaring_gates_all;

  uint64_t breakdown_total() const;
  std::string to_json_string(int indent = -1) const;
  std::string to_text() const;
};

}  // namespace qsynth
