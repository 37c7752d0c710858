#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qsynth {

enum class GateKind { Cnot, Toffoli };

// CNOT or Toffoli on integer qubit indices. control2 is -1 for CNOT.
struct Gate {
  GateKind kind = GateKind::Cnot;
  int control = -1;
  int control2 = -1;
  int target = -1;

  static Gate cnot(int control, int target) {
    return Gate{GateKind::Cnot, control, -1, target};
  }
  static Gate toffoli(int c1, int c2, int target) {
    return Gate{GateKind::Toffoli, c1, c2, target};
  }

  bool uses(int q) const {
    return q == control || q == target || (kind == GateKind::Toffoli && q == control2);
  }
  bool has_control(int q) const {
    return q == control || (kind == GateKind::Toffoli && q == control2);
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Ordered gate sequence on a fixed number of qubits, with optional output
// labels and named segment boundaries (used to split composed circuits at
// meaningful points).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  size_t gate_count() const { return gates_.size(); }
  size_t cnot_count() const { return cnot_count_; }
  size_t toffoli_count() const { return gates_.size() - cnot_count_; }

  // Validates qubit indices: in range and pairwise distinct.
  void append(const Gate& g);
  void append_circuit(const Circuit& other);  // same width required

  // Marks a named boundary before the next appended gate.
  void mark_segment(const std::string& name);
  const std::vector<std::pair<std::string, size_t>>& segments() const {
    return segments_;
  }
  // Circuit consisting of the first `count` gates (labels/segments kept
  // where applicable).
  Circuit prefix(size_t count) const;
  // Prefix ending where the named segment begins.
  Circuit prefix_before_segment(const std::string& name) const;

  void set_output_label(int qubit, const std::string& label);
  bool has_output_labels() const { return !output_labels_.empty(); }
  // Empty string for unlabeled qubits.
  const std::vector<std::string>& output_labels() const { return output_labels_; }

  // Free-form description line recorded in emitted QASM.
  void set_description(const std::string& text) { description_ = text; }
  const std::string& description() const { return description_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_ = 0;
  std::vector<Gate> gates_;
  size_t cnot_count_ = 0;
  std::vector<std::string> output_labels_;
  std::vector<std::pair<std::string, size_t>> segments_;
  std::string description_;
};

// Gate sequence reversed; CNOT and Toffoli are involutions, so the reversed
// list is the inverse circuit.
Circuit reverse_circuit(const Circuit& c);

}  // namespace qsynth
