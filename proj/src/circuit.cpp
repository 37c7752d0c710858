#include "qsynth/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsynth {

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw std::invalid_argument("circuit width must be positive");
}

void Circuit::append(const Gate& g) {
  auto check_index = [&](int q) {
    if (q < 0 || q >= width_)
      throw std::invalid_argument("qubit index out of range: " + std::to_string(q));
  };
  check_index(g.control);
  check_index(g.target);
  if (g.kind == GateKind::Toffoli) {
    check_index(g.control2);
    if (g.control == g.control2 || g.control == g.target || g.control2 == g.target)
      throw std::invalid_argument("gate qubits must be distinct");
  } else {
    if (g.control == g.target)
      throw std::invalid_argument("gate qubits must be distinct");
    if (g.control2 != -1) throw std::invalid_argument("CNOT has no second control");
  }
  gates_.push_back(g);
  if (g.kind == GateKind::Cnot) ++cnot_count_;
}

void Circuit::append_circuit(const Circuit& other) {
  if (other.width_ != width_) throw std::invalid_argument("circuit width mismatch");
  for (const auto& g : other.gates_) append(g);
}

void Circuit::mark_segment(const std::string& name) {
  segments_.emplace_back(name, gates_.size());
}

Circuit Circuit::prefix(size_t count) const {
  if (count > gates_.size()) throw std::invalid_argument("prefix longer than circuit");
  Circuit c(width_);
  c.gates_.assign(gates_.begin(), gates_.begin() + count);
  c.cnot_count_ = std::count_if(c.gates_.begin(), c.gates_.end(), [](const Gate& g) {
    return g.kind == GateKind::Cnot;
  });
  for (const auto& [name, pos] : segments_)
    if (pos <= count) c.segments_.emplace_back(name, pos);
  c.description_ = description_;
  return c;
}

Circuit Circuit::prefix_before_segment(const std::string& name) const {
  for (const auto& [seg, pos] : segments_)
    if (seg == name) return prefix(pos);
  throw std::invalid_argument("no segment named " + name);
}

void Circuit::set_output_label(int qubit, const std::string& label) {
  if (qubit < 0 || qubit >= width_)
    throw std::invalid_argument("label qubit out of range");
  if (output_labels_.empty()) output_labels_.resize(width_);
  for (int q = 0; q < width_; ++q)
    if (q != qubit && output_labels_[q] == label)
      throw std::invalid_argument("duplicate output label: " + label);
  output_labels_[qubit] = label;
}

Circuit reverse_circuit(const Circuit& c) {
  Circuit r(c.width());
  const auto& gs = c.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) r.append(*it);
  return r;
}

}  // namespace qsynth
