#include "qsynth/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qsynth {

uint64_t CostReport::breakdown_total() const {
  uint64_t total = 0;
  for (const auto& [name, count] : breakdown) total += count;
  return total;
}

std::string CostReport::to_json_string(int indent) const {
  nlohmann::ordered_json j;
  j["field"] = field;
  j["n"] = n;
  j["gate_count"] = gate_count;
  j["cnot_count"] = cnot_count;
  j["toffoli_count"] = toffoli_count;
  j["qubit_count"] = qubit_count;
  if (depth)
    j["depth"] = *depth;
  else
    j["depth"] = nullptr;
  nlohmann::ordered_json b = nlohmann::ordered_json::object();
  for (const auto& [name, count] : breakdown) b[name] = count;
  j["breakdown"] = b;
  if (used_gaussian_fallback) j["used_gaussian_fallback"] = true;
  if (squaring_metric) j["squaring_metric"] = *squaring_metric;
  if (squaring_gates_all) j["squaring_gates_all"] = *squaring_gates_all;
  return j.dump(indent);
}

std::string CostReport::to_text() const {
  std::ostringstream out;
  out << "field:       " << field << "  (n = " << n << ")\n";
  out << "qubits:      " << qubit_count << "\n";
  out << "gates:       " << gate_count << "  (cnot " << cnot_count << ", toffoli "
      << toffoli_count << ")\n";
  if (depth)
    out << "depth:       " << *depth << "\n";
  else
    out << "depth:       n/a (circuit not materialized)\n";
  for (const auto& [name, count] : breakdown)
    out << "  " << name << ": " << count << "\n";
  if (used_gaussian_fallback) out << "note: gaussian-elimination fallback used\n";
  if (squaring_metric) out << "squaring metric ((n-1)*G_K): " << *squaring_metric << "\n";
  if (squaring_gates_all)
    out << "squaring gates incl. reversed: " << *squaring_gates_all << "\n";
  return out.str();
}

}  // namespace qsynth
