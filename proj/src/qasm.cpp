#include "qsynth/qasm.hpp"

#include <sstream>
#include <stdexcept>

namespace qsynth {

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  if (!c.description().empty()) out << "// " << c.description() << "\n";
  if (c.has_output_labels()) {
    for (int q = 0; q < c.width(); ++q)
      if (!c.output_labels()[q].empty())
        out << "// output q[" << q << "] = " << c.output_labels()[q] << "\n";
  }
  out << "qreg q[" << c.width() << "];\n";
  size_t seg = 0;
  const auto& segments = c.segments();
  for (size_t gi = 0; gi <= c.gates().size(); ++gi) {
    while (seg < segments.size() && segments[seg].second == gi) {
      out << "// segment: " << segments[seg].first << "\n";
      ++seg;
    }
    if (gi == c.gates().size()) break;
    const Gate& g = c.gates()[gi];
    if (g.kind == GateKind::Cnot)
      out << "cx q[" << g.control << "],q[" << g.target << "];\n";
    else
      out << "ccx q[" << g.control << "],q[" << g.control2 << "],q[" << g.target
          << "];\n";
  }
  return out.str();
}

namespace {

std::vector<int> parse_operands(const std::string& args, int expected) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < args.size()) {
    size_t open = args.find("q[", pos);
    if (open == std::string::npos) break;
    size_t close = args.find(']', open);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated operand: " + args);
    out.push_back(std::stoi(args.substr(open + 2, close - open - 2)));
    pos = close + 1;
  }
  if (static_cast<int>(out.size()) != expected)
    throw std::invalid_argument("bad operand count: " + args);
  return out;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Circuit circuit;
  bool have_reg = false;
  std::string description;
  std::vector<std::pair<int, std::string>> labels;

  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.rfind("//", 0) == 0) {
      std::string body = line.substr(2);
      if (!body.empty() && body[0] == ' ') body = body.substr(1);
      if (body.rfind("segment: ", 0) == 0) {
        if (have_reg) circuit.mark_segment(body.substr(9));
      } else if (body.rfind("output q[", 0) == 0) {
        size_t close = body.find(']');
        size_t eq = body.find("= ");
        if (close != std::string::npos && eq != std::string::npos)
          labels.emplace_back(std::stoi(body.substr(9, close - 9)), body.substr(eq + 2));
      } else if (description.empty()) {
        description = body;
      }
      continue;
    }
    if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) continue;
    if (line.rfind("qreg", 0) == 0) {
      size_t open = line.find('['), close = line.find(']');
      if (open == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("bad qreg: " + line);
      circuit = Circuit(std::stoi(line.substr(open + 1, close - open - 1)));
      have_reg = true;
      continue;
    }
    if (!have_reg) throw std::invalid_argument("gate before qreg: " + line);
    size_t semi = line.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("missing ';': " + line);
    std::string stmt = line.substr(0, semi);
    if (stmt.rfind("cx ", 0) == 0) {
      auto ops = parse_operands(stmt.substr(3), 2);
      circuit.append(Gate::cnot(ops[0], ops[1]));
    } else if (stmt.rfind("ccx ", 0) == 0) {
      auto ops = parse_operands(stmt.substr(4), 3);
      circuit.append(Gate::toffoli(ops[0], ops[1], ops[2]));
    } else {
      throw std::invalid_argument("unsupported statement: " + line);
    }
  }
  if (!have_reg) throw std::invalid_argument("no qreg declaration");
  circuit.set_description(description);
  for (const auto& [q, label] : labels) circuit.set_output_label(q, label);
  return circuit;
}

}  // namespace qsynth
