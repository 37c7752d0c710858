#include "qsynth/squaring.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsynth/schedule.hpp"
#include "qsynth/sim.hpp"

namespace qsynth {

std::vector<int> OutputAssignment::inverse() const {
  std::vector<int> inv(sigma.size(), -1);
  for (size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<int>(i);
  return inv;
}

std::vector<ReductionRow> reduction_rows(const FieldSpec& spec) {
  std::vector<ReductionRow> rows;
  rows.reserve(spec.n());
  for (int i = 0; i < spec.n(); ++i)
    rows.push_back({i, poly_mod(BinaryPolynomial::x_power(2 * i), spec.modulus())});
  return rows;
}

namespace {

// Augmenting-path step of Kuhn's algorithm; candidates scanned in ascending
// bit order so the matching is deterministic and greedy-first.
bool try_assign(int qubit, const std::vector<ReductionRow>& rows, int n,
                std::vector<int>& owner, std::vector<char>& visited) {
  const BinaryPolynomial& bits = rows[qubit].bits;
  for (int j = 0; j <= bits.degree(); ++j) {
    if (!bits.bit(j) || visited[j]) continue;
    visited[j] = 1;
    // pinned outputs (owner with 2*owner < n) are never reassigned
    if (owner[j] >= 0 && 2 * owner[j] < n) continue;
    if (owner[j] < 0 || try_assign(owner[j], rows, n, owner, visited)) {
      owner[j] = qubit;
      return true;
    }
  }
  return false;
}

}  // namespace

OutputAssignment assign_outputs(const std::vector<ReductionRow>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> owner(n, -1);  // output index -> qubit
  for (int i = 0; 2 * i < n; ++i) owner[2 * i] = i;

  std::vector<char> visited(n);
  for (int i = (n + 1) / 2; i < n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_assign(i, rows, n, owner, visited))
      throw std::invalid_argument(
          "no output assignment exists; modulus is not irreducible");
  }

  OutputAssignment a;
  a.sigma.assign(n, -1);
  for (int j = 0; j < n; ++j) a.sigma[owner[j]] = j;
  return a;
}

Circuit synth_linear_gaussian(const BitMatrix& m) {
  int n = m.size();
  BitMatrix work = m;
  // Gauss-Jordan with row additions only; a CNOT(control=a, target=b) as a
  // linear map adds bit a into bit b, i.e. premultiplies by the elementary
  // matrix L(b,a). Reducing M to I as L_k ... L_1 M = I gives
  // M = L_1 ... L_k, and a circuit applies its gate list left factor last,
  // so the recorded operations are emitted in reverse.
  std::vector<std::pair<int, int>> ops;  // (src_row, dst_row): row_dst += row_src
  for (int col = 0; col < n; ++col) {
    if (!work.get(col, col)) {
      int pivot = -1;
      for (int r = col + 1; r < n; ++r) {
        if (work.get(r, col)) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) throw std::invalid_argument("matrix is singular");
      work.xor_row(col, pivot);
      ops.emplace_back(pivot, col);
    }
    for (int r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        work.xor_row(r, col);
        ops.emplace_back(col, r);
      }
    }
  }
  Circuit c(n);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    c.append(Gate::cnot(it->first, it->second));
  return c;
}

EmitResult emit_cnots(const std::vector<ReductionRow>& rows,
                      const OutputAssignment& assignment) {
  int n = static_cast<int>(rows.size());
  std::vector<int> inv = assignment.inverse();

  // targets of each control row, in ascending output-bit order
  std::vector<std::vector<int>> row_targets(n);
  std::vector<char> is_control(n, 0);
  for (int i = 0; i < n; ++i) {
    const BinaryPolynomial& bits = rows[i].bits;
    for (int k = 0; k <= bits.degree(); ++k)
      if (bits.bit(k) && k != assignment.sigma[i]) row_targets[i].push_back(inv[k]);
    is_control[i] = !row_targets[i].empty();
  }

  // A CNOT sourced at q must fire while q still holds its input value, so
  // whenever row a targets a control qubit b, row b's gates come first.
  // Kahn's algorithm with smallest-index preference; a cycle means no valid
  // order exists for this gate set.
  std::vector<std::vector<int>> successors(n);
  std::vector<int> indegree(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b : row_targets[a]) {
      if (is_control[b] && b != a) {
        successors[b].push_back(a);
        ++indegree[a];
      }
    }
  }
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (is_control[i] && indegree[i] == 0) ready.push_back(i);
  std::make_heap(ready.begin(), ready.end(), std::greater<>());
  std::vector<int> order;
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    int c = ready.back();
    ready.pop_back();
    order.push_back(c);
    for (int next : successors[c]) {
      if (--indegree[next] == 0) {
        ready.push_back(next);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
    }
  }

  size_t control_count = std::count(is_control.begin(), is_control.end(), char{1});
  if (order.size() < control_count) {
    // cyclic precedence: synthesize the same map from the rows directly
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rows[i].bits.bit(j)) m.set(j, i, true);
    EmitResult result{synth_linear_gaussian(m), OutputAssignment{}, true};
    result.assignment.sigma.resize(n);
    for (int i = 0; i < n; ++i) result.assignment.sigma[i] = i;
    return result;
  }

  Circuit c(n);
  for (int control : order)
    for (int target : row_targets[control]) c.append(Gate::cnot(control, target));
  return {std::move(c), assignment, false};
}

uint64_t squaring_gate_formula(const FieldSpec& spec) {
  uint64_t total = 0;
  for (const auto& row : reduction_rows(spec))
    if (2 * row.source_qubit >= spec.n()) total += row.bits.weight() - 1;
  return total;
}

bool verify_linear(const SquaringCircuit& sq) {
  BitMatrix realized = extract_linear(sq.circuit);
  return realized.rows_permuted(sq.assignment.sigma) == frobenius_matrix(sq.field);
}

StateOracle squaring_state_oracle(const SquaringCircuit& sq) {
  FieldSpec spec = sq.field;
  std::vector<int> sigma = sq.assignment.sigma;
  return [spec, sigma](const BasisState& in) {
    BinaryPolynomial a;
    for (int i = 0; i < spec.n(); ++i)
      if (in.bit(i)) a.set_bit(i);
    FieldElement squared = gf_square(FieldElement(spec, a));
    BasisState out(spec.n());
    for (int q = 0; q < spec.n(); ++q) out.set_bit(q, squared.bit(sigma[q]));
    return out;
  };
}

SquaringCircuit synth_square(const FieldSpec& spec) {
  auto rows = reduction_rows(spec);
  OutputAssignment assignment = assign_outputs(rows);
  EmitResult emitted = emit_cnots(rows, assignment);

  SquaringCircuit sq{std::move(emitted.circuit), std::move(emitted.assignment), spec,
                     emitted.used_gaussian_fallback};
  sq.circuit.set_description("squaring over GF(2^" + std::to_string(spec.n()) +
                             "), f(x) = " + spec.name());
  for (int q = 0; q < spec.n(); ++q)
    sq.circuit.set_output_label(q, "Y_" + std::to_string(sq.assignment.sigma[q]));

  if (!verify_linear(sq))
    throw std::logic_error("internal error: synthesized squarer fails verification");
  return sq;
}

CostReport squaring_cost(const SquaringCircuit& sq) {
  CostReport r;
  r.field = sq.field.name();
  r.n = sq.field.n();
  r.gate_count = sq.circuit.gate_count();
  r.cnot_count = sq.circuit.cnot_count();
  r.toffoli_count = 0;
  r.qubit_count = sq.field.n();
  r.depth = compute_schedule(sq.circuit).depth();
  r.breakdown = {{"squaring_cnots", sq.circuit.gate_count()}};
  r.used_gaussian_fallback = sq.used_gaussian_fallback;
  return r;
}

}  // namespace qsynth
