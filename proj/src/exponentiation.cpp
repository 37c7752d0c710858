#include "qsynth/exponentiation.hpp"

#include <sstream>
#include <stdexcept>

#include "qsynth/multiplier.hpp"
#include "qsynth/schedule.hpp"
#include "qsynth/squaring.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsynth {

namespace {

// Builds the exponentiation gate list while threading the A register's
// coefficient-to-wire map through each stage. Applying the squarer
// "positionally" through the current map advances it by sigma; applying the
// reversed squarer through map*sigma retracts it. The copy and multiplier
// stages contact the wire currently holding each coefficient.
class ExpoBuilder {
 public:
  ExpoBuilder(const FieldSpec& spec, const SquaringCircuit& sq)
      : spec_(spec),
        layout_{spec.n()},
        circuit_(layout_.width()),
        squarer_(sq.circuit),
        squarer_rev_(reverse_circuit(sq.circuit)),
        sigma_(sq.assignment.sigma),
        wire_of_coeff_(spec.n()) {
    for (int i = 0; i < spec_.n(); ++i) wire_of_coeff_[i] = i;
  }

  void square_a() {
    append_on_a(squarer_, wire_of_coeff_);
    std::vector<int> next(spec_.n());
    for (int q = 0; q < spec_.n(); ++q) next[sigma_[q]] = wire_of_coeff_[q];
    wire_of_coeff_ = std::move(next);
  }

  void unsquare_a() {
    std::vector<int> relabel(spec_.n());
    for (int q = 0; q < spec_.n(); ++q) relabel[q] = wire_of_coeff_[sigma_[q]];
    append_on_a(squarer_rev_, relabel);
    wire_of_coeff_ = std::move(relabel);
  }

  void copy_a_to_b0() {
    for (int i = 0; i < spec_.n(); ++i)
      circuit_.append(Gate::cnot(wire_of_coeff_[i], layout_.b_qubit(0, i)));
  }

  void multiply(const Circuit& mult, int b_src, int b_dst) {
    int n = spec_.n();
    std::vector<int> map(3 * n);
    for (int i = 0; i < n; ++i) {
      map[i] = wire_of_coeff_[i];
      map[n + i] = layout_.b_qubit(b_src, i);
      map[2 * n + i] = layout_.b_qubit(b_dst, i);
    }
    for (const Gate& g : mult.gates()) {
      circuit_.append(
          Gate::toffoli(map[g.control], map[g.control2], map[g.target]));
    }
  }

  const std::vector<int>& wire_map() const { return wire_of_coeff_; }
  Circuit& circuit() { return circuit_; }
  ExpoLayout layout() const { return layout_; }

 private:
  void append_on_a(const Circuit& src, const std::vector<int>& wires) {
    for (const Gate& g : src.gates())
      circuit_.append(Gate::cnot(wires[g.control], wires[g.target]));
  }

  FieldSpec spec_;
  ExpoLayout layout_;
  Circuit circuit_;
  Circuit squarer_;
  Circuit squarer_rev_;
  std::vector<int> sigma_;
  std::vector<int> wire_of_coeff_;
};

bool is_identity_map(const std::vector<int>& m) {
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

ExpoCircuit synth_exponentiation(const FieldSpec& spec) {
  int n = spec.n();
  SquaringCircuit sq = synth_square(spec);
  Circuit mult = synth_mult(spec).circuit;
  Circuit mult_rev = reverse_circuit(mult);
  ExpoBuilder builder(spec, sq);

  builder.circuit().mark_segment("step1");
  builder.square_a();
  builder.copy_a_to_b0();
  for (int i = 2; i < n; ++i) {
    builder.square_a();
    builder.multiply(mult, i - 2, i - 1);
  }

  std::vector<int> mid_map = builder.wire_map();
  builder.circuit().mark_segment("step2");
  if (n == 2) {
    // result lives in B[0], so only the squaring of A is undone
    builder.unsquare_a();
  } else {
    for (int i = n - 2; i >= 2; --i) {
      builder.unsquare_a();
      builder.multiply(mult_rev, i - 2, i - 1);
    }
    builder.unsquare_a();
    builder.copy_a_to_b0();
    builder.unsquare_a();
  }
  if (!is_identity_map(builder.wire_map()))
    throw std::logic_error("internal error: A register relabelings did not cancel");

  ExpoCircuit e{std::move(builder.circuit()), spec, builder.layout(),
                std::move(mid_map)};
  e.circuit.set_description("exponentiation a^(2^" + std::to_string(n) +
                            "-2) over GF(2^" + std::to_string(n) +
                            "), f(x) = " + spec.name());
  for (int i = 0; i < n; ++i)
    e.circuit.set_output_label(e.layout.a_qubit(i), "A_" + std::to_string(i));
  for (int r = 0; r <= n - 2; ++r)
    for (int i = 0; i < n; ++i)
      e.circuit.set_output_label(e.layout.b_qubit(r, i),
                                 "B[" + std::to_string(r) + "]_" + std::to_string(i));
  return e;
}

namespace {

CostReport expo_report(const FieldSpec& spec, uint64_t squaring_gates, bool fallback) {
  int n = spec.n();
  uint64_t g_k = squaring_gates;
  uint64_t g_u = mult_gate_cost(spec);
  uint64_t forward_sq = (n - 1) * g_k;
  uint64_t reverse_sq = (n - 1) * g_k;
  uint64_t mults = (n - 2) * g_u;
  uint64_t reverse_mults = n >= 3 ? (n - 3) * g_u : 0;
  uint64_t copies = n == 2 ? n : 2 * n;

  CostReport r;
  r.field = spec.name();
  r.n = n;
  r.qubit_count = static_cast<uint64_t>(n) * n;
  r.breakdown = {{"forward_squarings", forward_sq},
                 {"reverse_squarings", reverse_sq},
                 {"multiplications", mults},
                 {"reverse_multiplications", reverse_mults},
                 {"copies", copies}};
  r.gate_count = r.breakdown_total();
  r.toffoli_count = mults + reverse_mults;
  r.cnot_count = r.gate_count - r.toffoli_count;
  r.used_gaussian_fallback = fallback;
  r.squaring_metric = forward_sq;
  r.squaring_gates_all = forward_sq + reverse_sq;
  return r;
}

}  // namespace

CostReport expo_cost(const FieldSpec& spec) {
  SquaringCircuit sq = synth_square(spec);
  return expo_report(spec, sq.circuit.gate_count(), sq.used_gaussian_fallback);
}

CostReport expo_cost(const ExpoCircuit& e) {
  SquaringCircuit sq = synth_square(e.field);
  CostReport r = expo_report(e.field, sq.circuit.gate_count(), sq.used_gaussian_fallback);
  r.depth = compute_schedule(e.circuit).depth();
  return r;
}

namespace {

FieldElement read_register(const FieldSpec& spec, const BasisState& s, int offset) {
  BinaryPolynomial v;
  for (int i = 0; i < spec.n(); ++i)
    if (s.bit(offset + i)) v.set_bit(i);
  return FieldElement(spec, v);
}

void write_register(BasisState& s, const FieldElement& v, int offset) {
  for (int i = 0; i < v.spec().n(); ++i) s.set_bit(offset + i, v.bit(i));
}

FieldElement unsquare(FieldElement v) {
  for (int j = 1; j < v.spec().n(); ++j) v = gf_square(v);  // Frobenius inverse
  return v;
}

}  // namespace

BasisState expo_register_model(const FieldSpec& spec, const BasisState& in) {
  int n = spec.n();
  ExpoLayout lay{n};
  if (in.size() != lay.width())
    throw std::invalid_argument("state width != n^2");

  FieldElement a = read_register(spec, in, lay.a_qubit(0));
  std::vector<FieldElement> b;
  for (int r = 0; r <= n - 2; ++r)
    b.push_back(read_register(spec, in, lay.b_qubit(r, 0)));

  auto mult_acc = [&](int src, int dst) { b[dst] = gf_add(b[dst], gf_mul(a, b[src])); };

  a = gf_square(a);
  b[0] = gf_add(b[0], a);
  for (int i = 2; i < n; ++i) {
    a = gf_square(a);
    mult_acc(i - 2, i - 1);
  }
  if (n == 2) {
    a = unsquare(a);
  } else {
    for (int i = n - 2; i >= 2; --i) {
      a = unsquare(a);
      mult_acc(i - 2, i - 1);
    }
    a = unsquare(a);
    b[0] = gf_add(b[0], a);
    a = unsquare(a);
  }

  BasisState out(lay.width());
  write_register(out, a, lay.a_qubit(0));
  for (int r = 0; r <= n - 2; ++r) write_register(out, b[r], lay.b_qubit(r, 0));
  return out;
}

ExpoVerifyReport verify_exponentiation(const ExpoCircuit& e, ExecMode mode,
                                       uint64_t samples) {
  const FieldSpec& spec = e.field;
  const ExpoLayout& lay = e.layout;
  int n = spec.n();
  bool enumerate = n <= 6;
  uint64_t count = enumerate ? (uint64_t{1} << n) : samples;

  Circuit step1 = e.circuit.prefix_before_segment("step2");

  ExpoVerifyReport report;
  report.states_checked = count;

  int threads = 1;
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) threads = omp_get_max_threads();
#endif
  std::vector<uint64_t> failures(threads, 0);
  std::vector<std::pair<uint64_t, std::string>> first(threads, {~uint64_t{0}, ""});

  auto element_for = [&](uint64_t idx) {
    if (enumerate) return FieldElement::from_bits(spec, idx);
    BasisState r = random_state(n, kCheckSeed, idx);
    BinaryPolynomial v;
    for (int i = 0; i < n; ++i)
      if (r.bit(i)) v.set_bit(i);
    return FieldElement(spec, v);
  };

  auto check_one = [&](uint64_t idx, int tid) {
    FieldElement a = element_for(idx);
    BasisState input(lay.width());
    for (int i = 0; i < n; ++i)
      if (a.bit(i)) input.set_bit(lay.a_qubit(i), true);

    std::ostringstream problem;
    BasisState final_state = simulate(e.circuit, input);
    FieldElement expected = gf_exp_fermat(a);
    FieldElement result = read_register(spec, final_state, lay.b_qubit(n - 2, 0));
    if (result != expected) {
      problem << "result register B[" << n - 2 << "] = "
              << result.value().to_hex_string() << ", expected "
              << expected.value().to_hex_string();
    } else if (read_register(spec, final_state, lay.a_qubit(0)) != a) {
      problem << "input register not restored";
    } else {
      for (int r = 0; r <= n - 3; ++r) {
        if (!read_register(spec, final_state, lay.b_qubit(r, 0)).is_zero()) {
          problem << "ancilla register B[" << r << "] not returned to zero";
          break;
        }
      }
    }

    if (problem.str().empty()) {
      // intermediate state after the compute half:
      // A = a^(2^(n-1)) in relabeled order, B[i-1] = prod_{j=1..i} a^(2^j)
      BasisState mid = simulate(step1, input);
      BinaryPolynomial a_mid_bits;
      for (int i = 0; i < n; ++i)
        if (mid.bit(e.mid_a_wire[i])) a_mid_bits.set_bit(i);
      FieldElement a_mid(spec, a_mid_bits);

      FieldElement power = gf_square(a);
      FieldElement product = power;
      FieldElement a_want = power;
      for (int j = 2; j <= n - 1; ++j) a_want = gf_square(a_want);
      if (a_mid != a_want) {
        problem << "mid-circuit A != a^(2^(n-1))";
      } else if (read_register(spec, mid, lay.b_qubit(0, 0)) != power) {
        problem << "mid-circuit B[0] != a^2";
      } else {
        for (int i = 2; i <= n - 1; ++i) {
          power = gf_square(power);
          product = gf_mul(product, power);
          if (read_register(spec, mid, lay.b_qubit(i - 1, 0)) != product) {
            problem << "mid-circuit B[" << i - 1 << "] mismatch";
            break;
          }
        }
      }
    }

    if (!problem.str().empty()) {
      ++failures[tid];
      if (idx < first[tid].first)
        first[tid] = {idx, "a = " + a.value().to_hex_string() + ": " + problem.str()};
    }
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(count); ++i) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      check_one(static_cast<uint64_t>(i), tid);
    }
  } else {
    for (uint64_t i = 0; i < count; ++i) check_one(i, 0);
  }

  uint64_t best = ~uint64_t{0};
  for (int t = 0; t < threads; ++t) {
    report.failures += failures[t];
    if (first[t].first < best) {
      best = first[t].first;
      report.first_failure = first[t].second;
    }
  }
  return report;
}

}  // namespace qsynth
