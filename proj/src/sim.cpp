#include "qsynth/sim.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsynth {

namespace {

constexpr size_t kMaxMismatchesKept = 8;

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

BasisState simulate(const Circuit& c, const BasisState& in) {
  if (in.size() != c.width()) throw std::invalid_argument("state width mismatch");
  BasisState s = in;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Cnot) {
      if (s.bit(g.control)) s.flip_bit(g.target);
    } else {
      if (s.bit(g.control) && s.bit(g.control2)) s.flip_bit(g.target);
    }
  }
  return s;
}

BitMatrix extract_linear(const Circuit& c) {
  if (c.toffoli_count() > 0)
    throw std::invalid_argument("nonlinear circuit: Toffoli present");
  int n = c.width();
  BitMatrix m(n);
  for (int col = 0; col < n; ++col) {
    BasisState unit(n);
    unit.set_bit(col, true);
    BasisState out = simulate(c, unit);
    for (int r = 0; r < n; ++r)
      if (out.bit(r)) m.set(r, col, true);
  }
  return m;
}

BasisState random_state(int width, uint64_t seed, uint64_t index) {
  BasisState s(width);
  auto& words = s.words();
  for (size_t w = 0; w < words.size(); ++w)
    words[w] = splitmix64(seed ^ splitmix64(index * 0x100000001b3ull + w));
  int tail = width & 63;
  if (tail) words.back() &= (uint64_t{1} << tail) - 1;
  return s;
}

namespace {

struct PackedGate {
  uint64_t controls;  // mask of all control qubits
  uint64_t target;
};

std::vector<PackedGate> pack_gates(const Circuit& c) {
  std::vector<PackedGate> out;
  out.reserve(c.gate_count());
  for (const Gate& g : c.gates()) {
    uint64_t controls = uint64_t{1} << g.control;
    if (g.kind == GateKind::Toffoli) controls |= uint64_t{1} << g.control2;
    out.push_back({controls, uint64_t{1} << g.target});
  }
  return out;
}

inline uint64_t simulate_packed(const std::vector<PackedGate>& gates, uint64_t s) {
  for (const PackedGate& g : gates) {
    // branchless: xor the target iff all control bits are set
    uint64_t fire = (s & g.controls) == g.controls;
    s ^= g.target & (0 - fire);
  }
  return s;
}

// Runs a block of independent states through the gate list together; the
// per-state update chains are independent, so the inner loop keeps the
// pipeline full where one state at a time would stall on each gate.
constexpr size_t kStateBlock = 16;

inline void simulate_packed_block(const std::vector<PackedGate>& gates, uint64_t* s,
                                  size_t count) {
  for (const PackedGate& g : gates) {
    for (size_t b = 0; b < count; ++b) {
      uint64_t fire = (s[b] & g.controls) == g.controls;
      s[b] ^= g.target & (0 - fire);
    }
  }
}

struct CheckPlan {
  bool enumerate = false;
  uint64_t count = 0;
};

CheckPlan make_plan(int width, uint64_t limit) {
  if (width < 64 && (uint64_t{1} << width) <= limit)
    return {true, uint64_t{1} << width};
  return {false, limit};
}

void merge_mismatches(CheckReport& report, std::vector<std::vector<Mismatch>>& partial) {
  for (auto& p : partial)
    report.first_mismatches.insert(report.first_mismatches.end(),
                                   std::make_move_iterator(p.begin()),
                                   std::make_move_iterator(p.end()));
  std::sort(report.first_mismatches.begin(), report.first_mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) { return a.index < b.index; });
  if (report.first_mismatches.size() > kMaxMismatchesKept)
    report.first_mismatches.resize(kMaxMismatchesKept);
}

BasisState state_from_index(int width, uint64_t index) {
  BasisState s(width);
  s.words()[0] = index;
  return s;
}

}  // namespace

CheckReport exhaustive_check(const Circuit& c, const StateOracle& oracle,
                             uint64_t limit, ExecMode mode, uint64_t seed) {
  CheckPlan plan = make_plan(c.width(), limit);
  CheckReport report;
  report.states_checked = plan.count;

  int threads = 1;
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) threads = omp_get_max_threads();
#endif
  std::vector<std::vector<Mismatch>> partial(threads);
  std::vector<uint64_t> counts(threads, 0);

  auto check_one = [&](uint64_t i, int tid) {
    BasisState input = plan.enumerate ? state_from_index(c.width(), i)
                                      : random_state(c.width(), seed, i);
    BasisState actual = simulate(c, input);
    BasisState expected = oracle(input);
    if (actual != expected) {
      ++counts[tid];
      if (partial[tid].size() < kMaxMismatchesKept)
        partial[tid].push_back({i, std::move(input), std::move(expected), std::move(actual)});
    }
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(plan.count); ++i) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      check_one(static_cast<uint64_t>(i), tid);
    }
  } else {
    for (uint64_t i = 0; i < plan.count; ++i) check_one(i, 0);
  }

  for (uint64_t k : counts) report.mismatch_count += k;
  merge_mismatches(report, partial);
  return report;
}

CheckReport check_identity(const Circuit& c, uint64_t limit, ExecMode mode,
                           uint64_t seed) {
  if (c.width() > 64) {
    // generic path; widths beyond the packed kernel
    return exhaustive_check(
        c, [](const BasisState& s) { return s; }, limit, mode, seed);
  }

  CheckPlan plan = make_plan(c.width(), limit);
  CheckReport report;
  report.states_checked = plan.count;
  std::vector<PackedGate> gates = pack_gates(c);
  uint64_t width_mask =
      c.width() == 64 ? ~uint64_t{0} : (uint64_t{1} << c.width()) - 1;

  int threads = 1;
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) threads = omp_get_max_threads();
#endif
  std::vector<std::vector<Mismatch>> partial(threads);
  std::vector<uint64_t> counts(threads, 0);

  auto check_block = [&](uint64_t begin, uint64_t end, int tid) {
    uint64_t inputs[kStateBlock], states[kStateBlock];
    while (begin < end) {
      size_t count = std::min<uint64_t>(kStateBlock, end - begin);
      for (size_t b = 0; b < count; ++b) {
        inputs[b] = plan.enumerate ? begin + b
                                   : (random_state(c.width(), seed, begin + b).low_word() &
                                      width_mask);
        states[b] = inputs[b];
      }
      simulate_packed_block(gates, states, count);
      for (size_t b = 0; b < count; ++b) {
        if (states[b] != inputs[b]) {
          ++counts[tid];
          if (partial[tid].size() < kMaxMismatchesKept) {
            BasisState in_state(c.width()), out_state(c.width());
            in_state.words()[0] = inputs[b];
            out_state.words()[0] = states[b];
            partial[tid].push_back({begin + b, in_state, in_state, out_state});
          }
        }
      }
      begin += count;
    }
  };

  if (mode == ExecMode::Parallel) {
    int64_t blocks =
        static_cast<int64_t>((plan.count + kStateBlock - 1) / kStateBlock);
#pragma omp parallel for schedule(static)
    for (int64_t blk = 0; blk < blocks; ++blk) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      uint64_t begin = static_cast<uint64_t>(blk) * kStateBlock;
      check_block(begin, std::min(plan.count, begin + kStateBlock), tid);
    }
  } else {
    check_block(0, plan.count, 0);
  }

  for (uint64_t k : counts) report.mismatch_count += k;
  merge_mismatches(report, partial);
  return report;
}

}  // namespace qsynth
