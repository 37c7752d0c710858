#include "qsynth/schedule.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace qsynth {

bool gates_commute(const Gate& a, const Gate& b) {
  // shared set must be all controls in both gates, or exactly the common
  // target, to commute
  bool shares = false;
  bool mixed = false;
  auto classify = [&](int q, bool ctrl_a) {
    if (q < 0 || !b.uses(q)) return;
    shares = true;
    bool ctrl_b = b.has_control(q);
    if (ctrl_a != ctrl_b) mixed = true;
  };
  classify(a.control, true);
  classify(a.control2, true);
  classify(a.target, false);
  if (!shares) return true;
  if (mixed) return false;
  // roles agree on every shared qubit; a shared target plus shared controls
  // still counts as non-commuting (the shared set is neither all-controls
  // nor target-only)
  bool shared_target = a.target == b.target;
  bool shared_control = (b.has_control(a.control)) ||
                        (a.control2 >= 0 && b.has_control(a.control2));
  if (shared_target && shared_control) return false;
  return true;
}

Schedule compute_schedule_reference(const Circuit& c) {
  Schedule s;
  std::vector<size_t> remaining(c.gate_count());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  const auto& gates = c.gates();

  std::vector<char> layer_uses(c.width());
  while (!remaining.empty()) {
    std::fill(layer_uses.begin(), layer_uses.end(), 0);
    std::vector<size_t> layer, skipped;
    for (size_t gi : remaining) {
      const Gate& g = gates[gi];
      bool disjoint = !layer_uses[g.control] && !layer_uses[g.target] &&
                      (g.control2 < 0 || !layer_uses[g.control2]);
      bool jumps_ok = true;
      if (disjoint) {
        for (size_t si : skipped) {
          if (!gates_commute(g, gates[si])) {
            jumps_ok = false;
            break;
          }
        }
      }
      if (disjoint && jumps_ok) {
        layer.push_back(gi);
        layer_uses[g.control] = 1;
        layer_uses[g.target] = 1;
        if (g.control2 >= 0) layer_uses[g.control2] = 1;
      } else {
        skipped.push_back(gi);
      }
    }
    s.layers.push_back(std::move(layer));
    remaining = std::move(skipped);
  }
  return s;
}

namespace {

// Per-qubit bitset of occupied layers, grown on demand.
class LayerOccupancy {
 public:
  explicit LayerOccupancy(int width) : occ_(width) {}

  // Smallest free layer >= start across the given qubits (1-based layers).
  size_t first_free(std::initializer_list<int> qubits, size_t start) const {
    size_t w = (start - 1) / 64;
    uint64_t low_mask = ~uint64_t{0} << ((start - 1) % 64);
    for (;; ++w, low_mask = ~uint64_t{0}) {
      uint64_t used = 0;
      for (int q : qubits) {
        if (q < 0) continue;
        const auto& words = occ_[q];
        if (w < words.size()) used |= words[w];
      }
      uint64_t free = ~used & low_mask;
      if (free) return w * 64 + std::countr_zero(free) + 1;
    }
  }

  void occupy(int q, size_t layer) {
    auto& words = occ_[q];
    size_t w = (layer - 1) / 64;
    if (w >= words.size()) words.resize(w + 1, 0);
    words[w] |= uint64_t{1} << ((layer - 1) % 64);
  }

 private:
  std::vector<std::vector<uint64_t>> occ_;
};

}  // namespace

Schedule compute_schedule(const Circuit& c) {
  const auto& gates = c.gates();
  const int width = c.width();

  // For the commutation barrier we track, over the gates processed so far:
  //   ctrl_layer[q]: max layer among gates controlling on q
  //   tgt_layer[q]:  max layer among gates targeting q
  //   pair_layer[(t,c)]: max layer among gates with target t and control c
  // A gate fails to commute with an earlier gate iff its target is that
  // gate's control, one of its controls is that gate's target, or they share
  // the target and also share a control; the barrier is the max layer over
  // those gates, and the gate lands in the first qubit-free layer at or
  // above it.
  std::vector<size_t> ctrl_layer(width, 0), tgt_layer(width, 0);
  std::unordered_map<uint64_t, size_t> pair_layer;
  pair_layer.reserve(gates.size() * 2);
  auto pair_key = [](int t, int ctrl) {
    return (static_cast<uint64_t>(t) << 32) | static_cast<uint32_t>(ctrl);
  };

  LayerOccupancy occ(width);
  std::vector<size_t> gate_layer(gates.size());
  size_t depth = 0;

  for (size_t gi = 0; gi < gates.size(); ++gi) {
    const Gate& g = gates[gi];
    size_t barrier = ctrl_layer[g.target];
    auto control_barrier = [&](int ctrl) {
      if (ctrl < 0) return;
      barrier = std::max(barrier, tgt_layer[ctrl]);
      auto it = pair_layer.find(pair_key(g.target, ctrl));
      if (it != pair_layer.end()) barrier = std::max(barrier, it->second);
    };
    control_barrier(g.control);
    control_barrier(g.control2);

    size_t layer =
        occ.first_free({g.control, g.control2, g.target}, std::max<size_t>(barrier, 1));
    gate_layer[gi] = layer;
    depth = std::max(depth, layer);

    occ.occupy(g.control, layer);
    occ.occupy(g.target, layer);
    if (g.control2 >= 0) occ.occupy(g.control2, layer);
    auto note_control = [&](int ctrl) {
      if (ctrl < 0) return;
      ctrl_layer[ctrl] = std::max(ctrl_layer[ctrl], layer);
      auto& slot = pair_layer[pair_key(g.target, ctrl)];
      slot = std::max(slot, layer);
    };
    note_control(g.control);
    note_control(g.control2);
    tgt_layer[g.target] = std::max(tgt_layer[g.target], layer);
  }

  Schedule s;
  s.layers.resize(depth);
  for (size_t gi = 0; gi < gates.size(); ++gi)
    s.layers[gate_layer[gi] - 1].push_back(gi);
  return s;
}

Circuit flatten(const Circuit& c, const Schedule& s) {
  Circuit out(c.width());
  for (const auto& layer : s.layers)
    for (size_t gi : layer) out.append(c.gates()[gi]);
  return out;
}

bool layers_qubit_disjoint(const Circuit& c, const Schedule& s) {
  std::vector<char> used(c.width());
  for (const auto& layer : s.layers) {
    std::fill(used.begin(), used.end(), 0);
    for (size_t gi : layer) {
      const Gate& g = c.gates()[gi];
      for (int q : {g.control, g.control2, g.target}) {
        if (q < 0) continue;
        if (used[q]) return false;
        used[q] = 1;
      }
    }
  }
  return true;
}

}  // namespace qsynth
