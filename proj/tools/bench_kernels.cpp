// Compares the OpenMP batch-verification kernels against their serial
// reference, and the streaming scheduler against the literal multi-pass
// formulation.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsynth/exponentiation.hpp"
#include "qsynth/multiplier.hpp"
#include "qsynth/schedule.hpp"
#include "qsynth/sim.hpp"
#include "qsynth/squaring.hpp"
#include "qsynth/tables.hpp"

using namespace qsynth;

namespace {

double seconds_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-44s %9.3f s %9.3f s %7.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t states = uint64_t{1} << 22;
  if (argc > 1) states = std::stoull(argv[1]);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel mode runs serially\n");
#endif
  std::printf("%-44s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    FieldSpec spec = documented_field(20);
    SquaringCircuit sq = synth_square(spec);
    Circuit roundtrip = sq.circuit;
    roundtrip.append_circuit(reverse_circuit(sq.circuit));
    double s = seconds_of([&] { check_identity(roundtrip, states, ExecMode::Serial); });
    double p = seconds_of([&] { check_identity(roundtrip, states, ExecMode::Parallel); });
    row("squarer n=20 roundtrip identity", s, p);
  }

  {
    ExpoCircuit e = synth_exponentiation(FieldSpec::parse("x^5+x^2+1"));
    Circuit roundtrip = e.circuit;
    roundtrip.append_circuit(reverse_circuit(e.circuit));
    double s = seconds_of([&] { check_identity(roundtrip, states, ExecMode::Serial); });
    double p = seconds_of([&] { check_identity(roundtrip, states, ExecMode::Parallel); });
    row("exponentiator n=5 roundtrip identity", s, p);
  }

  {
    FieldSpec spec = FieldSpec::parse("x^4+x+1");
    ExpoCircuit e = synth_exponentiation(spec);
    StateOracle oracle = [&](const BasisState& in) {
      return expo_register_model(spec, in);
    };
    double s = seconds_of([&] {
      exhaustive_check(e.circuit, oracle, uint64_t{1} << 16, ExecMode::Serial);
    });
    double p = seconds_of([&] {
      exhaustive_check(e.circuit, oracle, uint64_t{1} << 16, ExecMode::Parallel);
    });
    row("exponentiator n=4 vs register model (2^16)", s, p);
  }

  {
    Circuit mult = synth_mult(documented_field(64)).circuit;
    double fast = seconds_of([&] { compute_schedule(mult); });
    double ref = seconds_of([&] { compute_schedule_reference(mult); });
    std::printf("%-44s %9.3f s %9.3f s %7.2fx  (reference vs streaming)\n",
                "scheduler: multiplier n=64", ref, fast, ref / fast);
  }

  return 0;
}
