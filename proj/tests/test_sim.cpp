#include "doctest.h"
#include "helpers.hpp"
#include "qsynth/schedule.hpp"
#include "qsynth/sim.hpp"
#include "qsynth/squaring.hpp"

using namespace qsynth;

namespace {
BasisState state_of(int width, uint64_t bits) {
  BasisState s(width);
  s.words()[0] = bits;
  return s;
}
}  // namespace

TEST_CASE("gate truth tables") {
  Circuit cnot(2);
  cnot.append(Gate::cnot(0, 1));
  CHECK(simulate(cnot, state_of(2, 0b01)) == state_of(2, 0b11));  // control set
  CHECK(simulate(cnot, state_of(2, 0b10)) == state_of(2, 0b10));
  CHECK(simulate(cnot, state_of(2, 0b00)) == state_of(2, 0b00));

  Circuit tof(3);
  tof.append(Gate::toffoli(0, 1, 2));
  CHECK(simulate(tof, state_of(3, 0b011)) == state_of(3, 0b111));
  CHECK(simulate(tof, state_of(3, 0b010)) == state_of(3, 0b010));
  CHECK(simulate(tof, state_of(3, 0b111)) == state_of(3, 0b011));
}

TEST_CASE("simulate rejects width mismatch") {
  Circuit c(3);
  CHECK_THROWS_AS(simulate(c, BasisState(2)), std::invalid_argument);
}

TEST_CASE("n=10 squarer on x^5 read through sigma gives the software square") {
  auto spec = FieldSpec::parse("x^10+x^3+1");
  SquaringCircuit sq = synth_square(spec);
  BasisState out = simulate(sq.circuit, state_of(10, uint64_t{1} << 5));
  auto expected = gf_square(FieldElement::from_bits(spec, uint64_t{1} << 5));
  CHECK(expected.bits() == 0b1001);  // x^3+1
  for (int q = 0; q < 10; ++q)
    CHECK(out.bit(q) == expected.bit(sq.assignment.sigma[q]));
}

TEST_CASE("extract_linear basics") {
  CHECK(extract_linear(Circuit(3)) == BitMatrix::identity(3));

  Circuit c(2);
  c.append(Gate::cnot(0, 1));
  BitMatrix m = extract_linear(c);
  CHECK(m.get(0, 0));
  CHECK(m.get(1, 0));
  CHECK(m.get(1, 1));
  CHECK_FALSE(m.get(0, 1));

  Circuit t(3);
  t.append(Gate::toffoli(0, 1, 2));
  CHECK_THROWS_AS(extract_linear(t), std::invalid_argument);
}

TEST_CASE("extract_linear agrees with simulate on random states") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Circuit c = testing::random_cnot_circuit(rng, 16, 60);
    BitMatrix m = extract_linear(c);
    for (uint64_t i = 0; i < 100; ++i) {
      BasisState s = random_state(c.width(), 77, i);
      REQUIRE(m.multiply(s) == simulate(c, s));
    }
  }
}

TEST_CASE("exhaustive_check passes identity vs identity") {
  Circuit c(4);
  auto report = exhaustive_check(
      c, [](const BasisState& s) { return s; }, 1 << 16);
  CHECK(report.ok());
  CHECK(report.states_checked == 16);  // 2^4 fits the limit
}

TEST_CASE("exhaustive_check reports mismatches against a wrong oracle") {
  Circuit c(4);  // identity circuit
  auto wrong = [](const BasisState& s) {
    BasisState w = s;
    w.flip_bit(0);
    return w;
  };
  auto report = exhaustive_check(c, wrong, 1 << 16);
  CHECK(report.mismatch_count == 16);
  REQUIRE(!report.first_mismatches.empty());
  CHECK(report.first_mismatches[0].index == 0);
  CHECK(report.first_mismatches[0].actual == state_of(4, 0));
  CHECK(report.first_mismatches[0].expected == state_of(4, 1));
}

TEST_CASE("serial and parallel checks agree") {
  auto spec = FieldSpec::parse("x^8+x^4+x^3+x^2+1");
  SquaringCircuit sq = synth_square(spec);
  auto oracle = squaring_state_oracle(sq);
  auto serial = exhaustive_check(sq.circuit, oracle, 1 << 10, ExecMode::Serial);
  auto parallel = exhaustive_check(sq.circuit, oracle, 1 << 10, ExecMode::Parallel);
  CHECK(serial.states_checked == parallel.states_checked);
  CHECK(serial.mismatch_count == parallel.mismatch_count);

  // and on a failing configuration the merged mismatch lists agree too
  auto wrong = [](const BasisState& s) {
    BasisState w = s;
    w.flip_bit(1);
    return w;
  };
  auto s2 = exhaustive_check(sq.circuit, wrong, 128, ExecMode::Serial);
  auto p2 = exhaustive_check(sq.circuit, wrong, 128, ExecMode::Parallel);
  REQUIRE(s2.first_mismatches.size() == p2.first_mismatches.size());
  for (size_t i = 0; i < s2.first_mismatches.size(); ++i) {
    CHECK(s2.first_mismatches[i].index == p2.first_mismatches[i].index);
    CHECK(s2.first_mismatches[i].input == p2.first_mismatches[i].input);
  }
}

TEST_CASE("sampled mode draws exactly the requested number of states") {
  auto spec = FieldSpec::parse("x^20+x^3+1");
  SquaringCircuit sq = synth_square(spec);
  auto report = exhaustive_check(sq.circuit, squaring_state_oracle(sq), 500);
  CHECK(report.states_checked == 500);
  CHECK(report.ok());
}

TEST_CASE("check_identity on squarer roundtrip, exhaustive n=12") {
  auto spec = FieldSpec::from_modulus(
      BinaryPolynomial::from_mask(testing::sieve_irreducible(12).front()));
  SquaringCircuit sq = synth_square(spec);
  Circuit roundtrip = sq.circuit;
  roundtrip.append_circuit(reverse_circuit(sq.circuit));
  auto report = check_identity(roundtrip, uint64_t{1} << 12);
  CHECK(report.ok());
  CHECK(report.states_checked == uint64_t{1} << 12);
  CHECK(check_identity(roundtrip, uint64_t{1} << 12, ExecMode::Serial).ok());
}

TEST_CASE("check_identity catches a non-identity circuit") {
  Circuit c(4);
  c.append(Gate::cnot(0, 1));
  auto report = check_identity(c, 1 << 4);
  CHECK(report.mismatch_count == 8);  // half the states have bit 0 set
}

TEST_CASE("random_state is deterministic in seed and index") {
  CHECK(random_state(80, 1, 7) == random_state(80, 1, 7));
  CHECK(random_state(80, 1, 7) != random_state(80, 1, 8));
  CHECK(random_state(80, 2, 7) != random_state(80, 1, 7));
  // width respected
  BasisState s = random_state(70, 3, 0);
  for (int i = 70; i < 128; ++i) {
    bool bit = (s.words()[i >> 6] >> (i & 63)) & 1;
    CHECK_FALSE(bit);
  }
}

TEST_CASE("simulating a schedule layer by layer equals the original order") {
  auto spec = FieldSpec::parse("x^10+x^3+1");
  SquaringCircuit sq = synth_square(spec);
  Circuit flat = flatten(sq.circuit, compute_schedule(sq.circuit));
  for (uint64_t v = 0; v < 1024; ++v)
    REQUIRE(simulate(sq.circuit, state_of(10, v)) == simulate(flat, state_of(10, v)));
}
