#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsynth/field.hpp"

namespace qsynth {

// One row of the squaring comparison table. Reference columns are the
// published costs of the prior 2n-qubit design, shipped as fixtures; "ours"
// columns always come from live synthesis. published_gates/published_depth
// are the table values claimed for this construction, kept for the footnote
// when a row's basis was not published and our documented choice differs.
struct SquaringTableRow {
  int n = 0;
  std::string polynomial;
  uint64_t qubits_ref = 0, qubits_ours = 0;
  uint64_t gates_ref = 0, gates_ours = 0;
  std::optional<uint64_t> depth_ref;
  uint64_t depth_ours = 0;
  double qubit_improvement = 0, gate_improvement = 0;
  uint64_t published_gates = 0, published_depth = 0;
  bool matches_published = false;
  bool used_gaussian_fallback = false;
  bool basis_published = false;
};

struct ExpoTableRow {
  int n = 0;
  std::string polynomial;
  uint64_t metric_ref = 0, metric_ours = 0;  // gate cost from squarings
  uint64_t qubits_ref = 0, qubits_ours = 0;
  double metric_improvement = 0, qubit_improvement = 0;
  uint64_t published_metric = 0;
  bool matches_published = false;
  bool basis_published = false;
};

// The field sizes tabulated by the comparison tables.
const std::vector<int>& table_field_sizes();

// Minimal-weight, numerically-least irreducible polynomial of degree n:
// the first irreducible trinomial x^n + x^k + 1 by ascending k, else the
// first irreducible pentanomial by ascending inner mask. Reproduces every
// basis the comparison tables name.
BinaryPolynomial select_minimal_polynomial(int n);

// The polynomial used for a table row (precomputed results of
// select_minimal_polynomial for the tabulated sizes).
FieldSpec documented_field(int n);

// True for sizes whose basis the comparison tables name explicitly.
bool basis_published(int n);

std::vector<SquaringTableRow> squaring_table();
std::vector<ExpoTableRow> expo_table();

// "%.2f" percent rendering shared by the text and JSON outputs.
std::string format_percent(double v);
double improvement_percent(uint64_t ref, uint64_t ours);

std::string render_squaring_table(const std::vector<SquaringTableRow>& rows);
std::string render_expo_table(const std::vector<ExpoTableRow>& rows);
std::string squaring_table_json(const std::vector<SquaringTableRow>& rows);
std::string expo_table_json(const std::vector<ExpoTableRow>& rows);

}  // namespace qsynth
