#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace svc::analytic {

// Cost-model parameters for the closed-form evaluation tables. Sizes are in
// bytes, times in seconds, and all size arithmetic uses decimal units
// (1 kB = 1000 B).
struct Inputs {
  uint64_t n = uint64_t(1) << 24;  // vector length, a power of two
  uint64_t k = 460;                // updates per batch
  double nu = 0.5;                 // broadcast/recompute trade-off exponent
  uint32_t c = 256;                // multi-level tree arity
  double group_bytes = 48.0;       // compressed group element
  double hash_node_bytes = 0.21e6; // one lattice hash-tree node
  double t_group = 0.000665471;    // one group exponentiation
  double t_hash = 0.00274;         // one hash evaluation

  void validate() const;  // throws std::invalid_argument
};

// One evaluation row. The numeric fields feed the machine formats; `cells`
// holds the human-table strings (key, count or proof size, broadcast size,
// operation count, time) rounded the way the row is printed.
struct Row {
  std::string key;         // nu or c value as printed
  double published = 0;    // published node count; proof bytes for the arity sweep
  double info_bytes = 0;   // broadcast size in bytes (parameter bytes for params)
  double ops = 0;          // group exponentiations or hash evaluations
  double seconds = 0;
  std::array<std::string, 5> cells;
};

struct Table {
  std::string title;
  std::array<std::string, 5> headers;
  std::vector<Row> rows;
  std::vector<std::string> footnotes;
};

// Binary-tree group-based scheme: published = ceil(2 k^nu log2 N) nodes
// (single bare element at nu = 0), |U| = nodes * (log2(N)/8 + |G|),
// exps = ceil(k^(1-nu) log2 N) (zero at nu = 1), time = exps * T_G.
Table table2(const Inputs& in);

// Binary-tree lattice scheme: published = ceil(k^nu) * log2 N (one node at
// nu = 0), |U| = nodes * |H|, evals = 2 * sum_i i * min(ceil(k^(1-nu)), 2^i)
// over i < log2 N (zero at nu = 1), time = evals * T_f.
Table table3(const Inputs& in);

// Arity sweep c in {2, 4, 16, 64, 256}: proof = (log_c N + 1) |G|,
// |U| = k * log_c N * (24 + |G|), exps = (c + 2) log_c N, time = exps * T_G.
Table table4(const Inputs& in);

// Public-parameter sizes: multi-level (c + c^2) |G| and single-level
// quotient tree (2 N log2 N + N) |G|.
Table params_table(const Inputs& in);

// Shared cell formatting, exposed so tests can pin the printed strings.
std::string format_count(double v);
std::string format_bytes_kb(double bytes);     // 2 decimals, 3 below 1 kB
std::string format_bytes_kb1(double bytes);    // 1 decimal
std::string format_bytes_mb(double bytes);     // 2 decimals
std::string format_size_auto(double bytes);    // B / kB / MB / GB as fits
std::string format_seconds_fine(double s);     // 3 decimals below 0.1 s, else 2
std::string format_seconds_coarse(double s);   // 1 decimal

}  // namespace svc::analytic
