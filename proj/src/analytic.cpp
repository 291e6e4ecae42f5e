#include "svc/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace svc::analytic {

namespace {

// Absorbs float drift just above an integer before rounding up.
double ceil_guard(double x) { return std::ceil(x - std::fabs(x) * 1e-12); }

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

uint32_t log2_exact(uint64_t n) {
  uint32_t b = 0;
  while ((uint64_t(1) << b) < n) b++;
  return b;
}

bool power_of_two(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

const double kNuSweep[] = {0.0, 0.25, 0.5, 0.75, 1.0};
const uint32_t kAritySweep[] = {2, 4, 16, 64, 256};

std::string nu_key(double nu) {
  if (nu == 0.0) return "0";
  if (nu == 1.0) return "1";
  std::string s = fixed(nu, 2);
  while (s.back() == '0') s.pop_back();
  return s;
}

}  // namespace

void Inputs::validate() const {
  if (!power_of_two(n) || n < 2)
    throw std::invalid_argument("vector length must be a power of two >= 2");
  if (k == 0) throw std::invalid_argument("batch size must be positive");
  if (!power_of_two(c) || c < 2 || c > 1024)
    throw std::invalid_argument("arity must be a power of two in [2, 1024]");
  if (!(group_bytes > 0) || !(hash_node_bytes > 0) || !(t_group > 0) ||
      !(t_hash > 0))
    throw std::invalid_argument("sizes and times must be positive");
}

std::string format_count(double v) { return fixed(v, 0); }

std::string format_bytes_kb(double bytes) {
  double kb = bytes / 1e3;
  return fixed(kb, kb < 1.0 ? 3 : 2);
}

std::string format_bytes_kb1(double bytes) { return fixed(bytes / 1e3, 1); }

std::string format_bytes_mb(double bytes) { return fixed(bytes / 1e6, 2); }

std::string format_size_auto(double bytes) {
  if (bytes < 1e3) return fixed(bytes, 0) + " B";
  if (bytes < 1e6) return format_bytes_kb(bytes) + " kB";
  if (bytes < 1e9) return format_bytes_mb(bytes) + " MB";
  return fixed(bytes / 1e9, 2) + " GB";
}

std::string format_seconds_fine(double s) {
  return fixed(s, s < 0.1 ? 3 : 2);
}

std::string format_seconds_coarse(double s) { return fixed(s, 1); }

Table table2(const Inputs& in) {
  in.validate();
  double log2n = log2_exact(in.n);
  Table t;
  t.title = "Binary tree, group elements: broadcast size vs proof-update work";
  t.headers = {"nu", "published nodes", "|U| (kB)", "group exps", "time (s)"};
  for (double nu : kNuSweep) {
    Row r;
    r.key = nu_key(nu);
    if (nu == 0.0) {
      // Everything folds into the root record: one bare group element.
      r.published = 1;
      r.info_bytes = in.group_bytes;
    } else {
      r.published = ceil_guard(2.0 * std::pow(double(in.k), nu) * log2n);
      r.info_bytes = r.published * (log2n / 8.0 + in.group_bytes);
    }
    // At nu = 1 every changed node is published; nothing is recomputed.
    r.ops = nu == 1.0
                ? 0
                : ceil_guard(std::pow(double(in.k), 1.0 - nu) * log2n);
    r.seconds = r.ops * in.t_group;
    r.cells = {r.key, format_count(r.published), format_bytes_kb(r.info_bytes),
               format_count(r.ops), format_seconds_fine(r.seconds)};
    t.rows.push_back(std::move(r));
  }
  t.footnotes.push_back(
      "a published record counts log2(N)/8 index bytes plus one group "
      "element; the nu=0 row is a single bare group element and the nu=1 "
      "row recomputes nothing");
  return t;
}

Table table3(const Inputs& in) {
  in.validate();
  uint32_t log2n = log2_exact(in.n);
  Table t;
  t.title = "Binary tree, lattice hashes: broadcast size vs proof-update work";
  t.headers = {"nu", "published nodes", "|U| (MB)", "hash evals", "time (s)"};
  for (double nu : kNuSweep) {
    Row r;
    r.key = nu_key(nu);
    r.published = nu == 0.0
                      ? 1
                      : ceil_guard(std::pow(double(in.k), nu)) * log2n;
    r.info_bytes = r.published * in.hash_node_bytes;
    if (nu != 1.0) {
      uint64_t threshold =
          uint64_t(ceil_guard(std::pow(double(in.k), 1.0 - nu)));
      uint64_t evals = 0;
      for (uint32_t i = 0; i < log2n; i++) {
        uint64_t width = i < 63 ? uint64_t(1) << i : UINT64_MAX;
        evals += uint64_t(i) * std::min(threshold, width);
      }
      r.ops = double(2 * evals);
    }
    r.seconds = r.ops * in.t_hash;
    r.cells = {r.key, format_count(r.published), format_bytes_mb(r.info_bytes),
               format_count(r.ops), format_seconds_coarse(r.seconds)};
    t.rows.push_back(std::move(r));
  }
  t.footnotes.push_back(
      "the nu=0 row publishes the root node only and the nu=1 row "
      "recomputes nothing");
  return t;
}

Table table4(const Inputs& in) {
  in.validate();
  double log2n = log2_exact(in.n);
  Table t;
  t.title = "Multi-level tree arity sweep: proof size vs proof-update work";
  t.headers = {"c", "|pi| (B)", "|U| (kB)", "group exps", "time (s)"};
  bool note_624 = false;
  for (uint32_t c : kAritySweep) {
    double logcn = log2n / log2_exact(c);
    Row r;
    r.key = std::to_string(c);
    r.published = (logcn + 1.0) * in.group_bytes;  // proof bytes
    r.info_bytes = double(in.k) * logcn * (24.0 + in.group_bytes);
    r.ops = (c + 2.0) * logcn;
    r.seconds = r.ops * in.t_group;
    r.cells = {r.key, format_count(r.published),
               format_bytes_kb1(r.info_bytes), format_count(r.ops),
               format_seconds_fine(r.seconds)};
    if (c == 4 && r.published == 624.0) note_624 = true;
    t.rows.push_back(std::move(r));
  }
  if (note_624)
    t.footnotes.push_back(
        "the c=4 proof size evaluates to 624 B; the figure of 628 B seen "
        "elsewhere does not match the formula");
  t.footnotes.push_back(
      "each broadcast record counts 24 index bytes here, while the binary "
      "tree table counts log2(N)/8; the conventions are preserved, not "
      "harmonized");
  return t;
}

Table params_table(const Inputs& in) {
  in.validate();
  double log2n = log2_exact(in.n);
  Table t;
  t.title = "Public parameter sizes";
  t.headers = {"scheme", "", "computed size", "stated size", ""};

  auto verkle_row = [&](uint32_t c) {
    Row r;
    r.key = "multi-level c=" + std::to_string(c);
    r.info_bytes = (double(c) + double(c) * c) * in.group_bytes;
    r.cells = {r.key, "", format_size_auto(r.info_bytes), "", ""};
    return r;
  };
  t.rows.push_back(verkle_row(in.c));
  if (in.c != 2) t.rows.push_back(verkle_row(2));

  Row amt;
  amt.key = "single-level quotient tree N=2^" + format_count(log2n);
  amt.info_bytes = (2.0 * double(in.n) * log2n + double(in.n)) * in.group_bytes;
  amt.cells = {amt.key, "", format_size_auto(amt.info_bytes), "", ""};
  if (in.n == uint64_t(1) << 24) {
    amt.cells[3] = "36.46 GB";
    t.footnotes.push_back(
        "the quotient-tree parameter formula evaluates to " +
        format_size_auto(amt.info_bytes) +
        "; the stated figure of 36.46 GB does not match it and both are "
        "shown");
  }
  t.rows.push_back(std::move(amt));
  t.footnotes.push_back(
      "parameter bytes are reported in the broadcast-size column of the "
      "machine formats");
  return t;
}

}  // namespace svc::analytic
