#include "svc/bench_cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "svc/amt.hpp"
#include "svc/analytic.hpp"
#include "svc/kzg_vc.hpp"
#include "svc/lattice_hmt.hpp"
#include "svc/merkle_vc.hpp"
#include "svc/rng.hpp"
#include "svc/sublinear.hpp"
#include "svc/verkle.hpp"

namespace svc::cli {

namespace {

using nlohmann::json;

// One shared number renderer so CSV and JSON agree in value exactly.
std::string num_str(double v) { return json(v).dump(); }

struct OutputMode {
  bool as_json = false;
  bool as_csv = false;
};

void emit_table(const analytic::Table& t, const OutputMode& mode,
                std::ostream& out) {
  if (mode.as_csv) {
    out << "nu_or_c,published_nodes,update_info_bytes,ops,seconds\n";
    for (const auto& r : t.rows)
      out << r.key << ',' << num_str(r.published) << ','
          << num_str(r.info_bytes) << ',' << num_str(r.ops) << ','
          << num_str(r.seconds) << '\n';
    return;
  }
  if (mode.as_json) {
    json rows = json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"nu_or_c", r.key},
                      {"published_nodes", r.published},
                      {"update_info_bytes", r.info_bytes},
                      {"ops", r.ops},
                      {"seconds", r.seconds}});
    out << rows.dump(2) << '\n';
    return;
  }
  out << t.title << '\n';
  std::array<size_t, 5> width{};
  for (size_t i = 0; i < 5; i++) width[i] = t.headers[i].size();
  for (const auto& r : t.rows)
    for (size_t i = 0; i < 5; i++)
      width[i] = std::max(width[i], r.cells[i].size());
  auto line = [&](const std::array<std::string, 5>& cells) {
    for (size_t i = 0; i < 5; i++) {
      if (width[i] == 0) continue;
      out << (i == 0 ? "" : "  ") << std::setw(int(width[i]))
          << (i == 0 ? std::left : std::right) << cells[i];
    }
    out << '\n';
  };
  line(t.headers);
  for (const auto& r : t.rows) line(r.cells);
  for (const auto& f : t.footnotes) out << "note: " << f << '\n';
}

analytic::Row make_row(const std::string& key, double published, double bytes,
                       double ops, double seconds) {
  analytic::Row r;
  r.key = key;
  r.published = published;
  r.info_bytes = bytes;
  r.ops = ops;
  r.seconds = seconds;
  r.cells = {key, analytic::format_count(published),
             analytic::format_count(bytes), analytic::format_count(ops),
             num_str(seconds)};
  return r;
}

// ---- end-to-end drivers -------------------------------------------------

struct E2eOutcome {
  analytic::Row row;
  uint64_t failures = 0;
  std::string note;
};

std::vector<uint64_t> pick_distinct(DeterministicRng& rng, uint64_t n,
                                    uint64_t k) {
  std::set<uint64_t> s;
  while (s.size() < k) s.insert(rng.next_index(n));
  return {s.begin(), s.end()};
}

E2eOutcome e2e_merkle(uint64_t n, uint64_t k, uint64_t seed) {
  DeterministicRng rng(seed);
  std::vector<std::vector<uint8_t>> msgs(n);
  auto rand_msg = [&rng]() {
    std::vector<uint8_t> m(16);
    for (int half = 0; half < 2; half++) {
      uint64_t w = rng.next_u64();
      for (int b = 0; b < 8; b++) m[half * 8 + b] = uint8_t(w >> (8 * b));
    }
    return m;
  };
  for (auto& m : msgs) m = rand_msg();
  auto [root, tree] = merkle::commit(msgs);

  std::vector<merkle::Proof> proofs;
  proofs.reserve(n);
  for (uint64_t x = 0; x < n; x++) proofs.push_back(merkle::open(tree, x));

  merkle::UpdateBatch batch;
  for (uint64_t i : pick_distinct(rng, n, k)) batch.push_back({i, rand_msg()});
  auto upd = merkle::update(tree, batch);

  E2eOutcome out;
  for (uint64_t x = 0; x < n; x++) {
    auto refreshed = merkle::proof_update(proofs[x], upd.info);
    if (!merkle::verify(upd.new_root, upd.new_tree.messages[x], x, refreshed))
      out.failures++;
  }
  out.row = make_row("merkle", double(upd.info.entries.size()),
                     double(upd.info.byte_size()), 0, 0);
  out.note = "full path union broadcast; refresh recomputes nothing";
  return out;
}

E2eOutcome e2e_kzg(uint64_t n, uint64_t k, uint64_t seed, double t_group) {
  DeterministicRng rng(seed);
  auto setup = kzg::keygen(uint32_t(n), seed);
  std::vector<Fr> msgs(n);
  for (auto& m : msgs) m = rng.next_fr();
  auto state = kzg::commit(setup, msgs);

  std::vector<G1Aff> proofs;
  proofs.reserve(n);
  for (uint64_t x = 0; x < n; x++) proofs.push_back(kzg::open(setup, state, x));

  ScalarBatch batch;
  for (uint64_t i : pick_distinct(rng, n, k))
    batch.push_back({i, msgs[i], rng.next_fr()});
  auto upd = kzg::update(setup, state, batch);

  E2eOutcome out;
  uint64_t ops = 0;
  for (uint64_t x = 0; x < n; x++) {
    auto refreshed = kzg::proof_update(setup, proofs[x], x, batch);
    ops += refreshed.g1_exps;
    if (!kzg::verify(setup, upd.state.commitment, upd.state.messages[x], x,
                     refreshed.proof))
      out.failures++;
  }
  out.row = make_row("kzg", double(upd.info.entries.size()),
                     double(upd.info.byte_size()), double(ops),
                     double(ops) * t_group);
  out.note = "no broadcast beyond the batch itself; refresh pays one "
             "exponentiation per update";
  return out;
}

E2eOutcome e2e_amt(uint64_t n, uint64_t k, double nu, uint64_t seed,
                   double t_group) {
  DeterministicRng rng(seed);
  Srs srs = trusted_setup(uint32_t(n), seed, true);
  amt::Params params(srs, uint32_t(n));
  std::vector<Fr> msgs(n);
  for (auto& m : msgs) m = rng.next_fr();
  amt::Tree tree = amt::build(msgs, srs, params);

  std::vector<amt::Proof> proofs;
  proofs.reserve(n);
  for (uint64_t x = 0; x < n; x++) proofs.push_back(amt::open(tree, x));

  ScalarBatch batch;
  for (uint64_t i : pick_distinct(rng, n, k))
    batch.push_back({i, msgs[i], rng.next_fr()});
  auto upd = sub::update_amt(tree, batch, nu, params);

  E2eOutcome out;
  uint64_t ops = 0;
  for (uint64_t x = 0; x < n; x++) {
    sub::Counters c;
    auto refreshed =
        sub::proof_update_amt(proofs[x], batch, upd.info, nu, params, &c);
    ops += c.digest_applications;
    c.published_nodes = upd.counters.published_nodes;
    if (!sub::counters_ok(c, k, nu, tree.height, 1)) out.failures++;
    if (!amt::verify(upd.vc, upd.tree.messages[x], refreshed, params))
      out.failures++;
  }
  out.row = make_row("amt", double(upd.info.entries.size()),
                     double(upd.info.byte_size()), double(ops),
                     double(ops) * t_group);
  return out;
}

E2eOutcome e2e_lattice(uint64_t n, uint64_t k, double nu, uint64_t seed) {
  DeterministicRng rng(seed);
  lat::Params params = lat::generate(seed);
  std::vector<uint32_t> msgs(n);
  for (auto& m : msgs) m = uint32_t(rng.next_u64() % params.q);
  auto committed = lat::commit(msgs, params);

  std::vector<lat::Proof> proofs;
  proofs.reserve(n);
  for (uint64_t x = 0; x < n; x++)
    proofs.push_back(lat::open(committed.tree, x));

  sub::LatBatch batch;
  for (uint64_t i : pick_distinct(rng, n, k))
    batch.push_back({i, msgs[i], uint32_t(rng.next_u64() % params.q)});
  auto upd = sub::update_lattice(committed.tree, batch, nu, params);

  E2eOutcome out;
  uint64_t ops = 0;
  std::vector<uint32_t> new_msgs = msgs;
  for (const auto& d : batch) new_msgs[d.index] = d.new_value;
  for (uint64_t x = 0; x < n; x++) {
    sub::Counters c;
    auto refreshed =
        sub::proof_update_lattice(proofs[x], batch, upd.info, nu, params, &c);
    ops += c.digest_applications;
    c.published_nodes = upd.counters.published_nodes;
    if (!sub::counters_ok(c, k, nu, committed.tree.height, 0)) out.failures++;
    if (!lat::verify(upd.digest, new_msgs[x], refreshed, params))
      out.failures++;
  }
  out.row = make_row("lattice", double(upd.info.entries.size()),
                     double(upd.info.byte_size()), double(ops), 0);
  return out;
}

E2eOutcome e2e_verkle(uint64_t n, uint64_t k, uint32_t c, uint64_t seed,
                      double t_group) {
  DeterministicRng rng(seed);
  auto setup = verkle::keygen(c, seed);
  std::vector<Fr> msgs(n);
  for (auto& m : msgs) m = rng.next_fr();
  auto res = verkle::commit(msgs, setup);

  std::vector<verkle::OpenResult> opened;
  opened.reserve(n);
  for (uint64_t x = 0; x < n; x++)
    opened.push_back(verkle::open(res.tree, x, setup));

  ScalarBatch batch;
  for (uint64_t i : pick_distinct(rng, n, k))
    batch.push_back({i, msgs[i], rng.next_fr()});
  auto upd = verkle::update(res.tree, batch, setup);

  E2eOutcome out;
  uint64_t ops = 0;
  for (uint64_t x = 0; x < n; x++) {
    auto refreshed = verkle::proof_update(opened[x].proof, opened[x].context,
                                          x, upd.info, setup);
    ops += refreshed.g1_exps;
    if (!verkle::verify(upd.tree.levels[0][0], upd.tree.messages[x], x,
                        refreshed.proof, setup))
      out.failures++;
  }
  out.row = make_row("verkle", double(upd.info.entries.size()),
                     double(upd.info.byte_size()), double(ops),
                     double(ops) * t_group);
  return out;
}

// ---- update-information (de)serialization -------------------------------

const std::map<std::string, BackendId>& backend_names() {
  static const std::map<std::string, BackendId> m = {
      {"merkle", BackendId::merkle},
      {"kzg", BackendId::kzg},
      {"amt", BackendId::amt},
      {"lattice", BackendId::lattice},
      {"verkle", BackendId::verkle}};
  return m;
}

std::string backend_name(BackendId id) {
  for (const auto& [name, val] : backend_names())
    if (val == id) return name;
  return "unknown";
}

std::string to_hex(const std::vector<uint8_t>& v) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (uint8_t b : v) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

std::vector<uint8_t> from_hex(const std::string& s) {
  if (s.size() % 2) throw std::invalid_argument("odd-length hex string");
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
  };
  std::vector<uint8_t> v(s.size() / 2);
  for (size_t i = 0; i < v.size(); i++)
    v[i] = uint8_t(nib(s[2 * i]) << 4 | nib(s[2 * i + 1]));
  return v;
}

json info_to_json(const UpdateInfo& info) {
  json entries = json::array();
  for (const auto& e : info.entries)
    entries.push_back({{"depth", e.path.depth},
                       {"bits", e.path.bits},
                       {"value_hex", to_hex(e.value)}});
  return {{"backend", backend_name(info.backend)},
          {"height", info.height},
          {"entries", entries}};
}

UpdateInfo info_from_json(const json& doc) {
  UpdateInfo info;
  auto it = backend_names().find(doc.at("backend").get<std::string>());
  if (it == backend_names().end())
    throw std::invalid_argument("unknown backend name");
  info.backend = it->second;
  info.height = doc.at("height").get<uint8_t>();
  for (const auto& e : doc.at("entries")) {
    NodePath p{e.at("depth").get<uint8_t>(), e.at("bits").get<uint64_t>()};
    info.entries.push_back({p, from_hex(e.at("value_hex").get<std::string>())});
  }
  return info;
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            std::streamsize(bytes.size()));
  if (!out) throw std::invalid_argument("cannot write " + path);
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"vector-commitment benchmark driver"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  OutputMode mode;
  auto* jflag = app.add_flag("--json", mode.as_json, "machine-readable output");
  app.add_flag("--csv", mode.as_csv, "comma-separated output")
      ->excludes(jflag);

  analytic::Inputs inputs;
  std::string table_sel = "2";
  auto* analytic_cmd =
      app.add_subcommand("analytic", "closed-form evaluation tables");
  analytic_cmd->add_option("--table", table_sel, "2, 3, 4, or params")
      ->check(CLI::IsMember({"2", "3", "4", "params"}));
  analytic_cmd->add_option("--n", inputs.n, "vector length");
  analytic_cmd->add_option("--k", inputs.k, "updates per batch");
  analytic_cmd->add_option("--c", inputs.c, "multi-level tree arity");
  analytic_cmd->add_option("--group-bytes", inputs.group_bytes,
                           "compressed group element size");
  analytic_cmd->add_option("--hash-node-bytes", inputs.hash_node_bytes,
                           "lattice tree node size");
  analytic_cmd->add_option("--tg", inputs.t_group,
                           "seconds per group exponentiation");
  analytic_cmd->add_option("--tf", inputs.t_hash,
                           "seconds per hash evaluation");

  std::string backend;
  uint64_t e2e_n = 0, e2e_k = 32, e2e_seed = 1;
  double e2e_nu = 0.5;
  uint32_t e2e_c = 4;
  auto* e2e_cmd = app.add_subcommand(
      "e2e", "end-to-end run: commit, update, refresh and verify every proof");
  e2e_cmd->add_option("--backend", backend, "scheme to exercise")
      ->required()
      ->check(CLI::IsMember(
          {"merkle", "kzg", "amt", "lattice", "verkle"}));
  auto* e2e_n_opt = e2e_cmd->add_option("--n", e2e_n, "vector length");
  e2e_cmd->add_option("--k", e2e_k, "updates per batch");
  e2e_cmd->add_option("--nu", e2e_nu, "broadcast/recompute exponent");
  e2e_cmd->add_option("--seed", e2e_seed, "deterministic seed");
  e2e_cmd->add_option("--c", e2e_c, "tree arity (verkle)");

  uint64_t bench_n = uint64_t(1) << 16, bench_k = 460, bench_seed = 1,
           bench_samples = 8;
  double bench_nu = 0.5;
  std::string bench_backend = "amt";
  auto* bench_cmd =
      app.add_subcommand("bench", "wall-clock proof-update measurement");
  bench_cmd->add_option("--backend", bench_backend, "scheme to measure")
      ->check(CLI::IsMember({"amt"}));
  bench_cmd->add_option("--n", bench_n, "vector length");
  bench_cmd->add_option("--k", bench_k, "updates per batch");
  bench_cmd->add_option("--nu", bench_nu, "broadcast/recompute exponent");
  bench_cmd->add_option("--seed", bench_seed, "deterministic seed");
  bench_cmd->add_option("--samples", bench_samples,
                        "refreshed proofs to time");

  auto* upd_cmd =
      app.add_subcommand("updinfo", "update-information serialization");
  upd_cmd->require_subcommand(1);
  std::string enc_in, enc_out, dec_in, dec_out;
  auto* enc_cmd = upd_cmd->add_subcommand("encode", "JSON document to wire bytes");
  enc_cmd->add_option("--in", enc_in, "JSON input file")->required();
  enc_cmd->add_option("--out", enc_out, "wire-format output file")->required();
  auto* dec_cmd = upd_cmd->add_subcommand("decode", "wire bytes to JSON document");
  dec_cmd->add_option("--in", dec_in, "wire-format input file")->required();
  dec_cmd->add_option("--out", dec_out, "JSON output file");

  for (auto* sub : {analytic_cmd, e2e_cmd, bench_cmd}) sub->fallthrough();
  for (auto* sub : {enc_cmd, dec_cmd}) sub->fallthrough();
  upd_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (analytic_cmd->parsed()) {
      analytic::Table t;
      if (table_sel == "2") t = analytic::table2(inputs);
      else if (table_sel == "3") t = analytic::table3(inputs);
      else if (table_sel == "4") t = analytic::table4(inputs);
      else t = analytic::params_table(inputs);
      emit_table(t, mode, out);
      return 0;
    }

    if (e2e_cmd->parsed()) {
      if (e2e_n_opt->count() == 0)
        e2e_n = backend == "kzg" ? 256 : backend == "lattice" ? 256 : 1024;
      if (e2e_n < 2 || (e2e_n & (e2e_n - 1)))
        throw std::invalid_argument("vector length must be a power of two >= 2");
      uint64_t cap = backend == "lattice" ? uint64_t(1) << 8
                     : backend == "merkle" ? uint64_t(1) << 20
                                           : uint64_t(1) << 16;
      if (e2e_n > cap)
        throw std::invalid_argument("vector length exceeds the backend bound");
      if (e2e_k < 1 || e2e_k > e2e_n)
        throw std::invalid_argument("batch size must be in [1, n]");
      if (!(e2e_nu >= 0.0 && e2e_nu <= 1.0))
        throw std::invalid_argument("nu must lie in [0, 1]");

      analytic::Inputs model;
      E2eOutcome r;
      if (backend == "merkle") r = e2e_merkle(e2e_n, e2e_k, e2e_seed);
      else if (backend == "kzg")
        r = e2e_kzg(e2e_n, e2e_k, e2e_seed, model.t_group);
      else if (backend == "amt")
        r = e2e_amt(e2e_n, e2e_k, e2e_nu, e2e_seed, model.t_group);
      else if (backend == "lattice")
        r = e2e_lattice(e2e_n, e2e_k, e2e_nu, e2e_seed);
      else r = e2e_verkle(e2e_n, e2e_k, e2e_c, e2e_seed, model.t_group);

      analytic::Table t;
      t.title = "end-to-end: " + backend + " (n=" + std::to_string(e2e_n) +
                ", k=" + std::to_string(e2e_k) + ")";
      t.headers = {"backend", "published nodes", "|U| (B)", "ops",
                   "seconds (model)"};
      t.rows.push_back(r.row);
      if (!r.note.empty()) t.footnotes.push_back(r.note);
      emit_table(t, mode, out);
      if (r.failures) {
        err << r.failures << " verification or counter checks failed\n";
        return 3;
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      if (bench_n < 2 || (bench_n & (bench_n - 1)) ||
          bench_n > uint64_t(1) << 16)
        throw std::invalid_argument(
            "vector length must be a power of two in [2, 65536]");
      if (bench_k < 1 || bench_k > bench_n)
        throw std::invalid_argument("batch size must be in [1, n]");
      if (!(bench_nu >= 0.0 && bench_nu <= 1.0))
        throw std::invalid_argument("nu must lie in [0, 1]");
      if (bench_samples < 1 || bench_samples > bench_n)
        throw std::invalid_argument("samples must be in [1, n]");

      DeterministicRng rng(bench_seed);
      Srs srs = trusted_setup(uint32_t(bench_n), bench_seed, true);
      amt::Params params(srs, uint32_t(bench_n));
      std::vector<Fr> msgs(bench_n);
      for (auto& m : msgs) m = rng.next_fr();
      amt::Tree tree = amt::build(msgs, srs, params);
      ScalarBatch batch;
      for (uint64_t i : pick_distinct(rng, bench_n, bench_k))
        batch.push_back({i, msgs[i], rng.next_fr()});
      auto upd = sub::update_amt(tree, batch, bench_nu, params);

      double refresh_seconds = 0;
      uint64_t digests = 0, failures = 0;
      for (uint64_t i : pick_distinct(rng, bench_n, bench_samples)) {
        auto proof = amt::open(tree, i);
        sub::Counters c;
        double t0 = now_seconds();
        auto refreshed =
            sub::proof_update_amt(proof, batch, upd.info, bench_nu, params, &c);
        refresh_seconds += now_seconds() - t0;
        digests += c.digest_applications;
        if (!amt::verify(upd.vc, upd.tree.messages[i], refreshed, params))
          failures++;
      }
      double avg_seconds = refresh_seconds / double(bench_samples);
      double avg_digests = double(digests) / double(bench_samples);

      G1 point = G1::generator().mul(rng.next_fr());
      const int reps = 32;
      std::vector<Fr> scalars(reps);
      for (auto& s : scalars) s = rng.next_fr();
      double t0 = now_seconds();
      G1 sink = G1::identity();
      for (const auto& s : scalars) sink = sink.add(point.mul(s));
      double single_exp = (now_seconds() - t0) / reps;
      if (sink.is_identity()) err << "";  // keep the loop observable

      analytic::Table t;
      t.title = "proof-update wall clock: amt (n=" + std::to_string(bench_n) +
                ", k=" + std::to_string(bench_k) + ")";
      t.headers = {"backend", "published nodes", "|U| (B)", "avg digests",
                   "avg seconds"};
      analytic::Row row = make_row("amt", double(upd.info.entries.size()),
                                   double(upd.info.byte_size()), avg_digests,
                                   avg_seconds);
      row.cells[4] = num_str(avg_seconds);
      t.rows.push_back(row);
      double predicted = avg_digests * single_exp;
      t.footnotes.push_back("single exponentiation: " + num_str(single_exp) +
                            " s");
      t.footnotes.push_back("predicted per proof (digests x single exp): " +
                            num_str(predicted) + " s");
      if (predicted > 0)
        t.footnotes.push_back("measured / predicted: " +
                              num_str(avg_seconds / predicted));
      emit_table(t, mode, out);
      if (failures) {
        err << failures << " refreshed proofs failed to verify\n";
        return 3;
      }
      return 0;
    }

    // updinfo
    if (enc_cmd->parsed()) {
      auto text = read_file(enc_in);
      json doc = json::parse(text.begin(), text.end());
      UpdateInfo info = info_from_json(doc);
      auto bytes = info.encode();
      auto check = UpdateInfo::decode(bytes);
      if (!check)
        throw std::invalid_argument(
            "document violates the wire format (order or duplicates)");
      write_file(enc_out, bytes);
      if (mode.as_json)
        out << json{{"bytes", bytes.size()}}.dump(2) << '\n';
      else
        out << "wrote " << bytes.size() << " bytes\n";
      return 0;
    }
    if (dec_cmd->parsed()) {
      auto bytes = read_file(dec_in);
      auto info = UpdateInfo::decode(bytes);
      if (!info)
        throw std::invalid_argument("malformed update information");
      json doc = info_to_json(*info);
      if (!dec_out.empty()) {
        std::string text = doc.dump(2);
        write_file(dec_out, {text.begin(), text.end()});
      }
      if (mode.as_json) {
        out << doc.dump(2) << '\n';
      } else {
        out << backend_name(info->backend) << " broadcast, height "
            << int(info->height) << ", " << info->entries.size()
            << " entries, " << bytes.size() << " bytes\n";
        for (const auto& e : info->entries)
          out << "  depth " << int(e.path.depth) << " bits " << e.path.bits
              << " value " << e.value.size() << " B\n";
      }
      return 0;
    }
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace svc::cli
