#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "svc/bench_cli.hpp"

namespace {

int run_cli(std::initializer_list<const char*> args,
            std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::vector<const char*> argv = {"svcbench"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int rc = svc::cli::run(int(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli analytic human output pins the key cells") {
  std::string out;
  CHECK(run_cli({"analytic", "--table", "2"}, &out) == 0);
  CHECK(contains(out, "1030"));
  CHECK(contains(out, "52.53"));
  CHECK(contains(out, "515"));
  CHECK(contains(out, "0.34"));
  CHECK(contains(out, "0.048"));
  CHECK(contains(out, "7.35"));

  CHECK(run_cli({"analytic", "--table", "3"}, &out) == 0);
  CHECK(contains(out, "528"));
  CHECK(contains(out, "110.88"));
  CHECK(contains(out, "11900"));
  CHECK(contains(out, "32.6"));

  CHECK(run_cli({"analytic", "--table", "4"}, &out) == 0);
  CHECK(contains(out, "192"));
  CHECK(contains(out, "99.4"));
  CHECK(contains(out, "774"));
  CHECK(contains(out, "0.52"));
  CHECK(contains(out, "624"));

  CHECK(run_cli({"analytic", "--table", "params"}, &out) == 0);
  CHECK(contains(out, "3.16 MB"));
  CHECK(contains(out, "288 B"));
  CHECK(contains(out, "39.46 GB"));
  CHECK(contains(out, "36.46 GB"));
}

TEST_CASE("cli analytic csv and json agree in value") {
  std::string csv, js;
  CHECK(run_cli({"analytic", "--table", "2", "--csv"}, &csv) == 0);
  CHECK(run_cli({"analytic", "--table", "2", "--json"}, &js) == 0);

  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "nu_or_c,published_nodes,update_info_bytes,ops,seconds");
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string f; std::getline(cells, f, ',');) fields.push_back(f);
    rows.push_back(fields);
  }
  REQUIRE(rows.size() == 5);
  CHECK(rows[2][0] == "0.5");
  CHECK(std::stod(rows[2][1]) == 1030.0);
  CHECK(std::stod(rows[2][2]) == 52530.0);
  CHECK(std::stod(rows[2][3]) == 515.0);

  auto doc = nlohmann::json::parse(js);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 5);
  for (size_t i = 0; i < 5; i++) {
    CHECK(doc[i]["nu_or_c"].get<std::string>() == rows[i][0]);
    CHECK(doc[i]["published_nodes"].get<double>() == std::stod(rows[i][1]));
    CHECK(doc[i]["update_info_bytes"].get<double>() == std::stod(rows[i][2]));
    CHECK(doc[i]["ops"].get<double>() == std::stod(rows[i][3]));
    CHECK(doc[i]["seconds"].get<double>() == std::stod(rows[i][4]));
  }
}

TEST_CASE("cli e2e runs every backend at desk scale") {
  std::string out;
  CHECK(run_cli({"e2e", "--backend", "merkle", "--n", "64", "--k", "8",
                 "--csv"},
                &out) == 0);
  CHECK(contains(out, "merkle,"));
  CHECK(run_cli({"e2e", "--backend", "kzg", "--n", "16", "--k", "4"}, &out) ==
        0);
  CHECK(contains(out, "kzg"));
  CHECK(run_cli({"e2e", "--backend", "lattice", "--n", "32", "--k", "4",
                 "--nu", "0.5"},
                &out) == 0);
  CHECK(contains(out, "lattice"));
  CHECK(run_cli({"e2e", "--backend", "amt", "--n", "16", "--k", "4", "--nu",
                 "0.5"},
                &out) == 0);
  CHECK(contains(out, "amt"));
  CHECK(run_cli({"e2e", "--backend", "verkle", "--n", "16", "--k", "3", "--c",
                 "4"},
                &out) == 0);
  CHECK(contains(out, "verkle"));
}

TEST_CASE("cli e2e reports are deterministic for a fixed seed") {
  std::string a, b, c;
  CHECK(run_cli({"e2e", "--backend", "lattice", "--n", "64", "--k", "6",
                 "--seed", "9", "--csv"},
                &a) == 0);
  CHECK(run_cli({"e2e", "--backend", "lattice", "--n", "64", "--k", "6",
                 "--seed", "9", "--csv"},
                &b) == 0);
  CHECK(run_cli({"e2e", "--backend", "lattice", "--n", "64", "--k", "6",
                 "--seed", "10", "--csv"},
                &c) == 0);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("cli rejects bad parameters with exit code 2") {
  std::string out, err;
  CHECK(run_cli({}, &out, &err) == 2);
  CHECK(run_cli({"e2e", "--backend", "nosuch"}, &out, &err) == 2);
  CHECK(run_cli({"e2e", "--backend", "merkle", "--n", "100"}, &out, &err) == 2);
  CHECK(run_cli({"e2e", "--backend", "merkle", "--n", "16", "--k", "32"},
                &out, &err) == 2);
  CHECK(run_cli({"e2e", "--backend", "lattice", "--n", "512"}, &out, &err) ==
        2);
  CHECK(run_cli({"e2e", "--backend", "amt", "--n", "16", "--nu", "1.5"}, &out,
                &err) == 2);
  CHECK(run_cli({"analytic", "--table", "5"}, &out, &err) == 2);
  CHECK(run_cli({"analytic", "--json", "--csv"}, &out, &err) == 2);
  CHECK(run_cli({"bench", "--backend", "merkle"}, &out, &err) == 2);
  CHECK(run_cli({"updinfo", "decode", "--in", "/nonexistent/x.bin"}, &out,
                &err) == 2);
  CHECK(run_cli({"--help"}, &out, &err) == 0);
  CHECK(contains(out, "analytic"));
}

TEST_CASE("cli updinfo encodes and decodes through the wire format") {
  const std::string doc_path = "cli_updinfo_doc.json";
  const std::string bin_path = "cli_updinfo.bin";
  const std::string doc2_path = "cli_updinfo_doc2.json";
  const std::string bin2_path = "cli_updinfo2.bin";
  write_text(doc_path, R"({
    "backend": "amt",
    "height": 3,
    "entries": [
      {"depth": 0, "bits": 0, "value_hex": "aa"},
      {"depth": 1, "bits": 1, "value_hex": "bb02"},
      {"depth": 3, "bits": 5, "value_hex": ""}
    ]
  })");

  std::string out;
  CHECK(run_cli({"updinfo", "encode", "--in", doc_path.c_str(), "--out",
                 bin_path.c_str()},
                &out) == 0);
  CHECK(contains(out, "bytes"));

  CHECK(run_cli({"updinfo", "decode", "--in", bin_path.c_str()}, &out) == 0);
  CHECK(contains(out, "amt broadcast, height 3, 3 entries"));

  CHECK(run_cli({"updinfo", "decode", "--in", bin_path.c_str(), "--json",
                 "--out", doc2_path.c_str()},
                &out) == 0);
  auto round = nlohmann::json::parse(out);
  CHECK(round["backend"] == "amt");
  CHECK(round["height"] == 3);
  CHECK(round["entries"].size() == 3);
  CHECK(round["entries"][1]["value_hex"] == "bb02");
  CHECK(nlohmann::json::parse(read_text(doc2_path)) == round);

  CHECK(run_cli({"updinfo", "encode", "--in", doc2_path.c_str(), "--out",
                 bin2_path.c_str()},
                &out) == 0);
  CHECK(read_text(bin_path) == read_text(bin2_path));

  write_text(doc_path, R"({"backend": "amt", "height": 3, "entries": [
    {"depth": 1, "bits": 1, "value_hex": "bb"},
    {"depth": 0, "bits": 0, "value_hex": "aa"}]})");
  std::string err;
  CHECK(run_cli({"updinfo", "encode", "--in", doc_path.c_str(), "--out",
                 bin_path.c_str()},
                &out, &err) == 2);
  CHECK(contains(err, "order"));

  write_text(doc_path, R"({"backend": "zzz", "height": 1, "entries": []})");
  CHECK(run_cli({"updinfo", "encode", "--in", doc_path.c_str(), "--out",
                 bin_path.c_str()},
                &out, &err) == 2);
  write_text(doc_path, "not json at all");
  CHECK(run_cli({"updinfo", "encode", "--in", doc_path.c_str(), "--out",
                 bin_path.c_str()},
                &out, &err) == 2);

  std::remove(doc_path.c_str());
  std::remove(bin_path.c_str());
  std::remove(doc2_path.c_str());
  std::remove(bin2_path.c_str());
}

TEST_CASE("cli config file seeds options and flags override it") {
  const std::string cfg = "cli_test.cfg";
  write_text(cfg, "csv=true\n\n[e2e]\nn=32\nk=4\n");

  std::string out;
  CHECK(run_cli({"--config", cfg.c_str(), "e2e", "--backend", "merkle"},
                &out) == 0);
  CHECK(contains(out, "nu_or_c,"));  // csv came from the config
  std::string from_cfg = out;

  CHECK(run_cli({"--config", cfg.c_str(), "e2e", "--backend", "merkle",
                 "--n", "16", "--k", "2"},
                &out) == 0);
  CHECK(out != from_cfg);  // the flags replaced the configured sizes

  std::remove(cfg.c_str());
}

TEST_CASE("cli bench measures a small quotient-tree refresh") {
  std::string out;
  CHECK(run_cli({"bench", "--n", "64", "--k", "8", "--samples", "2"}, &out) ==
        0);
  CHECK(contains(out, "single exponentiation"));
  CHECK(contains(out, "predicted per proof"));
  CHECK(contains(out, "amt"));
}
