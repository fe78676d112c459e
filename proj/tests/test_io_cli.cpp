#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "obnox/approx.hpp"
#include "obnox/generators.hpp"
#include "obnox/io.hpp"
#include "obnox/oracle.hpp"

using namespace obnox;
using nlohmann::json;

namespace {

std::filesystem::path tmp_dir() {
  const auto dir =
      std::filesystem::temp_directory_path() / "obnox_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_tmp(const std::string& name, const json& doc) {
  const auto path = tmp_dir() / name;
  write_json_file(path.string(), doc);
  return path.string();
}

json minimal_euclidean_doc() {
  return json{{"format_version", 1},
              {"space",
               {{"kind", "euclidean"},
                {"dim", 2},
                {"voters", {{0.0, 0.0}}},
                {"candidates", {{3.0, 4.0}}}}},
              {"k", 1},
              {"lambda", 1}};
}

}  // namespace

TEST_CASE("minimal euclidean document round-trips") {
  const json doc = minimal_euclidean_doc();
  const Instance inst = parse_instance(doc);
  CHECK(inst.dist(0, 0) == 5.0);
  CHECK(emit_instance(inst) == doc);
}

TEST_CASE("graph and matrix documents round-trip") {
  const json gdoc = {{"format_version", 1},
                     {"space",
                      {{"kind", "graph"},
                       {"num_vertices", 3},
                       {"edges", {{0, 1, 1.0}, {1, 2, 2.5}}},
                       {"voters", {0}},
                       {"candidates", {1, 2}}}},
                     {"k", 1},
                     {"lambda", 1},
                     {"t", 2.0}};
  const Instance ginst = parse_instance(gdoc);
  CHECK(ginst.dist(0, 1) == 3.5);
  CHECK(emit_instance(ginst) == gdoc);

  const json mdoc = {{"format_version", 1},
                     {"space",
                      {{"kind", "matrix"},
                       {"num_voters", 1},
                       {"num_candidates", 1},
                       {"dist", {{0.0, 2.0}, {2.0, 0.0}}}}},
                     {"k", 1},
                     {"lambda", 1}};
  const Instance minst = parse_instance(mdoc);
  CHECK(minst.dist(0, 0) == 2.0);
  CHECK(emit_instance(minst) == mdoc);
}

TEST_CASE("schema violations name the offending field path") {
  json bad = minimal_euclidean_doc();
  bad["space"]["kind"] = "spherical";
  CHECK_THROWS_WITH_AS(parse_instance(bad), doctest::Contains("$.space.kind"),
                       ValidationError);

  json neg = {{"format_version", 1},
              {"space",
               {{"kind", "graph"},
                {"num_vertices", 2},
                {"edges", {{0, 1, -3.0}}},
                {"voters", {0}},
                {"candidates", {1}}}},
              {"k", 1},
              {"lambda", 1}};
  CHECK_THROWS_WITH_AS(parse_instance(neg), doctest::Contains("edges[0][2]"),
                       ValidationError);

  json asym = {{"format_version", 1},
               {"space",
                {{"kind", "matrix"},
                 {"num_voters", 1},
                 {"num_candidates", 1},
                 {"dist", {{0.0, 1.0}, {2.0, 0.0}}}}},
               {"k", 1},
               {"lambda", 1}};
  CHECK_THROWS_WITH_AS(parse_instance(asym), doctest::Contains("asymmetric"),
                       ValidationError);

  json wrong_version = minimal_euclidean_doc();
  wrong_version["format_version"] = 2;
  CHECK_THROWS_WITH_AS(parse_instance(wrong_version),
                       doctest::Contains("$.format_version"), ValidationError);
}

TEST_CASE("numbers survive emit/parse losslessly") {
  const Instance inst = gen_random_euclidean(6, 7, 2, 3, 1, 99);
  const json doc = emit_instance(inst);
  const Instance back = parse_instance(doc);
  CHECK(back.space().coords() == inst.space().coords());
  CHECK(emit_instance(back) == doc);
}

TEST_CASE("emit_result refuses a mismatched value") {
  const Instance inst = parse_instance(minimal_euclidean_doc());
  SolveResult res = solve_lambda_eq_k(inst);
  CHECK(emit_result(inst, res)["value"] == 5.0);
  res.value = 4.9;
  CHECK_THROWS_AS(emit_result(inst, res), Error);
}

TEST_CASE("ground truth documents round-trip") {
  GroundTruth gt;
  gt.answer = true;
  gt.witness = std::vector<int>{1, 3};
  gt.threshold_t = 3.0;
  gt.note = "exhaustive";
  const GroundTruth back = parse_ground_truth(emit_ground_truth(gt));
  CHECK(back.answer == gt.answer);
  CHECK(back.witness == gt.witness);
  CHECK(back.threshold_t == gt.threshold_t);
  CHECK(back.note == gt.note);
}

TEST_CASE("cli: solve picks the right algorithm and exit code") {
  const Instance inst = gen_random_euclidean(5, 5, 2, 2, 1, 5);
  const std::string in = write_tmp("plane.json", emit_instance(inst));
  const std::string out = (tmp_dir() / "result.json").string();
  CHECK(run_cli({"solve", "--input", in, "--output", out}) == 0);
  const json res = read_json_file(out);
  CHECK(res["algorithm"] == "planar");
  CHECK(res["status"] == "feasible");

  const double opt = oracle_optimize(inst).optimal_value;
  CHECK(run_cli({"solve", "--input", in, "--output", out, "--t",
                 std::to_string(opt * 2.0)}) == 2);
  CHECK(read_json_file(out)["status"] == "infeasible");
}

TEST_CASE("cli: lambda = k dispatch and oracle subcommand") {
  const Instance inst = gen_random_euclidean(5, 6, 2, 3, 3, 6);
  const std::string in = write_tmp("lk.json", emit_instance(inst));
  const std::string out = (tmp_dir() / "lk_result.json").string();
  CHECK(run_cli({"solve", "--input", in, "--output", out}) == 0);
  CHECK(read_json_file(out)["algorithm"] == "lambda-k");

  CHECK(run_cli({"oracle", "--input", in, "--output", out}) == 0);
  const json res = read_json_file(out);
  CHECK(res["algorithm"] == "oracle");
  CHECK(res["value"].get<double>() == oracle_optimize(inst).optimal_value);
}

TEST_CASE("cli: oracle cap produces exit 3") {
  const Instance inst = gen_random_euclidean(3, 12, 2, 6, 1, 2);
  const std::string in = write_tmp("big.json", emit_instance(inst));
  CHECK(run_cli({"oracle", "--input", in, "--oracle-cap", "10", "--t", "1"}) ==
        3);
}

TEST_CASE("cli: usage and input errors give exit 1") {
  CHECK(run_cli({"solve"}) == 1);                      // missing --input
  CHECK(run_cli({"no-such-command"}) == 1);
  CHECK(run_cli({"solve", "--input", "/nonexistent/x.json"}) == 1);
  const std::string in =
      write_tmp("bad.json", json{{"format_version", 7}});
  CHECK(run_cli({"solve", "--input", in}) == 1);
}

TEST_CASE("cli: gen and verify round-trip") {
  const std::string inst_path = (tmp_dir() / "gen_hit.json").string();
  CHECK(run_cli({"gen", "--kind", "hitting", "--seed", "3", "--universe", "4",
                 "--num-sets", "3", "--k", "2", "--output", inst_path}) == 0);
  const std::string vout = (tmp_dir() / "verify.json").string();
  CHECK(run_cli({"verify", "--input", inst_path, "--output", vout}) == 0);
  CHECK(read_json_file(vout)["agrees"] == true);

  const std::string udg_path = (tmp_dir() / "gen_udg.json").string();
  CHECK(run_cli({"gen", "--kind", "udg", "--seed", "1", "--points", "6",
                 "--side", "5", "--k", "2", "--output", udg_path}) == 0);
  CHECK(run_cli({"verify", "--input", udg_path}) == 0);
}

TEST_CASE("cli: fptas requires epsilon, quarter and fptas run") {
  const Instance inst = gen_random_euclidean(5, 6, 2, 3, 2, 8);
  const std::string in = write_tmp("fp.json", emit_instance(inst));
  const std::string out = (tmp_dir() / "fp_result.json").string();
  CHECK(run_cli({"fptas", "--input", in}) == 1);  // epsilon missing
  CHECK(run_cli({"fptas", "--input", in, "--epsilon", "0.25", "--output",
                 out}) == 0);
  CHECK(read_json_file(out)["algorithm"] == "fptas");

  const Instance l1 = gen_random_euclidean(5, 6, 2, 3, 1, 8);
  const std::string in1 = write_tmp("q.json", emit_instance(l1));
  CHECK(run_cli({"quarter", "--input", in1, "--output", out}) == 0);
  CHECK(read_json_file(out)["algorithm"] == "quarter");
}

TEST_CASE("cli: identical invocations give identical result fields") {
  const Instance inst = gen_random_euclidean(8, 8, 2, 3, 1, 13);
  const std::string in = write_tmp("det.json", emit_instance(inst));
  const std::string o1 = (tmp_dir() / "det1.json").string();
  const std::string o2 = (tmp_dir() / "det2.json").string();
  CHECK(run_cli({"solve", "--input", in, "--output", o1, "--threads", "1"}) ==
        0);
  CHECK(run_cli({"solve", "--input", in, "--output", o2, "--threads", "4"}) ==
        0);
  json a = read_json_file(o1);
  json b = read_json_file(o2);
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  CHECK(a == b);
}

TEST_CASE("cli: bench emits the CSV header") {
  const std::string out = (tmp_dir() / "bench.csv").string();
  CHECK(run_cli({"bench", "--seed", "1", "--output", out}) == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "instance,algorithm,n_voters,n_candidates,k,lambda,epsilon,value,"
        "oracle_value,ratio,ms");
}
