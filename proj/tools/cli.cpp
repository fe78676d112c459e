#include "cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "obnox/approx.hpp"
#include "obnox/fpt.hpp"
#include "obnox/generators.hpp"
#include "obnox/io.hpp"
#include "obnox/oracle.hpp"
#include "obnox/planar.hpp"

namespace obnox {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCap = 3;

struct Opts {
  std::string input;
  std::string output;
  std::optional<double> t;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  int threads = 1;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::uint64_t enum_cap = kDefaultEnumCap;
  bool validate_triangle = false;
};

void add_common(CLI::App* cmd, Opts& o, bool with_epsilon,
                bool epsilon_required = false) {
  cmd->add_option("--input", o.input, "instance JSON path")->required();
  cmd->add_option("--output", o.output, "result path (default: stdout)");
  cmd->add_option("--t", o.t, "decision threshold (absent: optimize)");
  if (with_epsilon) {
    auto* e = cmd->add_option("--epsilon", o.epsilon, "accuracy in (0,1)");
    if (epsilon_required) e->required();
  }
  cmd->add_option("--threads", o.threads, "worker count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--oracle-cap", o.oracle_cap,
                  "max subsets the brute-force oracle may enumerate");
  cmd->add_option("--enum-cap", o.enum_cap,
                  "max subsets the fptas enumeration may examine");
  cmd->add_flag("--validate-triangle", o.validate_triangle,
                "check the triangle inequality on matrix instances");
}

void emit(const Opts& o, const Instance& inst, const SolveResult& res) {
  const nlohmann::json doc = emit_result(inst, res);
  if (o.output.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_json_file(o.output, doc);
}

int exit_of(const SolveResult& res) {
  return res.status == Status::Infeasible ? kExitInfeasible : kExitOk;
}

bool under_cap(const Instance& inst, std::uint64_t cap) {
  return binomial(inst.num_candidates(), inst.k()) <= cap;
}

SolveResult oracle_result(const Instance& inst, const Opts& o) {
  SolveResult res;
  res.algorithm = "oracle";
  res.guarantee = 1.0;
  if (o.t) {
    auto committee = oracle_decide(inst, *o.t, o.oracle_cap, o.threads);
    if (committee) {
      res.status = Status::Feasible;
      res.value = objective(inst, committee->members);
      res.committee = std::move(committee);
    } else {
      res.status = Status::Infeasible;
    }
  } else {
    OracleReport rep = oracle_optimize(inst, o.oracle_cap, o.threads);
    res.status = Status::Feasible;
    res.value = rep.optimal_value;
    res.committee = std::move(rep.witness);
  }
  return res;
}

// `solve` auto-dispatch: exact paths first, then the matching approximation.
SolveResult dispatch_solve(const Instance& inst, const Opts& o) {
  if (inst.lambda() == inst.k()) return solve_lambda_eq_k(inst, o.t);
  if (inst.lambda() == 1 && inst.space().kind() == SpaceKind::Euclidean &&
      inst.space().dim() == 2)
    return planar_solve(inst, o.t);

  if (inst.lambda() == 1) {
    SolveResult res = quarter_approx(inst, o.threads);
    if (!o.t) {
      if (under_cap(inst, o.oracle_cap)) {
        const OracleReport rep = oracle_optimize(inst, o.oracle_cap, o.threads);
        if (!approx_leq(res.value, rep.optimal_value) ||
            !approx_geq(res.value, 0.25 * rep.optimal_value))
          throw Error("solve: quarter value " + std::to_string(res.value) +
                      " violates the certified range for optimum " +
                      std::to_string(rep.optimal_value));
      }
      return res;
    }
    if (approx_geq(res.value, *o.t)) {
      res.status = Status::Feasible;  // a witness at t is exact evidence
      return res;
    }
    if (under_cap(inst, o.oracle_cap)) {
      Opts od = o;
      return oracle_result(inst, od);
    }
    if (!approx_geq(4.0 * res.value, *o.t)) {
      res.status = Status::Infeasible;  // even 4x the found value misses t
      res.committee.reset();
      res.value = 0.0;
      return res;
    }
    throw CapExceeded(
        "solve: decision at t is inconclusive for quarter and the oracle cap "
        "of " +
        std::to_string(o.oracle_cap) + " subsets is exceeded");
  }

  const double eps = 0.1;
  FptasOptions fo;
  fo.enum_cap = o.enum_cap;
  if (o.t) {
    SolveResult res;
    res.algorithm = "fptas";
    res.guarantee = 1.0 - eps;
    auto committee = fptas_decide(inst, *o.t, eps, fo);
    if (committee) {
      res.status = Status::Approx;
      res.value = objective(inst, committee->members);
      res.committee = std::move(committee);
    } else {
      res.status = Status::Infeasible;
    }
    if (under_cap(inst, o.oracle_cap)) {
      const bool exact =
          oracle_decide(inst, *o.t, o.oracle_cap, o.threads).has_value();
      if (exact && res.status == Status::Infeasible)
        throw Error("solve: fptas declared infeasible at t but the oracle "
                    "found a committee");
    }
    return res;
  }
  SolveResult res = fptas_optimize(inst, eps, fo);
  if (under_cap(inst, o.oracle_cap)) {
    const OracleReport rep = oracle_optimize(inst, o.oracle_cap, o.threads);
    if (!approx_geq(res.value, (1.0 - eps) * rep.optimal_value))
      throw Error("solve: fptas value " + std::to_string(res.value) +
                  " below the bicriteria bound for optimum " +
                  std::to_string(rep.optimal_value));
  }
  return res;
}

int cmd_gen(const std::string& kind, std::uint64_t seed,
            const std::string& output, int num_voters, int num_candidates,
            int dim, int k, int lambda, int universe, int num_sets,
            int multiplicity, int num_points, double side) {
  if (output.empty()) {
    std::cerr << "gen: --output is required\n";
    return kExitUsage;
  }
  if (kind == "euclidean") {
    Instance inst =
        gen_random_euclidean(num_voters, num_candidates, dim, k, lambda, seed);
    write_json_file(output, emit_instance(inst));
    return kExitOk;
  }
  if (kind == "hitting") {
    SetSystem sys =
        gen_random_set_system(universe, num_sets, k, multiplicity, seed);
    auto [inst, gt] = gen_hitting_set(sys);
    write_json_file(output, emit_instance(inst));
    write_json_file(output + ".truth.json", emit_ground_truth(gt));
    return kExitOk;
  }
  if (kind == "udg") {
    auto points = gen_random_points(num_points, side, seed);
    auto [inst, gt] = gen_udg(points, k);
    write_json_file(output, emit_instance(inst));
    write_json_file(output + ".truth.json", emit_ground_truth(gt));
    return kExitOk;
  }
  std::cerr << "gen: unknown --kind \"" << kind
            << "\" (expected euclidean, hitting or udg)\n";
  return kExitUsage;
}

int cmd_verify(const Opts& o, const std::string& truth_path) {
  const Instance inst =
      parse_instance(read_json_file(o.input), o.validate_triangle);
  const std::string tp =
      truth_path.empty() ? o.input + ".truth.json" : truth_path;
  const GroundTruth gt = parse_ground_truth(read_json_file(tp));
  const double t = o.t ? *o.t : gt.threshold_t;
  const bool feasible =
      oracle_decide(inst, t, o.oracle_cap, o.threads).has_value();
  nlohmann::json doc;
  doc["agrees"] = (feasible == gt.answer);
  doc["solver_feasible"] = feasible;
  doc["ground_truth"] = gt.answer;
  doc["t"] = t;
  if (o.output.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_json_file(o.output, doc);
  if (feasible != gt.answer) {
    std::cerr << "verify: solver disagrees with the ground truth at t = " << t
              << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_bench(const Opts& o) {
  std::ostringstream csv;
  csv << "instance,algorithm,n_voters,n_candidates,k,lambda,epsilon,value,"
         "oracle_value,ratio,ms\n";
  const double eps = o.epsilon.value_or(0.25);

  struct Shape {
    int nv, nc, k, lambda;
  };
  const std::vector<Shape> shapes = {
      {8, 8, 3, 1}, {10, 8, 3, 2}, {12, 10, 4, 4}, {8, 10, 4, 1},
  };
  int idx = 0;
  for (const Shape& s : shapes) {
    for (int rep = 0; rep < 3; ++rep, ++idx) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(idx);
      const Instance inst =
          gen_random_euclidean(s.nv, s.nc, 2, s.k, s.lambda, seed);
      std::optional<double> oracle_value;
      if (under_cap(inst, o.oracle_cap))
        oracle_value =
            oracle_optimize(inst, o.oracle_cap, o.threads).optimal_value;

      auto row = [&](const char* algo, std::optional<double> used_eps,
                     const SolveResult& res) {
        csv << "euclidean-" << seed << "," << algo << "," << s.nv << ","
            << s.nc << "," << s.k << "," << s.lambda << ",";
        if (used_eps) csv << *used_eps;
        csv << "," << res.value << ",";
        if (oracle_value) csv << *oracle_value;
        csv << ",";
        if (oracle_value && *oracle_value > 0.0)
          csv << res.value / *oracle_value;
        csv << "," << res.wall_time_ms << "\n";
      };

      if (s.lambda == 1) {
        row("planar", std::nullopt, planar_solve(inst, std::nullopt));
        row("quarter", std::nullopt, quarter_approx(inst, o.threads));
      }
      if (s.lambda == s.k)
        row("lambda-k", std::nullopt, solve_lambda_eq_k(inst, std::nullopt));
      FptasOptions fo;
      fo.enum_cap = o.enum_cap;
      row("fptas", eps, fptas_optimize(inst, eps, fo));
    }
  }
  if (o.output.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(o.output);
    if (!out) throw ValidationError("cannot open output file: " + o.output);
    out << csv.str();
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"committee selection on metric spaces, far-is-better flavor"};
  app.require_subcommand(1);

  Opts solve_o, oracle_o, planar_o, quarter_o, fptas_o, lk_o, verify_o,
      bench_o;

  auto* solve = app.add_subcommand("solve", "auto-dispatch to a solver");
  add_common(solve, solve_o, false);
  auto* oracle = app.add_subcommand("oracle", "brute-force exact solver");
  add_common(oracle, oracle_o, false);
  auto* planar =
      app.add_subcommand("planar", "exact solver, lambda = 1 in the plane");
  add_common(planar, planar_o, false);
  auto* quarter =
      app.add_subcommand("quarter", "1/4-approximation for lambda = 1");
  add_common(quarter, quarter_o, false);
  auto* fptas = app.add_subcommand("fptas", "bicriteria (1-eps) solver");
  add_common(fptas, fptas_o, true, true);
  auto* lk = app.add_subcommand("lambda-k", "exact solver for lambda = k");
  add_common(lk, lk_o, false);

  auto* verify = app.add_subcommand(
      "verify", "check a generated instance against its ground-truth sidecar");
  add_common(verify, verify_o, false);
  std::string truth_path;
  verify->add_option("--truth", truth_path,
                     "ground-truth path (default: <input>.truth.json)");
  verify->get_option("--input")->required();

  auto* bench =
      app.add_subcommand("bench", "run the benchmark suite, emit CSV");
  bench->add_option("--output", bench_o.output, "CSV path (default: stdout)");
  bench->add_option("--seed", bench_o.seed, "base seed");
  bench->add_option("--epsilon", bench_o.epsilon, "fptas accuracy");
  bench->add_option("--threads", bench_o.threads, "worker count")
      ->check(CLI::PositiveNumber);
  bench->add_option("--oracle-cap", bench_o.oracle_cap, "oracle subset cap");
  bench->add_option("--enum-cap", bench_o.enum_cap, "fptas subset cap");

  auto* gen = app.add_subcommand("gen", "generate instances and ground truth");
  std::string gen_kind, gen_output;
  std::uint64_t gen_seed = 0;
  int gnv = 8, gnc = 8, gdim = 2, gk = 3, glambda = 1;
  int guniverse = 5, gnum_sets = 4, gmult = 1, gpoints = 8;
  double gside = 4.0;
  gen->add_option("--kind", gen_kind, "euclidean | hitting | udg")->required();
  gen->add_option("--output", gen_output, "instance JSON path")->required();
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--num-voters", gnv, "voters (euclidean)");
  gen->add_option("--num-candidates", gnc, "candidates (euclidean)");
  gen->add_option("--dim", gdim, "dimension (euclidean)");
  gen->add_option("--k", gk, "committee size");
  gen->add_option("--lambda", glambda, "rank parameter (euclidean)");
  gen->add_option("--universe", guniverse, "universe size (hitting)");
  gen->add_option("--num-sets", gnum_sets, "set count (hitting)");
  gen->add_option("--multiplicity", gmult, "hit multiplicity (hitting)");
  gen->add_option("--points", gpoints, "point count (udg)");
  gen->add_option("--side", gside, "sampling square side (udg)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostream& os = e.get_exit_code() == 0 ? std::cout : std::cerr;
    const int code = app.exit(e, os, os);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_seed, gen_output, gnv, gnc, gdim, gk,
                     glambda, guniverse, gnum_sets, gmult, gpoints, gside);
    if (bench->parsed()) return cmd_bench(bench_o);
    if (verify->parsed()) return cmd_verify(verify_o, truth_path);

    const Opts& o = solve->parsed()     ? solve_o
                    : oracle->parsed()  ? oracle_o
                    : planar->parsed()  ? planar_o
                    : quarter->parsed() ? quarter_o
                    : fptas->parsed()   ? fptas_o
                                        : lk_o;
    const Instance inst =
        parse_instance(read_json_file(o.input), o.validate_triangle);

    SolveResult res;
    if (solve->parsed()) {
      res = dispatch_solve(inst, o);
    } else if (oracle->parsed()) {
      res = oracle_result(inst, o);
    } else if (planar->parsed()) {
      res = planar_solve(inst, o.t);
    } else if (quarter->parsed()) {
      res = quarter_approx(inst, o.threads);
      if (o.t) {
        if (approx_geq(res.value, *o.t)) {
          res.status = Status::Feasible;
        } else if (!approx_geq(4.0 * res.value, *o.t)) {
          res.status = Status::Infeasible;
          res.committee.reset();
          res.value = 0.0;
        } else {
          throw CapExceeded(
              "quarter: decision at t is inconclusive; use oracle or solve");
        }
      }
    } else if (fptas->parsed()) {
      FptasOptions fo;
      fo.enum_cap = o.enum_cap;
      if (o.t) {
        res.algorithm = "fptas";
        res.guarantee = 1.0 - *o.epsilon;
        auto committee = fptas_decide(inst, *o.t, *o.epsilon, fo);
        if (committee) {
          res.status = Status::Approx;
          res.value = objective(inst, committee->members);
          res.committee = std::move(committee);
        } else {
          res.status = Status::Infeasible;
        }
      } else {
        res = fptas_optimize(inst, *o.epsilon, fo);
      }
    } else {
      res = solve_lambda_eq_k(inst, o.t);
    }
    emit(o, inst, res);
    return exit_of(res);
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace obnox
