#include "vecdom/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "vecdom/bench.h"
#include "vecdom/error.h"
#include "vecdom/exact.h"
#include "vecdom/feasibility.h"
#include "vecdom/gadgets.h"
#include "vecdom/io.h"

namespace vecdom {

using Json = nlohmann::ordered_json;

int OracleCapFromEnv() {
  const char* value = std::getenv("VECDOM_ORACLE_CAP");
  if (value == nullptr) return kDefaultOracleCap;
  char* end = nullptr;
  const long cap = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || cap <= 0 || cap > 62) {
    return kDefaultOracleCap;
  }
  return static_cast<int>(cap);
}

namespace {

struct ProblemFlags {
  std::string input;
  std::string variant;
  std::string alpha;
  std::optional<int> k;
  std::string demands;
};

void AddProblemFlags(CLI::App* cmd, ProblemFlags& flags) {
  cmd->add_option("input", flags.input,
                  "graph or instance file (1-based, 'p edge n m')")
      ->required();
  cmd->add_option("--variant", flags.variant,
                  "domination model, e.g. vector, total, alpha-domination");
  cmd->add_option("--alpha", flags.alpha, "fraction p/q");
  cmd->add_option("--k", flags.k, "uniform demand");
  cmd->add_option("--demands", flags.demands, "demand file ('<v> <k>' lines)");
}

// Without --variant the instance file's own header and k-lines are used,
// optionally overridden by --demands.
Instance LoadInstance(const ProblemFlags& flags) {
  Instance inst = ParseInstance(ReadFile(flags.input));
  std::optional<RequirementVector> demands;
  if (!flags.demands.empty()) {
    demands = ParseDemands(ReadFile(flags.demands), inst.graph);
  }
  if (flags.variant.empty()) {
    if (!flags.alpha.empty() || flags.k) {
      throw Error(ErrorCode::kMissingParam, "--alpha/--k need --variant");
    }
    if (demands) inst.demands = *demands;
    return inst;
  }
  VariantParams params;
  if (!flags.alpha.empty()) params.alpha = Rational::Parse(flags.alpha);
  params.k = flags.k;
  params.demands = demands;
  return Compile(inst.graph, NamedVariant(flags.variant, params));
}

Method ParseMethod(const std::string& name) {
  static const std::map<std::string, Method> kMethods = {
      {"auto", Method::kAuto},       {"greedy", Method::kGreedy},
      {"oracle", Method::kOracle},   {"tree", Method::kTree},
      {"cograph", Method::kCograph}, {"threshold", Method::kThreshold},
      {"complete", Method::kComplete}};
  return kMethods.at(name);
}

Json ClaimRecord(const GadgetOutput& g) {
  Json rec;
  rec["construction"] = g.construction;
  rec["n"] = g.gprime.n();
  rec["m"] = g.gprime.m();
  rec["baseVariant"] = g.claim.base_variant_name;
  rec["gadgetVariant"] = g.claim.gadget_variant_name;
  if (g.params.alpha) rec["alpha"] = g.params.alpha->ToString();
  rec["lower"] = g.claim.lower_expr;
  rec["middle"] = g.claim.middle_expr;
  rec["upper"] = g.claim.upper_expr;
  auto extra = Json::array();
  for (Vertex v : g.extra) extra.push_back(v + 1);
  rec["extra"] = std::move(extra);
  return rec;
}

std::vector<int> ParseSizes(const std::string& text) {
  std::vector<int> sizes;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size() || value < 0) {
      throw Error(ErrorCode::kMalformed, "bad size '" + token + "'");
    }
    sizes.push_back(value);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Vector domination solvers and reduction gadgets", "vecdom"};
  app.require_subcommand(1);
  const int cap = OracleCapFromEnv();

  ProblemFlags solve_flags;
  std::string method = "auto";
  auto* solve = app.add_subcommand("solve", "minimum dominating set under a model");
  AddProblemFlags(solve, solve_flags);
  solve->add_option("--method", method, "solver")
      ->check(CLI::IsMember({"auto", "greedy", "oracle", "tree", "cograph",
                             "threshold", "complete"}));

  ProblemFlags verify_flags;
  std::string set_file;
  auto* verify = app.add_subcommand("verify", "check a vertex set");
  AddProblemFlags(verify, verify_flags);
  verify->add_option("--set", set_file, "vertex set file (1-based ids)")
      ->required();

  std::string gadget_input;
  std::string construction;
  std::string gadget_alpha;
  std::optional<int> copies;
  int blocks = 1;
  int nc = 1;
  int gadget_k = 2;
  bool check = false;
  std::string out_prefix;
  auto* gadget = app.add_subcommand("gadget", "build a reduction gadget");
  gadget->add_option("input", gadget_input, "base graph file")->required();
  gadget->add_option("--construction", construction)
      ->required()
      ->check(CLI::IsMember({"replicate", "alpha", "total-alpha", "alpha-rate",
                             "k-dom"}));
  gadget->add_option("--alpha", gadget_alpha, "fraction p/q");
  gadget->add_option("--copies", copies, "N (replicate, alpha)");
  gadget->add_option("--m", blocks, "number of clique blocks");
  gadget->add_option("--nc", nc, "copies per block");
  gadget->add_option("--k", gadget_k, "k for k-dom");
  gadget->add_flag("--check", check, "verify the sandwich claim with the oracle");
  gadget->add_option("--out", out_prefix,
                     "write <prefix>.graph, <prefix>.demands, <prefix>.claim.json");

  std::string family = "tree";
  std::string sizes = "";
  uint64_t seed = 1;
  int reps = 3;
  double p = 0.4;
  bool csv = false;
  auto* bench = app.add_subcommand("bench", "timing and ratio report");
  bench->add_option("--family", family)
      ->check(CLI::IsMember({"tree", "cograph", "threshold", "gnp"}));
  bench->add_option("--sizes", sizes, "comma-separated sizes");
  bench->add_option("--seed", seed);
  bench->add_option("--reps", reps);
  bench->add_option("--p", p, "edge probability (gnp)");
  bench->add_flag("--csv", csv, "comma-separated output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) {
      const Instance inst = LoadInstance(solve_flags);
      SolveOptions options;
      options.method = ParseMethod(method);
      options.oracle_cap = cap;
      const auto start = std::chrono::steady_clock::now();
      const Solution solution = Solve(inst, options);
      const auto stop = std::chrono::steady_clock::now();
      const bool feasible = IsFeasible(inst, solution.vertices).feasible;
      out << ResultRecord(solution, feasible,
                          std::chrono::duration<double>(stop - start).count())
                 .dump()
          << '\n';
      return feasible ? kExitOk : kExitInfeasible;
    }
    if (verify->parsed()) {
      const Instance inst = LoadInstance(verify_flags);
      const VertexSet set = ParseVertexSet(ReadFile(set_file), inst.n());
      const FeasibilityReport report = IsFeasible(inst, set);
      Json rec;
      rec["size"] = set.size();
      auto vertices = Json::array();
      for (Vertex v : set) vertices.push_back(v + 1);
      rec["vertices"] = std::move(vertices);
      rec["feasible"] = report.feasible;
      auto violated = Json::array();
      for (Vertex v : report.violated) violated.push_back(v + 1);
      rec["violated"] = std::move(violated);
      out << rec.dump() << '\n';
      return report.feasible ? kExitOk : kExitInfeasible;
    }
    if (gadget->parsed()) {
      const Graph base = ParseGraph(ReadFile(gadget_input));
      std::optional<Rational> alpha;
      if (!gadget_alpha.empty()) alpha = Rational::Parse(gadget_alpha);
      auto need_alpha = [&]() -> const Rational& {
        if (!alpha) throw Error(ErrorCode::kMissingParam, "--alpha is required");
        return *alpha;
      };
      GadgetOutput g;
      if (construction == "replicate") {
        g = GadgetReplicate(base, copies.value_or(2));
      } else if (construction == "alpha") {
        g = GadgetAlphaDomination(base, need_alpha(), copies);
      } else if (construction == "total-alpha") {
        g = GadgetTotalAlpha(base, need_alpha(), blocks, nc);
      } else if (construction == "alpha-rate") {
        g = GadgetAlphaRate(base, need_alpha(), blocks, nc);
      } else {
        g = GadgetKDomination(base, gadget_k);
      }
      Json rec = ClaimRecord(g);
      if (!out_prefix.empty()) {
        const Instance compiled = Compile(g.gprime, g.claim.gadget_variant);
        WriteFile(out_prefix + ".graph", WriteGraph(g.gprime));
        WriteFile(out_prefix + ".demands", WriteDemands(compiled.demands));
        WriteFile(out_prefix + ".claim.json", rec.dump(2) + "\n");
      }
      bool ok = true;
      if (check) {
        const SandwichReport r = VerifySandwich(g, cap);
        Json c;
        c["baseOptimum"] = r.base_optimum;
        c["lower"] = r.lower;
        c["middle"] = r.middle;
        c["upper"] = r.upper;
        c["holds"] = r.holds;
        c["witnessSize"] = r.witness_size;
        c["witnessFeasible"] = r.witness_feasible;
        c["pass"] = r.holds && r.witness_feasible;
        ok = r.holds && r.witness_feasible;
        rec["check"] = std::move(c);
      }
      out << rec.dump() << '\n';
      return ok ? kExitOk : kExitInfeasible;
    }
    if (bench->parsed()) {
      BenchConfig config;
      config.family = ParseBenchFamily(family);
      config.sizes = ParseSizes(sizes);
      config.seed = seed;
      config.reps = reps;
      config.p = p;
      config.oracle_cap = cap;
      const BenchReport report = BenchSuite(config);
      out << (csv ? report.Csv() : report.Table());
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kInfeasible ? kExitInfeasible
                                              : kExitInputError;
  }
  return kExitInputError;
}

}  // namespace vecdom
