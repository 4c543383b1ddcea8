#include <CLI11.hpp>

#include "commands.hpp"
#include "secmon/cli.hpp"
#include "secmon/error.hpp"

namespace secmon::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multipartite secrecy monotones: compute, run LOCC protocols, verify.", "secmon"};
  app.require_subcommand(1);

  Common common;
  app.add_flag("--json", common.json, "Machine-readable output");
  app.add_option("--seed", common.seed, "Master seed for randomized commands");
  app.add_option("--tolerance", common.tolerance, "Values within this of 0 print as 0")
      ->check(CLI::NonNegativeNumber);

  MonotoneArgs mono;
  auto* monotone = app.add_subcommand("monotone", "Monotones of a distribution file");
  monotone->add_option("file", mono.file, "Distribution JSON")->required();
  monotone->add_option("--monotone", mono.monotone, "s, t or mlambda")
      ->check(CLI::IsMember({"s", "t", "mlambda"}));
  monotone->add_option("--lambda", mono.lambda, "Weight of S_n in M_lambda");
  monotone->add_option("--group", mono.group, "Group parties first, e.g. A,B|C");
  monotone->add_flag("--all-five", mono.all_five, "S2(A:BC) S2(B:AC) S2(C:AB) S3 T3");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run an LOCC protocol on a distribution");
  run->add_option("dist", run_args.dist, "Distribution JSON")->required();
  run->add_option("protocol", run_args.protocol_file, "Protocol JSON");
  run->add_option("--builtin", run_args.builtin,
                  "px_to_p2, p3_to_p2, p3sq_to_px or pxsq_to_p3");
  run->add_option("--expect", run_args.expect, "Target distribution every branch must match");

  QuantumArgs q;
  auto* quantum = app.add_subcommand("quantum", "Quantum states: monotones and measurements");
  quantum->add_option("state", q.state, "Density-matrix or pure-state JSON");
  quantum->add_option("--measure", q.measure, "Per-party bases, e.g. z,z,z (z, x or y)");
  quantum->add_flag("--monotone", q.monotone, "Quantum S_n and T_n");
  quantum->add_option("--ghz-demo", q.ghz_demo, "GHZ values and sum-halving verdicts")
      ->check(CLI::PositiveNumber);

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Randomized property checks");
  verify->add_option("--suite", v.suite, "classical, eve, quantum or all")
      ->check(CLI::IsMember({"classical", "eve", "quantum", "all"}));
  verify->add_option("--trials", v.trials, "Trials per check (default 1000/500/300)");
  verify->add_option("--report", v.report, "Write the JSON report here");
  verify->add_option("--max-parties", v.max_parties, "Classical: parties per instance");
  verify->add_option("--max-alphabet", v.max_alphabet, "Classical: alphabet size bound");
  verify->add_option("--max-dim", v.max_dim, "Quantum: total Hilbert dimension bound");

  std::string decompose_file;
  auto* decompose = app.add_subcommand("decompose", "Venn quantities and canonical yields");
  decompose->add_option("file", decompose_file, "Tripartite distribution JSON")->required();

  BoundArgs b;
  auto* bound = app.add_subcommand("bound", "Yield upper bound source -> target");
  bound->add_option("source", b.source, "Source distribution JSON")->required();
  bound->add_option("target", b.target, "Target distribution JSON")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* sub = &app;
    for (const auto* s : app.get_subcommands({})) {
      if (s->parsed()) sub = s;
    }
    err << sub->help();
    return kUsage;
  }

  try {
    if (monotone->parsed()) return cmd_monotone(mono, common, out);
    if (run->parsed()) return cmd_run(run_args, common, out);
    if (quantum->parsed()) return cmd_quantum(q, common, out);
    if (verify->parsed()) return cmd_verify(v, common, out);
    if (decompose->parsed()) return cmd_decompose(decompose_file, common, out);
    if (bound->parsed()) return cmd_bound(b, common, out);
  } catch (const ProtocolError& e) {
    err << "protocol incompatible: " << e.what() << '\n';
    return kProtocol;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace secmon::cli
