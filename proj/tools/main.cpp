// kingman: command-line front end. Exit 0 when all checks pass, 1 on a failed
// check, 2 on bad input.
#include "run_config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace kingman;
using namespace kingman::cli;

namespace {

void add_params(CLI::App* sub, RunConfig& c) {
  sub->add_option("--alpha", c.alpha, "alpha as a rational, e.g. 1/2");
  sub->add_option("--theta", c.theta, "theta as a rational");
  sub->add_option("--N", c.N, "degenerate series: number of parts");
  sub->add_option("--beta", c.beta, "degenerate series: beta (alpha = -beta, theta = N beta)");
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--jobs", c.jobs, "parallel sampling streams");
  sub->add_option("-o,--output", c.output, "output file (relative paths go under $KINGMAN_OUTPUT_DIR)");
  sub->add_option("--format", c.format, "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ewens-Pitman partition structures, up/down chains and their diffusion limits"};
  app.require_subcommand(0, 1);
  RunConfig c;
  std::string config_file;
  bool print_config = false;
  app.add_option("--config", config_file, "run a saved RunConfig JSON file");
  app.add_flag("--print-config", print_config, "print the parsed config as JSON instead of running");

  auto* enumerate = app.add_subcommand("enumerate", "partitions of n in reverse-lex order");
  enumerate->add_option("--n", c.n)->required();
  enumerate->add_option("--max-length", c.max_length, "keep partitions with at most this many parts");
  add_common(enumerate, c);

  auto* measure = app.add_subcommand("measure", "the Ewens-Pitman measure M_n");
  measure->add_option("--n", c.n)->required();
  add_params(measure, c);
  add_common(measure, c);

  auto* chain = app.add_subcommand("chain", "up/down transition matrix, spectrum and reversibility");
  chain->add_option("--n", c.n)->required();
  add_params(chain, c);
  add_common(chain, c);

  auto* verify = app.add_subcommand("verify", "exact identities up to level max-n");
  verify->add_option("--max-n", c.max_n)->required();
  verify->add_option("--check", c.checks, "coherency, reversibility, triangular, tilde, spectrum (default: all)");
  add_params(verify, c);
  add_common(verify, c);

  auto* generator = app.add_subcommand("generator", "generator matrix on the filtration of degree m");
  generator->add_option("--m", c.m)->required();
  add_params(generator, c);
  add_common(generator, c);

  auto* converge = app.add_subcommand("converge", "finite-level generator deviation as n grows");
  converge->add_option("--m", c.m, "filtration degree (default 3)");
  converge->add_option("--n-list", c.n_list, "levels (default 16 32 64)")->delimiter(',');
  add_params(converge, c);
  add_common(converge, c);

  auto* moments = app.add_subcommand("moments", "exact Poisson-Dirichlet moments against Monte Carlo");
  moments->add_option("--lambda", c.lambdas, "observable partitions, e.g. [2,2] (default [2] [2,2] [3])");
  moments->add_option("--samples", c.samples, "number of draws (default 100000)");
  moments->add_option("--tail", c.tail, "stick-breaking tail");
  add_params(moments, c);
  add_common(moments, c);

  auto* sample = app.add_subcommand("sample", "restaurant draws, PD points or up/down trajectories");
  sample->add_option("--kind", c.kind, "crp, pd or updown")->required();
  sample->add_option("--n", c.n);
  sample->add_option("--samples", c.samples);
  sample->add_option("--steps", c.steps);
  sample->add_option("--record-every", c.record_every);
  sample->add_option("--start", c.start, "starting partition for updown (default [n])");
  sample->add_option("--tail", c.tail, "stick-breaking tail");
  add_params(sample, c);
  add_common(sample, c);

  auto* wf = app.add_subcommand("wf", "Wright-Fisher simulation, ordered Dirichlet density and comparison");
  wf->add_option("--kind", c.kind, "simulate (default), density or dirichlet");
  wf->add_option("--N", c.N)->required();
  wf->add_option("--eta", c.eta, "mutation rate");
  wf->add_option("--beta", c.beta, "eta / (N - 1)");
  wf->add_option("--dt", c.dt, "Euler-Maruyama step (default 1e-4)");
  wf->add_option("--steps", c.steps);
  wf->add_option("--record-every", c.record_every);
  wf->add_option("--samples", c.samples, "Dirichlet draws for --kind dirichlet");
  wf->add_option("--point", c.point, "comma-separated coordinates: start point or density argument");
  add_common(wf, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_file.empty()) {
      std::ifstream f(config_file);
      if (!f) throw ConfigError("cannot read " + config_file);
      Json j;
      try {
        j = Json::parse(f);
      } catch (const Json::exception& e) {
        throw ConfigError(config_file + ": " + e.what());
      }
      c = config_from_json(j);
    } else if (auto subs = app.get_subcommands(); !subs.empty()) {
      c.command = subs.front()->get_name();
    } else {
      std::cerr << app.help();
      return 2;
    }
    if (print_config) {
      validate(c);
      std::cout << to_json(c).dump(2) << "\n";
      return 0;
    }
    return run(c, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
