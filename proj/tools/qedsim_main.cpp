// qedsim — wavepacket/quantized-mode scattering simulator and oracle suite.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 numerical budget exceeded.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "CLI11.hpp"

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "qedsim/errors.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string output_path;
  int workers = 0;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool with_workers = true) {
  sub->add_option("--config", opts.config_path,
                  "configuration file (key = value lines)");
  sub->add_option("--output", opts.output_path,
                  "output path ('-' for stdout; overrides output.path)");
  if (with_workers) {
    sub->add_option("--workers", opts.workers,
                    "worker threads (0: hardware concurrency)");
  }
}

qedsim::cli::Config load_config(const CommonOpts& opts) {
  if (opts.config_path.empty()) return qedsim::cli::Config();
  return qedsim::cli::Config::load(opts.config_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qedsim: single-electron / single-mode first-order scattering "
      "simulator with analytic cross-checks"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::function<int()> action;

  CLI::App* simulate =
      app.add_subcommand("simulate", "evaluate one configuration -> CSV row");
  add_common(simulate, opts, false);
  simulate->callback([&]() {
    action = [&]() {
      return qedsim::cli::cmd_simulate(load_config(opts), opts.output_path);
    };
  });

  CLI::App* sweep =
      app.add_subcommand("sweep", "sweep one parameter -> CSV table");
  add_common(sweep, opts);
  sweep->callback([&]() {
    action = [&]() {
      return qedsim::cli::cmd_sweep(load_config(opts), opts.output_path,
                                    opts.workers);
    };
  });

  CLI::App* fig3a = app.add_subcommand(
      "fig3a", "first-order signal vs extinction coefficient -> CSV");
  add_common(fig3a, opts);
  fig3a->callback([&]() {
    action = [&]() {
      return qedsim::cli::cmd_fig3a(load_config(opts), opts.output_path,
                                    opts.workers);
    };
  });

  CLI::App* fig3b = app.add_subcommand(
      "fig3b", "extinction map over packet size and drift length -> CSV");
  add_common(fig3b, opts, false);
  fig3b->callback([&]() {
    action = [&]() {
      return qedsim::cli::cmd_fig3b(load_config(opts), opts.output_path);
    };
  });

  CLI::App* sp = app.add_subcommand(
      "smith-purcell", "grating-radiation spectral density -> CSV");
  add_common(sp, opts, false);
  sp->callback([&]() {
    action = [&]() {
      return qedsim::cli::cmd_smith_purcell(load_config(opts),
                                            opts.output_path);
    };
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full acceptance/verification table");
  add_common(verify, opts);
  verify->callback([&]() {
    action = [&]() {
      return qedsim::cli::cmd_verify(opts.output_path, opts.workers);
    };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    return action();
  } catch (const qedsim::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const qedsim::BudgetError& e) {
    std::fprintf(stderr, "budget error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
