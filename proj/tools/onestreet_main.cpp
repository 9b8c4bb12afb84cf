// Command-line front end: solve a single game, generate datasets, fit the
// model ladder, evaluate the calling rule, and plot the (RA, ODF) scatter.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onestreet/dataset.hpp"
#include "onestreet/errors.hpp"
#include "onestreet/game.hpp"
#include "onestreet/metrics.hpp"
#include "onestreet/plot.hpp"
#include "onestreet/regression.hpp"
#include "onestreet/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;

std::string fmt_prob(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void print_strategy_listing(const onestreet::GameTree& tree, const onestreet::SolveReport& report) {
  const auto& points = tree.decision_points();
  for (int d = 0; d < tree.num_decision_points(); ++d) {
    const onestreet::DecisionPoint& dp = points[static_cast<size_t>(d)];
    switch (dp.kind) {
      case onestreet::DecisionKind::P1Root:
        std::cout << "P1 opening:\n";
        break;
      case onestreet::DecisionKind::P2FacingBet:
        std::cout << "P2 facing bet "
                  << tree.spec().p1_bets[static_cast<size_t>(dp.bet_index)] << ":\n";
        break;
      case onestreet::DecisionKind::P2FacingCheck:
        std::cout << "P2 after check:\n";
        break;
      case onestreet::DecisionKind::P1FacingCheckBet:
        std::cout << "P1 facing check-bet "
                  << tree.spec().p2_bets[static_cast<size_t>(dp.bet_index)] << ":\n";
        break;
    }
    const onestreet::BehavioralStrategy& strategy = dp.player == 1 ? report.p1 : report.p2;
    for (int card = 1; card <= tree.deck_size(); ++card) {
      const auto& row = strategy.actions[static_cast<size_t>(tree.infoset_id(d, card))];
      std::cout << "  Card " << card << ":";
      bool first = true;
      for (int a = 0; a < dp.num_actions; ++a) {
        if (row[static_cast<size_t>(a)] < 5e-4) continue;
        std::cout << (first ? " " : ", ") << tree.action_label(d, a) << " pr. "
                  << fmt_prob(row[static_cast<size_t>(a)]);
        first = false;
      }
      if (first) std::cout << " (all below 0.0005)";
      std::cout << "\n";
    }
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw onestreet::IoError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw onestreet::IoError("failed while writing " + path);
}

int cmd_solve(const std::string& spec_path, const std::string& out_path, double target,
              int max_iterations) {
  const onestreet::GameSpec spec = onestreet::load_game_spec(spec_path);
  const onestreet::GameTree tree = onestreet::build_game(spec);

  onestreet::SolveConfig config;
  config.target_exploitability = target;
  config.max_iterations = max_iterations;
  const onestreet::SolveReport report = onestreet::solve(tree, config);

  print_strategy_listing(tree, report);
  std::printf("exploitability = %.6g\n", report.exploitability);
  std::printf("game_value = %.6g\n", report.game_value);
  std::printf("iterations = %d\n", report.iterations);
  std::printf("converged = %s\n", report.converged ? "yes" : "no");

  if (!out_path.empty()) {
    write_text_file(out_path, onestreet::solve_report_to_json(tree, report));
  }
  return kExitOk;
}

int cmd_gen(const onestreet::GenConfig& config, const std::string& out_path, bool quiet) {
  const auto started = std::chrono::steady_clock::now();

  long report_step = config.games_per_bet_size * static_cast<long>(config.bet_sizes.size()) / 20;
  if (report_step < 1) report_step = 1;
  auto progress = [&](long done, long total) {
    if (!quiet && (done % report_step == 0 || done == total)) {
      std::fprintf(stderr, "gen: solved %ld/%ld games\n", done, total);
    }
  };

  const std::vector<onestreet::DatasetRow> rows = onestreet::generate_dataset(config, progress);
  onestreet::write_csv(rows, out_path);

  double mean_exploitability = 0.0;
  for (const onestreet::DatasetRow& row : rows) mean_exploitability += row.exploitability;
  if (!rows.empty()) mean_exploitability /= static_cast<double>(rows.size());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::printf("rows=%zu mean_exploitability=%.6g seconds=%.3f\n", rows.size(),
              mean_exploitability, seconds);
  return kExitOk;
}

int cmd_fit(const std::string& data_path, int table, const std::string& out_path,
            std::uint64_t seed) {
  const std::vector<onestreet::DatasetRow> rows = onestreet::read_csv(data_path);
  if (rows.empty()) throw onestreet::ValidationError("no rows in " + data_path);
  const std::vector<onestreet::RegressionSample> samples = onestreet::to_samples(rows);
  const onestreet::ZooReport report = onestreet::run_model_zoo(samples, table, seed);

  std::cout << onestreet::render_text(report);
  if (!out_path.empty()) write_text_file(out_path, onestreet::render_csv(report));
  return kExitOk;
}

int cmd_plot(const std::string& data_path, const std::string& out_path,
             const std::string& format) {
  const std::vector<onestreet::DatasetRow> rows = onestreet::read_csv(data_path);
  const std::string artifact =
      format == "svg" ? onestreet::scatter_svg(rows) : onestreet::scatter_csv(rows);
  write_text_file(out_path, artifact);
  std::printf("wrote %s (%zu points)\n", out_path.c_str(), rows.size());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-street poker equilibrium workbench"};
  app.require_subcommand(1);

  // --- solve ---
  auto* solve_cmd = app.add_subcommand("solve", "solve a game spec and print the profile");
  std::string spec_path;
  std::string solve_out;
  double solve_target = -1.0;
  int solve_iters = 10000;
  solve_cmd->add_option("spec", spec_path, "game spec JSON file")->required();
  solve_cmd->add_option("--out", solve_out, "write the full report as JSON");
  solve_cmd->add_option("--target", solve_target, "exploitability target (default 1e-3 * pot)");
  solve_cmd->add_option("--max-iters", solve_iters, "iteration cap")->check(CLI::PositiveNumber);

  // --- gen ---
  auto* gen_cmd = app.add_subcommand("gen", "sample, solve, and export a dataset CSV");
  onestreet::GenConfig gen_config;
  std::string gen_out;
  bool gen_quiet = false;
  gen_cmd->add_option("--games", gen_config.games_per_bet_size, "games per bet size");
  gen_cmd->add_option("--bet-sizes", gen_config.bet_sizes, "bet sizes as pot fractions")
      ->delimiter(',');
  gen_cmd->add_option("--seed", gen_config.master_seed, "master seed");
  gen_cmd->add_option("--deck", gen_config.deck_size, "deck size");
  gen_cmd->add_option("--pot", gen_config.pot, "pot in chips");
  gen_cmd->add_option("--stack", gen_config.stack, "stack in chips");
  gen_cmd->add_option("--workers", gen_config.workers, "worker threads (0 = all cores)");
  gen_cmd->add_option("--target", gen_config.solver.target_exploitability,
                      "per-game exploitability target (default 1e-3 * pot)");
  gen_cmd->add_option("--max-iters", gen_config.solver.max_iterations, "per-game iteration cap");
  gen_cmd->add_flag("--reuse-distributions", gen_config.reuse_distributions,
                    "share the sampled (p, q) pool across bet sizes");
  gen_cmd->add_flag("--quiet", gen_quiet, "suppress progress output");
  gen_cmd->add_option("--out", gen_out, "output CSV path")->required();

  // --- fit ---
  auto* fit_cmd = app.add_subcommand("fit", "fit the model ladder over a dataset");
  std::string fit_data;
  std::string fit_out;
  int fit_table = 0;
  std::uint64_t fit_seed = 1;
  fit_cmd->add_option("--data", fit_data, "dataset CSV")->required();
  fit_cmd->add_option("--table", fit_table, "1 = single bet size, 2 = multi size")
      ->required()
      ->check(CLI::Range(1, 2));
  fit_cmd->add_option("--out", fit_out, "also write the report as CSV");
  fit_cmd->add_option("--seed", fit_seed, "cross-validation shuffle seed");

  // --- rule ---
  auto* rule_cmd = app.add_subcommand("rule", "evaluate the 100-50-25 MIN calling rule");
  double rule_mdf = -1.0, rule_pot = -1.0, rule_bet = -1.0, rule_ra = 0.0;
  bool rule_is_signed = false;
  auto* mdf_opt = rule_cmd->add_option("--mdf", rule_mdf, "minimum defense frequency");
  auto* pot_opt = rule_cmd->add_option("--pot", rule_pot, "pot in chips");
  auto* bet_opt = rule_cmd->add_option("--bet", rule_bet, "bet in chips");
  rule_cmd->add_option("--ra", rule_ra, "range advantage")->required();
  rule_cmd->add_flag("--signed", rule_is_signed, "range advantage given on [-1, 1]");

  // --- plot ---
  auto* plot_cmd = app.add_subcommand("plot", "scatter of range advantage vs defense frequency");
  std::string plot_data;
  std::string plot_out;
  std::string plot_format = "svg";
  plot_cmd->add_option("--data", plot_data, "dataset CSV")->required();
  plot_cmd->add_option("--out", plot_out, "output file")->required();
  plot_cmd->add_option("--format", plot_format, "svg or csv")
      ->check(CLI::IsMember({"svg", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (solve_cmd->parsed()) {
      return cmd_solve(spec_path, solve_out, solve_target, solve_iters);
    }
    if (gen_cmd->parsed()) {
      gen_config.validate();
      return cmd_gen(gen_config, gen_out, gen_quiet);
    }
    if (fit_cmd->parsed()) {
      return cmd_fit(fit_data, fit_table, fit_out, fit_seed);
    }
    if (rule_cmd->parsed()) {
      const bool have_mdf = mdf_opt->count() > 0;
      const bool have_pot = pot_opt->count() > 0;
      const bool have_bet = bet_opt->count() > 0;
      if (have_mdf == (have_pot || have_bet)) {
        throw onestreet::ValidationError("pass either --mdf or both --pot and --bet");
      }
      if (!have_mdf && (!have_pot || !have_bet)) {
        throw onestreet::ValidationError("--pot and --bet must be given together");
      }
      const double alpha = have_mdf ? rule_mdf : onestreet::mdf(rule_pot, rule_bet);
      const double value = rule_is_signed ? onestreet::rule_signed(alpha, rule_ra)
                                          : onestreet::rule_100_50_25(alpha, rule_ra);
      std::printf("%g\n", value);
      return kExitOk;
    }
    if (plot_cmd->parsed()) {
      return cmd_plot(plot_data, plot_out, plot_format);
    }
  } catch (const onestreet::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const onestreet::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const onestreet::DegeneracyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const onestreet::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitIo;
  }
  return kExitInvalid;
}
