#pragma once

#include <string>
#include <vector>

#include "onestreet/game.hpp"

namespace onestreet {

// Per-information-set action distributions for one player, indexed by the
// owning GameTree's dense infoset ids. Entries at the other player's
// infosets stay empty.
struct BehavioralStrategy {
  int player = 1;
  std::vector<std::vector<double>> actions;

  // Throws std::logic_error unless every infoset of `player` carries a
  // probability vector of the right arity summing to 1 within 1e-9.
  void validate(const GameTree& tree) const;
};

BehavioralStrategy uniform_strategy(const GameTree& tree, int player);

struct SolveConfig {
  int max_iterations = 10000;
  // <= 0 selects the default of 1e-3 * pot.
  double target_exploitability = -1.0;
  // The running average is certified every this many iterations.
  int check_interval = 25;
};

struct SolveReport {
  BehavioralStrategy p1;
  BehavioralStrategy p2;
  double exploitability = 0.0;
  double game_value = 0.0;  // expected P1 payoff under the average profile
  int iterations = 0;
  bool converged = false;
  // One exploitability sample per certification, ending with the final value.
  std::vector<double> exploitability_trace;
};

// Regret-matching self-play over the full tree (no sampling), averaging the
// running strategies with weight t at iteration t. Stops once the certified
// exploitability of the average profile reaches the target, or at the
// iteration cap with `converged` left false. Deterministic: identical tree
// and config give a bit-identical report.
SolveReport solve(const GameTree& tree, const SolveConfig& config = {});

// Exact expected payoff of `player`'s best pure response against the given
// opponent strategy. Single bottom-up pass over deals and decision points;
// ties broken toward the lowest-indexed action.
double best_response_value(const GameTree& tree, const BehavioralStrategy& opponent, int player);

// (BR1 + BR2) / 2 with both terms in the responding player's own sign
// convention; exactly zero at a Nash equilibrium, positive otherwise.
double exploitability(const GameTree& tree, const BehavioralStrategy& p1,
                      const BehavioralStrategy& p2);

// Expected player-1 payoff when both players follow the given strategies.
double profile_value(const GameTree& tree, const BehavioralStrategy& p1,
                     const BehavioralStrategy& p2);

// Total probability that player 1 bets at the root, under deal weights p.
double p1_bet_mass(const GameTree& tree, const BehavioralStrategy& p1);

// JSON document with exploitability, game value, iteration stats, and both
// strategies keyed by "P{player}/{decision-point}/card{rank}".
std::string solve_report_to_json(const GameTree& tree, const SolveReport& report);

}  // namespace onestreet
