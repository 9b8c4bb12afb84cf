#pragma once

#include "onestreet/game.hpp"
#include "onestreet/solver.hpp"

namespace onestreet {

struct GameMetrics {
  double mdf = 0.0;              // minimum defense frequency
  double range_advantage = 0.0;  // player 1 equity under the deal weights
  double odf = 0.0;              // equilibrium-weighted calling probability
};

// Minimum defense frequency pot / (bet + pot): the calling probability that
// makes a pure bluff exactly break even.
double mdf(double pot, double bet);

// Player 1's equity against player 2's range: probability of the higher
// card plus half the tie probability.
double range_advantage(const CardDistribution& p, const CardDistribution& q);

// Optimal defense frequency sum_i q_i * c(i), where c(i) is player 2's call
// probability with card i facing the bet at `bet_index`. Throws
// std::logic_error if the strategy does not cover those infosets.
double odf(const GameTree& tree, const CardDistribution& q, const BehavioralStrategy& p2,
           int bet_index);

GameMetrics game_metrics(const GameTree& tree, const BehavioralStrategy& p2, int bet_index);

}  // namespace onestreet
