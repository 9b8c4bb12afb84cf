#include "onestreet/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "onestreet/errors.hpp"

namespace onestreet {

double mdf(double pot, double bet) {
  if (!(pot > 0.0) || !std::isfinite(pot)) throw ValidationError("pot: must be > 0");
  if (!(bet > 0.0) || !std::isfinite(bet)) throw ValidationError("bet: must be > 0");
  return pot / (bet + pot);
}

double range_advantage(const CardDistribution& p, const CardDistribution& q) {
  const int n = p.size();
  if (q.size() != n) {
    throw ValidationError("q: length " + std::to_string(q.size()) +
                          " does not match p length " + std::to_string(n));
  }
  p.validate(n, "p");
  q.validate(n, "q");

  double win = 0.0;
  double tie = 0.0;
  for (int j = 0; j < n; ++j) {
    const double qj = q.weights[static_cast<size_t>(j)];
    tie += p.weights[static_cast<size_t>(j)] * qj;
    for (int i = j + 1; i < n; ++i) {
      win += p.weights[static_cast<size_t>(i)] * qj;
    }
  }
  return win + 0.5 * tie;
}

double odf(const GameTree& tree, const CardDistribution& q, const BehavioralStrategy& p2,
           int bet_index) {
  if (p2.player != 2) throw std::logic_error("odf: strategy must belong to player 2");
  if (bet_index < 0 || bet_index >= tree.num_p1_bets()) {
    throw std::logic_error("odf: bet index out of range");
  }
  q.validate(tree.deck_size(), "q");

  const int facing_bet_point = 1 + bet_index;  // catalog order: root, then facing-bet points
  double c_star = 0.0;
  for (int card = 1; card <= tree.deck_size(); ++card) {
    const int id = tree.infoset_id(facing_bet_point, card);
    const auto& row = p2.actions[static_cast<size_t>(id)];
    if (row.size() != 2) {
      throw std::logic_error("odf: strategy missing coverage at " + tree.infoset_name(id));
    }
    c_star += q.weights[static_cast<size_t>(card - 1)] * row[0];
  }
  return c_star;
}

GameMetrics game_metrics(const GameTree& tree, const BehavioralStrategy& p2, int bet_index) {
  GameMetrics m;
  m.mdf = mdf(tree.spec().pot, tree.spec().p1_bets.at(static_cast<size_t>(bet_index)));
  m.range_advantage = range_advantage(tree.spec().p, tree.spec().q);
  m.odf = odf(tree, tree.spec().q, p2, bet_index);
  return m;
}

}  // namespace onestreet
