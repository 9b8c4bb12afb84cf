#include "onestreet/game.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "onestreet/errors.hpp"

namespace onestreet {

void CardDistribution::validate(int n, const std::string& field) const {
  if (n < 2) {
    throw ValidationError(field + ": deck size must be >= 2, got " + std::to_string(n));
  }
  if (size() != n) {
    throw ValidationError(field + ": expected " + std::to_string(n) + " weights, got " +
                          std::to_string(size()));
  }
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError(field + "[" + std::to_string(i) + "]: weight must be >= 0");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream os;
    os << field << ": weights sum to " << sum << ", expected 1";
    throw ValidationError(os.str());
  }
}

CardDistribution uniform_distribution(int n) {
  CardDistribution d;
  d.weights.assign(static_cast<size_t>(n), 1.0 / n);
  return d;
}

CardDistribution point_mass(int n, int rank) {
  CardDistribution d;
  d.weights.assign(static_cast<size_t>(n), 0.0);
  d.weights.at(static_cast<size_t>(rank - 1)) = 1.0;
  return d;
}

namespace {

void validate_bet_menu(const std::vector<double>& bets, double stack, const std::string& field) {
  double prev = 0.0;
  for (size_t i = 0; i < bets.size(); ++i) {
    const std::string name = field + "[" + std::to_string(i) + "]";
    const double b = bets[i];
    if (!std::isfinite(b) || b <= 0.0) {
      throw ValidationError(name + ": bet size must be > 0");
    }
    if (b > stack) {
      std::ostringstream os;
      os << name << ": bet size " << b << " exceeds stack " << stack;
      throw ValidationError(os.str());
    }
    if (b <= prev) {
      throw ValidationError(field + ": bet sizes must be strictly increasing");
    }
    prev = b;
  }
}

}  // namespace

void GameSpec::validate() const {
  if (deck_size < 2) {
    throw ValidationError("n: deck size must be >= 2, got " + std::to_string(deck_size));
  }
  if (!(pot > 0.0) || !std::isfinite(pot)) throw ValidationError("pot: must be > 0");
  if (!(stack > 0.0) || !std::isfinite(stack)) throw ValidationError("stack: must be > 0");
  p.validate(deck_size, "p");
  q.validate(deck_size, "q");
  validate_bet_menu(p1_bets, stack, "p1_bets");
  validate_bet_menu(p2_bets, stack, "p2_bets");
}

std::string to_json(const GameSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.deck_size;
  j["p"] = spec.p.weights;
  j["q"] = spec.q.weights;
  j["pot"] = spec.pot;
  j["stack"] = spec.stack;
  j["p1_bets"] = spec.p1_bets;
  j["p2_bets"] = spec.p2_bets;
  return j.dump(2) + "\n";
}

GameSpec game_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  GameSpec spec;
  try {
    spec.deck_size = j.at("n").get<int>();
    spec.p.weights = j.at("p").get<std::vector<double>>();
    spec.q.weights = j.at("q").get<std::vector<double>>();
    spec.pot = j.at("pot").get<double>();
    spec.stack = j.at("stack").get<double>();
    spec.p1_bets = j.at("p1_bets").get<std::vector<double>>();
    spec.p2_bets = j.at("p2_bets").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("game spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

GameSpec load_game_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open game spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return game_spec_from_json(buffer.str());
}

GameTree build_game(const GameSpec& spec) {
  spec.validate();

  GameTree tree;
  tree.spec_ = spec;

  const int b1 = tree.num_p1_bets();
  const int b2 = tree.num_p2_bets();

  tree.points_.push_back({DecisionKind::P1Root, -1, 1, 1 + b1});
  for (int k = 0; k < b1; ++k) {
    tree.points_.push_back({DecisionKind::P2FacingBet, k, 2, 2});
  }
  tree.points_.push_back({DecisionKind::P2FacingCheck, -1, 2, 1 + b2});
  for (int k = 0; k < b2; ++k) {
    tree.points_.push_back({DecisionKind::P1FacingCheckBet, k, 1, 2});
  }

  tree.point_base_.resize(tree.points_.size());
  int next_id = 0;
  for (size_t d = 0; d < tree.points_.size(); ++d) {
    tree.point_base_[d] = next_id;
    next_id += spec.deck_size;
  }
  tree.num_infosets_ = next_id;
  return tree;
}

int GameTree::infoset_id(int decision_point, int card) const {
  return point_base_.at(static_cast<size_t>(decision_point)) + (card - 1);
}

namespace {

int point_of_id(const std::vector<int>& bases, int n, int id) {
  const int dp = id / n;
  if (dp < 0 || dp >= static_cast<int>(bases.size())) {
    throw std::logic_error("infoset id out of range: " + std::to_string(id));
  }
  return dp;
}

}  // namespace

int GameTree::infoset_player(int id) const {
  return points_[static_cast<size_t>(point_of_id(point_base_, deck_size(), id))].player;
}

int GameTree::infoset_num_actions(int id) const {
  return points_[static_cast<size_t>(point_of_id(point_base_, deck_size(), id))].num_actions;
}

std::string GameTree::decision_point_name(int decision_point) const {
  const DecisionPoint& dp = points_.at(static_cast<size_t>(decision_point));
  switch (dp.kind) {
    case DecisionKind::P1Root:
      return "root";
    case DecisionKind::P2FacingBet:
      return "facing-bet-" + std::to_string(dp.bet_index);
    case DecisionKind::P2FacingCheck:
      return "facing-check";
    case DecisionKind::P1FacingCheckBet:
      return "facing-check-bet-" + std::to_string(dp.bet_index);
  }
  return "?";
}

std::string GameTree::infoset_name(int id) const {
  const int dp = point_of_id(point_base_, deck_size(), id);
  const int card = id - point_base_[static_cast<size_t>(dp)] + 1;
  return "P" + std::to_string(points_[static_cast<size_t>(dp)].player) + "/" +
         decision_point_name(dp) + "/card" + std::to_string(card);
}

namespace {

std::string format_chips(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

}  // namespace

std::string GameTree::action_label(int decision_point, int action) const {
  const DecisionPoint& dp = points_.at(static_cast<size_t>(decision_point));
  switch (dp.kind) {
    case DecisionKind::P1Root:
      if (action == 0) return "Check";
      return "Bet " + format_chips(spec_.p1_bets[static_cast<size_t>(action - 1)]);
    case DecisionKind::P2FacingCheck:
      if (action == 0) return "Check";
      return "Bet " + format_chips(spec_.p2_bets[static_cast<size_t>(action - 1)]);
    case DecisionKind::P2FacingBet:
    case DecisionKind::P1FacingCheckBet:
      return action == 0 ? "Call" : "Fold";
  }
  return "?";
}

double payoff(const GameSpec& spec, std::span<const Action> sequence, int card1, int card2) {
  spec.validate();
  if (card1 < 1 || card1 > spec.deck_size || card2 < 1 || card2 > spec.deck_size) {
    throw std::logic_error("payoff: card out of range");
  }
  const double half = 0.5 * spec.pot;
  const int sign = GameTree::showdown_sign(card1, card2);

  const auto bad = [&](const char* why) -> std::logic_error {
    return std::logic_error(std::string("payoff: sequence is not terminal (") + why + ")");
  };

  if (sequence.empty()) throw bad("empty");
  const Action first = sequence[0];

  if (first.kind == ActionKind::Bet) {
    if (first.bet_index < 0 || first.bet_index >= static_cast<int>(spec.p1_bets.size())) {
      throw std::logic_error("payoff: p1 bet index out of range");
    }
    if (sequence.size() != 2) throw bad("bet must be followed by exactly one response");
    const Action resp = sequence[1];
    if (resp.kind == ActionKind::Call) {
      return (half + spec.p1_bets[static_cast<size_t>(first.bet_index)]) * sign;
    }
    if (resp.kind == ActionKind::Fold) return half;
    throw bad("a bet can only be called or folded");
  }

  if (first.kind != ActionKind::Check) throw bad("player 1 must check or bet first");
  if (sequence.size() < 2) throw bad("check must be answered");
  const Action second = sequence[1];

  if (second.kind == ActionKind::Check) {
    if (sequence.size() != 2) throw bad("check-check ends the game");
    return half * sign;
  }

  if (second.kind != ActionKind::Bet) throw bad("player 2 must check or bet after a check");
  if (second.bet_index < 0 || second.bet_index >= static_cast<int>(spec.p2_bets.size())) {
    throw std::logic_error("payoff: p2 bet index out of range");
  }
  if (sequence.size() != 3) throw bad("a check-bet must be followed by exactly one response");
  const Action resp = sequence[2];
  if (resp.kind == ActionKind::Call) {
    return (half + spec.p2_bets[static_cast<size_t>(second.bet_index)]) * sign;
  }
  if (resp.kind == ActionKind::Fold) return -half;
  throw bad("a bet can only be called or folded");
}

double pot_odds_threshold(double pot, double call_cost) {
  if (!(pot > 0.0) || !std::isfinite(pot)) throw ValidationError("pot: must be > 0");
  if (!(call_cost > 0.0) || !std::isfinite(call_cost)) {
    throw ValidationError("call_cost: must be > 0");
  }
  return call_cost / (pot + 2.0 * call_cost);
}

}  // namespace onestreet
