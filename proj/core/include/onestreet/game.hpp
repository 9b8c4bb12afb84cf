#pragma once

#include <span>
#include <string>
#include <vector>

namespace onestreet {

// Probability weights over an n-card deck, one weight per rank 1..n.
struct CardDistribution {
  std::vector<double> weights;

  int size() const { return static_cast<int>(weights.size()); }

  // Throws ValidationError (naming `field`) unless the weights form a
  // probability vector of length n: entries >= 0, sum within 1e-9 of 1.
  void validate(int n, const std::string& field) const;
};

CardDistribution uniform_distribution(int n);
CardDistribution point_mass(int n, int rank);

// One-street game: both players are dealt a card (independently, ties
// possible), player 1 checks or bets, a bet can only be called or folded,
// and a check hands the same choice to player 2. Higher card wins the pot.
struct GameSpec {
  int deck_size = 10;
  CardDistribution p;  // player 1 deal weights
  CardDistribution q;  // player 2 deal weights
  double pot = 1.0;
  double stack = 1.0;
  std::vector<double> p1_bets;  // chips, strictly increasing, each in (0, stack]
  std::vector<double> p2_bets;

  // Throws ValidationError naming the offending field.
  void validate() const;
};

std::string to_json(const GameSpec& spec);
GameSpec game_spec_from_json(const std::string& text);
GameSpec load_game_spec(const std::string& path);

enum class ActionKind { Check, Bet, Call, Fold };

struct Action {
  ActionKind kind = ActionKind::Check;
  int bet_index = -1;  // index into the acting player's bet menu; Bet only

  static Action check() { return {ActionKind::Check, -1}; }
  static Action bet(int k) { return {ActionKind::Bet, k}; }
  static Action call() { return {ActionKind::Call, -1}; }
  static Action fold() { return {ActionKind::Fold, -1}; }
};

// The four decision-point families, in catalog order.
enum class DecisionKind { P1Root, P2FacingBet, P2FacingCheck, P1FacingCheckBet };

struct DecisionPoint {
  DecisionKind kind;
  int bet_index;    // index into the bet menu for the facing-bet families, else -1
  int player;       // 1 or 2
  int num_actions;  // menu size at this point
};

// Explicit extensive form: a fixed catalog of decision points, dense
// information-set ids (one per decision point and private card), and
// closed-form terminal payoffs.
//
// Payoffs use the half-pot baseline: each player is treated as having
// already contributed pot/2, which makes every terminal exactly zero-sum
// (u2 == -u1). `payoff_offset` adds a constant to both players' payoffs at
// every terminal; best responses are invariant to it.
//
// Immutable after construction; safe to share across concurrent solves.
class GameTree {
 public:
  GameTree() = default;

  const GameSpec& spec() const { return spec_; }
  int deck_size() const { return spec_.deck_size; }
  int num_p1_bets() const { return static_cast<int>(spec_.p1_bets.size()); }
  int num_p2_bets() const { return static_cast<int>(spec_.p2_bets.size()); }

  const std::vector<DecisionPoint>& decision_points() const { return points_; }
  int num_decision_points() const { return static_cast<int>(points_.size()); }
  int num_infosets() const { return num_infosets_; }

  // Dense id for (decision point, private card). Cards are ranks 1..n.
  int infoset_id(int decision_point, int card) const;
  int infoset_player(int id) const;
  int infoset_num_actions(int id) const;
  // Stable naming scheme "P{player}/{decision-point}/card{rank}",
  // e.g. "P2/facing-bet-0/card7".
  std::string infoset_name(int id) const;
  std::string decision_point_name(int decision_point) const;
  std::string action_label(int decision_point, int action) const;

  // +1 / 0 / -1 as card1 beats / ties / loses to card2.
  static int showdown_sign(int card1, int card2) {
    return card1 > card2 ? 1 : (card1 < card2 ? -1 : 0);
  }

  double half_pot() const { return 0.5 * spec_.pot; }
  double payoff_offset() const { return payoff_offset_; }
  void set_payoff_offset(double offset) { payoff_offset_ = offset; }

  // Terminal payoffs for player 1; player 2 receives
  // 2 * payoff_offset() - u1 (i.e. -u1 at offset zero).
  double u1_check_check(int c1, int c2) const {
    return payoff_offset_ + half_pot() * showdown_sign(c1, c2);
  }
  double u1_bet_folded(int /*bet_index*/) const { return payoff_offset_ + half_pot(); }
  double u1_bet_called(int bet_index, int c1, int c2) const {
    return payoff_offset_ + (half_pot() + spec_.p1_bets[bet_index]) * showdown_sign(c1, c2);
  }
  double u1_check_bet_folded(int /*bet_index*/) const { return payoff_offset_ - half_pot(); }
  double u1_check_bet_called(int bet_index, int c1, int c2) const {
    return payoff_offset_ + (half_pot() + spec_.p2_bets[bet_index]) * showdown_sign(c1, c2);
  }

 private:
  friend GameTree build_game(const GameSpec& spec);

  GameSpec spec_;
  std::vector<DecisionPoint> points_;
  std::vector<int> point_base_;  // first infoset id of each decision point
  int num_infosets_ = 0;
  double payoff_offset_ = 0.0;
};

// Validates the spec and enumerates the decision-point catalog.
GameTree build_game(const GameSpec& spec);

// Player-1 payoff of a terminal action sequence under the half-pot baseline.
// Throws std::logic_error if the sequence is not terminal in the tree.
double payoff(const GameSpec& spec, std::span<const Action> sequence, int card1, int card2);

// Equity at which calling a bet of `call_cost` into `pot` breaks even:
// call_cost / (pot + 2 * call_cost).
double pot_odds_threshold(double pot, double call_cost);

}  // namespace onestreet
