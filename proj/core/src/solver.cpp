#include "onestreet/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "onestreet/errors.hpp"

namespace onestreet {

namespace {

// Decision-point indices in catalog order (see build_game).
constexpr int kRootPoint = 0;
int fb_point(int k) { return 1 + k; }
int fc_point(const GameTree& tree) { return 1 + tree.num_p1_bets(); }
int fcb_point(const GameTree& tree, int m) { return 2 + tree.num_p1_bets() + m; }

const std::vector<double>& strategy_row(const GameTree& tree, const BehavioralStrategy& s,
                                        int decision_point, int card) {
  return s.actions[static_cast<size_t>(tree.infoset_id(decision_point, card))];
}

}  // namespace

void BehavioralStrategy::validate(const GameTree& tree) const {
  if (player != 1 && player != 2) {
    throw std::logic_error("strategy: player must be 1 or 2");
  }
  if (static_cast<int>(actions.size()) != tree.num_infosets()) {
    throw std::logic_error("strategy: sized for " + std::to_string(actions.size()) +
                           " infosets, tree has " + std::to_string(tree.num_infosets()));
  }
  for (int id = 0; id < tree.num_infosets(); ++id) {
    const auto& row = actions[static_cast<size_t>(id)];
    if (tree.infoset_player(id) != player) {
      if (!row.empty()) {
        throw std::logic_error("strategy: unexpected entry at " + tree.infoset_name(id));
      }
      continue;
    }
    if (static_cast<int>(row.size()) != tree.infoset_num_actions(id)) {
      throw std::logic_error("strategy: missing coverage at " + tree.infoset_name(id));
    }
    double sum = 0.0;
    for (double v : row) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::logic_error("strategy: negative probability at " + tree.infoset_name(id));
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::logic_error("strategy: probabilities at " + tree.infoset_name(id) +
                             " sum to " + std::to_string(sum));
    }
  }
}

BehavioralStrategy uniform_strategy(const GameTree& tree, int player) {
  BehavioralStrategy s;
  s.player = player;
  s.actions.resize(static_cast<size_t>(tree.num_infosets()));
  for (int id = 0; id < tree.num_infosets(); ++id) {
    if (tree.infoset_player(id) != player) continue;
    const int a = tree.infoset_num_actions(id);
    s.actions[static_cast<size_t>(id)].assign(static_cast<size_t>(a), 1.0 / a);
  }
  return s;
}

namespace {

// Full-traversal regret-matching state. All tables are flat doubles indexed
// with 0-based cards; results are bit-deterministic because the iteration
// order is fixed and nothing is sampled.
struct Cfr {
  const GameTree& tree;
  int n, b1, b2;
  double half, off;
  const std::vector<double>& pw;
  const std::vector<double>& qw;
  const std::vector<double>& bets1;
  const std::vector<double>& bets2;

  std::vector<double> reg_root, reg_fb, reg_fc, reg_fcb;
  std::vector<double> sum_root, sum_fb, sum_fc, sum_fcb;
  std::vector<double> cur_root, cur_fb, cur_fc, cur_fcb;
  std::vector<double> scratch1, scratch2;  // per-action values, reused

  explicit Cfr(const GameTree& t)
      : tree(t),
        n(t.deck_size()),
        b1(t.num_p1_bets()),
        b2(t.num_p2_bets()),
        half(t.half_pot()),
        off(t.payoff_offset()),
        pw(t.spec().p.weights),
        qw(t.spec().q.weights),
        bets1(t.spec().p1_bets),
        bets2(t.spec().p2_bets) {
    reg_root.assign(static_cast<size_t>(n * (1 + b1)), 0.0);
    reg_fb.assign(static_cast<size_t>(b1 * n * 2), 0.0);
    reg_fc.assign(static_cast<size_t>(n * (1 + b2)), 0.0);
    reg_fcb.assign(static_cast<size_t>(b2 * n * 2), 0.0);
    sum_root = reg_root;
    sum_fb = reg_fb;
    sum_fc = reg_fc;
    sum_fcb = reg_fcb;
    cur_root = reg_root;
    cur_fb = reg_fb;
    cur_fc = reg_fc;
    cur_fcb = reg_fcb;
    scratch1.assign(static_cast<size_t>(b1 > 0 ? b1 : 1), 0.0);
    scratch2.assign(static_cast<size_t>(b2 > 0 ? b2 : 1), 0.0);
  }

  int root_at(int i, int a) const { return i * (1 + b1) + a; }
  int fb_at(int k, int j, int a) const { return (k * n + j) * 2 + a; }
  int fc_at(int j, int a) const { return j * (1 + b2) + a; }
  int fcb_at(int m, int i, int a) const { return (m * n + i) * 2 + a; }

  static int sign(int i, int j) { return i > j ? 1 : (i < j ? -1 : 0); }

  static void match_row(const double* regret, double* out, int count) {
    double total = 0.0;
    for (int a = 0; a < count; ++a) total += regret[a] > 0.0 ? regret[a] : 0.0;
    if (total > 0.0) {
      for (int a = 0; a < count; ++a) out[a] = regret[a] > 0.0 ? regret[a] / total : 0.0;
    } else {
      for (int a = 0; a < count; ++a) out[a] = 1.0 / count;
    }
  }

  void match_player(int player) {
    for (int i = 0; i < n; ++i) {
      if (player == 1) {
        match_row(&reg_root[static_cast<size_t>(root_at(i, 0))],
                  &cur_root[static_cast<size_t>(root_at(i, 0))], 1 + b1);
        for (int m = 0; m < b2; ++m) {
          match_row(&reg_fcb[static_cast<size_t>(fcb_at(m, i, 0))],
                    &cur_fcb[static_cast<size_t>(fcb_at(m, i, 0))], 2);
        }
      } else {
        match_row(&reg_fc[static_cast<size_t>(fc_at(i, 0))],
                  &cur_fc[static_cast<size_t>(fc_at(i, 0))], 1 + b2);
        for (int k = 0; k < b1; ++k) {
          match_row(&reg_fb[static_cast<size_t>(fb_at(k, i, 0))],
                    &cur_fb[static_cast<size_t>(fb_at(k, i, 0))], 2);
        }
      }
    }
  }

  // Linear averaging: iteration t contributes with weight t, scaled by the
  // acting player's own reach probability.
  void accumulate(double w) {
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a <= b1; ++a) {
        sum_root[static_cast<size_t>(root_at(i, a))] +=
            w * cur_root[static_cast<size_t>(root_at(i, a))];
      }
      for (int a = 0; a <= b2; ++a) {
        sum_fc[static_cast<size_t>(fc_at(i, a))] += w * cur_fc[static_cast<size_t>(fc_at(i, a))];
      }
      for (int k = 0; k < b1; ++k) {
        for (int a = 0; a < 2; ++a) {
          sum_fb[static_cast<size_t>(fb_at(k, i, a))] +=
              w * cur_fb[static_cast<size_t>(fb_at(k, i, a))];
        }
      }
      const double check_reach = cur_root[static_cast<size_t>(root_at(i, 0))];
      for (int m = 0; m < b2; ++m) {
        for (int a = 0; a < 2; ++a) {
          sum_fcb[static_cast<size_t>(fcb_at(m, i, a))] +=
              w * check_reach * cur_fcb[static_cast<size_t>(fcb_at(m, i, a))];
        }
      }
    }
  }

  // Regret-matching+ update: regrets are clamped at zero as they accumulate,
  // which keeps the dynamics from burying an action under old negative
  // regret. Counterfactual values carry opponent and chance reach only; the
  // acting player's own card weight multiplies the regret increment.
  static void bump(double& regret, double delta) {
    regret += delta;
    if (regret < 0.0) regret = 0.0;
  }

  void update_p1_regrets() {
    for (int i = 0; i < n; ++i) {
      double node_value = 0.0;
      double v_check = 0.0;
      for (int j = 0; j < n; ++j) {
        v_check += qw[static_cast<size_t>(j)] * cur_fc[static_cast<size_t>(fc_at(j, 0))] *
                   (off + half * sign(i, j));
      }
      for (int m = 0; m < b2; ++m) {
        double v_call = 0.0;
        double bet_reach = 0.0;
        for (int j = 0; j < n; ++j) {
          const double w = qw[static_cast<size_t>(j)] *
                           cur_fc[static_cast<size_t>(fc_at(j, 1 + m))];
          bet_reach += w;
          v_call += w * (off + (half + bets2[static_cast<size_t>(m)]) * sign(i, j));
        }
        const double v_fold = bet_reach * (off - half);
        const double pc = cur_fcb[static_cast<size_t>(fcb_at(m, i, 0))];
        const double pf = cur_fcb[static_cast<size_t>(fcb_at(m, i, 1))];
        const double v_node = pc * v_call + pf * v_fold;
        bump(reg_fcb[static_cast<size_t>(fcb_at(m, i, 0))], pw[static_cast<size_t>(i)] * (v_call - v_node));
        bump(reg_fcb[static_cast<size_t>(fcb_at(m, i, 1))], pw[static_cast<size_t>(i)] * (v_fold - v_node));
        v_check += v_node;
      }
      node_value += cur_root[static_cast<size_t>(root_at(i, 0))] * v_check;

      std::vector<double>& v_bet = scratch1;
      for (int k = 0; k < b1; ++k) {
        double v = 0.0;
        for (int j = 0; j < n; ++j) {
          const double call = cur_fb[static_cast<size_t>(fb_at(k, j, 0))];
          const double fold = cur_fb[static_cast<size_t>(fb_at(k, j, 1))];
          v += qw[static_cast<size_t>(j)] *
               (call * (off + (half + bets1[static_cast<size_t>(k)]) * sign(i, j)) +
                fold * (off + half));
        }
        v_bet[static_cast<size_t>(k)] = v;
        node_value += cur_root[static_cast<size_t>(root_at(i, 1 + k))] * v;
      }
      bump(reg_root[static_cast<size_t>(root_at(i, 0))],
           pw[static_cast<size_t>(i)] * (v_check - node_value));
      for (int k = 0; k < b1; ++k) {
        bump(reg_root[static_cast<size_t>(root_at(i, 1 + k))],
             pw[static_cast<size_t>(i)] * (v_bet[static_cast<size_t>(k)] - node_value));
      }
    }
  }

  void update_p2_regrets() {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < b1; ++k) {
        double v_call = 0.0;
        double bet_reach = 0.0;
        for (int i = 0; i < n; ++i) {
          const double w = pw[static_cast<size_t>(i)] *
                           cur_root[static_cast<size_t>(root_at(i, 1 + k))];
          bet_reach += w;
          v_call += w * (off - (half + bets1[static_cast<size_t>(k)]) * sign(i, j));
        }
        const double v_fold = bet_reach * (off - half);
        const double pc = cur_fb[static_cast<size_t>(fb_at(k, j, 0))];
        const double pf = cur_fb[static_cast<size_t>(fb_at(k, j, 1))];
        const double v_node = pc * v_call + pf * v_fold;
        bump(reg_fb[static_cast<size_t>(fb_at(k, j, 0))], qw[static_cast<size_t>(j)] * (v_call - v_node));
        bump(reg_fb[static_cast<size_t>(fb_at(k, j, 1))], qw[static_cast<size_t>(j)] * (v_fold - v_node));
      }

      double v_check = 0.0;
      for (int i = 0; i < n; ++i) {
        v_check += pw[static_cast<size_t>(i)] * cur_root[static_cast<size_t>(root_at(i, 0))] *
                   (off - half * sign(i, j));
      }
      std::vector<double>& v_bet = scratch2;
      double node_value = cur_fc[static_cast<size_t>(fc_at(j, 0))] * v_check;
      for (int m = 0; m < b2; ++m) {
        double v = 0.0;
        for (int i = 0; i < n; ++i) {
          const double reach = pw[static_cast<size_t>(i)] *
                               cur_root[static_cast<size_t>(root_at(i, 0))];
          const double call = cur_fcb[static_cast<size_t>(fcb_at(m, i, 0))];
          const double fold = cur_fcb[static_cast<size_t>(fcb_at(m, i, 1))];
          v += reach * (fold * (off + half) +
                        call * (off - (half + bets2[static_cast<size_t>(m)]) * sign(i, j)));
        }
        v_bet[static_cast<size_t>(m)] = v;
        node_value += cur_fc[static_cast<size_t>(fc_at(j, 1 + m))] * v;
      }
      bump(reg_fc[static_cast<size_t>(fc_at(j, 0))],
           qw[static_cast<size_t>(j)] * (v_check - node_value));
      for (int m = 0; m < b2; ++m) {
        bump(reg_fc[static_cast<size_t>(fc_at(j, 1 + m))],
             qw[static_cast<size_t>(j)] * (v_bet[static_cast<size_t>(m)] - node_value));
      }
    }
  }

  static void normalize_row(const double* sum, std::vector<double>& out, int count) {
    double total = 0.0;
    for (int a = 0; a < count; ++a) total += sum[a];
    out.resize(static_cast<size_t>(count));
    if (total > 0.0) {
      for (int a = 0; a < count; ++a) out[static_cast<size_t>(a)] = sum[a] / total;
    } else {
      // Never-reached infoset: the averaging produced no data, report uniform.
      for (int a = 0; a < count; ++a) out[static_cast<size_t>(a)] = 1.0 / count;
    }
  }

  BehavioralStrategy average(int player) const {
    BehavioralStrategy s;
    s.player = player;
    s.actions.resize(static_cast<size_t>(tree.num_infosets()));
    for (int i = 0; i < n; ++i) {
      const int card = i + 1;
      if (player == 1) {
        normalize_row(&sum_root[static_cast<size_t>(root_at(i, 0))],
                      s.actions[static_cast<size_t>(tree.infoset_id(kRootPoint, card))], 1 + b1);
        for (int m = 0; m < b2; ++m) {
          normalize_row(&sum_fcb[static_cast<size_t>(fcb_at(m, i, 0))],
                        s.actions[static_cast<size_t>(tree.infoset_id(fcb_point(tree, m), card))],
                        2);
        }
      } else {
        for (int k = 0; k < b1; ++k) {
          normalize_row(&sum_fb[static_cast<size_t>(fb_at(k, i, 0))],
                        s.actions[static_cast<size_t>(tree.infoset_id(fb_point(k), card))], 2);
        }
        normalize_row(&sum_fc[static_cast<size_t>(fc_at(i, 0))],
                      s.actions[static_cast<size_t>(tree.infoset_id(fc_point(tree), card))],
                      1 + b2);
      }
    }
    return s;
  }
};

}  // namespace

SolveReport solve(const GameTree& tree, const SolveConfig& config) {
  if (config.max_iterations < 1) {
    throw ValidationError("max_iterations: must be >= 1");
  }
  if (config.check_interval < 1) {
    throw ValidationError("check_interval: must be >= 1");
  }
  const double target = config.target_exploitability > 0.0 ? config.target_exploitability
                                                           : 1e-3 * tree.spec().pot;

  Cfr cfr(tree);
  SolveReport report;
  cfr.match_player(1);
  cfr.match_player(2);

  for (int t = 1; t <= config.max_iterations; ++t) {
    // Alternating updates: player 1 responds to the opponent's latest
    // strategy, then player 2 responds to the refreshed one.
    cfr.update_p1_regrets();
    cfr.match_player(1);
    cfr.update_p2_regrets();
    cfr.match_player(2);
    cfr.accumulate(static_cast<double>(t));

    if (t % config.check_interval == 0 || t == config.max_iterations) {
      BehavioralStrategy avg1 = cfr.average(1);
      BehavioralStrategy avg2 = cfr.average(2);
      const double gap = exploitability(tree, avg1, avg2);
      report.exploitability_trace.push_back(gap);
      report.iterations = t;
      if (gap <= target || t == config.max_iterations) {
        report.p1 = std::move(avg1);
        report.p2 = std::move(avg2);
        report.exploitability = gap;
        report.converged = gap <= target;
        break;
      }
    }
  }

  report.game_value = profile_value(tree, report.p1, report.p2);
  return report;
}

double best_response_value(const GameTree& tree, const BehavioralStrategy& opponent, int player) {
  if (player != 1 && player != 2) throw std::logic_error("best_response_value: player must be 1 or 2");
  if (opponent.player == player) {
    throw std::logic_error("best_response_value: opponent strategy belongs to the responding player");
  }
  opponent.validate(tree);

  const int n = tree.deck_size();
  const int b1 = tree.num_p1_bets();
  const int b2 = tree.num_p2_bets();
  const double half = tree.half_pot();
  const double off = tree.payoff_offset();
  const auto& pw = tree.spec().p.weights;
  const auto& qw = tree.spec().q.weights;
  const auto& bets1 = tree.spec().p1_bets;
  const auto& bets2 = tree.spec().p2_bets;

  double total = 0.0;

  if (player == 1) {
    for (int c1 = 1; c1 <= n; ++c1) {
      double v_check = 0.0;
      for (int c2 = 1; c2 <= n; ++c2) {
        const auto& fc = strategy_row(tree, opponent, fc_point(tree), c2);
        v_check += qw[static_cast<size_t>(c2 - 1)] * fc[0] *
                   (off + half * GameTree::showdown_sign(c1, c2));
      }
      for (int m = 0; m < b2; ++m) {
        double v_call = 0.0;
        double bet_reach = 0.0;
        for (int c2 = 1; c2 <= n; ++c2) {
          const auto& fc = strategy_row(tree, opponent, fc_point(tree), c2);
          const double w = qw[static_cast<size_t>(c2 - 1)] * fc[static_cast<size_t>(1 + m)];
          bet_reach += w;
          v_call += w * (off + (half + bets2[static_cast<size_t>(m)]) *
                                   GameTree::showdown_sign(c1, c2));
        }
        const double v_fold = bet_reach * (off - half);
        v_check += v_fold > v_call ? v_fold : v_call;
      }
      double best = v_check;
      for (int k = 0; k < b1; ++k) {
        double v = 0.0;
        for (int c2 = 1; c2 <= n; ++c2) {
          const auto& fb = strategy_row(tree, opponent, fb_point(k), c2);
          v += qw[static_cast<size_t>(c2 - 1)] *
               (fb[0] * (off + (half + bets1[static_cast<size_t>(k)]) *
                                   GameTree::showdown_sign(c1, c2)) +
                fb[1] * (off + half));
        }
        if (v > best) best = v;
      }
      total += pw[static_cast<size_t>(c1 - 1)] * best;
    }
    return total;
  }

  for (int c2 = 1; c2 <= n; ++c2) {
    double value = 0.0;
    for (int k = 0; k < b1; ++k) {
      double v_call = 0.0;
      double bet_reach = 0.0;
      for (int c1 = 1; c1 <= n; ++c1) {
        const auto& root = strategy_row(tree, opponent, kRootPoint, c1);
        const double w = pw[static_cast<size_t>(c1 - 1)] * root[static_cast<size_t>(1 + k)];
        bet_reach += w;
        v_call += w * (off - (half + bets1[static_cast<size_t>(k)]) *
                                 GameTree::showdown_sign(c1, c2));
      }
      const double v_fold = bet_reach * (off - half);
      value += v_fold > v_call ? v_fold : v_call;
    }
    double v_check = 0.0;
    for (int c1 = 1; c1 <= n; ++c1) {
      const auto& root = strategy_row(tree, opponent, kRootPoint, c1);
      v_check += pw[static_cast<size_t>(c1 - 1)] * root[0] *
                 (off - half * GameTree::showdown_sign(c1, c2));
    }
    double best = v_check;
    for (int m = 0; m < b2; ++m) {
      double v = 0.0;
      for (int c1 = 1; c1 <= n; ++c1) {
        const auto& root = strategy_row(tree, opponent, kRootPoint, c1);
        const auto& fcb = strategy_row(tree, opponent, fcb_point(tree, m), c1);
        v += pw[static_cast<size_t>(c1 - 1)] * root[0] *
             (fcb[1] * (off + half) +
              fcb[0] * (off - (half + bets2[static_cast<size_t>(m)]) *
                                  GameTree::showdown_sign(c1, c2)));
      }
      if (v > best) best = v;
    }
    value += best;
    total += qw[static_cast<size_t>(c2 - 1)] * value;
  }
  return total;
}

double exploitability(const GameTree& tree, const BehavioralStrategy& p1,
                      const BehavioralStrategy& p2) {
  const double br1 = best_response_value(tree, p2, 1);
  const double br2 = best_response_value(tree, p1, 2);
  return 0.5 * (br1 + br2) - tree.payoff_offset();
}

double profile_value(const GameTree& tree, const BehavioralStrategy& p1,
                     const BehavioralStrategy& p2) {
  p1.validate(tree);
  p2.validate(tree);

  const int n = tree.deck_size();
  const int b1 = tree.num_p1_bets();
  const int b2 = tree.num_p2_bets();
  const double half = tree.half_pot();
  const double off = tree.payoff_offset();
  const auto& pw = tree.spec().p.weights;
  const auto& qw = tree.spec().q.weights;
  const auto& bets1 = tree.spec().p1_bets;
  const auto& bets2 = tree.spec().p2_bets;

  double total = 0.0;
  for (int c1 = 1; c1 <= n; ++c1) {
    const auto& root = strategy_row(tree, p1, kRootPoint, c1);
    double v_check = 0.0;
    for (int c2 = 1; c2 <= n; ++c2) {
      const auto& fc = strategy_row(tree, p2, fc_point(tree), c2);
      v_check += qw[static_cast<size_t>(c2 - 1)] * fc[0] *
                 (off + half * GameTree::showdown_sign(c1, c2));
    }
    for (int m = 0; m < b2; ++m) {
      const auto& fcb = strategy_row(tree, p1, fcb_point(tree, m), c1);
      double v_call = 0.0;
      double bet_reach = 0.0;
      for (int c2 = 1; c2 <= n; ++c2) {
        const auto& fc = strategy_row(tree, p2, fc_point(tree), c2);
        const double w = qw[static_cast<size_t>(c2 - 1)] * fc[static_cast<size_t>(1 + m)];
        bet_reach += w;
        v_call += w * (off + (half + bets2[static_cast<size_t>(m)]) *
                                 GameTree::showdown_sign(c1, c2));
      }
      v_check += fcb[0] * v_call + fcb[1] * bet_reach * (off - half);
    }
    double value = root[0] * v_check;
    for (int k = 0; k < b1; ++k) {
      double v = 0.0;
      for (int c2 = 1; c2 <= n; ++c2) {
        const auto& fb = strategy_row(tree, p2, fb_point(k), c2);
        v += qw[static_cast<size_t>(c2 - 1)] *
             (fb[0] * (off + (half + bets1[static_cast<size_t>(k)]) *
                                 GameTree::showdown_sign(c1, c2)) +
              fb[1] * (off + half));
      }
      value += root[static_cast<size_t>(1 + k)] * v;
    }
    total += pw[static_cast<size_t>(c1 - 1)] * value;
  }
  return total;
}

double p1_bet_mass(const GameTree& tree, const BehavioralStrategy& p1) {
  p1.validate(tree);
  const int n = tree.deck_size();
  const int b1 = tree.num_p1_bets();
  const auto& pw = tree.spec().p.weights;
  double mass = 0.0;
  for (int c1 = 1; c1 <= n; ++c1) {
    const auto& root = strategy_row(tree, p1, kRootPoint, c1);
    for (int k = 0; k < b1; ++k) mass += pw[static_cast<size_t>(c1 - 1)] * root[static_cast<size_t>(1 + k)];
  }
  return mass;
}

std::string solve_report_to_json(const GameTree& tree, const SolveReport& report) {
  nlohmann::json j;
  j["exploitability"] = report.exploitability;
  j["game_value"] = report.game_value;
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  j["exploitability_trace"] = report.exploitability_trace;

  nlohmann::json actions = nlohmann::json::object();
  for (int d = 0; d < tree.num_decision_points(); ++d) {
    const DecisionPoint& dp = tree.decision_points()[static_cast<size_t>(d)];
    nlohmann::json labels = nlohmann::json::array();
    for (int a = 0; a < dp.num_actions; ++a) labels.push_back(tree.action_label(d, a));
    actions["P" + std::to_string(dp.player) + "/" + tree.decision_point_name(d)] = labels;
  }
  j["actions"] = actions;

  nlohmann::json strategies = nlohmann::json::object();
  for (int id = 0; id < tree.num_infosets(); ++id) {
    const BehavioralStrategy& s = tree.infoset_player(id) == 1 ? report.p1 : report.p2;
    strategies[tree.infoset_name(id)] = s.actions[static_cast<size_t>(id)];
  }
  j["strategies"] = strategies;
  return j.dump(2) + "\n";
}

}  // namespace onestreet
