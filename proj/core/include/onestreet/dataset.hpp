#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "onestreet/game.hpp"
#include "onestreet/rng.hpp"
#include "onestreet/solver.hpp"

namespace onestreet {

// One solved game. `bet_size` is a fraction of the pot, so mdf always equals
// 1 / (1 + bet_size). An exploitability above the solve target marks an
// under-converged row; rows with p1_bet_mass near zero are the games whose
// facing-a-bet strategy was never exercised on-path.
struct DatasetRow {
  long game_id = 0;
  double bet_size = 1.0;
  double mdf = 0.5;
  double ra = 0.5;
  double odf = 0.5;
  double exploitability = 0.0;
  double p1_bet_mass = 0.0;
  std::vector<double> p_weights;
  std::vector<double> q_weights;
};

struct GenConfig {
  int games_per_bet_size = 5000;
  std::vector<double> bet_sizes = {0.5, 0.75, 1.0};  // fractions of the pot
  int deck_size = 10;
  double pot = 1.0;
  double stack = 1.0;
  std::uint64_t master_seed = 1;
  SolveConfig solver;
  int workers = 0;                   // 0 = hardware concurrency
  bool reuse_distributions = false;  // share the (p, q) pool across bet sizes

  void validate() const;
};

// Uniform sample from the (n-1)-simplex: n unit-exponential draws, normalized.
CardDistribution sample_simplex(int n, SplitMix64& rng);

// Solves games_per_bet_size fresh games per bet size. Row content depends
// only on (master_seed, bet index, game index), never on worker count or
// completion order; rows come back sorted by game_id. `progress`, when set,
// is called with (rows done, total rows) as rows finish.
std::vector<DatasetRow> generate_dataset(const GenConfig& config);
std::vector<DatasetRow> generate_dataset(const GenConfig& config,
                                         const std::function<void(long, long)>& progress);

// Exact CSV header for a deck of n cards:
// game_id,bet_size,mdf,ra,odf,exploitability,p1_bet_mass,p_1,...,p_n,q_1,...,q_n
std::string dataset_header(int deck_size);

// Values carry 12 significant digits; the file has no timestamps or other
// metadata so identical configs produce identical bytes. The file is staged
// with a .tmp suffix and renamed, and removed again on failure.
void write_csv(const std::vector<DatasetRow>& rows, const std::string& path);

// Throws ParseError (with the offending line) on malformed content, IoError
// if the file cannot be opened.
std::vector<DatasetRow> read_csv(const std::string& path);

}  // namespace onestreet
