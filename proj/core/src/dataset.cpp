#include "onestreet/dataset.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "onestreet/errors.hpp"
#include "onestreet/metrics.hpp"

namespace onestreet {

void GenConfig::validate() const {
  if (games_per_bet_size < 1) throw ValidationError("games: must be >= 1");
  if (deck_size < 2) throw ValidationError("deck: must be >= 2");
  if (!(pot > 0.0)) throw ValidationError("pot: must be > 0");
  if (!(stack > 0.0)) throw ValidationError("stack: must be > 0");
  if (bet_sizes.empty()) throw ValidationError("bet_sizes: must not be empty");
  for (size_t i = 0; i < bet_sizes.size(); ++i) {
    const double chips = bet_sizes[i] * pot;
    if (!(bet_sizes[i] > 0.0) || !std::isfinite(bet_sizes[i])) {
      throw ValidationError("bet_sizes[" + std::to_string(i) + "]: must be > 0");
    }
    if (chips > stack) {
      std::ostringstream os;
      os << "bet_sizes[" << i << "]: bet of " << chips << " chips exceeds stack " << stack;
      throw ValidationError(os.str());
    }
  }
  if (workers < 0) throw ValidationError("workers: must be >= 0");
}

CardDistribution sample_simplex(int n, SplitMix64& rng) {
  if (n < 2) throw ValidationError("n: deck size must be >= 2");
  CardDistribution d;
  d.weights.resize(static_cast<size_t>(n));
  for (;;) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double e = rng.exponential();
      d.weights[static_cast<size_t>(i)] = e;
      sum += e;
    }
    if (sum > 0.0) {
      for (int i = 0; i < n; ++i) d.weights[static_cast<size_t>(i)] /= sum;
      return d;
    }
    // All draws were exactly zero; redraw (astronomically unlikely).
  }
}

namespace {

DatasetRow make_row(const GenConfig& config, int bet_index, long game_index) {
  const std::uint64_t stream = config.reuse_distributions ? 0u
                                                          : static_cast<std::uint64_t>(bet_index);
  SplitMix64 rng(derive_seed(config.master_seed, stream, static_cast<std::uint64_t>(game_index)));

  GameSpec spec;
  spec.deck_size = config.deck_size;
  spec.p = sample_simplex(config.deck_size, rng);
  spec.q = sample_simplex(config.deck_size, rng);
  spec.pot = config.pot;
  spec.stack = config.stack;
  const double bet_chips = config.bet_sizes[static_cast<size_t>(bet_index)] * config.pot;
  spec.p1_bets = {bet_chips};
  spec.p2_bets = {bet_chips};

  const GameTree tree = build_game(spec);
  const SolveReport report = solve(tree, config.solver);

  DatasetRow row;
  row.game_id = static_cast<long>(bet_index) * config.games_per_bet_size + game_index;
  row.bet_size = config.bet_sizes[static_cast<size_t>(bet_index)];
  row.mdf = mdf(config.pot, bet_chips);
  row.ra = range_advantage(spec.p, spec.q);
  row.odf = odf(tree, spec.q, report.p2, 0);
  row.exploitability = report.exploitability;
  row.p1_bet_mass = p1_bet_mass(tree, report.p1);
  row.p_weights = spec.p.weights;
  row.q_weights = spec.q.weights;
  return row;
}

}  // namespace

std::vector<DatasetRow> generate_dataset(const GenConfig& config) {
  return generate_dataset(config, {});
}

std::vector<DatasetRow> generate_dataset(const GenConfig& config,
                                         const std::function<void(long, long)>& progress) {
  config.validate();

  const long games = config.games_per_bet_size;
  const long total = static_cast<long>(config.bet_sizes.size()) * games;
  std::vector<DatasetRow> rows(static_cast<size_t>(total));

  int workers = config.workers > 0 ? config.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (static_cast<long>(workers) > total) workers = static_cast<int>(total);

  std::atomic<long> next{0};
  std::atomic<long> done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&]() {
    for (;;) {
      const long idx = next.fetch_add(1);
      if (idx >= total) return;
      try {
        rows[static_cast<size_t>(idx)] =
            make_row(config, static_cast<int>(idx / games), idx % games);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      const long finished = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(finished, total);
      }
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {

std::string fmt12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  for (;;) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_double(const std::string& field, const char* column, long line) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size() || !std::isfinite(v)) {
    throw ParseError(std::string(column) + ": not a number: '" + field + "'", line);
  }
  return v;
}

}  // namespace

std::string dataset_header(int deck_size) {
  std::string header = "game_id,bet_size,mdf,ra,odf,exploitability,p1_bet_mass";
  for (int i = 1; i <= deck_size; ++i) header += ",p_" + std::to_string(i);
  for (int i = 1; i <= deck_size; ++i) header += ",q_" + std::to_string(i);
  return header;
}

void write_csv(const std::vector<DatasetRow>& rows, const std::string& path) {
  int n = 0;
  if (!rows.empty()) {
    n = static_cast<int>(rows.front().p_weights.size());
    for (const DatasetRow& row : rows) {
      if (static_cast<int>(row.p_weights.size()) != n ||
          static_cast<int>(row.q_weights.size()) != n) {
        throw ValidationError("rows: mixed deck sizes cannot share a file");
      }
    }
  }

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out << dataset_header(n > 0 ? n : 10) << "\n";
    for (const DatasetRow& row : rows) {
      out << row.game_id << ',' << fmt12(row.bet_size) << ',' << fmt12(row.mdf) << ','
          << fmt12(row.ra) << ',' << fmt12(row.odf) << ',' << fmt12(row.exploitability) << ','
          << fmt12(row.p1_bet_mass);
      for (double w : row.p_weights) out << ',' << fmt12(w);
      for (double w : row.q_weights) out << ',' << fmt12(w);
      out << "\n";
    }
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("failed while writing " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename " + tmp + " to " + path);
  }
}

std::vector<DatasetRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> head = split_line(line);
  if (head.size() < 9 || (head.size() - 7) % 2 != 0) {
    throw ParseError("header has " + std::to_string(head.size()) + " columns", 1);
  }
  const int n = static_cast<int>((head.size() - 7) / 2);
  if (line != dataset_header(n)) {
    throw ParseError("header does not match the dataset schema", 1);
  }

  std::vector<DatasetRow> rows;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const std::vector<std::string> f = split_line(line);
    if (static_cast<int>(f.size()) != 7 + 2 * n) {
      throw ParseError("expected " + std::to_string(7 + 2 * n) + " fields, got " +
                           std::to_string(f.size()),
                       lineno);
    }

    DatasetRow row;
    row.game_id = static_cast<long>(parse_double(f[0], "game_id", lineno));
    row.bet_size = parse_double(f[1], "bet_size", lineno);
    row.mdf = parse_double(f[2], "mdf", lineno);
    row.ra = parse_double(f[3], "ra", lineno);
    row.odf = parse_double(f[4], "odf", lineno);
    row.exploitability = parse_double(f[5], "exploitability", lineno);
    row.p1_bet_mass = parse_double(f[6], "p1_bet_mass", lineno);
    row.p_weights.resize(static_cast<size_t>(n));
    row.q_weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      row.p_weights[static_cast<size_t>(i)] = parse_double(f[static_cast<size_t>(7 + i)], "p", lineno);
      row.q_weights[static_cast<size_t>(i)] =
          parse_double(f[static_cast<size_t>(7 + n + i)], "q", lineno);
    }

    if (row.game_id < 0) throw ParseError("game_id must be >= 0", lineno);
    if (!(row.bet_size > 0.0)) throw ParseError("bet_size must be > 0", lineno);
    if (std::abs(row.mdf - 1.0 / (1.0 + row.bet_size)) > 1e-9) {
      throw ParseError("mdf is inconsistent with bet_size", lineno);
    }
    for (const char* name : {"ra", "odf", "p1_bet_mass"}) {
      const double v = name[0] == 'r' ? row.ra : (name[0] == 'o' ? row.odf : row.p1_bet_mass);
      if (v < -1e-9 || v > 1.0 + 1e-9) {
        throw ParseError(std::string(name) + " outside [0, 1]", lineno);
      }
    }
    if (row.exploitability < -1e-9) throw ParseError("exploitability must be >= 0", lineno);
    for (const auto* weights : {&row.p_weights, &row.q_weights}) {
      double sum = 0.0;
      for (double w : *weights) {
        if (w < 0.0) throw ParseError("negative deal weight", lineno);
        sum += w;
      }
      if (std::abs(sum - 1.0) > 1e-6) {
        std::ostringstream os;
        os << (weights == &row.p_weights ? "p" : "q") << " weights sum to " << sum;
        throw ParseError(os.str(), lineno);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace onestreet
