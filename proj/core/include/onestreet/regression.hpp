#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "onestreet/dataset.hpp"

namespace onestreet {

// The design matrix has linearly dependent columns for this feature set
// (e.g. MDF together with a constant on single-bet-size data).
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Feature { Constant, Mdf, Ra, RaMdf, Ra2, Mdf2 };

double feature_value(Feature f, double mdf, double ra);
std::string feature_name(Feature f);

enum class Transform {
  None,
  MinTruncate,  // min(MDF, linear form)
  PiecewiseRa,  // 1 - RA above the RA threshold, min(MDF, linear form) below
};

struct RegressionSample {
  double mdf = 0.5;
  double ra = 0.5;
  double odf = 0.5;  // regression target
};

std::vector<RegressionSample> to_samples(const std::vector<DatasetRow>& rows);

struct ModelSpec {
  std::string name;
  std::vector<Feature> features;  // also the formula print order
  bool fitted = true;
  std::vector<double> fixed_coefficients;  // parallel to features when !fitted
  Transform transform = Transform::None;
  double piecewise_threshold = 0.75;
};

struct FittedModel {
  ModelSpec spec;
  std::vector<double> coefficients;  // parallel to spec.features
  double train_mse = 0.0;
  double cv_mse = 0.0;

  std::string formula() const;
};

// Ordinary least squares on the untransformed linear form, solved in closed
// form via the normal equations. Transforms apply at prediction time only.
// Throws DegeneracyError on a rank-deficient design.
FittedModel fit_ols(std::span<const RegressionSample> rows, const ModelSpec& spec);

// Wraps a fixed-coefficient spec without fitting anything.
FittedModel make_fixed(const ModelSpec& spec);

// Linear form -> transform -> clamp to [0, 1].
double predict(const FittedModel& model, double mdf, double ra);

// Mean of (predict - odf)^2 over the rows.
double mse(const FittedModel& model, std::span<const RegressionSample> rows);

// Deterministic k-fold cross validation: rows are shuffled by `seed`, split
// into k near-equal folds, each scored by a model fitted on the others;
// returns the mean of the fold MSEs. Fixed-coefficient specs skip fitting
// and score directly.
double kfold_cv(std::span<const RegressionSample> rows, const ModelSpec& spec, int k,
                std::uint64_t seed);

struct ZooEntry {
  std::string name;
  std::string formula;
  double train_mse = 0.0;
  double cv_mse = 0.0;
};

struct ZooReport {
  int table = 1;  // 1 = single bet size, 2 = multi size
  std::uint64_t cv_seed = 0;
  std::size_t rows = 0;
  std::vector<ZooEntry> entries;
};

// Fits and scores the full model ladder: 4 models on single-bet-size data
// (table 1), 10 on multi-size data (table 2), in fixed order.
ZooReport run_model_zoo(std::span<const RegressionSample> rows, int table, std::uint64_t cv_seed);

std::string render_text(const ZooReport& report);
std::string render_csv(const ZooReport& report);

// The 100-50-25 MIN rule: call frequency min(mdf, mdf - 0.5 * ra + 0.25)
// for a range advantage expressed on [0, 1].
double rule_100_50_25(double mdf, double ra);

// Same rule with range advantage on [-1, 1]: min(mdf, mdf - 0.25 * ra).
double rule_signed(double mdf, double ra_signed);

}  // namespace onestreet
