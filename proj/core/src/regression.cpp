#include "onestreet/regression.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "onestreet/errors.hpp"
#include "onestreet/rng.hpp"

namespace onestreet {

double feature_value(Feature f, double mdf, double ra) {
  switch (f) {
    case Feature::Constant:
      return 1.0;
    case Feature::Mdf:
      return mdf;
    case Feature::Ra:
      return ra;
    case Feature::RaMdf:
      return ra * mdf;
    case Feature::Ra2:
      return ra * ra;
    case Feature::Mdf2:
      return mdf * mdf;
  }
  return 0.0;
}

std::string feature_name(Feature f) {
  switch (f) {
    case Feature::Constant:
      return "1";
    case Feature::Mdf:
      return "MDF";
    case Feature::Ra:
      return "RA";
    case Feature::RaMdf:
      return "RA*MDF";
    case Feature::Ra2:
      return "RA^2";
    case Feature::Mdf2:
      return "MDF^2";
  }
  return "?";
}

std::vector<RegressionSample> to_samples(const std::vector<DatasetRow>& rows) {
  std::vector<RegressionSample> samples;
  samples.reserve(rows.size());
  for (const DatasetRow& row : rows) {
    samples.push_back({row.mdf, row.ra, row.odf});
  }
  return samples;
}

namespace {

double linear_form(const FittedModel& model, double mdf, double ra) {
  double value = 0.0;
  for (size_t f = 0; f < model.spec.features.size(); ++f) {
    value += model.coefficients[f] * feature_value(model.spec.features[f], mdf, ra);
  }
  return value;
}

std::string fmt_coeff(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", value);
  return buf;
}

}  // namespace

std::string FittedModel::formula() const {
  std::string base;
  bool first = true;
  for (size_t f = 0; f < spec.features.size(); ++f) {
    const Feature feature = spec.features[f];
    const double c = coefficients[f];
    const double magnitude = std::abs(c);
    std::string term;
    if (feature == Feature::Constant) {
      term = fmt_coeff(magnitude);
    } else if (magnitude == 1.0) {
      term = feature_name(feature);
    } else {
      term = fmt_coeff(magnitude) + "*" + feature_name(feature);
    }
    if (first) {
      base = (c < 0.0 ? "-" : "") + term;
      first = false;
    } else {
      base += (c < 0.0 ? " - " : " + ") + term;
    }
  }
  if (base.empty()) base = "0";

  switch (spec.transform) {
    case Transform::None:
      return base;
    case Transform::MinTruncate:
      return "min(MDF, " + base + ")";
    case Transform::PiecewiseRa: {
      const std::string theta = fmt_coeff(spec.piecewise_threshold);
      return "1 - RA, RA > " + theta + "; min(MDF, " + base + "), RA <= " + theta;
    }
  }
  return base;
}

FittedModel fit_ols(std::span<const RegressionSample> rows, const ModelSpec& spec) {
  if (!spec.fitted) throw ValidationError(spec.name + ": fit_ols requires a fitted model spec");
  if (rows.empty()) throw ValidationError(spec.name + ": no rows to fit");
  const int d = static_cast<int>(spec.features.size());
  if (d == 0) throw ValidationError(spec.name + ": empty feature set");

  // Normal equations with the Gram matrix scaled by 1/m.
  std::vector<double> gram(static_cast<size_t>(d * d), 0.0);
  std::vector<double> rhs(static_cast<size_t>(d), 0.0);
  std::vector<double> x(static_cast<size_t>(d));
  const double inv_m = 1.0 / static_cast<double>(rows.size());
  for (const RegressionSample& row : rows) {
    for (int a = 0; a < d; ++a) x[static_cast<size_t>(a)] = feature_value(spec.features[static_cast<size_t>(a)], row.mdf, row.ra);
    for (int a = 0; a < d; ++a) {
      rhs[static_cast<size_t>(a)] += x[static_cast<size_t>(a)] * row.odf * inv_m;
      for (int b = a; b < d; ++b) {
        gram[static_cast<size_t>(a * d + b)] += x[static_cast<size_t>(a)] * x[static_cast<size_t>(b)] * inv_m;
      }
    }
  }
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < a; ++b) gram[static_cast<size_t>(a * d + b)] = gram[static_cast<size_t>(b * d + a)];
  }

  double scale = 0.0;
  for (int a = 0; a < d; ++a) scale = std::max(scale, gram[static_cast<size_t>(a * d + a)]);
  if (scale <= 0.0) {
    throw DegeneracyError(spec.name + ": all feature columns are zero");
  }

  // Cholesky factorization; a vanishing pivot means collinear columns.
  std::vector<double> chol(gram);
  for (int j = 0; j < d; ++j) {
    double pivot = chol[static_cast<size_t>(j * d + j)];
    for (int k = 0; k < j; ++k) {
      const double l = chol[static_cast<size_t>(j * d + k)];
      pivot -= l * l;
    }
    if (pivot <= 1e-12 * scale) {
      throw DegeneracyError(spec.name + ": design matrix is rank-deficient (feature '" +
                            feature_name(spec.features[static_cast<size_t>(j)]) +
                            "' is collinear with the others on this dataset); try the "
                            "constant-only model");
    }
    const double root = std::sqrt(pivot);
    chol[static_cast<size_t>(j * d + j)] = root;
    for (int i = j + 1; i < d; ++i) {
      double v = chol[static_cast<size_t>(i * d + j)];
      for (int k = 0; k < j; ++k) {
        v -= chol[static_cast<size_t>(i * d + k)] * chol[static_cast<size_t>(j * d + k)];
      }
      chol[static_cast<size_t>(i * d + j)] = v / root;
    }
  }

  // Solve L y = rhs, then L^T beta = y.
  std::vector<double> beta(rhs);
  for (int i = 0; i < d; ++i) {
    double v = beta[static_cast<size_t>(i)];
    for (int k = 0; k < i; ++k) v -= chol[static_cast<size_t>(i * d + k)] * beta[static_cast<size_t>(k)];
    beta[static_cast<size_t>(i)] = v / chol[static_cast<size_t>(i * d + i)];
  }
  for (int i = d - 1; i >= 0; --i) {
    double v = beta[static_cast<size_t>(i)];
    for (int k = i + 1; k < d; ++k) v -= chol[static_cast<size_t>(k * d + i)] * beta[static_cast<size_t>(k)];
    beta[static_cast<size_t>(i)] = v / chol[static_cast<size_t>(i * d + i)];
  }

  FittedModel model;
  model.spec = spec;
  model.coefficients = std::move(beta);
  model.train_mse = mse(model, rows);
  model.cv_mse = model.train_mse;
  return model;
}

FittedModel make_fixed(const ModelSpec& spec) {
  if (spec.fitted) throw ValidationError(spec.name + ": make_fixed requires fixed coefficients");
  if (spec.fixed_coefficients.size() != spec.features.size()) {
    throw ValidationError(spec.name + ": fixed coefficients do not match the feature list");
  }
  FittedModel model;
  model.spec = spec;
  model.coefficients = spec.fixed_coefficients;
  return model;
}

double predict(const FittedModel& model, double mdf, double ra) {
  double value = linear_form(model, mdf, ra);
  switch (model.spec.transform) {
    case Transform::None:
      break;
    case Transform::MinTruncate:
      value = std::min(mdf, value);
      break;
    case Transform::PiecewiseRa:
      value = ra > model.spec.piecewise_threshold ? 1.0 - ra : std::min(mdf, value);
      break;
  }
  return std::clamp(value, 0.0, 1.0);
}

double mse(const FittedModel& model, std::span<const RegressionSample> rows) {
  if (rows.empty()) throw ValidationError(model.spec.name + ": no rows to score");
  double total = 0.0;
  for (const RegressionSample& row : rows) {
    const double err = predict(model, row.mdf, row.ra) - row.odf;
    total += err * err;
  }
  return total / static_cast<double>(rows.size());
}

double kfold_cv(std::span<const RegressionSample> rows, const ModelSpec& spec, int k,
                std::uint64_t seed) {
  if (k < 2) throw ValidationError(spec.name + ": k must be >= 2");
  const long m = static_cast<long>(rows.size());
  if (m < k) {
    throw ValidationError(spec.name + ": " + std::to_string(m) + " rows cannot fill " +
                          std::to_string(k) + " folds");
  }

  if (!spec.fitted) {
    // No fitting happens, so held-out scoring equals scoring everything once.
    return mse(make_fixed(spec), rows);
  }

  // Deterministic Fisher-Yates shuffle, independent of the platform.
  std::vector<long> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0L);
  SplitMix64 rng(seed);
  for (long i = m - 1; i > 0; --i) {
    const long j = static_cast<long>(bounded(rng, static_cast<std::uint64_t>(i + 1)));
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
  }

  double total = 0.0;
  long start = 0;
  for (int fold = 0; fold < k; ++fold) {
    const long size = m / k + (fold < static_cast<int>(m % k) ? 1 : 0);
    const long end = start + size;

    std::vector<RegressionSample> train;
    train.reserve(static_cast<size_t>(m - size));
    for (long i = 0; i < m; ++i) {
      if (i >= start && i < end) continue;
      train.push_back(rows[static_cast<size_t>(order[static_cast<size_t>(i)])]);
    }
    const FittedModel model = fit_ols(train, spec);

    double fold_total = 0.0;
    for (long i = start; i < end; ++i) {
      const RegressionSample& row = rows[static_cast<size_t>(order[static_cast<size_t>(i)])];
      const double err = predict(model, row.mdf, row.ra) - row.odf;
      fold_total += err * err;
    }
    total += fold_total / static_cast<double>(size);
    start = end;
  }
  return total / static_cast<double>(k);
}

namespace {

ModelSpec fitted_spec(std::string name, std::vector<Feature> features,
                      Transform transform = Transform::None) {
  ModelSpec spec;
  spec.name = std::move(name);
  spec.features = std::move(features);
  spec.fitted = true;
  spec.transform = transform;
  return spec;
}

ModelSpec fixed_spec(std::string name, std::vector<Feature> features,
                     std::vector<double> coefficients, Transform transform = Transform::None) {
  ModelSpec spec;
  spec.name = std::move(name);
  spec.features = std::move(features);
  spec.fitted = false;
  spec.fixed_coefficients = std::move(coefficients);
  spec.transform = transform;
  return spec;
}

std::vector<ModelSpec> zoo_table1(double fixed_mdf) {
  return {
      fixed_spec("Fixed MDF", {Feature::Constant}, {fixed_mdf}),
      fitted_spec("Linear MDF", {Feature::Constant}),
      fitted_spec("Linear RA", {Feature::Ra, Feature::Constant}),
      fitted_spec("Quadratic RA", {Feature::Ra2, Feature::Ra, Feature::Constant}),
  };
}

std::vector<ModelSpec> zoo_table2() {
  const std::vector<Feature> mdf_ra = {Feature::Mdf, Feature::Ra, Feature::Constant};
  const std::vector<double> simplified = {1.0, -0.5, 0.25};
  return {
      fixed_spec("Fixed MDF", {Feature::Mdf}, {1.0}),
      fitted_spec("Linear MDF", {Feature::Mdf, Feature::Constant}),
      fitted_spec("Linear MDF with RA", mdf_ra),
      fitted_spec("Linear MDF with RA*MDF", {Feature::Mdf, Feature::RaMdf, Feature::Constant}),
      fitted_spec("Linear MDF with RA and RA*MDF",
                  {Feature::Mdf, Feature::Ra, Feature::RaMdf, Feature::Constant}),
      fixed_spec("Simplified Linear MDF with RA", mdf_ra, simplified),
      fitted_spec("Min Linear MDF with RA", mdf_ra, Transform::MinTruncate),
      fixed_spec("Simplified Min Linear MDF with RA", mdf_ra, simplified,
                 Transform::MinTruncate),
      fixed_spec("Piecewise Simp. Min Linear MDF w. RA", mdf_ra, simplified,
                 Transform::PiecewiseRa),
      fitted_spec("Quadratic MDF with RA and MDF*RA",
                  {Feature::Ra2, Feature::RaMdf, Feature::Mdf2, Feature::Ra, Feature::Mdf,
                   Feature::Constant}),
  };
}

}  // namespace

ZooReport run_model_zoo(std::span<const RegressionSample> rows, int table, std::uint64_t cv_seed) {
  if (rows.empty()) throw ValidationError("model zoo: no rows");
  if (table != 1 && table != 2) throw ValidationError("table: must be 1 or 2");

  std::vector<ModelSpec> specs;
  if (table == 1) {
    const double first = rows.front().mdf;
    for (const RegressionSample& row : rows) {
      if (std::abs(row.mdf - first) > 1e-9) {
        throw ValidationError(
            "table 1 expects a single bet size; this dataset has several (use table 2)");
      }
    }
    specs = zoo_table1(first);
  } else {
    specs = zoo_table2();
  }

  ZooReport report;
  report.table = table;
  report.cv_seed = cv_seed;
  report.rows = rows.size();
  for (const ModelSpec& spec : specs) {
    try {
      FittedModel model = spec.fitted ? fit_ols(rows, spec) : make_fixed(spec);
      if (!spec.fitted) model.train_mse = mse(model, rows);
      model.cv_mse = kfold_cv(rows, spec, 10, cv_seed);
      report.entries.push_back({spec.name, model.formula(), model.train_mse, model.cv_mse});
    } catch (const DegeneracyError& e) {
      throw DegeneracyError(spec.name + ": " + e.what());
    }
  }
  return report;
}

std::string render_text(const ZooReport& report) {
  size_t name_width = 8;
  size_t formula_width = 7;
  for (const ZooEntry& entry : report.entries) {
    name_width = std::max(name_width, entry.name.size());
    formula_width = std::max(formula_width, entry.formula.size());
  }

  std::ostringstream os;
  os << "model zoo: table " << report.table << ", " << report.rows << " rows, 10-fold cv, seed "
     << report.cv_seed << "\n";
  char buf[64];
  os << std::string(name_width, '-') << "  " << std::string(formula_width, '-')
     << "  ---------  ---------\n";
  for (const ZooEntry& entry : report.entries) {
    os << entry.name << std::string(name_width - entry.name.size(), ' ') << "  ";
    os << entry.formula << std::string(formula_width - entry.formula.size(), ' ') << "  ";
    std::snprintf(buf, sizeof(buf), "%9.6f  %9.6f", entry.train_mse, entry.cv_mse);
    os << buf << "\n";
  }
  return os.str();
}

std::string render_csv(const ZooReport& report) {
  std::ostringstream os;
  os << "model,formula,train_mse,cv_mse\n";
  char buf[64];
  for (const ZooEntry& entry : report.entries) {
    os << '"' << entry.name << "\",\"" << entry.formula << "\",";
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f", entry.train_mse, entry.cv_mse);
    os << buf << "\n";
  }
  return os.str();
}

double rule_100_50_25(double mdf, double ra) {
  if (!(mdf > 0.0) || !(mdf < 1.0)) throw ValidationError("mdf: must lie in (0, 1)");
  if (!(ra >= 0.0) || !(ra <= 1.0)) throw ValidationError("ra: must lie in [0, 1]");
  return std::min(mdf, mdf - 0.5 * ra + 0.25);
}

double rule_signed(double mdf, double ra_signed) {
  if (!(mdf > 0.0) || !(mdf < 1.0)) throw ValidationError("mdf: must lie in (0, 1)");
  if (!(ra_signed >= -1.0) || !(ra_signed <= 1.0)) {
    throw ValidationError("ra: signed range advantage must lie in [-1, 1]");
  }
  return std::min(mdf, mdf - 0.25 * ra_signed);
}

}  // namespace onestreet
