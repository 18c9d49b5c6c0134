#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Feedforward surrogate for the modified k-value: 6 inputs, one log-sigmoid
// hidden layer, linear output. Trained with Levenberg-Marquardt on the
// factorial simulation grid.

namespace pavek {

inline constexpr int kAnnInputs = 6;

/// Input grid of the training dataset: levels per input in SI-ish engineering
/// units (thickness m, moduli Pa, bond ratio).
struct DatasetGrid {
  std::vector<double> pcc_thickness{0.178, 0.216, 0.254, 0.292, 0.330};
  std::vector<double> base_thickness{0.089, 0.127, 0.1651, 0.2032, 0.254};
  std::vector<double> pcc_modulus{20784e6, 31026e6, 41368e6, 51710e6, 62052e6, 75842e6};
  std::vector<double> base_modulus{34.5e6, 690e6, 1724e6, 3447e6, 5171e6, 6895e6};
  std::vector<double> subgrade_modulus{34.5e6, 69e6, 138e6, 276e6, 414e6, 551e6};
  std::vector<double> bonding{0.0, 0.25, 0.5, 0.75, 1.0};

  std::size_t size() const {
    return pcc_thickness.size() * base_thickness.size() * pcc_modulus.size() *
           base_modulus.size() * subgrade_modulus.size() * bonding.size();
  }

  /// Evenly spaced sub-grid with `levels` levels per input (endpoints kept).
  DatasetGrid reduced(int levels) const;
};

struct DatasetRow {
  std::array<double, kAnnInputs> x;  // raw inputs
  double k_pci;                      // target
  std::string provenance;            // grid coordinates "i0-i1-i2-i3-i4-i5"
};

struct Dataset {
  std::vector<DatasetRow> rows;
};

/// Per-feature affine map onto [-1, 1]; the output k is normalized the same
/// way.
struct NormalizationSpec {
  std::array<double, kAnnInputs> x_min, x_max;
  double y_min, y_max;

  static NormalizationSpec from_grid_and_targets(const DatasetGrid& grid, double k_min,
                                                 double k_max);
  double norm_x(int i, double v) const { return 2.0 * (v - x_min[i]) / (x_max[i] - x_min[i]) - 1.0; }
  double norm_y(double v) const { return 2.0 * (v - y_min) / (y_max - y_min) - 1.0; }
  double denorm_y(double v) const { return (v + 1.0) / 2.0 * (y_max - y_min) + y_min; }
};

struct AnnModel {
  int hidden = 20;
  double steepness = 1.0;  // phi in the sigmoid
  NormalizationSpec norm;
  std::vector<double> hidden_weights;  // hidden x 6, row-major
  std::vector<double> hidden_biases;   // hidden
  std::vector<double> output_weights;  // hidden
  double output_bias = 0.0;
  // training metadata
  std::uint64_t seed = 0;
  int epochs = 0;
  double train_rmse = 0.0, val_rmse = 0.0;
  std::string target_unit = "pci";

  std::size_t parameter_count() const { return hidden_weights.size() + hidden_biases.size() +
                                               output_weights.size() + 1; }
  void validate() const;
};

/// Extrapolation guard: fraction beyond the normalization range tolerated
/// before forward() flags the input.
inline constexpr double kExtrapolationGuard = 0.10;

struct Prediction {
  double k_pci;
  bool extrapolated;  // input outside the guarded grid range
};

Prediction ann_forward(const AnnModel& model, const std::array<double, kAnnInputs>& x);

struct SplitLabels {
  std::vector<bool> is_validation;  // one flag per dataset row
  std::size_t train_count = 0, val_count = 0;
};

/// Seeded uniform 4:1 split; validation size = round(n/5).
SplitLabels split_dataset(const Dataset& data, std::uint64_t seed);

struct EpochStats {
  int epoch;
  double lambda;
  double train_rmse_pci;
  double val_rmse_pci;
};

struct TrainOptions {
  int hidden = 20;
  std::uint64_t seed = 1;
  int max_epochs = 400;
  double gradient_tol = 1e-7;
  double lambda0 = 1e-3;
  double lambda_max = 1e10;
  int val_rise_limit = 6;  // consecutive validation-RMSE rises before stop
};

struct TrainResult {
  AnnModel model;
  std::vector<EpochStats> history;
  std::string stop_reason;
};

/// Levenberg-Marquardt training of the 6-H-1 network; analytic Jacobian via
/// reverse accumulation, damping x10 on reject, /10 on accept.
TrainResult train_lm(const Dataset& data, const SplitLabels& split, const TrainOptions& opt = {});

struct Metrics {
  double rmse_pci;
  double r2;
};

/// RMSE (denormalized, pci) and R^2 over the given rows (all rows when
/// `validation_only` is nullopt, else the matching split side).
Metrics evaluate(const AnnModel& model, const Dataset& data);

/// Full factorial dataset: target k for every grid point via the supplied
/// forward map (inputs in grid order). Rows are emitted in lexicographic
/// grid order regardless of evaluation concurrency. Per-row failures are
/// recorded and re-thrown as a batch error if they exceed 1%.
using ForwardKFn = std::function<double(const std::array<double, kAnnInputs>&)>;
Dataset generate_dataset(const DatasetGrid& grid, const ForwardKFn& forward, int threads = 0,
                         std::vector<std::string>* failures = nullptr);

/// Forward map used for dataset generation: section from the 6 raw inputs,
/// full-structure basin, AREA chain.
double dataset_forward_k(const std::array<double, kAnnInputs>& x);

// Model persistence: versioned JSON. Loading refuses dimension mismatches.
void save_model(const AnnModel& model, const std::string& path);
AnnModel load_model(const std::string& path);

// Jacobian entry point exposed for the finite-difference verification tests:
// residuals r_n = yhat_n - y_n (normalized space) and d r_n / d theta_j.
struct JacobianProbe {
  std::vector<double> residuals;
  std::vector<double> jacobian;  // n_rows x n_params, row-major
};
JacobianProbe ann_residual_jacobian(const AnnModel& model,
                                    const std::vector<std::array<double, kAnnInputs>>& xs,
                                    const std::vector<double>& y_norm);

/// Flat parameter vector view [W row-major, b, v, B2] used by the trainer and
/// the gradient-check tests.
std::vector<double> pack_parameters(const AnnModel& m);
void unpack_parameters(AnnModel& m, const std::vector<double>& theta);

}  // namespace pavek
