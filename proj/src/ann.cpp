#include "pavek/ann.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pavek/area_backcalc.hpp"
#include "pavek/rng.hpp"

namespace pavek {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<int> reduced_indices(std::size_t n, int levels) {
  std::vector<int> idx;
  if (levels >= int(n)) {
    for (std::size_t i = 0; i < n; ++i) idx.push_back(int(i));
    return idx;
  }
  for (int i = 0; i < levels; ++i) {
    const int j = int(std::lround(double(i) * double(n - 1) / double(levels - 1)));
    if (idx.empty() || idx.back() != j) idx.push_back(j);
  }
  return idx;
}

}  // namespace

DatasetGrid DatasetGrid::reduced(int levels) const {
  if (levels < 2) throw std::invalid_argument("DatasetGrid::reduced: need at least 2 levels");
  DatasetGrid g;
  const auto pick = [&](const std::vector<double>& src) {
    std::vector<double> out;
    for (int i : reduced_indices(src.size(), levels)) out.push_back(src[i]);
    return out;
  };
  g.pcc_thickness = pick(pcc_thickness);
  g.base_thickness = pick(base_thickness);
  g.pcc_modulus = pick(pcc_modulus);
  g.base_modulus = pick(base_modulus);
  g.subgrade_modulus = pick(subgrade_modulus);
  g.bonding = pick(bonding);
  return g;
}

NormalizationSpec NormalizationSpec::from_grid_and_targets(const DatasetGrid& grid, double k_min,
                                                           double k_max) {
  NormalizationSpec n;
  const std::vector<double>* axes[kAnnInputs] = {&grid.pcc_thickness,    &grid.base_thickness,
                                                 &grid.pcc_modulus,      &grid.base_modulus,
                                                 &grid.subgrade_modulus, &grid.bonding};
  for (int i = 0; i < kAnnInputs; ++i) {
    n.x_min[i] = axes[i]->front();
    n.x_max[i] = axes[i]->back();
    if (!(n.x_max[i] > n.x_min[i]))
      throw std::invalid_argument("NormalizationSpec: max must exceed min per feature");
  }
  if (!(k_max > k_min)) throw std::invalid_argument("NormalizationSpec: degenerate target range");
  n.y_min = k_min;
  n.y_max = k_max;
  return n;
}

void AnnModel::validate() const {
  if (hidden <= 0 || steepness <= 0)
    throw std::invalid_argument("AnnModel: hidden count and steepness must be positive");
  if (hidden_weights.size() != std::size_t(hidden) * kAnnInputs ||
      hidden_biases.size() != std::size_t(hidden) || output_weights.size() != std::size_t(hidden))
    throw std::invalid_argument("AnnModel: weight dimensions inconsistent with topology");
}

Prediction ann_forward(const AnnModel& model, const std::array<double, kAnnInputs>& x) {
  model.validate();
  Prediction pred{};
  pred.extrapolated = false;
  double xn[kAnnInputs];
  for (int i = 0; i < kAnnInputs; ++i) {
    xn[i] = model.norm.norm_x(i, x[i]);
    if (std::abs(xn[i]) > 1.0 + 2.0 * kExtrapolationGuard) pred.extrapolated = true;
  }
  double out = model.output_bias;
  for (int j = 0; j < model.hidden; ++j) {
    double z = model.hidden_biases[j];
    for (int i = 0; i < kAnnInputs; ++i) z += model.hidden_weights[j * kAnnInputs + i] * xn[i];
    out += model.output_weights[j] * sigmoid(model.steepness * z);
  }
  pred.k_pci = model.norm.denorm_y(out);
  return pred;
}

SplitLabels split_dataset(const Dataset& data, std::uint64_t seed) {
  const std::size_t n = data.rows.size();
  if (n < 5) throw std::invalid_argument("split_dataset: need at least 5 rows");
  const std::size_t n_val = std::size_t(std::llround(double(n) / 5.0));
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(seed);
  rng.shuffle(idx);
  SplitLabels s;
  s.is_validation.assign(n, false);
  for (std::size_t i = 0; i < n_val; ++i) s.is_validation[idx[i]] = true;
  s.val_count = n_val;
  s.train_count = n - n_val;
  return s;
}

std::vector<double> pack_parameters(const AnnModel& m) {
  std::vector<double> theta;
  theta.reserve(m.parameter_count());
  theta.insert(theta.end(), m.hidden_weights.begin(), m.hidden_weights.end());
  theta.insert(theta.end(), m.hidden_biases.begin(), m.hidden_biases.end());
  theta.insert(theta.end(), m.output_weights.begin(), m.output_weights.end());
  theta.push_back(m.output_bias);
  return theta;
}

void unpack_parameters(AnnModel& m, const std::vector<double>& theta) {
  if (theta.size() != m.parameter_count())
    throw std::invalid_argument("unpack_parameters: size mismatch");
  std::size_t o = 0;
  std::copy_n(theta.begin() + o, m.hidden_weights.size(), m.hidden_weights.begin());
  o += m.hidden_weights.size();
  std::copy_n(theta.begin() + o, m.hidden_biases.size(), m.hidden_biases.begin());
  o += m.hidden_biases.size();
  std::copy_n(theta.begin() + o, m.output_weights.size(), m.output_weights.begin());
  o += m.output_weights.size();
  m.output_bias = theta[o];
}

namespace {

// Residual and gradient row for one sample; returns yhat (normalized).
// grad layout matches pack_parameters: [W row-major | b | v | B2].
double forward_backward(const AnnModel& m, const double* xn, double* grad) {
  const int nh = m.hidden;
  double out = m.output_bias;
  for (int j = 0; j < nh; ++j) {
    double z = m.hidden_biases[j];
    for (int i = 0; i < kAnnInputs; ++i) z += m.hidden_weights[j * kAnnInputs + i] * xn[i];
    const double h = sigmoid(m.steepness * z);
    out += m.output_weights[j] * h;
    if (grad) {
      const double dh = m.steepness * h * (1.0 - h);
      const double gb = m.output_weights[j] * dh;
      for (int i = 0; i < kAnnInputs; ++i) grad[j * kAnnInputs + i] = gb * xn[i];
      grad[nh * kAnnInputs + j] = gb;           // bias
      grad[nh * kAnnInputs + nh + j] = h;       // output weight
    }
  }
  if (grad) grad[nh * kAnnInputs + 2 * nh] = 1.0;  // output bias
  return out;
}

}  // namespace

JacobianProbe ann_residual_jacobian(const AnnModel& model,
                                    const std::vector<std::array<double, kAnnInputs>>& xs,
                                    const std::vector<double>& y_norm) {
  model.validate();
  if (xs.size() != y_norm.size())
    throw std::invalid_argument("ann_residual_jacobian: size mismatch");
  const std::size_t np = model.parameter_count();
  JacobianProbe probe;
  probe.residuals.resize(xs.size());
  probe.jacobian.assign(xs.size() * np, 0.0);
  for (std::size_t n = 0; n < xs.size(); ++n) {
    double xn[kAnnInputs];
    for (int i = 0; i < kAnnInputs; ++i) xn[i] = model.norm.norm_x(i, xs[n][i]);
    probe.residuals[n] = forward_backward(model, xn, probe.jacobian.data() + n * np) - y_norm[n];
  }
  return probe;
}

TrainResult train_lm(const Dataset& data, const SplitLabels& split, const TrainOptions& opt) {
  if (data.rows.empty()) throw std::invalid_argument("train_lm: empty dataset");
  if (split.is_validation.size() != data.rows.size())
    throw std::invalid_argument("train_lm: split does not match dataset");
  if (split.train_count == 0) throw std::invalid_argument("train_lm: empty training split");

  double k_min = data.rows[0].k_pci, k_max = k_min;
  for (const auto& r : data.rows) {
    k_min = std::min(k_min, r.k_pci);
    k_max = std::max(k_max, r.k_pci);
  }

  AnnModel m;
  m.hidden = opt.hidden;
  m.seed = opt.seed;
  m.norm = NormalizationSpec::from_grid_and_targets(DatasetGrid{}, k_min, k_max);
  m.hidden_weights.resize(std::size_t(opt.hidden) * kAnnInputs);
  m.hidden_biases.resize(opt.hidden);
  m.output_weights.resize(opt.hidden);

  Rng rng(opt.seed);
  const double ws_h = 1.0 / std::sqrt(double(kAnnInputs));
  const double ws_o = 1.0 / std::sqrt(double(opt.hidden));
  for (auto& w : m.hidden_weights) w = rng.uniform(-0.5, 0.5) * ws_h;
  for (auto& b : m.hidden_biases) b = rng.uniform(-0.5, 0.5) * ws_h;
  for (auto& w : m.output_weights) w = rng.uniform(-0.5, 0.5) * ws_o;
  m.output_bias = rng.uniform(-0.5, 0.5) * ws_o;

  // normalized inputs/targets, split views
  const std::size_t n = data.rows.size();
  std::vector<std::array<double, kAnnInputs>> xn(n);
  std::vector<double> yn(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (int i = 0; i < kAnnInputs; ++i) xn[r][i] = m.norm.norm_x(i, data.rows[r].x[i]);
    yn[r] = m.norm.norm_y(data.rows[r].k_pci);
  }

  const std::size_t np = m.parameter_count();
  std::vector<double> theta = pack_parameters(m);
  std::vector<double> grad(np);

  const double y_scale = (m.norm.y_max - m.norm.y_min) / 2.0;  // normalized -> pci

  const auto mse_of = [&](const std::vector<double>& th, bool validation, double* out_other) {
    AnnModel probe = m;
    unpack_parameters(probe, th);
    double se_t = 0.0, se_v = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double e = forward_backward(probe, xn[r].data(), nullptr) - yn[r];
      if (split.is_validation[r])
        se_v += e * e;
      else
        se_t += e * e;
    }
    const double mse_t = se_t / double(split.train_count);
    const double mse_v = split.val_count ? se_v / double(split.val_count) : 0.0;
    if (out_other) *out_other = validation ? mse_t : mse_v;
    return validation ? mse_v : mse_t;
  };

  TrainResult result;
  double lambda = opt.lambda0;
  double mse_val_unused;
  double mse = mse_of(theta, false, &mse_val_unused);

  Eigen::MatrixXd jtj(np, np);
  Eigen::VectorXd jtr(np);

  int val_rises = 0;
  double prev_val = 1e300;
  double best_val = 1e300;
  std::vector<double> best_theta = theta;
  std::string stop = "budget";

  AnnModel work = m;
  for (int epoch = 1; epoch <= opt.max_epochs; ++epoch) {
    unpack_parameters(work, theta);
    jtj.setZero();
    jtr.setZero();
    for (std::size_t r = 0; r < n; ++r) {
      if (split.is_validation[r]) continue;
      const double e = forward_backward(work, xn[r].data(), grad.data()) - yn[r];
      for (std::size_t p = 0; p < np; ++p) {
        jtr[p] += grad[p] * e;
        for (std::size_t q = p; q < np; ++q) jtj(p, q) += grad[p] * grad[q];
      }
    }
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t q = 0; q < p; ++q) jtj(p, q) = jtj(q, p);

    if (jtr.lpNorm<Eigen::Infinity>() < opt.gradient_tol) {
      stop = "gradient";
      break;
    }

    // Damped normal equations; escalate lambda until a step is accepted.
    bool accepted = false;
    while (!accepted) {
      Eigen::MatrixXd a = jtj;
      for (std::size_t p = 0; p < np; ++p) a(p, p) += lambda;
      const Eigen::VectorXd step = a.ldlt().solve(-jtr);
      std::vector<double> trial = theta;
      for (std::size_t p = 0; p < np; ++p) trial[p] += step[p];
      double trial_val;
      const double trial_mse = mse_of(trial, false, &trial_val);
      if (std::isfinite(trial_mse) && trial_mse < mse) {
        theta = std::move(trial);
        mse = trial_mse;
        lambda = std::max(lambda / 10.0, 1e-14);
        accepted = true;
        result.history.push_back({epoch, lambda, y_scale * std::sqrt(trial_mse),
                                  y_scale * std::sqrt(trial_val)});
        if (trial_val > prev_val)
          ++val_rises;
        else
          val_rises = 0;
        prev_val = trial_val;
        if (trial_val < best_val) {
          best_val = trial_val;
          best_theta = theta;
        }
      } else {
        if (!std::isfinite(trial_mse))
          throw std::runtime_error("train_lm: non-finite loss encountered");
        lambda *= 10.0;
        if (lambda > opt.lambda_max) break;
      }
    }
    if (!accepted) {
      stop = "lambda overflow";
      break;
    }
    if (val_rises >= opt.val_rise_limit) {
      stop = "validation rising";
      break;
    }
    if (epoch == opt.max_epochs) stop = "budget";
  }

  // Early stopping returns the best-validation parameters seen.
  unpack_parameters(m, split.val_count ? best_theta : theta);
  m.epochs = int(result.history.size());
  double fin_val;
  const double fin_train = mse_of(pack_parameters(m), false, &fin_val);
  m.train_rmse = y_scale * std::sqrt(fin_train);
  m.val_rmse = y_scale * std::sqrt(fin_val);
  result.model = std::move(m);
  result.stop_reason = stop;
  return result;
}

Metrics evaluate(const AnnModel& model, const Dataset& data) {
  if (data.rows.empty()) throw std::invalid_argument("evaluate: empty dataset");
  double mean = 0.0;
  for (const auto& r : data.rows) mean += r.k_pci;
  mean /= double(data.rows.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& r : data.rows) {
    const double pred = ann_forward(model, r.x).k_pci;
    ss_res += (pred - r.k_pci) * (pred - r.k_pci);
    ss_tot += (r.k_pci - mean) * (r.k_pci - mean);
  }
  if (ss_tot == 0.0) throw std::domain_error("evaluate: zero-variance targets, R^2 undefined");
  Metrics out;
  out.rmse_pci = std::sqrt(ss_res / double(data.rows.size()));
  out.r2 = 1.0 - ss_res / ss_tot;
  return out;
}

Dataset generate_dataset(const DatasetGrid& grid, const ForwardKFn& forward, int threads,
                         std::vector<std::string>* failures) {
  const std::size_t total = grid.size();
  Dataset data;
  data.rows.resize(total);
  std::vector<std::string> fail_local;
  std::mutex fail_mutex;

  const std::vector<double>* axes[kAnnInputs] = {&grid.pcc_thickness,    &grid.base_thickness,
                                                 &grid.pcc_modulus,      &grid.base_modulus,
                                                 &grid.subgrade_modulus, &grid.bonding};
  std::array<std::size_t, kAnnInputs> dims;
  for (int i = 0; i < kAnnInputs; ++i) dims[i] = axes[i]->size();

  const auto run_row = [&](std::size_t flat) {
    std::array<std::size_t, kAnnInputs> iv;
    std::size_t rem = flat;
    for (int i = kAnnInputs - 1; i >= 0; --i) {
      iv[i] = rem % dims[i];
      rem /= dims[i];
    }
    DatasetRow& row = data.rows[flat];
    for (int i = 0; i < kAnnInputs; ++i) row.x[i] = (*axes[i])[iv[i]];
    row.provenance.clear();
    for (int i = 0; i < kAnnInputs; ++i) {
      row.provenance += std::to_string(iv[i]);
      if (i + 1 < kAnnInputs) row.provenance += '-';
    }
    try {
      row.k_pci = forward(row.x);
    } catch (const std::exception& e) {
      row.k_pci = std::numeric_limits<double>::quiet_NaN();
      std::lock_guard<std::mutex> lock(fail_mutex);
      fail_local.push_back(row.provenance + ": " + e.what());
    }
  };

  int nthreads = threads > 0 ? threads : int(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  if (std::size_t(nthreads) > total) nthreads = int(total);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) run_row(i);
    });
  for (auto& th : pool) th.join();

  if (failures) *failures = fail_local;
  if (fail_local.size() * 100 > total)
    throw std::runtime_error("generate_dataset: more than 1% of forward solves failed (" +
                             std::to_string(fail_local.size()) + "/" + std::to_string(total) +
                             ")");
  return data;
}

double dataset_forward_k(const std::array<double, kAnnInputs>& x) {
  PavementSection sec;
  sec.h_s = x[0];
  sec.h_b = x[1];
  sec.e_slab = x[2];
  sec.e_base = x[3];
  sec.e_subgrade = x[4];
  sec.delta = x[5];
  return modified_k(sec, std::nullopt, FwdLoad{}).k.pci;
}

void save_model(const AnnModel& model, const std::string& path) {
  model.validate();
  nlohmann::ordered_json j;
  j["format"] = "pavek-ann";
  j["version"] = 1;
  j["inputs"] = kAnnInputs;
  j["hidden"] = model.hidden;
  j["steepness"] = model.steepness;
  j["target_unit"] = model.target_unit;
  j["normalization"] = {{"x_min", model.norm.x_min},
                        {"x_max", model.norm.x_max},
                        {"y_min", model.norm.y_min},
                        {"y_max", model.norm.y_max}};
  j["hidden_weights"] = model.hidden_weights;
  j["hidden_biases"] = model.hidden_biases;
  j["output_weights"] = model.output_weights;
  j["output_bias"] = model.output_bias;
  j["training"] = {{"seed", model.seed},
                   {"epochs", model.epochs},
                   {"train_rmse", model.train_rmse},
                   {"val_rmse", model.val_rmse}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_model: cannot open " + path);
  out << j.dump(2) << "\n";
}

AnnModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_model: cannot open " + path);
  nlohmann::json j;
  in >> j;
  if (j.value("format", "") != "pavek-ann" || j.value("version", 0) != 1)
    throw std::runtime_error("load_model: unrecognized model format");
  if (j.value("inputs", 0) != kAnnInputs)
    throw std::runtime_error("load_model: input dimension mismatch");
  AnnModel m;
  m.hidden = j.at("hidden").get<int>();
  m.steepness = j.at("steepness").get<double>();
  m.target_unit = j.value("target_unit", "pci");
  const auto& nrm = j.at("normalization");
  m.norm.x_min = nrm.at("x_min").get<std::array<double, kAnnInputs>>();
  m.norm.x_max = nrm.at("x_max").get<std::array<double, kAnnInputs>>();
  m.norm.y_min = nrm.at("y_min").get<double>();
  m.norm.y_max = nrm.at("y_max").get<double>();
  m.hidden_weights = j.at("hidden_weights").get<std::vector<double>>();
  m.hidden_biases = j.at("hidden_biases").get<std::vector<double>>();
  m.output_weights = j.at("output_weights").get<std::vector<double>>();
  m.output_bias = j.at("output_bias").get<double>();
  if (j.contains("training")) {
    const auto& t = j["training"];
    m.seed = t.value("seed", std::uint64_t{0});
    m.epochs = t.value("epochs", 0);
    m.train_rmse = t.value("train_rmse", 0.0);
    m.val_rmse = t.value("val_rmse", 0.0);
  }
  m.validate();
  return m;
}

}  // namespace pavek
