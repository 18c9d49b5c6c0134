#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "pavek/ann.hpp"
#include "pavek/rng.hpp"

using namespace pavek;

namespace {

AnnModel tiny_model(int hidden, Rng& rng) {
  AnnModel m;
  m.hidden = hidden;
  m.norm = NormalizationSpec::from_grid_and_targets(DatasetGrid{}, 0.0, 1000.0);
  m.hidden_weights.resize(std::size_t(hidden) * kAnnInputs);
  m.hidden_biases.resize(hidden);
  m.output_weights.resize(hidden);
  for (auto& w : m.hidden_weights) w = rng.uniform(-1.0, 1.0);
  for (auto& b : m.hidden_biases) b = rng.uniform(-1.0, 1.0);
  for (auto& w : m.output_weights) w = rng.uniform(-1.0, 1.0);
  m.output_bias = rng.uniform(-1.0, 1.0);
  return m;
}

std::array<double, kAnnInputs> random_grid_point(Rng& rng) {
  const DatasetGrid g;
  return {rng.uniform(g.pcc_thickness.front(), g.pcc_thickness.back()),
          rng.uniform(g.base_thickness.front(), g.base_thickness.back()),
          rng.uniform(g.pcc_modulus.front(), g.pcc_modulus.back()),
          rng.uniform(g.base_modulus.front(), g.base_modulus.back()),
          rng.uniform(g.subgrade_modulus.front(), g.subgrade_modulus.back()),
          rng.uniform(0.0, 1.0)};
}

Dataset affine_dataset(std::size_t n, std::uint64_t seed) {
  // exactly realizable target: affine in the normalized inputs
  Dataset d;
  Rng rng(seed);
  NormalizationSpec norm = NormalizationSpec::from_grid_and_targets(DatasetGrid{}, 0.0, 1000.0);
  for (std::size_t i = 0; i < n; ++i) {
    DatasetRow row;
    row.x = random_grid_point(rng);
    double t = 0.2;
    const double coef[kAnnInputs] = {0.31, -0.12, 0.25, 0.08, -0.27, 0.18};
    for (int j = 0; j < kAnnInputs; ++j) t += coef[j] * norm.norm_x(j, row.x[j]);
    row.k_pci = norm.denorm_y(t);
    d.rows.push_back(row);
  }
  return d;
}

}  // namespace

TEST_CASE("grid combinatorics") {
  const DatasetGrid full;
  CHECK(full.size() == 27000);
  CHECK(full.reduced(3).size() == 729);
  CHECK(full.reduced(2).size() == 64);
  // endpoints preserved
  const DatasetGrid r3 = full.reduced(3);
  CHECK(r3.pcc_thickness.front() == full.pcc_thickness.front());
  CHECK(r3.pcc_thickness.back() == full.pcc_thickness.back());
  CHECK(r3.pcc_modulus.size() == 3);
}

TEST_CASE("normalization round trip") {
  const NormalizationSpec n = NormalizationSpec::from_grid_and_targets(DatasetGrid{}, 50.0, 900.0);
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const double y = rng.uniform(50.0, 900.0);
    CHECK(n.denorm_y(n.norm_y(y)) == doctest::Approx(y).epsilon(1e-12));
  }
  CHECK(n.norm_x(0, 0.178) == doctest::Approx(-1.0));
  CHECK(n.norm_x(0, 0.330) == doctest::Approx(1.0));
}

TEST_CASE("constant network forwards the denormalized bias") {
  AnnModel m;
  m.hidden = 20;
  m.norm = NormalizationSpec::from_grid_and_targets(DatasetGrid{}, 0.0, 1000.0);
  m.hidden_weights.assign(20 * kAnnInputs, 0.0);
  m.hidden_biases.assign(20, 0.0);
  m.output_weights.assign(20, 0.0);
  m.output_bias = 0.25;
  const Prediction p = ann_forward(m, {0.254, 0.165, 4e10, 1e9, 2e8, 0.5});
  CHECK(p.k_pci == doctest::Approx(m.norm.denorm_y(0.25)).epsilon(1e-14));
  CHECK_FALSE(p.extrapolated);
}

TEST_CASE("sigmoid midpoint and hidden activation bounds") {
  Rng rng(17);
  AnnModel m = tiny_model(20, rng);
  // zero pre-activation gives exactly 0.5 regardless of steepness
  m.hidden_weights.assign(m.hidden_weights.size(), 0.0);
  m.hidden_biases.assign(m.hidden_biases.size(), 0.0);
  m.output_weights.assign(m.output_weights.size(), 1.0);
  m.output_bias = 0.0;
  for (double phi : {0.5, 1.0, 50.0}) {
    m.steepness = phi;
    const Prediction p = ann_forward(m, {0.254, 0.165, 4e10, 1e9, 2e8, 0.5});
    CHECK(p.k_pci == doctest::Approx(m.norm.denorm_y(20 * 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("extrapolation guard flags out-of-grid inputs") {
  Rng rng(23);
  const AnnModel m = tiny_model(4, rng);
  CHECK_FALSE(ann_forward(m, {0.254, 0.165, 4e10, 1e9, 2e8, 0.5}).extrapolated);
  CHECK(ann_forward(m, {1.0, 0.165, 4e10, 1e9, 2e8, 0.5}).extrapolated);
}

TEST_CASE("split determinism, sizes, and seed sensitivity") {
  const Dataset d = affine_dataset(27000, 5);
  const SplitLabels a = split_dataset(d, 42);
  const SplitLabels b = split_dataset(d, 42);
  const SplitLabels c = split_dataset(d, 43);
  CHECK(a.val_count == 5400);
  CHECK(a.train_count == 21600);
  CHECK(a.is_validation == b.is_validation);
  CHECK(a.is_validation != c.is_validation);

  const Dataset small = affine_dataset(11, 6);
  const SplitLabels s = split_dataset(small, 1);
  CHECK(s.val_count == 2);  // round(11/5)
  Dataset too_small = affine_dataset(4, 7);
  CHECK_THROWS_AS(split_dataset(too_small, 1), std::invalid_argument);
}

TEST_CASE("analytic Jacobian matches central finite differences") {
  Rng rng(2718);
  for (int net = 0; net < 20; ++net) {
    AnnModel m = tiny_model(2 + int(rng.index(4)), rng);
    m.steepness = rng.uniform(0.5, 2.0);
    std::vector<std::array<double, kAnnInputs>> xs;
    std::vector<double> ys;
    for (int i = 0; i < 5; ++i) {
      xs.push_back(random_grid_point(rng));
      ys.push_back(rng.uniform(-1.0, 1.0));
    }
    const JacobianProbe probe = ann_residual_jacobian(m, xs, ys);
    const std::size_t np = m.parameter_count();
    std::vector<double> theta = pack_parameters(m);

    double worst = 0.0;
    for (std::size_t j = 0; j < np; ++j) {
      const double h = 1e-5 * std::max(1.0, std::abs(theta[j]));
      std::vector<double> tp = theta, tm = theta;
      tp[j] += h;
      tm[j] -= h;
      AnnModel mp = m, mm = m;
      unpack_parameters(mp, tp);
      unpack_parameters(mm, tm);
      const JacobianProbe pp = ann_residual_jacobian(mp, xs, ys);
      const JacobianProbe pm = ann_residual_jacobian(mm, xs, ys);
      for (std::size_t n = 0; n < xs.size(); ++n) {
        const double fd = (pp.residuals[n] - pm.residuals[n]) / (2.0 * h);
        const double an = probe.jacobian[n * np + j];
        const double rel = std::abs(fd - an) / std::max({std::abs(fd), std::abs(an), 1e-6});
        worst = std::max(worst, rel);
      }
    }
    CAPTURE(net);
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("LM drives an exactly realizable affine target to machine-level RMSE") {
  const Dataset d = affine_dataset(400, 99);
  const SplitLabels split = split_dataset(d, 7);
  TrainOptions opt;
  opt.hidden = 6;
  opt.seed = 7;
  opt.max_epochs = 300;
  const TrainResult res = train_lm(d, split, opt);
  CHECK(res.model.train_rmse < 1e-4);  // pci, on a ~1000-pci scale
  const Metrics m = evaluate(res.model, d);
  CHECK(m.r2 > 0.999999);
}

TEST_CASE("accepted LM steps never increase the training MSE") {
  const Dataset d = affine_dataset(300, 123);
  const SplitLabels split = split_dataset(d, 3);
  TrainOptions opt;
  opt.hidden = 5;
  opt.seed = 11;
  opt.max_epochs = 120;
  const TrainResult res = train_lm(d, split, opt);
  for (std::size_t i = 1; i < res.history.size(); ++i)
    CHECK(res.history[i].train_rmse_pci <= res.history[i - 1].train_rmse_pci + 1e-12);
}

TEST_CASE("training is bit-deterministic for a fixed seed") {
  const Dataset d = affine_dataset(200, 55);
  const SplitLabels split = split_dataset(d, 9);
  TrainOptions opt;
  opt.hidden = 4;
  opt.seed = 13;
  opt.max_epochs = 40;
  const TrainResult a = train_lm(d, split, opt);
  const TrainResult b = train_lm(d, split, opt);
  CHECK(a.model.hidden_weights == b.model.hidden_weights);
  CHECK(a.model.output_bias == b.model.output_bias);
  CHECK(a.history.size() == b.history.size());
}

TEST_CASE("evaluate: perfect predictor and mean predictor") {
  Dataset d = affine_dataset(50, 77);
  // model that predicts the mean: zero weights, bias at the normalized mean
  double mean = 0.0;
  for (const auto& r : d.rows) mean += r.k_pci;
  mean /= double(d.rows.size());
  AnnModel m;
  m.hidden = 3;
  m.norm = NormalizationSpec::from_grid_and_targets(DatasetGrid{}, 0.0, 1000.0);
  m.hidden_weights.assign(3 * kAnnInputs, 0.0);
  m.hidden_biases.assign(3, 0.0);
  m.output_weights.assign(3, 0.0);
  m.output_bias = m.norm.norm_y(mean);
  const Metrics mm = evaluate(m, d);
  CHECK(mm.r2 == doctest::Approx(0.0).epsilon(1e-9));

  Dataset flat = d;
  for (auto& r : flat.rows) r.k_pci = 5.0;
  CHECK_THROWS_AS(evaluate(m, flat), std::domain_error);
}

TEST_CASE("model save/load round trip and dimension guard") {
  Rng rng(31337);
  AnnModel m = tiny_model(7, rng);
  m.seed = 99;
  m.epochs = 12;
  const std::string path = (std::filesystem::temp_directory_path() / "pavek_model_test.json").string();
  save_model(m, path);
  const AnnModel back = load_model(path);
  CHECK(back.hidden == 7);
  CHECK(back.hidden_weights == m.hidden_weights);
  CHECK(back.output_bias == m.output_bias);
  CHECK(back.norm.y_max == m.norm.y_max);
  CHECK(back.seed == 99);

  // corrupt the dimensions
  AnnModel bad = m;
  bad.hidden = 9;
  CHECK_THROWS_AS(save_model(bad, path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("dataset generation: ordering, provenance, and failure policy") {
  const DatasetGrid g = DatasetGrid{}.reduced(2);
  const auto fake_forward = [](const std::array<double, kAnnInputs>& x) {
    return x[0] * 1000.0 + x[5];
  };
  const Dataset d = generate_dataset(g, fake_forward, 4);
  CHECK(d.rows.size() == 64);
  CHECK(d.rows.front().provenance == "0-0-0-0-0-0");
  CHECK(d.rows.back().provenance == "1-1-1-1-1-1");
  // lexicographic order: last axis (bonding) varies fastest
  CHECK(d.rows[1].provenance == "0-0-0-0-0-1");
  CHECK(d.rows[1].x[5] == 1.0);
  // deterministic under different thread counts
  const Dataset d1 = generate_dataset(g, fake_forward, 1);
  for (std::size_t i = 0; i < d.rows.size(); ++i) CHECK(d.rows[i].k_pci == d1.rows[i].k_pci);

  const auto failing = [](const std::array<double, kAnnInputs>& x) -> double {
    throw std::runtime_error("boom " + std::to_string(x[0]));
  };
  std::vector<std::string> failures;
  CHECK_THROWS_AS(generate_dataset(g, failing, 2, &failures), std::runtime_error);
}
