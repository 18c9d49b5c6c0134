// pavek command-line tool: dataset generation, surrogate training and
// prediction, Winkler-vs-full validation, bond/moisture sensitivity studies,
// and distress evaluation.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pavek/ann.hpp"
#include "pavek/area_backcalc.hpp"
#include "pavek/csv.hpp"
#include "pavek/distress.hpp"
#include "pavek/fixtures.hpp"
#include "pavek/full_structure.hpp"
#include "pavek/svg.hpp"
#include "pavek/units.hpp"
#include "pavek/version.hpp"
#include "pavek/winkler_plate.hpp"

namespace {

using namespace pavek;

constexpr int kExitOk = 0, kExitValidation = 2, kExitSolver = 3, kExitIo = 4;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string report_header(const std::string& config, const std::string& units) {
  std::ostringstream os;
  os << "# pavek " << kVersion << "\n";
  char hex[20];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a(config)));
  os << "# config: " << config << "\n# config_hash: " << hex << "\n# units: " << units << "\n";
  return os.str();
}

void require_fresh(const std::string& path, bool force) {
  if (!force && std::filesystem::exists(path))
    throw std::runtime_error("output exists, pass --force to overwrite: " + path);
}

// ---- gen-dataset -----------------------------------------------------------

int cmd_gen_dataset(const std::string& grid_mode, int reduced, const std::string& out_path,
                    bool force, int threads) {
  require_fresh(out_path, force);
  DatasetGrid grid;
  if (grid_mode == "reduced") grid = grid.reduced(reduced);
  std::vector<std::string> failures;
  const Dataset data = generate_dataset(grid, dataset_forward_k, threads, &failures);
  for (const auto& f : failures) std::cerr << "warning: solver failure at " << f << "\n";

  std::ostringstream cfg;
  cfg << "gen-dataset grid=" << grid_mode;
  if (grid_mode == "reduced") cfg << " levels=" << reduced;
  FullStructureConfig fs;
  cfg << " solver=full_structure(r=" << fs.domain_radius << ",h=" << fs.subgrade_depth
      << ",nr=" << fs.radial_cells << ",nz=" << fs.subgrade_cells << ")";

  std::ostringstream os;
  os << report_header(cfg.str(), "thickness m, modulus Pa, bond -, k pci");
  os << "pcc_thickness_m,base_thickness_m,pcc_modulus_pa,base_modulus_pa,subgrade_modulus_pa,"
        "bonding,k_pci,provenance\n";
  for (const auto& r : data.rows) {
    for (double v : r.x) os << format_double(v) << ",";
    os << format_double(r.k_pci) << "," << r.provenance << "\n";
  }
  write_text_file(out_path, os.str());
  std::cout << "wrote " << data.rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

// ---- train -----------------------------------------------------------------

Dataset read_dataset(const std::string& path) {
  const CsvTable t = read_csv(path);
  const char* cols[] = {"pcc_thickness_m",     "base_thickness_m", "pcc_modulus_pa",
                        "base_modulus_pa",     "subgrade_modulus_pa", "bonding",
                        "k_pci"};
  int ci[7];
  for (int i = 0; i < 7; ++i) {
    ci[i] = t.column(cols[i]);
    if (ci[i] < 0) throw std::runtime_error("dataset: missing column " + std::string(cols[i]));
  }
  const int cp = t.column("provenance");
  Dataset d;
  d.rows.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    DatasetRow row;
    for (int i = 0; i < kAnnInputs; ++i) row.x[i] = t.number(r, ci[i]);
    row.k_pci = t.number(r, ci[6]);
    if (cp >= 0) row.provenance = t.cell(r, cp);
    d.rows.push_back(std::move(row));
  }
  return d;
}

int cmd_train(const std::string& data_path, std::uint64_t seed, int hidden,
              const std::string& out_path, const std::string& log_path, int max_epochs,
              bool force) {
  require_fresh(out_path, force);
  const Dataset data = read_dataset(data_path);
  const SplitLabels split = split_dataset(data, seed);
  TrainOptions opt;
  opt.hidden = hidden;
  opt.seed = seed;
  opt.max_epochs = max_epochs;
  const TrainResult res = train_lm(data, split, opt);
  save_model(res.model, out_path);
  if (!log_path.empty()) {
    std::ostringstream os;
    std::ostringstream cfg;
    cfg << "train data=" << data_path << " seed=" << seed << " hidden=" << hidden;
    os << report_header(cfg.str(), "rmse pci");
    os << "epoch,lambda,train_rmse,val_rmse\n";
    for (const auto& e : res.history)
      os << e.epoch << "," << format_double(e.lambda) << "," << format_double(e.train_rmse_pci)
         << "," << format_double(e.val_rmse_pci) << "\n";
    write_text_file(log_path, os.str());
  }
  std::cout << "trained 6-" << hidden << "-1 (" << res.history.size() << " epochs, stop: "
            << res.stop_reason << ")\n"
            << "train RMSE " << res.model.train_rmse << " pci, validation RMSE "
            << res.model.val_rmse << " pci\n"
            << "model written to " << out_path << "\n";
  return kExitOk;
}

// ---- shared section/scenario loading ----------------------------------------

struct FixtureBundle {
  std::vector<SectionFixture> sections;
  std::vector<ScenarioFixture> scenarios;
};

FixtureBundle load_fixture_bundle(const std::string& dir) {
  FixtureBundle b;
  b.sections = load_sections(dir + "/sections.csv");
  b.scenarios = load_scenarios(dir + "/scenarios.csv");
  return b;
}

const ScenarioFixture& scenario_for(const FixtureBundle& b, const std::string& id) {
  for (const auto& s : b.scenarios)
    if (s.id == id) return s;
  throw std::runtime_error("no scenario fixture for section " + id);
}

// ---- validate ----------------------------------------------------------------

int cmd_validate(const std::string& fixtures, const std::string& out_dir,
                 const std::string& model_path, bool force) {
  std::filesystem::create_directories(out_dir);
  const std::string summary_path = out_dir + "/validation_summary.csv";
  require_fresh(summary_path, force);
  const FixtureBundle bundle = load_fixture_bundle(fixtures);
  std::optional<AnnModel> model;
  if (!model_path.empty()) model = load_model(model_path);

  const FwdLoad load{};
  std::ostringstream os;
  os << report_header("validate fixtures=" + fixtures + (model ? " k=ann" : " k=chain"),
                      "deflection m, k pci, deviation percent");
  os << "section,k_pci,sensor_offset_m,full_deflection_m,winkler_deflection_m,deviation_pct,"
        "within_tolerance\n";
  bool all_ok = true;
  for (const auto& sf : bundle.sections) {
    const PavementSection& sec = sf.section;
    const DeflectionBasin full = full_structure_basin(sec, load);
    double k_pam;
    double k_pci;
    if (model) {
      const Prediction p = ann_forward(
          *model, {sec.h_s, sec.h_b, sec.e_slab, sec.e_base, sec.e_subgrade, sec.delta});
      k_pci = p.k_pci;
      k_pam = units::pam_from_pci(k_pci);
    } else {
      DeflectionBasin scaled = full;
      const double s = units::n_from_lbf(9000.0) / load.magnitude;
      for (double& d : scaled.deflections) d *= s;
      const AreaChainResult res = k_from_basin(scaled, 9000.0);
      k_pci = res.k.pci;
      k_pam = res.k.pa_per_m;
    }
    const TransformedSection ts = transformed_section(sec);
    const DeflectionBasin wink =
        winkler_plate_basin(ts.h_eq, sec.e_slab, sec.nu_slab, k_pam, load);

    SvgSeries s_full{"full structure", {full.offsets.begin(), full.offsets.end()},
                     {full.deflections.begin(), full.deflections.end()}, "#1f77b4"};
    SvgSeries s_wink{"equivalent slab + k", {wink.offsets.begin(), wink.offsets.end()},
                     {wink.deflections.begin(), wink.deflections.end()}, "#d62728"};
    write_text_file(out_dir + "/basin_" + sec.id + ".svg",
                    svg_line_chart("FWD basin, section " + sec.id, "offset (m)",
                                   "deflection (m)", {s_full, s_wink}, true));

    for (std::size_t i = 0; i < full.offsets.size(); ++i) {
      const double dev = (wink.deflections[i] - full.deflections[i]) / full.deflections[i] * 100.0;
      const double tol = (i + 1 == full.offsets.size()) ? 25.0 : 10.0;
      const bool ok = std::abs(dev) <= tol;
      all_ok = all_ok && ok;
      os << sec.id << "," << format_double(k_pci) << "," << format_double(full.offsets[i]) << ","
         << format_double(full.deflections[i]) << "," << format_double(wink.deflections[i]) << ","
         << format_double(dev) << "," << (ok ? "pass" : "fail") << "\n";
    }
  }
  write_text_file(summary_path, os.str());
  std::cout << "validation " << (all_ok ? "passed" : "FAILED") << "; summary at " << summary_path
            << "\n";
  return all_ok ? kExitOk : kExitValidation;
}

// ---- sensitivity ---------------------------------------------------------------

int cmd_sensitivity(const std::string& mode, const std::string& fixtures,
                    const std::string& out_dir, bool force) {
  if (mode != "bond" && mode != "moisture")
    throw CLI::ValidationError("--mode must be 'bond' or 'moisture'");
  std::filesystem::create_directories(out_dir);
  const std::string csv_path = out_dir + "/sensitivity_" + mode + ".csv";
  require_fresh(csv_path, force);
  const FixtureBundle bundle = load_fixture_bundle(fixtures);
  const FwdLoad load{};

  std::ostringstream os;
  os << report_header("sensitivity mode=" + mode + " fixtures=" + fixtures, "k pci, change percent");
  std::vector<SvgBarGroup> groups;
  std::vector<std::string> series_labels;

  if (mode == "bond") {
    os << "section,k_nobond_pci,k_partial_pci,k_full_pci,change_partial_pct,change_full_pct\n";
    series_labels = {"partial bond", "full bond"};
    for (const auto& sf : bundle.sections) {
      PavementSection sec = sf.section;
      double k[3];
      const double deltas[3] = {0.0, sf.section.delta, 1.0};
      for (int i = 0; i < 3; ++i) {
        sec.delta = deltas[i];
        k[i] = modified_k(sec, std::nullopt, load).k.pci;
      }
      const double chg_p = (k[1] - k[0]) / k[0] * 100.0;
      const double chg_f = (k[2] - k[0]) / k[0] * 100.0;
      os << sec.id << "," << format_double(k[0]) << "," << format_double(k[1]) << ","
         << format_double(k[2]) << "," << format_double(chg_p) << "," << format_double(chg_f)
         << "\n";
      groups.push_back({sec.id, {chg_p, chg_f}});
    }
  } else {
    os << "section,k_saturated_pci,k_equilibrium_pci,k_dry80_pci,change_equilibrium_pct,"
          "change_dry80_pct\n";
    series_labels = {"equilibrium", "80% equilibrium"};
    for (const auto& sf : bundle.sections) {
      const ScenarioFixture& scen = scenario_for(bundle, sf.section.id);
      std::vector<std::string> warnings;
      const auto runs = expand_scenarios(sf, scen, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: data inconsistency: " << w << "\n";
      ModifiedKOptions opt;
      opt.mr_coeffs = scen.mr;
      double k_sat = 0, k_eq = 0, k_dry = 0;
      for (const auto& run : runs) {
        if (run.delta != sf.section.delta) continue;  // moisture mode holds the table bond
        const double k = modified_k(sf.section, run.state, load, opt).k.pci;
        if (run.moisture_regime == "saturated") k_sat = k;
        if (run.moisture_regime == "equilibrium") k_eq = k;
        if (run.moisture_regime == "dry80") k_dry = k;
      }
      const double chg_eq = (k_eq - k_sat) / k_sat * 100.0;
      const double chg_dry = (k_dry - k_sat) / k_sat * 100.0;
      os << sf.section.id << "," << format_double(k_sat) << "," << format_double(k_eq) << ","
         << format_double(k_dry) << "," << format_double(chg_eq) << "," << format_double(chg_dry)
         << "\n";
      groups.push_back({sf.section.id, {chg_eq, chg_dry}});
    }
  }
  write_text_file(csv_path, os.str());
  write_text_file(out_dir + "/sensitivity_" + mode + ".svg",
                  svg_bar_chart("k-value change, " + mode + " sensitivity", "change (%)",
                                series_labels, groups));
  std::cout << "sensitivity (" << mode << ") written to " << csv_path << "\n";
  return kExitOk;
}

// ---- distress -------------------------------------------------------------------

int cmd_distress(const std::string& fatigue_path, const std::string& faulting_path,
                 const std::string& out_path, double c1, double c2, double c34, bool force) {
  require_fresh(out_path, force);
  std::ostringstream os;
  std::ostringstream cfg;
  cfg << "distress C1=" << c1 << " C2=" << c2 << " C34=" << c34
      << " (calibration defaults, site-specific in practice)";
  os << report_header(cfg.str(), "stress psi, faulting in");
  os << "metric,month,value\n";

  if (!fatigue_path.empty()) {
    const CsvTable t = read_csv(fatigue_path);
    const int c_n = t.column("applied_n"), c_s = t.column("stress_psi"),
              c_m = t.column("modulus_rupture_psi"), c_mode = t.column("mode"),
              c_label = t.column("label");
    if (c_n < 0 || c_s < 0 || c_m < 0 || c_mode < 0)
      throw std::runtime_error(
          "fatigue table needs columns applied_n,stress_psi,modulus_rupture_psi,mode");
    std::vector<FatigueCase> bottom, top;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      FatigueCase fc;
      fc.applied_n = t.number(r, c_n);
      fc.stress_psi = t.number(r, c_s);
      fc.modulus_rupture = t.number(r, c_m);
      if (c_label >= 0) fc.label = t.cell(r, c_label);
      const std::string& mode = t.cell(r, c_mode);
      if (mode == "bottomup")
        bottom.push_back(fc);
      else if (mode == "topdown")
        top.push_back(fc);
      else
        throw std::runtime_error("fatigue table: mode must be bottomup|topdown, got " + mode);
    }
    const double fd_b = miner_damage(bottom, c1, c2);
    const double fd_t = miner_damage(top, c1, c2);
    const double crk_b = crack_fraction(fd_b);
    const double crk_t = crack_fraction(fd_t);
    os << "FD_bottom_up,," << format_double(fd_b) << "\n";
    os << "FD_top_down,," << format_double(fd_t) << "\n";
    os << "CRK_bottom_up,," << format_double(crk_b) << "\n";
    os << "CRK_top_down,," << format_double(crk_t) << "\n";
    os << "TCRACK_percent,," << format_double(total_crack(crk_b, crk_t)) << "\n";
  }

  if (!faulting_path.empty()) {
    const CsvTable t = read_csv(faulting_path);
    const int c_fm = t.column("faultmax_in"), c_de = t.column("de");
    if (c_fm < 0 || c_de < 0)
      throw std::runtime_error("faulting table needs columns faultmax_in,de");
    std::vector<FaultingMonth> months;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      months.push_back({t.number(r, c_fm), t.number(r, c_de)});
    const auto series = accumulate_faulting(months, c34);
    for (std::size_t i = 0; i < series.size(); ++i) {
      os << "fault_in," << (i + 1) << "," << format_double(series[i].fault_in) << "\n";
      if (series[i].clamped)
        std::cerr << "warning: faulting increment clamped to the FAULTMAX envelope in month "
                  << (i + 1) << "\n";
    }
  }
  write_text_file(out_path, os.str());
  std::cout << "distress report written to " << out_path << "\n";
  return kExitOk;
}

// ---- predict-k --------------------------------------------------------------------

int cmd_predict_k(const std::string& model_path, bool exact, double hs, double hb, double es,
                  double eb, double esg, double delta, const std::string& out_path) {
  std::ostringstream os;
  std::ostringstream cfg;
  cfg << "predict-k hs=" << hs << " hb=" << hb << " es=" << es << " eb=" << eb << " esg=" << esg
      << " delta=" << delta << (exact ? " mode=exact" : " mode=ann");
  os << report_header(cfg.str(), "thickness m, modulus Pa, k pci and Pa/m");
  os << "quantity,value\n";
  double k_pci;
  bool extrapolated = false;
  if (exact) {
    PavementSection sec;
    sec.h_s = hs;
    sec.h_b = hb;
    sec.e_slab = es;
    sec.e_base = eb;
    sec.e_subgrade = esg;
    sec.delta = delta;
    k_pci = modified_k(sec, std::nullopt, FwdLoad{}).k.pci;
  } else {
    if (model_path.empty()) throw CLI::ValidationError("predict-k needs --model unless --exact");
    const AnnModel model = load_model(model_path);
    const Prediction p = ann_forward(model, {hs, hb, es, eb, esg, delta});
    k_pci = p.k_pci;
    extrapolated = p.extrapolated;
  }
  os << "k_pci," << format_double(k_pci) << "\n";
  os << "k_pa_per_m," << format_double(units::pam_from_pci(k_pci)) << "\n";
  if (extrapolated) {
    os << "extrapolation_warning,input outside the training grid guard\n";
    std::cerr << "warning: input lies outside the training grid (beyond the +-10% guard)\n";
  }
  const std::string report = os.str();
  if (!out_path.empty())
    write_text_file(out_path, report);
  else
    std::cout << report;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigid-pavement foundation analysis toolkit"};
  app.set_version_flag("--version", std::string("pavek ") + kVersion);
  app.require_subcommand(1);

  std::string fixtures = fixtures_dir();
  app.add_option("--fixtures", fixtures, "fixtures directory (env PAVEK_FIXTURES overrides)");

  // gen-dataset
  auto* gen = app.add_subcommand("gen-dataset", "generate the factorial training dataset");
  std::string grid_mode = "full";
  int reduced_levels = 3;
  std::string gen_out;
  bool gen_force = false;
  int threads = 0;
  gen->add_option("--grid", grid_mode, "full or reduced")
      ->check(CLI::IsMember({"full", "reduced"}));
  gen->add_option("--reduced", reduced_levels, "levels per input for --grid reduced")
      ->check(CLI::Range(2, 6));
  gen->add_option("--out", gen_out, "output CSV")->required();
  gen->add_flag("--force", gen_force, "overwrite existing output");
  gen->add_option("--threads", threads, "worker threads (0 = hardware)");

  // train
  auto* tr = app.add_subcommand("train", "train the k-value surrogate");
  std::string tr_data, tr_out, tr_log;
  std::uint64_t tr_seed = 0;
  bool tr_seed_set = false;
  int tr_hidden = 20, tr_epochs = 400;
  bool tr_force = false;
  tr->add_option("--data", tr_data, "dataset CSV")->required();
  tr->add_option("--seed", tr_seed, "RNG seed (mandatory)")->required()
      ->each([&](const std::string&) { tr_seed_set = true; });
  tr->add_option("--out", tr_out, "model JSON path")->required();
  tr->add_option("--log", tr_log, "per-epoch training log CSV");
  tr->add_option("--hidden", tr_hidden, "hidden-layer width")->check(CLI::Range(1, 200));
  tr->add_option("--max-epochs", tr_epochs, "epoch budget")->check(CLI::Range(1, 100000));
  tr->add_flag("--force", tr_force, "overwrite existing output");

  // validate
  auto* va = app.add_subcommand("validate", "compare full-structure and Winkler basins");
  std::string va_out = "validation", va_model;
  bool va_force = false;
  va->add_option("--out-dir", va_out, "output directory");
  va->add_option("--model", va_model, "use this ANN model for k (default: AREA chain)");
  va->add_flag("--force", va_force, "overwrite existing outputs");

  // sensitivity
  auto* se = app.add_subcommand("sensitivity", "bond/moisture sensitivity study");
  std::string se_mode, se_out = "sensitivity";
  bool se_force = false;
  se->add_option("--mode", se_mode, "bond or moisture")->required();
  se->add_option("--out-dir", se_out, "output directory");
  se->add_flag("--force", se_force, "overwrite existing outputs");

  // distress
  auto* di = app.add_subcommand("distress", "evaluate cracking/faulting models");
  std::string di_fatigue, di_faulting, di_out;
  double c1 = 2.0, c2 = 1.22, c34 = 0.005;
  bool di_force = false;
  di->add_option("--fatigue", di_fatigue, "fatigue load-case CSV");
  di->add_option("--faulting", di_faulting, "monthly faulting CSV");
  di->add_option("--out", di_out, "report CSV")->required();
  di->add_option("--c1", c1, "fatigue coefficient C1");
  di->add_option("--c2", c2, "fatigue coefficient C2");
  di->add_option("--c34", c34, "faulting coefficient C34");
  di->add_flag("--force", di_force, "overwrite existing output");

  // predict-k
  auto* pr = app.add_subcommand("predict-k", "single k prediction");
  std::string pr_model, pr_out;
  bool pr_exact = false;
  double hs = 0, hb = 0, es = 0, eb = 0, esg = 0, delta = 0;
  pr->add_option("--model", pr_model, "ANN model JSON");
  pr->add_flag("--exact", pr_exact, "bypass the ANN, run the forward chain");
  pr->add_option("--hs", hs, "slab thickness, m")->required();
  pr->add_option("--hb", hb, "base thickness, m")->required();
  pr->add_option("--es", es, "slab modulus, Pa")->required();
  pr->add_option("--eb", eb, "base modulus, Pa")->required();
  pr->add_option("--esg", esg, "subgrade modulus, Pa")->required();
  pr->add_option("--delta", delta, "bond ratio")->check(CLI::Range(0.0, 1.0))->required();
  pr->add_option("--out", pr_out, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen_dataset(grid_mode, reduced_levels, gen_out, gen_force, threads);
    if (*tr) return cmd_train(tr_data, tr_seed, tr_hidden, tr_out, tr_log, tr_epochs, tr_force);
    if (*va) return cmd_validate(fixtures, va_out, va_model, va_force);
    if (*se) return cmd_sensitivity(se_mode, fixtures, se_out, se_force);
    if (*di) return cmd_distress(di_fatigue, di_faulting, di_out, c1, c2, c34, di_force);
    if (*pr) return cmd_predict_k(pr_model, pr_exact, hs, hb, es, eb, esg, delta, pr_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    const bool io = msg.find("cannot open") != std::string::npos ||
                    msg.find("output exists") != std::string::npos ||
                    msg.find("csv:") != std::string::npos;
    return io ? kExitIo : kExitSolver;
  }
  return kExitOk;
}
