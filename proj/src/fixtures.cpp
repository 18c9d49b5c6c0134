#include "pavek/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "pavek/csv.hpp"
#include "pavek/units.hpp"

namespace pavek {

namespace {

void require_version(const CsvTable& t, const std::string& tag, const std::string& path) {
  for (const auto& c : t.comments)
    if (c.rfind("pavek-fixture " + tag, 0) == 0) return;
  throw std::runtime_error("fixture: missing '" + tag + "' version header in " + path);
}

}  // namespace

const ScenarioMoistureRow& ScenarioFixture::row(const std::string& regime) const {
  for (const auto& r : rows)
    if (r.regime == regime) return r;
  throw std::out_of_range("ScenarioFixture: no row for regime " + regime);
}

std::vector<SectionFixture> load_sections(const std::string& path) {
  const CsvTable t = read_csv(path);
  require_version(t, "sections", path);
  const int c_zone = t.column("climate_zone"), c_state = t.column("state"),
            c_code = t.column("state_code"), c_id = t.column("shrp_id"),
            c_hs = t.column("slab_thickness_in"), c_hb = t.column("base_thickness_in"),
            c_es = t.column("slab_modulus_psi"), c_eb = t.column("base_modulus_psi"),
            c_eg = t.column("subgrade_modulus_psi"), c_d = t.column("delta");
  for (int c : {c_zone, c_state, c_code, c_id, c_hs, c_hb, c_es, c_eb, c_eg, c_d})
    if (c < 0) throw std::runtime_error("fixture: sections schema mismatch in " + path);
  const int c_ns = t.column("nu_slab"), c_nb = t.column("nu_base"), c_ng = t.column("nu_subgrade");

  std::vector<SectionFixture> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    SectionFixture f;
    f.climate_zone = t.cell(r, c_zone);
    f.state = t.cell(r, c_state);
    f.state_code = int(t.number(r, c_code));
    f.shrp_id = t.cell(r, c_id);
    PavementSection& s = f.section;
    s.id = (f.state_code < 10 ? "0" : "") + std::to_string(f.state_code) + "-" + f.shrp_id;
    s.h_s = units::m_from_in(t.number(r, c_hs));
    s.h_b = units::m_from_in(t.number(r, c_hb));
    s.e_slab = units::pa_from_psi(t.number(r, c_es));
    s.e_base = units::pa_from_psi(t.number(r, c_eb));
    s.e_subgrade = units::pa_from_psi(t.number(r, c_eg));
    s.delta = t.number(r, c_d);
    if (c_ns >= 0 && !t.cell(r, c_ns).empty()) s.nu_slab = t.number(r, c_ns);
    if (c_nb >= 0 && !t.cell(r, c_nb).empty()) s.nu_base = t.number(r, c_nb);
    if (c_ng >= 0 && !t.cell(r, c_ng).empty()) s.nu_subgrade = t.number(r, c_ng);
    try {
      s.validate();
    } catch (const std::exception& e) {
      throw std::runtime_error("fixture: section " + s.id + " row " + std::to_string(r + 1) +
                               ": " + e.what());
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ScenarioFixture> load_scenarios(const std::string& path) {
  const CsvTable t = read_csv(path);
  require_version(t, "scenarios", path);
  const int c_code = t.column("state_code"), c_id = t.column("shrp_id"),
            c_dl = t.column("delta_label"), c_af = t.column("a_f"), c_bf = t.column("b_f"),
            c_cf = t.column("c_f"), c_hr = t.column("h_r"), c_th = t.column("theta"),
            c_s = t.column("saturation_pct"), c_hm = t.column("suction_kpa"),
            c_f = t.column("f"), c_k1 = t.column("k1"), c_k2 = t.column("k2"),
            c_k3 = t.column("k3"), c_mr = t.column("mr_kpa");
  for (int c : {c_code, c_id, c_dl, c_af, c_bf, c_cf, c_hr, c_th, c_s, c_hm, c_f, c_k1, c_k2,
                c_k3, c_mr})
    if (c < 0) throw std::runtime_error("fixture: scenarios schema mismatch in " + path);
  if (t.rows.size() % 3 != 0)
    throw std::runtime_error("fixture: scenarios file must hold three rows per section");

  std::vector<ScenarioFixture> out;
  for (std::size_t r = 0; r < t.rows.size(); r += 3) {
    ScenarioFixture f;
    const int code = int(t.number(r, c_code));
    f.id = (code < 10 ? "0" : "") + std::to_string(code) + "-" + t.cell(r, c_id);
    f.swcc.a_f = t.number(r, c_af);
    f.swcc.b_f = t.number(r, c_bf);
    f.swcc.c_f = t.number(r, c_cf);
    f.swcc.h_r = t.number(r, c_hr);
    f.mr.k1 = t.number(r, c_k1);
    f.mr.k2 = t.number(r, c_k2);
    f.mr.k3 = t.number(r, c_k3);
    // Row order in the file mirrors the printed table: bond label 0 carries
    // the driest state, the partial label the equilibrium state, label 1 the
    // saturated state.
    const char* regimes[3] = {"dry80", "equilibrium", "saturated"};
    for (int i = 0; i < 3; ++i) {
      ScenarioMoistureRow& m = f.rows[i];
      m.regime = regimes[i];
      m.delta_label = t.number(r + i, c_dl);
      m.theta = t.number(r + i, c_th);
      m.saturation = t.number(r + i, c_s) / 100.0;
      m.suction_kpa = t.number(r + i, c_hm);
      m.f = t.number(r + i, c_f);
      m.mr_kpa = t.number(r + i, c_mr);
    }
    f.swcc.theta_sat = f.row("saturated").theta;
    f.swcc.validate();
    f.mr.validate();
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ScenarioRun> expand_scenarios(const SectionFixture& sec, const ScenarioFixture& fix,
                                          std::vector<std::string>* warnings) {
  if (sec.section.id != fix.id)
    throw std::invalid_argument("expand_scenarios: section/scenario id mismatch");

  const auto warn_if_off = [&](const char* regime, const char* what, double rebuilt,
                               double printed) {
    if (warnings == nullptr) return;
    const double denom = std::max(std::abs(printed), 1e-12);
    if (std::abs(rebuilt - printed) / denom > 0.02)
      warnings->push_back(fix.id + " " + regime + ": rebuilt " + what + " " +
                          format_double(rebuilt) + " vs fixture " + format_double(printed));
  };

  // Rebuild the three moisture states from the SWCC, anchored at the
  // equilibrium row's printed suction.
  const double h_eq_cm = units::cm_head_from_kpa(fix.row("equilibrium").suction_kpa);
  const MoistureState m_eq = moisture_state(fix.swcc, h_eq_cm);
  const MoistureState m_sat = moisture_state(fix.swcc, 0.0);
  const double theta80 = 0.8 * m_eq.theta;
  const double h80_cm = invert_swcc(theta80 / fix.swcc.theta_sat, fix.swcc);
  const MoistureState m_dry = moisture_state(fix.swcc, h80_cm);

  const MoistureState* states[3] = {&m_dry, &m_eq, &m_sat};
  const char* regimes[3] = {"dry80", "equilibrium", "saturated"};
  for (int i = 0; i < 3; ++i) {
    const ScenarioMoistureRow& printed = fix.row(regimes[i]);
    warn_if_off(regimes[i], "theta", states[i]->theta, printed.theta);
    warn_if_off(regimes[i], "S", states[i]->saturation, printed.saturation);
  }

  const double bonds[3] = {0.0, sec.section.delta, 1.0};
  std::vector<ScenarioRun> runs;
  runs.reserve(9);
  for (int mi = 0; mi < 3; ++mi)
    for (double b : bonds) runs.push_back({regimes[mi], *states[mi], b});
  return runs;
}

std::string fixtures_dir(const std::string& fallback) {
  if (const char* env = std::getenv("PAVEK_FIXTURES"); env != nullptr && *env != '\0')
    return env;
  return fallback;
}

}  // namespace pavek
