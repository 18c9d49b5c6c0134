#pragma once

#include <array>
#include <string>
#include <vector>

#include "pavek/resilient_modulus.hpp"
#include "pavek/slab_structure.hpp"
#include "pavek/swcc.hpp"

// Fixture data: the eight LTPP section records and the per-section
// moisture/bond scenario table, shipped as versioned CSV files under data/.

namespace pavek {

struct SectionFixture {
  std::string climate_zone, state;
  int state_code;
  std::string shrp_id;  // e.g. "4034"
  PavementSection section;  // SI units; id = "SS-IIII"
};

/// One printed moisture row: the original table labels rows by bond ratio;
/// the moisture regime is what actually varies (dry80 / equilibrium /
/// saturated).
struct ScenarioMoistureRow {
  std::string regime;      // "dry80", "equilibrium", "saturated"
  double delta_label;      // bond value the row was printed under
  double theta;
  double saturation;       // fraction
  double suction_kpa;      // magnitude
  double f;
  double mr_kpa;           // reference modulus as printed
};

struct ScenarioFixture {
  std::string id;  // "27-4034"
  SwccParams swcc;
  MrCoefficients mr;
  std::array<ScenarioMoistureRow, 3> rows;  // dry80, equilibrium, saturated

  const ScenarioMoistureRow& row(const std::string& regime) const;
};

/// One pipeline run: a rebuilt moisture state under one bond ratio.
struct ScenarioRun {
  std::string moisture_regime;
  MoistureState state;
  double delta;
};

std::vector<SectionFixture> load_sections(const std::string& path);
std::vector<ScenarioFixture> load_scenarios(const std::string& path);

/// 3 moisture x 3 bond = 9 runs. Moisture states are rebuilt from the SWCC
/// anchored at the equilibrium row's suction (saturated: h = 0; dry80:
/// theta = 0.8 theta_eq inverted through the SWCC) and cross-checked against
/// the printed theta/S; disagreements beyond 2% are reported in `warnings`.
std::vector<ScenarioRun> expand_scenarios(const SectionFixture& sec, const ScenarioFixture& fix,
                                          std::vector<std::string>* warnings = nullptr);

/// Directory containing sections.csv / scenarios.csv: the PAVEK_FIXTURES
/// environment variable when set, else `fallback`.
std::string fixtures_dir(const std::string& fallback = "data");

}  // namespace pavek
