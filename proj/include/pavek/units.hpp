#pragma once

// Exact unit-conversion constants. The AREA chain (area_backcalc) works in US
// customary units internally because its regression constants are unit-bound;
// everything else in the library is SI. Conversions happen at module
// boundaries only.

namespace pavek::units {

inline constexpr double kMetersPerInch = 0.0254;
inline constexpr double kNewtonsPerLbf = 4.4482216152605;
inline constexpr double kPaPerPsi = kNewtonsPerLbf / (kMetersPerInch * kMetersPerInch);

// Modulus of subgrade reaction: pounds per cubic inch <-> Pa/m.
// Pinned to the published rounding rather than the raw quotient.
inline constexpr double kPaPerMeterPerPci = 271447.14;

// Suction head: 1 kPa of matric suction = 10.1972 cm of water column.
inline constexpr double kCmHeadPerKpa = 10.1972;

inline constexpr double m_from_in(double in) { return in * kMetersPerInch; }
inline constexpr double in_from_m(double m) { return m / kMetersPerInch; }
inline constexpr double n_from_lbf(double lbf) { return lbf * kNewtonsPerLbf; }
inline constexpr double lbf_from_n(double n) { return n / kNewtonsPerLbf; }
inline constexpr double pa_from_psi(double psi) { return psi * kPaPerPsi; }
inline constexpr double pam_from_pci(double pci) { return pci * kPaPerMeterPerPci; }
inline constexpr double pci_from_pam(double pam) { return pam / kPaPerMeterPerPci; }
inline constexpr double cm_head_from_kpa(double kpa) { return kpa * kCmHeadPerKpa; }
inline constexpr double kpa_from_cm_head(double cm) { return cm / kCmHeadPerKpa; }

}  // namespace pavek::units
