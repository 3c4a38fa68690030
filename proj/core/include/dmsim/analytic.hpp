#pragma once

#include "dmsim/pattern.hpp"

namespace dmsim {

enum class ElementFactor { isotropic, short_dipole };

/// Two-element abstraction of the dual-monopole radiator: two co-directed
/// equivalent currents separated by spacing_wl wavelengths along the
/// polarisation axis, fed with a differential power ratio of
/// power_ratio_db (amplitude ratio 10^(alpha/20)). State 2 swaps the two
/// port amplitudes, so only alpha >= 0 is needed; +infinity means a single
/// active port.
struct TwoElementModel {
    double spacing_wl = 0.0;
    double power_ratio_db = 0.0;
    ElementFactor element = ElementFactor::isotropic;
};

void validate_model(const TwoElementModel& model);

/// Port amplitudes for a power ratio: a1/a2 = 10^(alpha/20), a1^2+a2^2 = 1.
struct AmplitudePair {
    double a1 = 0.0;
    double a2 = 0.0;
};

AmplitudePair amplitudes(double power_ratio_db);

/// Complex E-plane response of one switching state at theta degrees from
/// broadside. With beta = pi*(d/lambda)*sin(theta):
///   state 1 = a1*e^{+j beta} + a2*e^{-j beta}
///   state 2 = a2*e^{+j beta} + a1*e^{-j beta}
/// multiplied by the element factor (isotropic: 1; short dipole:
/// cos(theta) in this plane). The two states are complex conjugates for
/// real amplitudes.
cplx array_factor(const TwoElementModel& model, int state, double theta_deg);

/// Builds both state cuts on a grid. The H-plane sees zero path difference
/// at every azimuth, so both states are the constant a1+a2 there (element
/// factor 1).
DynamicPattern synthesize(const TwoElementModel& model, Plane plane, const AngleGrid& grid,
                          double freq_hz = 2.7e9);

/// Bisects spacing_wl in (0, 1] until the fitted E-plane differential
/// phase slope magnitude at alpha = +inf matches target_slope_mag within
/// 1e-6 (1 deg grid, fit over +/-fit_half_range_deg). Throws when the
/// target is unreachable.
double calibrate_spacing(double target_slope_mag, double fit_half_range_deg);

/// Spacing calibrated once for a fitted slope magnitude of 1.66 over
/// +/-80 deg; the reference model used by the presets and the CLI
/// defaults.
double reference_spacing_wl();

inline constexpr double kReferenceSlopeMag = 1.66;
inline constexpr double kReferenceFitRangeDeg = 80.0;

} // namespace dmsim
