#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dmsim/angles.hpp"

namespace dmsim {

using cplx = std::complex<double>;

enum class Plane { E, H };

const char* plane_name(Plane p);
Plane plane_from_name(const std::string& name);

/// One principal-plane cut of a complex far-field pattern.
/// Gains are linear complex amplitudes on the grid; freq_hz is metadata.
struct PatternCut {
    Plane plane = Plane::E;
    AngleGrid grid;
    std::vector<cplx> gains;
    double freq_hz = 0.0;
};

/// Throws unless the cut is well formed: gains match the grid, all finite
/// and not all zero.
void validate_cut(const PatternCut& cut);

/// The two switching states of the dynamic radiator. Both cuts share the
/// same plane, grid and frequency.
struct DynamicPattern {
    PatternCut state1;
    PatternCut state2;
};

void validate_pattern(const DynamicPattern& dp);

/// Least-squares line fitted to the differential phase.
/// slope is dimensionless (degrees of phase per degree of angle);
/// fit_range_deg is the half range r of the window [-r, +r].
struct PhaseSlopeFit {
    double slope = 0.0;
    double intercept_deg = 0.0;
    double fit_range_deg = 0.0;
    double rms_residual_deg = 0.0;
};

/// Per-angle state-1 minus state-2 phase in degrees, unwrapped along the
/// grid and re-anchored so the value at the sample nearest 0 deg lies in
/// (-180, 180]. Throws if any gain is exactly zero (phase undefined).
std::vector<double> differential_phase_deg(const DynamicPattern& dp);

/// Ordinary least squares of the differential phase against angle over
/// [-r, +r]. The grid must cover the window and contribute at least three
/// samples.
PhaseSlopeFit fit_phase_slope(const DynamicPattern& dp, double fit_half_range_deg);

/// max |g1 - g2| over the grid, normalised by max |g1|. Zero iff the two
/// states agree pointwise.
double staticness(const DynamicPattern& dp);

/// 20*log10|gain| per angle, floored at -120 dB. The floor is a display
/// convention for logarithmic reports; it keeps nulls finite.
std::vector<double> gain_db(const PatternCut& cut);

inline constexpr double kGainFloorDb = -120.0;

} // namespace dmsim
