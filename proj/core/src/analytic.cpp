#include "dmsim/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dmsim {

void validate_model(const TwoElementModel& model) {
    if (!(model.spacing_wl > 0.0) || model.spacing_wl > 2.0)
        throw std::invalid_argument("element spacing must lie in (0, 2] wavelengths");
    if (std::isnan(model.power_ratio_db) || model.power_ratio_db < 0.0)
        throw std::invalid_argument("power ratio must be >= 0 dB (state 2 mirrors the feed)");
}

AmplitudePair amplitudes(double power_ratio_db) {
    if (std::isnan(power_ratio_db) || power_ratio_db < 0.0)
        throw std::invalid_argument("power ratio must be >= 0 dB");
    if (std::isinf(power_ratio_db)) return AmplitudePair{1.0, 0.0};
    const double r = std::pow(10.0, power_ratio_db / 20.0);
    const double norm = std::sqrt(1.0 + r * r);
    return AmplitudePair{r / norm, 1.0 / norm};
}

namespace {

double element_gain(const TwoElementModel& model, Plane plane, double theta_deg) {
    if (model.element == ElementFactor::isotropic || plane == Plane::H) return 1.0;
    return std::cos(deg_to_rad(theta_deg));
}

} // namespace

cplx array_factor(const TwoElementModel& model, int state, double theta_deg) {
    validate_model(model);
    if (state != 1 && state != 2) throw std::invalid_argument("state must be 1 or 2");
    if (theta_deg < -180.0 || theta_deg > 180.0)
        throw std::invalid_argument("theta must lie in [-180, 180] deg");

    const AmplitudePair amp = amplitudes(model.power_ratio_db);
    const double beta = kPi * model.spacing_wl * std::sin(deg_to_rad(theta_deg));
    const cplx lead = std::polar(1.0, beta);
    const cplx lag = std::polar(1.0, -beta);
    const cplx af = state == 1 ? amp.a1 * lead + amp.a2 * lag : amp.a2 * lead + amp.a1 * lag;
    return af * element_gain(model, Plane::E, theta_deg);
}

DynamicPattern synthesize(const TwoElementModel& model, Plane plane, const AngleGrid& grid,
                          double freq_hz) {
    validate_model(model);
    if (grid.values_deg.empty()) throw std::invalid_argument("empty grid");

    DynamicPattern dp;
    dp.state1 = PatternCut{plane, grid, {}, freq_hz};
    dp.state2 = PatternCut{plane, grid, {}, freq_hz};
    dp.state1.gains.resize(grid.size());
    dp.state2.gains.resize(grid.size());

    const AmplitudePair amp = amplitudes(model.power_ratio_db);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double theta = grid.values_deg[i];
        if (plane == Plane::H) {
            // Displacement along the polarisation axis: zero path difference
            // at every azimuth, both feeds add in phase.
            dp.state1.gains[i] = cplx(amp.a1 + amp.a2, 0.0);
            dp.state2.gains[i] = dp.state1.gains[i];
        } else {
            dp.state1.gains[i] = array_factor(model, 1, theta);
            dp.state2.gains[i] = array_factor(model, 2, theta);
        }
    }
    return dp;
}

double calibrate_spacing(double target_slope_mag, double fit_half_range_deg) {
    if (!(target_slope_mag > 0.0)) throw std::invalid_argument("target slope must be positive");

    const AngleGrid grid = make_grid(-180.0, 180.0, 1.0);
    const auto slope_mag = [&](double spacing) {
        TwoElementModel model{spacing, std::numeric_limits<double>::infinity(),
                              ElementFactor::isotropic};
        return std::abs(fit_phase_slope(synthesize(model, Plane::E, grid), fit_half_range_deg).slope);
    };

    double lo = 1e-9, hi = 1.0;
    if (slope_mag(hi) < target_slope_mag)
        throw std::runtime_error("slope target " + std::to_string(target_slope_mag) +
                                 " unreachable for spacing in (0, 1] wavelengths");

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double s = slope_mag(mid);
        if (std::abs(s - target_slope_mag) <= 1e-6) return mid;
        (s < target_slope_mag ? lo : hi) = mid;
    }
    throw std::runtime_error("spacing calibration did not converge");
}

double reference_spacing_wl() {
    static const double spacing = calibrate_spacing(kReferenceSlopeMag, kReferenceFitRangeDeg);
    return spacing;
}

} // namespace dmsim
