#include "dmsim/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dmsim {

const char* plane_name(Plane p) { return p == Plane::E ? "E" : "H"; }

Plane plane_from_name(const std::string& name) {
    if (name == "E") return Plane::E;
    if (name == "H") return Plane::H;
    throw std::invalid_argument("unknown plane '" + name + "' (expected E or H)");
}

void validate_cut(const PatternCut& cut) {
    if (cut.grid.values_deg.empty())
        throw std::invalid_argument("pattern cut has an empty grid");
    if (cut.gains.size() != cut.grid.size())
        throw std::invalid_argument("pattern cut has " + std::to_string(cut.gains.size()) +
                                    " gains for " + std::to_string(cut.grid.size()) + " angles");
    bool any_nonzero = false;
    for (const cplx& g : cut.gains) {
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
            throw std::invalid_argument("pattern cut contains a non-finite gain");
        if (std::abs(g) > 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw std::invalid_argument("pattern cut is identically zero");
}

void validate_pattern(const DynamicPattern& dp) {
    validate_cut(dp.state1);
    validate_cut(dp.state2);
    if (dp.state1.plane != dp.state2.plane)
        throw std::invalid_argument("dynamic pattern states disagree on plane");
    if (dp.state1.freq_hz != dp.state2.freq_hz)
        throw std::invalid_argument("dynamic pattern states disagree on frequency");
    const AngleGrid& a = dp.state1.grid;
    const AngleGrid& b = dp.state2.grid;
    if (a.size() != b.size() || std::abs(a.start_deg - b.start_deg) > 1e-9 ||
        std::abs(a.step_deg - b.step_deg) > 1e-9)
        throw std::invalid_argument("dynamic pattern states disagree on grid");
}

std::vector<double> differential_phase_deg(const DynamicPattern& dp) {
    validate_pattern(dp);
    const std::size_t n = dp.state1.grid.size();
    std::vector<double> dphi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx g1 = dp.state1.gains[i];
        const cplx g2 = dp.state2.gains[i];
        if (std::abs(g1) == 0.0 || std::abs(g2) == 0.0)
            throw std::invalid_argument("differential phase undefined: zero gain at " +
                                        std::to_string(dp.state1.grid.values_deg[i]) + " deg");
        dphi[i] = rad_to_deg(std::arg(g1)) - rad_to_deg(std::arg(g2));
    }

    // Nearest-branch unwrap along increasing angle.
    for (std::size_t i = 1; i < n; ++i)
        dphi[i] += 360.0 * std::round((dphi[i - 1] - dphi[i]) / 360.0);

    // Re-anchor: the sample nearest broadside picks the (-180, 180] branch.
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(dp.state1.grid.values_deg[i]) < std::abs(dp.state1.grid.values_deg[i0]))
            i0 = i;
    const double shift = 360.0 * std::ceil((dphi[i0] - 180.0) / 360.0);
    if (shift != 0.0)
        for (double& v : dphi) v -= shift;
    return dphi;
}

PhaseSlopeFit fit_phase_slope(const DynamicPattern& dp, double fit_half_range_deg) {
    if (!(fit_half_range_deg > 0.0) || fit_half_range_deg > 180.0)
        throw std::invalid_argument("fit half range must lie in (0, 180] deg");
    const AngleGrid& grid = dp.state1.grid;
    if (grid.values_deg.empty())
        throw std::invalid_argument("pattern cut has an empty grid");
    if (grid.start_deg > -fit_half_range_deg + 1e-9 || grid.stop_deg < fit_half_range_deg - 1e-9)
        throw std::invalid_argument("grid does not cover the fit range +/-" +
                                    std::to_string(fit_half_range_deg) + " deg");

    const std::vector<double> dphi = differential_phase_deg(dp);

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.values_deg[i];
        if (std::abs(x) > fit_half_range_deg + 1e-9) continue;
        sx += x;
        sy += dphi[i];
        sxx += x * x;
        sxy += x * dphi[i];
        ++m;
    }
    if (m < 3) throw std::invalid_argument("fewer than 3 grid points in fit range");

    const double denom = static_cast<double>(m) * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("degenerate abscissa in slope fit");
    const double slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / static_cast<double>(m);

    double ss = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.values_deg[i];
        if (std::abs(x) > fit_half_range_deg + 1e-9) continue;
        const double r = dphi[i] - (slope * x + intercept);
        ss += r * r;
    }
    return PhaseSlopeFit{slope, intercept, fit_half_range_deg,
                         std::sqrt(ss / static_cast<double>(m))};
}

double staticness(const DynamicPattern& dp) {
    validate_pattern(dp);
    double max_diff = 0.0, max_ref = 0.0;
    for (std::size_t i = 0; i < dp.state1.gains.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(dp.state1.gains[i] - dp.state2.gains[i]));
        max_ref = std::max(max_ref, std::abs(dp.state1.gains[i]));
    }
    if (max_ref == 0.0) throw std::invalid_argument("staticness undefined: state 1 is all zero");
    return max_diff / max_ref;
}

std::vector<double> gain_db(const PatternCut& cut) {
    validate_cut(cut);
    std::vector<double> db(cut.gains.size());
    for (std::size_t i = 0; i < cut.gains.size(); ++i) {
        const double mag = std::abs(cut.gains[i]);
        db[i] = mag > 0.0 ? std::max(20.0 * std::log10(mag), kGainFloorDb) : kGainFloorDb;
    }
    return db;
}

} // namespace dmsim
