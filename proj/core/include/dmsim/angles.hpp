#pragma once

#include <cstddef>
#include <vector>

namespace dmsim {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle to the principal branch (-180, 180].
double wrap_deg(double deg);

/// Uniform, strictly increasing grid of observation angles in degrees.
/// All values lie in [-180, 180]; spacing is uniform to 1e-9 deg.
struct AngleGrid {
    double start_deg = 0.0;
    double stop_deg = 0.0;
    double step_deg = 0.0;
    std::vector<double> values_deg;

    std::size_t size() const { return values_deg.size(); }

    /// True when the grid spans the whole circle, with or without a
    /// duplicated +/-180 endpoint sample.
    bool full_circle() const;

    /// True when start and stop name the same physical angle (span == 360).
    bool duplicate_endpoint() const;

    /// Index of the grid sample nearest to theta_deg. Throws when theta
    /// falls outside the grid coverage (more than half a step beyond an
    /// endpoint). Lookup never interpolates.
    std::size_t nearest_index(double theta_deg) const;
};

/// Builds a uniform grid with (stop-start)/step + 1 samples.
/// Requires step > 0, stop > start, an integral span/step ratio (to 1e-6)
/// and a range inside [-180, 180].
AngleGrid make_grid(double start_deg, double stop_deg, double step_deg);

} // namespace dmsim
