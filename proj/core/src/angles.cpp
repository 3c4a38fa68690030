#include "dmsim/angles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dmsim {

double wrap_deg(double deg) {
    double r = std::fmod(deg + 180.0, 360.0);
    if (r <= 0.0) r += 360.0;
    return r - 180.0;
}

bool AngleGrid::full_circle() const {
    return stop_deg - start_deg >= 360.0 - step_deg - 1e-9;
}

bool AngleGrid::duplicate_endpoint() const {
    return std::abs((stop_deg - start_deg) - 360.0) <= 1e-9;
}

std::size_t AngleGrid::nearest_index(double theta_deg) const {
    if (values_deg.empty()) throw std::invalid_argument("empty angle grid");
    const double pos = (theta_deg - start_deg) / step_deg;
    const long long i = std::llround(pos);
    if (i < 0 || i >= static_cast<long long>(values_deg.size()) ||
        std::abs(theta_deg - values_deg[static_cast<std::size_t>(i)]) > step_deg / 2.0 + 1e-9) {
        throw std::invalid_argument("angle " + std::to_string(theta_deg) +
                                    " deg is outside grid coverage [" +
                                    std::to_string(start_deg) + ", " +
                                    std::to_string(stop_deg) + "]");
    }
    return static_cast<std::size_t>(i);
}

AngleGrid make_grid(double start_deg, double stop_deg, double step_deg) {
    if (!(step_deg > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (!(stop_deg > start_deg)) throw std::invalid_argument("grid stop must exceed start");
    if (start_deg < -180.0 - 1e-9 || stop_deg > 180.0 + 1e-9)
        throw std::invalid_argument("grid range must lie inside [-180, 180] deg");

    const double ratio = (stop_deg - start_deg) / step_deg;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-6 * std::max(1.0, std::abs(ratio)))
        throw std::invalid_argument("grid span is not an integral number of steps");

    const auto n = static_cast<std::size_t>(rounded) + 1;
    AngleGrid grid{start_deg, stop_deg, step_deg, {}};
    grid.values_deg.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        grid.values_deg[i] = start_deg + static_cast<double>(i) * step_deg;
    return grid;
}

} // namespace dmsim
