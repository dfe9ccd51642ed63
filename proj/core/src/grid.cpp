#include "fisherwit/error.hpp"
#include "fisherwit/sweeps.hpp"

#include <cmath>

namespace fisherwit {

std::vector<double> grid_points(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw ValidationError("grid: start, stop and step must be finite");
    }
    if (start > stop) throw ValidationError("grid: start must be <= stop");
    if (!(step > 0.0)) throw ValidationError("grid: step must be > 0");
    const double span = (stop - start) / step;
    if (span > 1e6) throw ValidationError("grid: more than a million points");

    const auto n = static_cast<long>(std::floor(span + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 2);
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
    if (std::abs(out.back() - stop) <= 1e-9 * step) {
        out.back() = stop;
    } else {
        out.push_back(stop);
    }
    return out;
}

}  // namespace fisherwit
