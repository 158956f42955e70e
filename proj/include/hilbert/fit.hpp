#pragma once
// Power-law fit y = a * x^b by linear least squares in log-log space.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hilbert {

struct PowerLawFit {
    double a = 0;
    double b = 0;
};

inline PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("fit_power_law: need at least 2 points");
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        if (!(x > 0) || !(y > 0))
            throw std::invalid_argument("fit_power_law: points must be positive");
        long double lx = std::log(static_cast<long double>(x));
        long double ly = std::log(static_cast<long double>(y));
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    const long double n = static_cast<long double>(points.size());
    const long double denom = n * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("fit_power_law: degenerate x values");
    const long double b = (n * sxy - sx * sy) / denom;
    const long double loga = (sy - b * sx) / n;
    return {static_cast<double>(std::exp(loga)), static_cast<double>(b)};
}

}  // namespace hilbert
