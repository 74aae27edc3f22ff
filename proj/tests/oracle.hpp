#pragma once

// Brute-force reference integrator for test expectations. Composite trapezoid
// on a uniform grid; shares no code path with the adaptive engine under test.

#include <cstddef>

namespace oracle {

template <class F>
double trapezoid(F&& f, double lo, double hi, std::size_t panels = (std::size_t{1} << 21)) {
    const double h = (hi - lo) / static_cast<double>(panels);
    double sum = 0.5 * (f(lo) + f(hi));
    for (std::size_t i = 1; i < panels; ++i) sum += f(lo + static_cast<double>(i) * h);
    return sum * h;
}

}  // namespace oracle
