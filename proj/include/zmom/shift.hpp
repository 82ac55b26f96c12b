// The complex shift delta = delta1 + i delta2 with its region parameter a.
#pragma once

#include <cmath>
#include <complex>

#include "zmom/errors.hpp"

namespace zmom {

struct Shift {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double a = 1.0; // region parameter, > 0

    Shift() = default;
    Shift(double d1, double d2, double region_a = 1.0) : delta1(d1), delta2(d2), a(region_a) {
        if (!(a > 0.0)) throw OutsideRegion("region parameter a must be positive");
        if (!(std::fabs(delta2) <= 10.0))
            throw OutsideRegion("|Im delta| must be <= 10");
        if (!std::isfinite(delta1) || !std::isfinite(delta2))
            throw OutsideRegion("non-finite shift");
    }

    std::complex<double> value() const { return {delta1, delta2}; }
    double abs() const { return std::hypot(delta1, delta2); }
    Shift conj() const { return Shift(delta1, -delta2, a); }

    // -a/log T <= delta1 <= 1/2 + a/log T (the theorem strip)
    bool in_theorem_region(double T) const {
        double lt = std::log(T);
        return delta1 >= -a / lt && delta1 <= 0.5 + a / lt;
    }
};

} // namespace zmom
