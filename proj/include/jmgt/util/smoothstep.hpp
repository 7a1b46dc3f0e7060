#pragma once

namespace jmgt {

/// Quintic smoothstep 6u^5 - 15u^4 + 10u^3 on [0,1]; C^2, with vanishing
/// first and second derivatives at both ends, exactly 0/1 outside.
struct Smoothstep {
    static double value(double u) {
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
    }
    static double d1(double u) {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        return u * u * (30.0 + u * (-60.0 + 30.0 * u));
    }
    static double d2(double u) {
        if (u <= 0.0 || u >= 1.0) return 0.0;
        return u * (60.0 + u * (-180.0 + 120.0 * u));
    }
};

} // namespace jmgt
