#pragma once

#include "jmgt/core/error.hpp"

#include <string>

namespace jmgt {

/// Physical parameters of the MGT operator
///   P = d_ttt + alpha d_tt - b Lap d_t - c^2 Lap      (tau fixed at 1)
/// with the admissibility window 1/M <= alpha, b, c <= M. The derived
/// quantities beta = c^2/b and gamma = alpha - beta are recomputed from the
/// stored primaries, never cached.
class Coefficients {
  public:
    Coefficients(double alpha, double b, double c, double big_m = 16.0)
        : alpha_(alpha), b_(b), c_(c), big_m_(big_m) {
        if (!(big_m_ > 1.0))
            fail(ErrorKind::argument, "coefficients: M must be > 1");
        auto in_window = [&](double v) {
            return v >= 1.0 / big_m_ && v <= big_m_;
        };
        if (!in_window(alpha_) || !in_window(b_) || !in_window(c_))
            fail(ErrorKind::argument,
                 "coefficients: alpha, b, c must lie in [1/M, M] with M=" +
                     std::to_string(big_m_));
    }

    double alpha() const { return alpha_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double big_m() const { return big_m_; }
    double tau() const { return 1.0; }

    double beta() const { return c_ * c_ / b_; }
    double gamma() const { return alpha_ - beta(); }

  private:
    double alpha_, b_, c_, big_m_;
};

} // namespace jmgt
