#include "jmgt/nonlinear/nonlinearity.hpp"

#include "jmgt/core/operators.hpp"
#include "jmgt/util/smoothstep.hpp"

#include <algorithm>
#include <cmath>

namespace jmgt {

namespace {

struct Window {
    double lo, hi, ramp;
    double value(double t) const {
        return Smoothstep::value((t - lo) / ramp) *
               Smoothstep::value((hi - t) / ramp);
    }
    double d1(double t) const {
        const double a = (t - lo) / ramp, b = (hi - t) / ramp;
        return (Smoothstep::d1(a) * Smoothstep::value(b) -
                Smoothstep::value(a) * Smoothstep::d1(b)) /
               ramp;
    }
    double d2(double t) const {
        const double a = (t - lo) / ramp, b = (hi - t) / ramp;
        return (Smoothstep::d2(a) * Smoothstep::value(b) -
                2.0 * Smoothstep::d1(a) * Smoothstep::d1(b) +
                Smoothstep::value(a) * Smoothstep::d2(b)) /
               (ramp * ramp);
    }
};

} // namespace

NonlinearityField NonlinearityField::zero(const Grid& g) {
    NonlinearityField f;
    f.lev_size_ = static_cast<std::size_t>(g.nx()) * g.ny();
    f.nlev_ = g.nlev();
    f.p_.assign(f.lev_size_ * f.nlev_, 0.0);
    f.pt_ = f.p_;
    f.ptt_ = f.p_;
    return f;
}

NonlinearityField NonlinearityField::gaussian_bump(
    const Grid& g, double amplitude, double x0, double y0, double wx, double wy,
    double t0, double wt, std::optional<std::pair<double, double>> window) {
    NonlinearityField f = zero(g);
    f.window_ = window;
    Window win{};
    if (window) {
        win.lo = window->first;
        win.hi = window->second;
        win.ramp = 0.2 * (win.hi - win.lo);
        if (!(win.ramp > 0))
            fail(ErrorKind::argument, "gaussian_bump: empty support window");
    }
    for (int k = 0; k < g.nlev(); ++k) {
        const double t = g.t(k);
        const double gt = std::exp(-0.5 * (t - t0) * (t - t0) / (wt * wt));
        // time factor tau(t) = gt * win, with exact derivatives
        const double gt1 = gt * (-(t - t0) / (wt * wt));
        const double gt2 =
            gt * ((t - t0) * (t - t0) / (wt * wt * wt * wt) - 1.0 / (wt * wt));
        double tau = gt, tau1 = gt1, tau2 = gt2;
        if (window) {
            const double w0 = win.value(t), w1 = win.d1(t), w2 = win.d2(t);
            tau = gt * w0;
            tau1 = gt1 * w0 + gt * w1;
            tau2 = gt2 * w0 + 2.0 * gt1 * w1 + gt * w2;
        }
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int ix = 0; ix < g.nx(); ++ix) {
                const double dx = g.x(ix) - x0, dy = g.y(iy) - y0;
                const double sp =
                    amplitude *
                    std::exp(-0.5 * (dx * dx / (wx * wx) + dy * dy / (wy * wy)));
                const std::size_t o = f.lev_size_ * k + g.idx(ix, iy);
                f.p_[o] = sp * tau;
                f.pt_[o] = sp * tau1;
                f.ptt_[o] = sp * tau2;
            }
    }
    return f;
}

NonlinearityField NonlinearityField::from_samples(
    const Grid& g, std::vector<double> values,
    std::optional<std::pair<double, double>> window) {
    NonlinearityField f = zero(g);
    if (values.size() != f.p_.size())
        fail(ErrorKind::shape, "nonlinearity: sample count does not match grid");
    f.p_ = std::move(values);
    f.window_ = window;
    const double dt = g.dt();
    const int nlev = g.nlev();
    auto at = [&](int k, std::size_t i) { return f.p_[f.lev_size_ * k + i]; };
    for (int k = 0; k < nlev; ++k)
        for (std::size_t i = 0; i < f.lev_size_; ++i) {
            double d1, d2;
            if (k >= 1 && k <= nlev - 2) {
                d1 = (at(k + 1, i) - at(k - 1, i)) / (2 * dt);
                d2 = (at(k + 1, i) - 2 * at(k, i) + at(k - 1, i)) / (dt * dt);
            } else if (k == 0) {
                d1 = (-1.5 * at(0, i) + 2.0 * at(1, i) - 0.5 * at(2, i)) / dt;
                d2 = (2.0 * at(0, i) - 5.0 * at(1, i) + 4.0 * at(2, i) -
                      at(3, i)) /
                     (dt * dt);
            } else {
                d1 = (1.5 * at(k, i) - 2.0 * at(k - 1, i) + 0.5 * at(k - 2, i)) / dt;
                d2 = (2.0 * at(k, i) - 5.0 * at(k - 1, i) + 4.0 * at(k - 2, i) -
                      at(k - 3, i)) /
                     (dt * dt);
            }
            f.pt_[f.lev_size_ * k + i] = d1;
            f.ptt_[f.lev_size_ * k + i] = d2;
        }
    return f;
}

bool NonlinearityField::is_zero() const { return max_abs() == 0.0; }

double NonlinearityField::max_abs() const {
    double m = 0.0;
    for (double v : p_) m = std::max(m, std::abs(v));
    return m;
}

SpaceTimeField NonlinearityField::as_field(const Grid& g) const {
    SpaceTimeField f(g, Role::source);
    for (std::size_t i = 0; i < p_.size(); ++i) f.data()[i] = p_[i];
    return f;
}

double NonlinearityField::em_surrogate_norm(const Grid& g) const {
    SpaceTimeField p(g), pt(g), ptt(g);
    for (std::size_t i = 0; i < p_.size(); ++i) {
        p.data()[i] = p_[i];
        pt.data()[i] = pt_[i];
        ptt.data()[i] = ptt_[i];
    }
    return em_surrogate(p, pt, ptt, g, 2);
}

void NonlinearityField::check_admissible(const Coefficients& coeff,
                                         const Grid& g) const {
    const double norm = em_surrogate_norm(g);
    if (norm > coeff.big_m())
        fail(ErrorKind::argument,
             "nonlinearity: E2 surrogate norm " + std::to_string(norm) +
                 " exceeds the admissibility bound M = " +
                 std::to_string(coeff.big_m()));
}

void NonlinearityField::check_support(const Grid& g) const {
    if (!window_) return;
    for (int k = 0; k < nlev_; ++k) {
        const double t = g.t(k);
        if (t > window_->first && t < window_->second) continue;
        for (std::size_t i = 0; i < lev_size_; ++i)
            if (p_[lev_size_ * k + i] != 0.0)
                fail(ErrorKind::hypothesis,
                     "nonlinearity: nonzero value outside the support window");
    }
}

} // namespace jmgt
