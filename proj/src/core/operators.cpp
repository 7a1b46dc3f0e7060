#include "jmgt/core/operators.hpp"

#include <algorithm>
#include <cmath>

namespace jmgt {

const char* role_name(Role r) {
    switch (r) {
        case Role::u: return "u";
        case Role::u_t: return "u_t";
        case Role::u_tt: return "u_tt";
        case Role::source: return "source";
        case Role::trace: return "trace";
    }
    return "u";
}

Role role_from_name(const std::string& s) {
    if (s == "u") return Role::u;
    if (s == "u_t") return Role::u_t;
    if (s == "u_tt") return Role::u_tt;
    if (s == "source") return Role::source;
    if (s == "trace") return Role::trace;
    fail(ErrorKind::argument, "unknown field role: " + s);
}

void laplacian_interior(const Grid& g, const cplx* in, cplx* out) {
    const int nx = g.nx(), ny = g.ny();
    const double cx = 1.0 / (g.hx() * g.hx());
    const double cy = 1.0 / (g.hy() * g.hy());
    const double c0 = -2.0 * (cx + cy);
    if (g.is_full_rectangle()) {
        for (int iy = 1; iy < ny - 1; ++iy) {
            const std::size_t o = static_cast<std::size_t>(iy) * nx + 1;
            kernels::stencil5_row(nx - 2, c0, cx, cy, in + o, in + o - nx,
                                  in + o + nx, out + o);
        }
        return;
    }
    for (int iy = 1; iy < ny - 1; ++iy)
        for (int ix = 1; ix < nx - 1; ++ix) {
            if (g.kind(ix, iy) != CellKind::interior) continue;
            const std::size_t o = static_cast<std::size_t>(iy) * nx + ix;
            out[o] = c0 * in[o] + cx * (in[o - 1] + in[o + 1]) +
                     cy * (in[o - nx] + in[o + nx]);
        }
}

namespace {

// Second derivative along one axis at a node, second-order one-sided when the
// node sits on the boundary ring; `stride` is the index step along the axis.
cplx d2_axis(const Grid& g, const cplx* in, int ix, int iy, int dx, int dy,
             double h) {
    const int nx = g.nx(), ny = g.ny();
    auto ok = [&](int jx, int jy) {
        return jx >= 0 && jx < nx && jy >= 0 && jy < ny && g.in_domain(jx, jy);
    };
    const std::size_t o = static_cast<std::size_t>(iy) * nx + ix;
    const long stride = dy * nx + dx;
    if (ok(ix - dx, iy - dy) && ok(ix + dx, iy + dy))
        return (in[o - stride] - 2.0 * in[o] + in[o + stride]) / (h * h);
    int s = ok(ix + dx, iy + dy) ? 1 : -1;
    if (!ok(ix + s * dx, iy + s * dy)) return {};
    if (ok(ix + 3 * s * dx, iy + 3 * s * dy))
        return (2.0 * in[o] - 5.0 * in[o + s * stride] + 4.0 * in[o + 2 * s * stride] -
                in[o + 3 * s * stride]) /
               (h * h);
    if (ok(ix + 2 * s * dx, iy + 2 * s * dy))
        return (in[o] - 2.0 * in[o + s * stride] + in[o + 2 * s * stride]) / (h * h);
    return {};
}

cplx d1_axis(const Grid& g, const cplx* in, int ix, int iy, int dx, int dy,
             double h) {
    const int nx = g.nx(), ny = g.ny();
    auto ok = [&](int jx, int jy) {
        return jx >= 0 && jx < nx && jy >= 0 && jy < ny && g.in_domain(jx, jy);
    };
    const std::size_t o = static_cast<std::size_t>(iy) * nx + ix;
    const long stride = dy * nx + dx;
    if (ok(ix - dx, iy - dy) && ok(ix + dx, iy + dy))
        return (in[o + stride] - in[o - stride]) / (2.0 * h);
    int s = ok(ix + dx, iy + dy) ? 1 : -1;
    if (!ok(ix + s * dx, iy + s * dy)) return {};
    if (ok(ix + 2 * s * dx, iy + 2 * s * dy))
        return static_cast<double>(s) *
               (-3.0 * in[o] + 4.0 * in[o + s * stride] - in[o + 2 * s * stride]) /
               (2.0 * h);
    return static_cast<double>(s) * (in[o + s * stride] - in[o]) / h;
}

} // namespace

void laplacian_domain(const Grid& g, const cplx* in, cplx* out) {
    laplacian_interior(g, in, out);
    for (const auto& bn : g.boundary()) {
        const std::size_t o = static_cast<std::size_t>(bn.iy) * g.nx() + bn.ix;
        out[o] = d2_axis(g, in, bn.ix, bn.iy, 1, 0, g.hx()) +
                 d2_axis(g, in, bn.ix, bn.iy, 0, 1, g.hy());
    }
}

void gradient_at(const Grid& g, const cplx* in, int ix, int iy, cplx& gx, cplx& gy) {
    gx = d1_axis(g, in, ix, iy, 1, 0, g.hx());
    gy = d1_axis(g, in, ix, iy, 0, 1, g.hy());
}

// ---- Fornberg weights for one-sided time differences --------------------

namespace detail {

// Fornberg weights for the m-th derivative evaluated at node `at` of the
// unit-spaced stencil {0, 1, ..., n-1}.
std::vector<double> fd_weights_at(int m, int n, int at) {
    std::vector<double> c(static_cast<std::size_t>(n) * (m + 1), 0.0);
    auto C = [&](int j, int s) -> double& {
        return c[static_cast<std::size_t>(j) * (m + 1) + s];
    };
    auto xv = [&](int i) { return static_cast<double>(i - at); };
    double c1 = 1.0;
    C(0, 0) = 1.0;
    for (int j = 1; j < n; ++j) {
        double c2 = 1.0;
        const int mn = std::min(j, m);
        for (int k = 0; k < j; ++k) {
            const double c3 = xv(j) - xv(k);
            c2 *= c3;
            if (k == j - 1) {
                for (int s = mn; s >= 1; --s)
                    C(j, s) = c1 * (s * C(j - 1, s - 1) - xv(j) * C(j - 1, s)) / c2;
                C(j, 0) = -c1 * xv(j) * C(j - 1, 0) / c2;
            }
            for (int s = mn; s >= 1; --s)
                C(k, s) = (-xv(k) * C(k, s) - s * C(k, s - 1)) / c3;
            C(k, 0) = -xv(k) * C(k, 0) / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = C(j, m);
    return w;
}

} // namespace detail

namespace {
using detail::fd_weights_at;
std::vector<double> fd_weights(int m, int n) { return fd_weights_at(m, n, 0); }
} // namespace

void time_derivative_level(const SpaceTimeField& f, int k, int order, double dt,
                           cplx* out) {
    const int nlev = f.nlev();
    const std::size_t n = f.level_size();
    const double sc = 1.0 / std::pow(dt, order);
    std::fill(out, out + n, cplx{});
    auto acc = [&](double w, int lev) {
        kernels::caxpy(n, cplx(w * sc), f.level(lev), out);
    };
    if (order == 1 && k >= 1 && k <= nlev - 2) {
        acc(-0.5, k - 1);
        acc(0.5, k + 1);
        return;
    }
    if (order == 2 && k >= 1 && k <= nlev - 2) {
        acc(1.0, k - 1);
        acc(-2.0, k);
        acc(1.0, k + 1);
        return;
    }
    if (order == 3 && k >= 2 && k <= nlev - 3) {
        acc(-0.5, k - 2);
        acc(1.0, k - 1);
        acc(-1.0, k + 1);
        acc(0.5, k + 2);
        return;
    }
    // One-sided closure: order+2 nodes give second-order accuracy.
    const int pts = std::min(nlev, order + 3);
    if (pts < order + 1)
        fail(ErrorKind::data, "time_derivative_level: too few time levels");
    const bool fwd = k < nlev / 2;
    const int base = fwd ? std::min(k, nlev - pts) : std::max(0, k - (pts - 1));
    if (base < 0 || base + pts > nlev)
        fail(ErrorKind::data, "time_derivative_level: stencil out of range");
    const std::vector<double> w = fd_weights_at(order, pts, k - base);
    for (int j = 0; j < pts; ++j)
        if (w[j] != 0.0) acc(w[j], base + j);
}

SpaceTimeField time_derivative(const SpaceTimeField& f, double dt, int order) {
    SpaceTimeField out(f.nx(), f.ny(), f.nlev(),
                       order == 1 ? Role::u_t : Role::u_tt);
    for (int k = 0; k < f.nlev(); ++k)
        time_derivative_level(f, k, order, dt, out.level(k));
    return out;
}

ApplyPWindow apply_P_window(const Grid& g) { return {2, g.nt() - 2}; }

SpaceTimeField apply_P(const SpaceTimeField& u, const Coefficients& coeff,
                       const Grid& g) {
    u.require_matches(g, "apply_P");
    if (g.nlev() < 5)
        fail(ErrorKind::shape, "apply_P: need at least 5 time levels");
    const double dt = g.dt();
    const std::size_t n = u.level_size();
    SpaceTimeField out(g, Role::source);
    std::vector<cplx> ut(n), lap_ut(n), lap_u(n), acc(n);
    const auto win = apply_P_window(g);
    for (int k = win.k_lo; k <= win.k_hi; ++k) {
        // u_t at k (central), on the full grid so near-boundary stencils see it
        for (std::size_t i = 0; i < n; ++i)
            ut[i] = (u.level(k + 1)[i] - u.level(k - 1)[i]) / (2.0 * dt);
        std::fill(lap_ut.begin(), lap_ut.end(), cplx{});
        std::fill(lap_u.begin(), lap_u.end(), cplx{});
        laplacian_interior(g, ut.data(), lap_ut.data());
        laplacian_interior(g, u.level(k), lap_u.data());
        for (std::size_t i = 0; i < n; ++i) {
            const cplx uttt = (u.level(k + 2)[i] - 2.0 * u.level(k + 1)[i] +
                               2.0 * u.level(k - 1)[i] - u.level(k - 2)[i]) /
                              (2.0 * dt * dt * dt);
            const cplx utt =
                (u.level(k + 1)[i] - 2.0 * u.level(k)[i] + u.level(k - 1)[i]) /
                (dt * dt);
            acc[i] = uttt + coeff.alpha() * utt;
        }
        kernels::caxpy(n, cplx(-coeff.b()), lap_ut.data(), acc.data());
        kernels::caxpy(n, cplx(-coeff.c() * coeff.c()), lap_u.data(), acc.data());
        // Keep only interior nodes; the stencil is not a boundary operator.
        cplx* dst = out.level(k);
        for (int node : g.interior_nodes()) dst[node] = acc[node];
    }
    return out;
}

SpaceTimeField apply_P_factorized(const SpaceTimeField& u,
                                  const Coefficients& coeff, const Grid& g) {
    u.require_matches(g, "apply_P_factorized");
    if (g.nlev() < 5)
        fail(ErrorKind::shape, "apply_P_factorized: need at least 5 time levels");
    const double dt = g.dt();
    const std::size_t n = u.level_size();
    const double beta = coeff.beta(), gamma = coeff.gamma(), b = coeff.b();
    // ut by the same central difference composed below into L(u_t).
    SpaceTimeField ut(g, Role::u_t);
    for (int k = 1; k < g.nt(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            ut.level(k)[i] = (u.level(k + 1)[i] - u.level(k - 1)[i]) / (2.0 * dt);
    SpaceTimeField out(g, Role::source);
    std::vector<cplx> lap(n), acc(n);
    const auto win = apply_P_window(g);
    for (int k = win.k_lo; k <= win.k_hi; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const cplx ut_tt = (ut.level(k + 1)[i] - 2.0 * ut.level(k)[i] +
                                ut.level(k - 1)[i]) /
                               (dt * dt);
            const cplx u_tt =
                (u.level(k + 1)[i] - 2.0 * u.level(k)[i] + u.level(k - 1)[i]) /
                (dt * dt);
            acc[i] = ut_tt + beta * u_tt + gamma * u_tt;
        }
        std::fill(lap.begin(), lap.end(), cplx{});
        laplacian_interior(g, ut.level(k), lap.data());
        kernels::caxpy(n, cplx(-b), lap.data(), acc.data());
        std::fill(lap.begin(), lap.end(), cplx{});
        laplacian_interior(g, u.level(k), lap.data());
        kernels::caxpy(n, cplx(-b * beta), lap.data(), acc.data());
        cplx* dst = out.level(k);
        for (int node : g.interior_nodes()) dst[node] = acc[node];
    }
    return out;
}

void boundary_trace(const Grid& g, const cplx* level, cplx* out_nb) {
    const auto& bn = g.boundary();
    for (std::size_t i = 0; i < bn.size(); ++i)
        out_nb[i] = level[static_cast<std::size_t>(bn[i].iy) * g.nx() + bn[i].ix];
}

BoundaryField dtn_trace(const SpaceTimeField& u, const Grid& g) {
    u.require_matches(g, "dtn_trace");
    BoundaryField out(g);
    const int nx = g.nx(), ny = g.ny();
    for (int k = 0; k < g.nlev(); ++k) {
        const cplx* lev = u.level(k);
        for (int i = 0; i < g.boundary_count(); ++i) {
            const auto& bn = g.boundary()[i];
            cplx dx{}, dy{};
            auto ok = [&](int jx, int jy) {
                return jx >= 0 && jx < nx && jy >= 0 && jy < ny && g.in_domain(jx, jy);
            };
            auto one_sided = [&](int sx, int sy, double h) -> cplx {
                const long stride = sy * nx + sx;
                const std::size_t o = static_cast<std::size_t>(bn.iy) * nx + bn.ix;
                if (!ok(bn.ix + 2 * sx, bn.iy + 2 * sy)) {
                    if (!ok(bn.ix + sx, bn.iy + sy))
                        fail(ErrorKind::geometry,
                             "dtn_trace: no interior neighbors along the normal");
                    return (lev[o + stride] - lev[o]) / h;
                }
                return (-3.0 * lev[o] + 4.0 * lev[o + stride] -
                        lev[o + 2 * stride]) /
                       (2.0 * h);
            };
            if (std::abs(bn.nx) > 1e-14) {
                const int s = bn.nx > 0 ? -1 : 1; // differentiate into the domain
                dx = -static_cast<double>(s) * one_sided(s, 0, g.hx());
            }
            if (std::abs(bn.ny) > 1e-14) {
                const int s = bn.ny > 0 ? -1 : 1;
                dy = -static_cast<double>(s) * one_sided(0, s, g.hy());
            }
            out(k, i) = bn.nx * dx + bn.ny * dy;
        }
    }
    return out;
}

std::vector<double> energy(const SpaceTimeField& u, const SpaceTimeField& ut,
                           const SpaceTimeField& utt, const Grid& g) {
    u.require_matches(g, "energy");
    ut.require_matches(g, "energy");
    utt.require_matches(g, "energy");
    const std::size_t n = u.level_size();
    const auto& w = g.area_weights();
    std::vector<double> E(g.nlev(), 0.0);
    std::vector<cplx> lap(n);
    for (int k = 0; k < g.nlev(); ++k) {
        double e = kernels::wsumsq(n, w.data(), ut.level(k)) +
                   kernels::wsumsq(n, w.data(), utt.level(k));
        std::fill(lap.begin(), lap.end(), cplx{});
        laplacian_domain(g, u.level(k), lap.data());
        e += kernels::wsumsq(n, w.data(), lap.data());
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int ix = 0; ix < g.nx(); ++ix) {
                const double wi = w[g.idx(ix, iy)];
                if (wi == 0.0) continue;
                cplx gx, gy;
                gradient_at(g, u.level(k), ix, iy, gx, gy);
                e += wi * (std::norm(gx) + std::norm(gy));
                gradient_at(g, ut.level(k), ix, iy, gx, gy);
                e += wi * (std::norm(gx) + std::norm(gy));
            }
        E[k] = 0.5 * e;
    }
    return E;
}

double l2_omega(const Grid& g, const cplx* level) {
    return std::sqrt(kernels::wsumsq(g.area_weights().size(),
                                     g.area_weights().data(), level));
}

double h1_omega(const Grid& g, const cplx* level) {
    double s = kernels::wsumsq(g.area_weights().size(), g.area_weights().data(),
                               level);
    for (int iy = 0; iy < g.ny(); ++iy)
        for (int ix = 0; ix < g.nx(); ++ix) {
            const double wi = g.area_weights()[g.idx(ix, iy)];
            if (wi == 0.0) continue;
            cplx gx, gy;
            gradient_at(g, level, ix, iy, gx, gy);
            s += wi * (std::norm(gx) + std::norm(gy));
        }
    return std::sqrt(s);
}

double trapezoid_time(const std::vector<double>& per_level, double dt) {
    double s = 0.0;
    for (std::size_t k = 0; k < per_level.size(); ++k) {
        const double w = (k == 0 || k + 1 == per_level.size()) ? 0.5 : 1.0;
        s += w * per_level[k];
    }
    return s * dt;
}

double l2_q(const SpaceTimeField& u, const Grid& g) {
    std::vector<double> sq(g.nlev());
    for (int k = 0; k < g.nlev(); ++k)
        sq[k] = kernels::wsumsq(u.level_size(), g.area_weights().data(), u.level(k));
    return std::sqrt(trapezoid_time(sq, g.dt()));
}

namespace {
double h2_surrogate(const Grid& g, const cplx* level) {
    const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
    std::vector<cplx> lap(n, cplx{});
    laplacian_domain(g, level, lap.data());
    const double h1 = h1_omega(g, level);
    const double l2lap =
        std::sqrt(kernels::wsumsq(n, g.area_weights().data(), lap.data()));
    return std::sqrt(h1 * h1 + l2lap * l2lap);
}
} // namespace

double em_surrogate(const SpaceTimeField& u, const SpaceTimeField& ut,
                    const SpaceTimeField& utt, const Grid& g, int m) {
    if (m < 0 || m > 2)
        fail(ErrorKind::argument, "em_surrogate: only m <= 2 is provided");
    double best = 0.0;
    for (int k = 0; k < g.nlev(); ++k) {
        double s = 0.0;
        switch (m) {
            case 0: s = l2_omega(g, u.level(k)); break;
            case 1: s = h1_omega(g, u.level(k)) + l2_omega(g, ut.level(k)); break;
            case 2:
                s = h2_surrogate(g, u.level(k)) + h1_omega(g, ut.level(k)) +
                    l2_omega(g, utt.level(k));
                break;
        }
        best = std::max(best, s);
    }
    return best;
}

double discrete_norm(const SpaceTimeField& u, const Grid& g, NormKind kind,
                     int at_level) {
    u.require_matches(g, "discrete_norm");
    switch (kind) {
        case NormKind::L2_Q: return l2_q(u, g);
        case NormKind::L2_Omega_at_t: return l2_omega(g, u.level(at_level));
        case NormKind::H1_Omega_at_t: return h1_omega(g, u.level(at_level));
        case NormKind::Em_surrogate:
            fail(ErrorKind::argument,
                 "discrete_norm: Em_surrogate needs companions; call em_surrogate");
    }
    fail(ErrorKind::argument, "discrete_norm: unsupported kind");
}

CompatReport check_compatibility(const DataTuple& data, const Coefficients& coeff,
                                 const Grid& g, int order, double tol) {
    const int nb = g.boundary_count();
    const int nlev = g.nlev();
    if (data.h.nb() != nb || data.h.nlev() != nlev)
        fail(ErrorKind::shape, "check_compatibility: trace shape mismatch");
    CompatReport rep;
    rep.tolerance = tol;

    // dt^k h(., 0) by one-sided differences; k+3 levels give second order.
    auto h_derivative0 = [&](int k) {
        std::vector<cplx> out(nb, cplx{});
        if (k == 0) {
            for (int i = 0; i < nb; ++i) out[i] = data.h(0, i);
            return out;
        }
        const int pts = k + 3;
        if (nlev < pts)
            fail(ErrorKind::data,
                 "check_compatibility: too few time levels in h for order " +
                     std::to_string(k));
        std::vector<double> w = fd_weights(k, pts);
        const double sc = 1.0 / std::pow(g.dt(), k);
        for (int j = 0; j < pts; ++j)
            for (int i = 0; i < nb; ++i) out[i] += sc * w[j] * data.h(j, i);
        return out;
    };

    // dt^j u(., 0) on the full grid via the equation; j = 0..order-1 needed.
    const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
    std::vector<std::vector<cplx>> du; // du[j][node]
    du.emplace_back(n);
    std::copy(data.u0.data(), data.u0.data() + n, du[0].begin());
    du.emplace_back(n);
    std::copy(data.u1.data(), data.u1.data() + n, du[1].begin());
    du.emplace_back(n);
    std::copy(data.u2.data(), data.u2.data() + n, du[2].begin());

    for (int j = 3; j <= order - 1; ++j) {
        std::vector<cplx> next(n, cplx{}), lap1(n, cplx{}), lap2(n, cplx{});
        laplacian_domain(g, du[j - 2].data(), lap1.data());
        laplacian_domain(g, du[j - 3].data(), lap2.data());
        std::vector<cplx> fm;
        if (data.has_f()) {
            fm.assign(n, cplx{});
            if (j - 3 == 0)
                std::copy(data.f.level(0), data.f.level(0) + n, fm.begin());
            else
                time_derivative_level(data.f, 0, j - 3, g.dt(), fm.data());
        } else {
            fm.assign(n, cplx{});
        }
        for (std::size_t i = 0; i < n; ++i)
            next[i] = -coeff.alpha() * du[j - 1][i] + coeff.b() * lap1[i] +
                      coeff.c() * coeff.c() * lap2[i] + fm[i];
        du.push_back(std::move(next));
    }

    for (int k = 0; k <= order; ++k) {
        std::vector<cplx> hk = h_derivative0(k);
        double res = 0.0;
        if (k <= 2) {
            const SpatialField& ui = (k == 0 ? data.u0 : (k == 1 ? data.u1 : data.u2));
            for (int i = 0; i < nb; ++i) {
                const auto& b = g.boundary()[i];
                res = std::max(res, std::abs(ui(b.ix, b.iy) - hk[i]));
            }
        } else {
            // dt^k h(0) must equal the PDE-propagated value on Gamma.
            std::vector<cplx> lap1(n, cplx{}), lap2(n, cplx{}), fm(n, cplx{});
            laplacian_domain(g, du[k - 2].data(), lap1.data());
            laplacian_domain(g, du[k - 3].data(), lap2.data());
            if (data.has_f()) {
                if (k - 3 == 0)
                    std::copy(data.f.level(0), data.f.level(0) + n, fm.begin());
                else
                    time_derivative_level(data.f, 0, k - 3, g.dt(), fm.data());
            }
            for (int i = 0; i < nb; ++i) {
                const auto& b = g.boundary()[i];
                const std::size_t o = static_cast<std::size_t>(b.iy) * g.nx() + b.ix;
                const cplx rhs = -coeff.alpha() * du[k - 1][o] + coeff.b() * lap1[o] +
                                 coeff.c() * coeff.c() * lap2[o] + fm[o];
                res = std::max(res, std::abs(hk[i] - rhs));
            }
        }
        rep.residuals.push_back(res);
    }
    return rep;
}

} // namespace jmgt
