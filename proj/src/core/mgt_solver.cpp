#include "jmgt/core/mgt_solver.hpp"

#include "jmgt/core/operators.hpp"
#include "jmgt/core/spatial_solver.hpp"
#include "jmgt/kernels/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace jmgt {

namespace {

// Contribution of boundary values to Lap_h at adjacent interior nodes.
struct BcScatter {
    int packed;  // interior packed index receiving the contribution
    int bindex;  // boundary node supplying the value
    double coef; // 1/hx^2 or 1/hy^2
};

std::vector<BcScatter> build_bc_scatter(const Grid& g) {
    std::vector<BcScatter> sc;
    const double cx = 1.0 / (g.hx() * g.hx());
    const double cy = 1.0 / (g.hy() * g.hy());
    for (int bi = 0; bi < g.boundary_count(); ++bi) {
        const auto& bn = g.boundary()[bi];
        auto add = [&](int jx, int jy, double c) {
            if (jx < 0 || jx >= g.nx() || jy < 0 || jy >= g.ny()) return;
            const int pk = g.interior_index(jx, jy);
            if (pk >= 0) sc.push_back({pk, bi, c});
        };
        add(bn.ix - 1, bn.iy, cx);
        add(bn.ix + 1, bn.iy, cx);
        add(bn.ix, bn.iy - 1, cy);
        add(bn.ix, bn.iy + 1, cy);
    }
    return sc;
}

inline void check_finite(const cplx* lev, std::size_t n, int step,
                         const char* who) {
    const double s =
        kernels::sumsq(2 * n, reinterpret_cast<const double*>(lev));
    if (!std::isfinite(s))
        fail(ErrorKind::divergence,
             std::string(who) + ": non-finite state at step " + std::to_string(step));
}

inline double* dbl(cplx* p) { return reinterpret_cast<double*>(p); }
inline const double* dbl(const cplx* p) { return reinterpret_cast<const double*>(p); }

} // namespace

BoundaryField boundary_time_derivative(const BoundaryField& h, double dt,
                                       int order) {
    const int nlev = h.nlev(), nb = h.nb();
    BoundaryField out(nb, nlev);
    const double sc = 1.0 / std::pow(dt, order);
    for (int k = 0; k < nlev; ++k) {
        if (order == 1 && k >= 1 && k <= nlev - 2) {
            for (int i = 0; i < nb; ++i)
                out(k, i) = sc * 0.5 * (h(k + 1, i) - h(k - 1, i));
            continue;
        }
        if (order == 2 && k >= 1 && k <= nlev - 2) {
            for (int i = 0; i < nb; ++i)
                out(k, i) = sc * (h(k + 1, i) - 2.0 * h(k, i) + h(k - 1, i));
            continue;
        }
        const int pts = std::min(nlev, order + 3);
        if (pts < order + 1)
            fail(ErrorKind::data, "boundary_time_derivative: too few levels");
        const int base = std::clamp(k - (k < nlev / 2 ? 0 : pts - 1), 0, nlev - pts);
        const auto w = detail::fd_weights_at(order, pts, k - base);
        for (int i = 0; i < nb; ++i) {
            cplx acc{};
            for (int j = 0; j < pts; ++j) acc += w[j] * h(base + j, i);
            out(k, i) = sc * acc;
        }
    }
    return out;
}

MgtSolution solve_linear(const DataTuple& data, const Coefficients& coeff,
                         const Grid& g) {
    const int nb = g.boundary_count();
    if (data.h.nb() != nb || data.h.nlev() != g.nlev())
        fail(ErrorKind::shape, "solve_linear: trace shape mismatch");
    if (data.u0.nx() != g.nx() || data.u0.ny() != g.ny() ||
        data.u1.nx() != g.nx() || data.u2.nx() != g.nx())
        fail(ErrorKind::shape, "solve_linear: initial data shape mismatch");
    if (data.has_f() && !data.f.matches(g))
        fail(ErrorKind::shape, "solve_linear: source shape mismatch");

    const double dt = g.dt(), th = 0.5 * dt;
    const double al = coeff.alpha(), b = coeff.b(), c2 = coeff.c() * coeff.c();
    const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
    const int ni = g.interior_count();

    MgtSolution sol{SpaceTimeField(g, Role::u), SpaceTimeField(g, Role::u_t),
                    SpaceTimeField(g, Role::u_tt)};
    std::copy(data.u0.data(), data.u0.data() + n, sol.u.level(0));
    std::copy(data.u1.data(), data.u1.data() + n, sol.ut.level(0));
    std::copy(data.u2.data(), data.u2.data() + n, sol.utt.level(0));

    const BoundaryField ht = boundary_time_derivative(data.h, dt, 1);
    const BoundaryField htt = boundary_time_derivative(data.h, dt, 2);

    HelmholtzSolver hs(g, 1.0 + th * al, th * th * (b + th * c2));
    const auto scatter = build_bc_scatter(g);
    const double sc_coef = th * th * (b + th * c2);

    std::vector<cplx> tmp(n), L1(n), L2(n), rhs(n), prhs(ni), pout(ni);

    for (int step = 0; step < g.nt(); ++step) {
        const cplx* U = sol.u.level(step);
        const cplx* V = sol.ut.level(step);
        const cplx* W = sol.utt.level(step);

        // L1 = Lap(V + th W), L2 = Lap(U + 2 th V + th^2 W)
        std::copy(V, V + n, tmp.begin());
        kernels::axpy(2 * n, th, dbl(W), dbl(tmp.data()));
        std::fill(L1.begin(), L1.end(), cplx{});
        laplacian_interior(g, tmp.data(), L1.data());

        std::copy(U, U + n, tmp.begin());
        kernels::axpy(2 * n, 2.0 * th, dbl(V), dbl(tmp.data()));
        kernels::axpy(2 * n, th * th, dbl(W), dbl(tmp.data()));
        std::fill(L2.begin(), L2.end(), cplx{});
        laplacian_interior(g, tmp.data(), L2.data());

        // rhs = (1 - th a) W + th b L1 + th c^2 L2 + th (f^n + f^{n+1})
        std::copy(W, W + n, rhs.begin());
        kernels::scale(2 * n, 1.0 - th * al, dbl(rhs.data()));
        kernels::axpy(2 * n, th * b, dbl(L1.data()), dbl(rhs.data()));
        kernels::axpy(2 * n, th * c2, dbl(L2.data()), dbl(rhs.data()));
        if (data.has_f()) {
            kernels::axpy(2 * n, th, dbl(data.f.level(step)), dbl(rhs.data()));
            kernels::axpy(2 * n, th, dbl(data.f.level(step + 1)), dbl(rhs.data()));
        }

        const auto& inodes = g.interior_nodes();
        for (int i = 0; i < ni; ++i) prhs[i] = rhs[inodes[i]];
        for (const auto& s : scatter)
            prhs[s.packed] += sc_coef * s.coef * htt(step + 1, s.bindex);

        hs.solve_complex(prhs.data(), pout.data());

        cplx* U1 = sol.u.level(step + 1);
        cplx* V1 = sol.ut.level(step + 1);
        cplx* W1 = sol.utt.level(step + 1);
        for (int i = 0; i < ni; ++i) {
            const int node = inodes[i];
            W1[node] = pout[i];
            V1[node] = V[node] + th * (W[node] + pout[i]);
            U1[node] = U[node] + th * (V[node] + V1[node]);
        }
        for (int bi = 0; bi < nb; ++bi) {
            const auto& bn = g.boundary()[bi];
            const std::size_t o = static_cast<std::size_t>(bn.iy) * g.nx() + bn.ix;
            U1[o] = data.h(step + 1, bi);
            V1[o] = ht(step + 1, bi);
            W1[o] = htt(step + 1, bi);
        }
        check_finite(W1, n, step + 1, "solve_linear");
    }
    return sol;
}

WaveSolution solve_damped_wave(const BoundaryField& xi, const SpatialField& y0,
                               const SpatialField& y1, const SpaceTimeField* f,
                               double b, double kappa, const Grid& g) {
    const int nb = g.boundary_count();
    if (xi.nb() != nb || xi.nlev() != g.nlev())
        fail(ErrorKind::shape, "solve_damped_wave: trace shape mismatch");
    const double dt = g.dt(), th = 0.5 * dt;
    if (!(1.0 + th * kappa > 0.0))
        fail(ErrorKind::solver, "solve_damped_wave: 1 + kappa*dt/2 must be positive");
    const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
    const int ni = g.interior_count();

    WaveSolution sol{SpaceTimeField(g, Role::u), SpaceTimeField(g, Role::u_t)};
    std::copy(y0.data(), y0.data() + n, sol.y.level(0));
    std::copy(y1.data(), y1.data() + n, sol.yt.level(0));

    const BoundaryField xit = boundary_time_derivative(xi, dt, 1);

    HelmholtzSolver hs(g, 1.0 + th * kappa, th * th * b);
    const auto scatter = build_bc_scatter(g);
    const double sc_coef = th * th * b;

    std::vector<cplx> tmp(n), L(n), rhs(n), prhs(ni), pout(ni);
    for (int step = 0; step < g.nt(); ++step) {
        const cplx* Y = sol.y.level(step);
        const cplx* V = sol.yt.level(step);

        std::copy(Y, Y + n, tmp.begin());
        kernels::scale(2 * n, 2.0, dbl(tmp.data()));
        kernels::axpy(2 * n, th, dbl(V), dbl(tmp.data()));
        std::fill(L.begin(), L.end(), cplx{});
        laplacian_interior(g, tmp.data(), L.data());

        std::copy(V, V + n, rhs.begin());
        kernels::scale(2 * n, 1.0 - th * kappa, dbl(rhs.data()));
        kernels::axpy(2 * n, th * b, dbl(L.data()), dbl(rhs.data()));
        if (f) {
            kernels::axpy(2 * n, th, dbl(f->level(step)), dbl(rhs.data()));
            kernels::axpy(2 * n, th, dbl(f->level(step + 1)), dbl(rhs.data()));
        }

        const auto& inodes = g.interior_nodes();
        for (int i = 0; i < ni; ++i) prhs[i] = rhs[inodes[i]];
        for (const auto& s : scatter)
            prhs[s.packed] += sc_coef * s.coef * xit(step + 1, s.bindex);

        hs.solve_complex(prhs.data(), pout.data());

        cplx* Y1 = sol.y.level(step + 1);
        cplx* V1 = sol.yt.level(step + 1);
        for (int i = 0; i < ni; ++i) {
            const int node = inodes[i];
            V1[node] = pout[i];
            Y1[node] = Y[node] + th * (V[node] + pout[i]);
        }
        for (int bi = 0; bi < nb; ++bi) {
            const auto& bn = g.boundary()[bi];
            const std::size_t o = static_cast<std::size_t>(bn.iy) * g.nx() + bn.ix;
            Y1[o] = xi(step + 1, bi);
            V1[o] = xit(step + 1, bi);
        }
        check_finite(V1, n, step + 1, "solve_damped_wave");
    }
    return sol;
}

SpaceTimeField solve_linear_via_w(const DataTuple& data, const Coefficients& coeff,
                                  const Grid& g) {
    const int nb = g.boundary_count();
    const double dt = g.dt(), th = 0.5 * dt;
    const double b = coeff.b(), beta = coeff.beta(), gamma = coeff.gamma();
    const double E = std::exp(-beta * dt);
    const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
    const int ni = g.interior_count();

    // W boundary data and its derivative.
    const BoundaryField ht = boundary_time_derivative(data.h, dt, 1);
    const BoundaryField htt = boundary_time_derivative(data.h, dt, 2);
    BoundaryField wbc(nb, g.nlev()), wtbc(nb, g.nlev());
    for (int k = 0; k < g.nlev(); ++k)
        for (int i = 0; i < nb; ++i) {
            wbc(k, i) = ht(k, i) + beta * data.h(k, i);
            wtbc(k, i) = htt(k, i) + beta * ht(k, i);
        }

    SpaceTimeField u(g, Role::u);
    SpaceTimeField Wf(g), Vf(g);
    std::copy(data.u0.data(), data.u0.data() + n, u.level(0));
    for (std::size_t i = 0; i < n; ++i) {
        Wf.level(0)[i] = data.u1.data()[i] + beta * data.u0.data()[i];
        Vf.level(0)[i] = data.u2.data()[i] + beta * data.u1.data()[i];
    }

    // Diagonal shift from the implicit parts of the source gamma*beta*u_t.
    const double adiag =
        1.0 + th * gamma - th * th * gamma * beta + th * th * th * gamma * beta * beta;
    HelmholtzSolver hs(g, adiag, th * th * b);
    const auto scatter = build_bc_scatter(g);
    const double sc_coef = th * th * b;

    std::vector<cplx> tmp(n), L(n), rhs(n), prhs(ni), pout(ni);
    const double gb = gamma * beta, gb2 = gamma * beta * beta;
    for (int step = 0; step < g.nt(); ++step) {
        const cplx* W = Wf.level(step);
        const cplx* V = Vf.level(step);
        const cplx* Uc = u.level(step);

        std::copy(W, W + n, tmp.begin());
        kernels::scale(2 * n, 2.0, dbl(tmp.data()));
        kernels::axpy(2 * n, th, dbl(V), dbl(tmp.data()));
        std::fill(L.begin(), L.end(), cplx{});
        laplacian_interior(g, tmp.data(), L.data());

        // rhs = (1 - th g) V + th b L + th (f^n + f^{n+1})
        //     + th [ gb W^n - gb2 u^n ]                            (S^n)
        //     + th [ gb (W^n + th V^n) - gb2 (E u^n + th E W^n + th W^n + th^2 V^n) ]
        std::copy(V, V + n, rhs.begin());
        kernels::scale(2 * n, 1.0 - th * gamma, dbl(rhs.data()));
        kernels::axpy(2 * n, th * b, dbl(L.data()), dbl(rhs.data()));
        if (data.has_f()) {
            kernels::axpy(2 * n, th, dbl(data.f.level(step)), dbl(rhs.data()));
            kernels::axpy(2 * n, th, dbl(data.f.level(step + 1)), dbl(rhs.data()));
        }
        kernels::axpy(2 * n, th * (2.0 * gb), dbl(W), dbl(rhs.data()));
        kernels::axpy(2 * n, th * th * gb, dbl(V), dbl(rhs.data()));
        kernels::axpy(2 * n, -th * gb2 * (1.0 + E), dbl(Uc), dbl(rhs.data()));
        kernels::axpy(2 * n, -th * th * gb2 * (1.0 + E), dbl(W), dbl(rhs.data()));
        kernels::axpy(2 * n, -th * th * th * gb2, dbl(V), dbl(rhs.data()));

        const auto& inodes = g.interior_nodes();
        for (int i = 0; i < ni; ++i) prhs[i] = rhs[inodes[i]];
        for (const auto& s : scatter)
            prhs[s.packed] += sc_coef * s.coef * wtbc(step + 1, s.bindex);

        hs.solve_complex(prhs.data(), pout.data());

        cplx* W1 = Wf.level(step + 1);
        cplx* V1 = Vf.level(step + 1);
        cplx* U1 = u.level(step + 1);
        for (int i = 0; i < ni; ++i) {
            const int node = inodes[i];
            V1[node] = pout[i];
            W1[node] = W[node] + th * (V[node] + pout[i]);
            U1[node] = E * Uc[node] + th * (E * W[node] + W1[node]);
        }
        for (int bi = 0; bi < nb; ++bi) {
            const auto& bn = g.boundary()[bi];
            const std::size_t o = static_cast<std::size_t>(bn.iy) * g.nx() + bn.ix;
            W1[o] = wbc(step + 1, bi);
            V1[o] = wtbc(step + 1, bi);
            U1[o] = data.h(step + 1, bi);
        }
        check_finite(V1, n, step + 1, "solve_linear_via_w");
    }
    return u;
}

} // namespace jmgt
