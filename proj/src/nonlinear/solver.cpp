#include "jmgt/nonlinear/solver.hpp"

#include "jmgt/core/operators.hpp"
#include "jmgt/kernels/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace jmgt {

SpaceTimeField westervelt_source(const NonlinearityField& p,
                                 const SpaceTimeField& u,
                                 const SpaceTimeField& ut,
                                 const SpaceTimeField& utt, const Grid& g) {
    u.require_matches(g, "westervelt_source");
    ut.require_matches(g, "westervelt_source");
    utt.require_matches(g, "westervelt_source");
    SpaceTimeField out(g, Role::source);
    const std::size_t n = u.level_size();
    std::vector<cplx> prod(n), quad(n);
    for (int k = 0; k < g.nlev(); ++k) {
        cplx* dst = out.level(k);
        // p_tt u^2
        kernels::cmul(n, u.level(k), u.level(k), prod.data());
        kernels::rcmul(n, p.ptt_level(k), prod.data(), dst);
        // 4 p_t u u_t
        kernels::cmul(n, u.level(k), ut.level(k), prod.data());
        kernels::scale(2 * n, 4.0, reinterpret_cast<double*>(prod.data()));
        kernels::rcmadd(n, p.pt_level(k), prod.data(), dst);
        // 2 p (u_t^2 + u u_tt)
        kernels::cmul(n, ut.level(k), ut.level(k), quad.data());
        kernels::cmadd(n, u.level(k), utt.level(k), quad.data());
        kernels::scale(2 * n, 2.0, reinterpret_cast<double*>(quad.data()));
        kernels::rcmadd(n, p.p_level(k), quad.data(), dst);
    }
    return out;
}

double data_norm_surrogate(const DataTuple& data, const Grid& g) {
    double s = 0.0;
    {
        const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
        std::vector<cplx> lap(n, cplx{});
        laplacian_domain(g, data.u0.data(), lap.data());
        const double h1 = h1_omega(g, data.u0.data());
        const double l2lap = std::sqrt(kernels::wsumsq(n, g.area_weights().data(), lap.data()));
        s += std::sqrt(h1 * h1 + l2lap * l2lap);
        s += h1_omega(g, data.u1.data());
        s += l2_omega(g, data.u2.data());
    }
    const BoundaryField ht = boundary_time_derivative(data.h, g.dt(), 1);
    const BoundaryField htt = boundary_time_derivative(data.h, g.dt(), 2);
    double sup = 0.0;
    const auto& bn = g.boundary();
    for (int k = 0; k < g.nlev(); ++k) {
        double a = 0, b = 0, c = 0;
        for (int i = 0; i < g.boundary_count(); ++i) {
            a += bn[i].ds * std::norm(data.h(k, i));
            b += bn[i].ds * std::norm(ht(k, i));
            c += bn[i].ds * std::norm(htt(k, i));
        }
        sup = std::max(sup, std::sqrt(a) + std::sqrt(b) + std::sqrt(c));
    }
    return s + sup;
}

namespace {

DataTuple zero_data_with_source(const Grid& g, SpaceTimeField src) {
    DataTuple d;
    d.h = BoundaryField(g);
    d.u0 = SpatialField(g);
    d.u1 = SpatialField(g);
    d.u2 = SpatialField(g);
    d.f = std::move(src);
    return d;
}

} // namespace

NonlinearSolution solve_nonlinear(const DataTuple& data,
                                  const NonlinearityField& p,
                                  const Coefficients& coeff, const Grid& g,
                                  double delta, const PicardOptions& opt) {
    p.check_admissible(coeff, g);
    NonlinearSolution out;
    out.report.data_norm = data_norm_surrogate(data, g);
    out.report.smallness_warning = out.report.data_norm > delta;

    MgtSolution v1 = solve_linear(data, coeff, g);
    const double scale_norm = std::max(l2_q(v1.u, g), 1e-300);

    // Fixed-point iterates for v2, starting from zero.
    MgtSolution v2{SpaceTimeField(g), SpaceTimeField(g), SpaceTimeField(g)};
    SpaceTimeField prev_u(g);
    MgtSolution cur{SpaceTimeField(g), SpaceTimeField(g), SpaceTimeField(g)};

    const std::size_t total = v1.u.size();
    for (int it = 1; it <= opt.max_iterations; ++it) {
        // cur = v1 + v2 (state and companions)
        std::copy(v1.u.data(), v1.u.data() + total, cur.u.data());
        std::copy(v1.ut.data(), v1.ut.data() + total, cur.ut.data());
        std::copy(v1.utt.data(), v1.utt.data() + total, cur.utt.data());
        kernels::caxpy(total, cplx(1.0), v2.u.data(), cur.u.data());
        kernels::caxpy(total, cplx(1.0), v2.ut.data(), cur.ut.data());
        kernels::caxpy(total, cplx(1.0), v2.utt.data(), cur.utt.data());

        SpaceTimeField src = westervelt_source(p, cur.u, cur.ut, cur.utt, g);
        std::copy(v2.u.data(), v2.u.data() + total, prev_u.data());
        v2 = solve_linear(zero_data_with_source(g, std::move(src)), coeff, g);

        kernels::caxpy(total, cplx(-1.0), v2.u.data(), prev_u.data());
        const double res = l2_q(prev_u, g) / scale_norm;
        out.report.residual_history.push_back(res);
        out.report.iterations = it;
        if (res <= opt.tol_rel) {
            out.report.converged = true;
            break;
        }
    }
    const auto& hist = out.report.residual_history;
    for (std::size_t i = 1; i < hist.size(); ++i)
        if (hist[i - 1] > 1e-13)
            out.report.contraction_estimate =
                std::max(out.report.contraction_estimate, hist[i] / hist[i - 1]);
    if (!out.report.converged) {
        const double last = hist.empty() ? 0.0 : hist.back();
        fail(ErrorKind::divergence,
             "solve_nonlinear: no convergence after " +
                 std::to_string(opt.max_iterations) +
                 " iterations (last relative residual " + std::to_string(last) + ")");
    }

    out.sol = std::move(v1);
    kernels::caxpy(total, cplx(1.0), v2.u.data(), out.sol.u.data());
    kernels::caxpy(total, cplx(1.0), v2.ut.data(), out.sol.ut.data());
    kernels::caxpy(total, cplx(1.0), v2.utt.data(), out.sol.utt.data());
    return out;
}

DataTuple scale_data(const DataTuple& data, cplx s) {
    DataTuple d = data;
    for (std::size_t i = 0; i < d.h.size(); ++i) d.h.data()[i] *= s;
    for (std::size_t i = 0; i < d.u0.size(); ++i) d.u0.data()[i] *= s;
    for (std::size_t i = 0; i < d.u1.size(); ++i) d.u1.data()[i] *= s;
    for (std::size_t i = 0; i < d.u2.size(); ++i) d.u2.data()[i] *= s;
    if (d.has_f())
        for (std::size_t i = 0; i < d.f.size(); ++i) d.f.data()[i] *= s;
    return d;
}

DataTuple combine_data(const DataTuple& d1, cplx a, const DataTuple& d2, cplx b) {
    if (d1.h.size() != d2.h.size() || d1.u0.size() != d2.u0.size())
        fail(ErrorKind::shape, "combine_data: shape mismatch");
    DataTuple d = scale_data(d1, a);
    const DataTuple sd2 = scale_data(d2, b);
    for (std::size_t i = 0; i < d.h.size(); ++i) d.h.data()[i] += sd2.h.data()[i];
    for (std::size_t i = 0; i < d.u0.size(); ++i) {
        d.u0.data()[i] += sd2.u0.data()[i];
        d.u1.data()[i] += sd2.u1.data()[i];
        d.u2.data()[i] += sd2.u2.data()[i];
    }
    if (d.has_f() && sd2.has_f())
        for (std::size_t i = 0; i < d.f.size(); ++i) d.f.data()[i] += sd2.f.data()[i];
    else if (sd2.has_f())
        d.f = sd2.f;
    return d;
}

std::vector<TaylorRow> taylor_check(const DataTuple& unit_data,
                                    const NonlinearityField& p,
                                    const Coefficients& coeff, const Grid& g,
                                    const std::vector<double>& eps_list,
                                    const PicardOptions& opt) {
    std::vector<TaylorRow> rows;
    MgtSolution w1 = solve_linear(unit_data, coeff, g);
    for (double eps : eps_list) {
        if (eps == 0.0) {
            rows.push_back({0.0, 0.0});
            continue;
        }
        NonlinearSolution u = solve_nonlinear(scale_data(unit_data, eps), p,
                                              coeff, g, 1.0, opt);
        SpaceTimeField diff = u.sol.u;
        diff.axpy(cplx(-eps), w1.u);
        rows.push_back({eps, l2_q(diff, g)});
    }
    return rows;
}

} // namespace jmgt
