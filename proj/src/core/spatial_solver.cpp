#include "jmgt/core/spatial_solver.hpp"

#include <Eigen/Sparse>
#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <vector>

namespace jmgt {

namespace {
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

struct HelmholtzSolver::Impl {
    const Grid* grid = nullptr;
    bool use_dst = false;

    // DST path
    int mx = 0, my = 0;
    double* buf = nullptr;
    fftw_plan plan_fwd = nullptr;
    std::vector<double> inv_den; // 1 / (a + bcoef * lambda_ij), DST ordering
    double norm = 1.0;

    // Sparse path
    Eigen::SparseMatrix<double> A;
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt;

    std::vector<double> re, im, out_re, out_im;

    ~Impl() {
        if (plan_fwd) {
            std::lock_guard<std::mutex> lock(fftw_planner_mutex());
            fftw_destroy_plan(plan_fwd);
        }
        if (buf) fftw_free(buf);
    }
};

HelmholtzSolver::HelmholtzSolver(const Grid& g, double a, double bcoef)
    : impl_(new Impl), a_(a), bcoef_(bcoef) {
    if (!(a > 0.0) || !(bcoef >= 0.0))
        fail(ErrorKind::solver, "helmholtz: need a > 0 and bcoef >= 0");
    impl_->grid = &g;
    impl_->use_dst = g.is_full_rectangle();
    const int ni = g.interior_count();
    impl_->re.resize(ni);
    impl_->im.resize(ni);
    impl_->out_re.resize(ni);
    impl_->out_im.resize(ni);
    if (impl_->use_dst) {
        const int mx = g.nx() - 2, my = g.ny() - 2;
        impl_->mx = mx;
        impl_->my = my;
        impl_->buf = static_cast<double*>(
            fftw_malloc(sizeof(double) * static_cast<std::size_t>(mx) * my));
        {
            std::lock_guard<std::mutex> lock(fftw_planner_mutex());
            impl_->plan_fwd =
                fftw_plan_r2r_2d(my, mx, impl_->buf, impl_->buf, FFTW_RODFT00,
                                 FFTW_RODFT00, FFTW_ESTIMATE);
        }
        if (!impl_->plan_fwd) fail(ErrorKind::solver, "helmholtz: fftw plan failed");
        impl_->norm = 1.0 / (4.0 * (mx + 1) * (my + 1));
        impl_->inv_den.resize(static_cast<std::size_t>(mx) * my);
        const double cx = 1.0 / (g.hx() * g.hx());
        const double cy = 1.0 / (g.hy() * g.hy());
        for (int j = 1; j <= my; ++j)
            for (int i = 1; i <= mx; ++i) {
                const double lx =
                    cx * (2.0 - 2.0 * std::cos(i * M_PI / (mx + 1)));
                const double ly =
                    cy * (2.0 - 2.0 * std::cos(j * M_PI / (my + 1)));
                impl_->inv_den[static_cast<std::size_t>(j - 1) * mx + (i - 1)] =
                    1.0 / (a + bcoef * (lx + ly));
            }
        return;
    }
    // Sparse SPD system over packed interior nodes.
    const double cx = bcoef / (g.hx() * g.hx());
    const double cy = bcoef / (g.hy() * g.hy());
    const double diag = a + 2.0 * cx + 2.0 * cy;
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(ni) * 5);
    for (int node : g.interior_nodes()) {
        const int ix = node % g.nx(), iy = node / g.nx();
        const int row = g.interior_index(ix, iy);
        trips.emplace_back(row, row, diag);
        auto couple = [&](int jx, int jy, double c) {
            const int col = g.interior_index(jx, jy);
            if (col >= 0) trips.emplace_back(row, col, -c);
        };
        couple(ix - 1, iy, cx);
        couple(ix + 1, iy, cx);
        couple(ix, iy - 1, cy);
        couple(ix, iy + 1, cy);
    }
    impl_->A.resize(ni, ni);
    impl_->A.setFromTriplets(trips.begin(), trips.end());
    impl_->llt.compute(impl_->A);
    if (impl_->llt.info() != Eigen::Success)
        fail(ErrorKind::solver, "helmholtz: sparse factorization failed");
}

HelmholtzSolver::~HelmholtzSolver() = default;

void HelmholtzSolver::solve(const double* rhs, double* out) {
    const Grid& g = *impl_->grid;
    const int ni = g.interior_count();
    if (impl_->use_dst) {
        const int mx = impl_->mx;
        // Packed interior order coincides with row-major (iy, ix) interior
        // traversal on the rectangle, which is exactly the DST layout.
        std::copy(rhs, rhs + ni, impl_->buf);
        fftw_execute(impl_->plan_fwd);
        for (int i = 0; i < ni; ++i) impl_->buf[i] *= impl_->inv_den[i];
        fftw_execute(impl_->plan_fwd);
        const double s = impl_->norm;
        for (int i = 0; i < ni; ++i) out[i] = impl_->buf[i] * s;
        (void)mx;
        return;
    }
    Eigen::Map<const Eigen::VectorXd> b(rhs, ni);
    Eigen::Map<Eigen::VectorXd> x(out, ni);
    x = impl_->llt.solve(b);
    if (impl_->llt.info() != Eigen::Success)
        fail(ErrorKind::solver, "helmholtz: sparse solve failed");
}

void HelmholtzSolver::solve_complex(const cplx* rhs, cplx* out) {
    const Grid& g = *impl_->grid;
    const int ni = g.interior_count();
    for (int i = 0; i < ni; ++i) {
        impl_->re[i] = rhs[i].real();
        impl_->im[i] = rhs[i].imag();
    }
    solve(impl_->re.data(), impl_->out_re.data());
    solve(impl_->im.data(), impl_->out_im.data());
    for (int i = 0; i < ni; ++i) out[i] = {impl_->out_re[i], impl_->out_im[i]};
}

} // namespace jmgt
