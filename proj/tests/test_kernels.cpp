#include "jmgt/kernels/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace jmgt;
using kernels::cplx;

namespace {

std::mt19937_64 rng(20240817);

std::vector<double> rand_vec(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

std::vector<cplx> rand_cvec(std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& z : v) z = {d(rng), d(rng)};
    return v;
}

bool close(double a, double b, double tol = 1e-13) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

bool close(cplx a, cplx b, double tol = 1e-13) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

} // namespace

#if JMGT_HAVE_AVX2_KERNELS
#define HAS_AVX2 (__builtin_cpu_supports("avx2"))
#else
#define HAS_AVX2 false
#endif

TEST_CASE("scalar/avx2 equivalence on random inputs, including ragged tails") {
    if (!HAS_AVX2) {
        MESSAGE("AVX2 not available; dispatch falls back to scalar");
        return;
    }
#if JMGT_HAVE_AVX2_KERNELS
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 17u, 64u, 1001u}) {
        auto x = rand_vec(n), y = rand_vec(n);
        auto ys = y, yv = y;
        kernels::scalar::axpy(n, 0.7, x.data(), ys.data());
        kernels::avx2::axpy(n, 0.7, x.data(), yv.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(ys[i], yv[i]));

        ys = y;
        yv = y;
        kernels::scalar::axpby(n, 1.3, x.data(), -0.4, ys.data());
        kernels::avx2::axpby(n, 1.3, x.data(), -0.4, yv.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(ys[i], yv[i]));

        CHECK(close(kernels::scalar::dot(n, x.data(), y.data()),
                    kernels::avx2::dot(n, x.data(), y.data()), 1e-12));
        CHECK(close(kernels::scalar::sumsq(n, x.data()),
                    kernels::avx2::sumsq(n, x.data()), 1e-12));

        auto cx = rand_cvec(n), cy = rand_cvec(n);
        auto cys = cy, cyv = cy;
        const cplx a{0.3, -1.1};
        kernels::scalar::caxpy(n, a, cx.data(), cys.data());
        kernels::avx2::caxpy(n, a, cx.data(), cyv.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(cys[i], cyv[i]));

        std::vector<cplx> os(n), ov(n);
        kernels::scalar::cmul(n, cx.data(), cy.data(), os.data());
        kernels::avx2::cmul(n, cx.data(), cy.data(), ov.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(os[i], ov[i]));

        auto as = rand_cvec(n);
        auto av = as;
        kernels::scalar::cmadd(n, cx.data(), cy.data(), as.data());
        kernels::avx2::cmadd(n, cx.data(), cy.data(), av.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(as[i], av[i]));

        auto w = rand_vec(n, 0.0, 2.0);
        CHECK(close(kernels::scalar::wsumsq(n, w.data(), cx.data()),
                    kernels::avx2::wsumsq(n, w.data(), cx.data()), 1e-12));

        std::vector<cplx> rs(n), rv(n);
        kernels::scalar::rcmul(n, w.data(), cx.data(), rs.data());
        kernels::avx2::rcmul(n, w.data(), cx.data(), rv.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(rs[i], rv[i]));

        rs = cy;
        rv = cy;
        kernels::scalar::rcmadd(n, w.data(), cx.data(), rs.data());
        kernels::avx2::rcmadd(n, w.data(), cx.data(), rv.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(close(rs[i], rv[i]));
    }
#endif
}

TEST_CASE("stencil row equivalence and correctness") {
    const std::size_t n = 37;
    auto row = rand_cvec(n + 2), below = rand_cvec(n + 2), above = rand_cvec(n + 2);
    std::vector<cplx> out_ref(n), out_s(n);
    const double c0 = -4.1, cx = 1.7, cy = 0.9;
    for (std::size_t j = 0; j < n; ++j)
        out_ref[j] = c0 * row[j + 1] + cx * (row[j] + row[j + 2]) +
                     cy * (below[j + 1] + above[j + 1]);
    kernels::scalar::stencil5_row(n, c0, cx, cy, row.data() + 1, below.data() + 1,
                                  above.data() + 1, out_s.data());
    for (std::size_t j = 0; j < n; ++j) CHECK(close(out_ref[j], out_s[j]));
#if JMGT_HAVE_AVX2_KERNELS
    if (HAS_AVX2) {
        std::vector<cplx> out_v(n);
        kernels::avx2::stencil5_row(n, c0, cx, cy, row.data() + 1,
                                    below.data() + 1, above.data() + 1,
                                    out_v.data());
        for (std::size_t j = 0; j < n; ++j) CHECK(close(out_ref[j], out_v[j]));
    }
#endif
}

TEST_CASE("dispatch answers basic algebra") {
    const std::size_t n = 100;
    std::vector<double> x(n, 2.0), y(n, 1.0);
    kernels::axpy(n, 3.0, x.data(), y.data());
    for (double v : y) CHECK(v == doctest::Approx(7.0));
    CHECK(kernels::sumsq(n, x.data()) == doctest::Approx(4.0 * n));
    MESSAGE("active ISA: ", kernels::isa_name(kernels::active_isa()));
}
