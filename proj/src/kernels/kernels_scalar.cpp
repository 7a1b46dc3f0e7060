#include "jmgt/kernels/kernels.hpp"

namespace jmgt::kernels::scalar {

void axpy(std::size_t n, double a, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpby(std::size_t n, double a, const double* x, double b, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void scale(std::size_t n, double a, double* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double dot(std::size_t n, const double* x, const double* y) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sumsq(std::size_t n, const double* x) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void cmul(std::size_t n, const cplx* x, const cplx* y, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void cmadd(std::size_t n, const cplx* x, const cplx* y, cplx* acc) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += x[i] * y[i];
}

double wsumsq(std::size_t n, const double* w, const cplx* x) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = x[i].real(), im = x[i].imag();
        s += w[i] * (re * re + im * im);
    }
    return s;
}


void rcmul(std::size_t n, const double* r, const cplx* x, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = r[i] * x[i];
}

void rcmadd(std::size_t n, const double* r, const cplx* x, cplx* acc) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += r[i] * x[i];
}

void stencil5_row(std::size_t n, double c0, double cx, double cy,
                  const cplx* row, const cplx* below, const cplx* above,
                  cplx* out) {
    for (std::size_t j = 0; j < n; ++j)
        out[j] = c0 * row[j] + cx * (row[j - 1] + row[j + 1]) +
                 cy * (below[j] + above[j]);
}

} // namespace jmgt::kernels::scalar
