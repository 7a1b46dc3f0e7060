#pragma once

// Runtime-dispatched arithmetic kernels for the hot inner loops: axpy-style
// field updates, complex pointwise products, weighted reductions and the
// 5-point stencil row sweep. A scalar reference implementation always exists;
// an AVX2 variant is selected at startup on capable x86-64 hosts. The two are
// equivalence-tested against each other.
//
// Selection can be forced with the environment variable JMGT_ISA=scalar|avx2.

#include <complex>
#include <cstddef>

namespace jmgt::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

/// Instruction set actually in use (resolved once, at first kernel call).
Isa active_isa();
const char* isa_name(Isa isa);

// ---- real-array ops (a complex array may be viewed as 2n doubles) ----

/// y += a*x
void axpy(std::size_t n, double a, const double* x, double* y);
/// y = a*x + b*y
void axpby(std::size_t n, double a, const double* x, double b, double* y);
/// x *= a
void scale(std::size_t n, double a, double* x);
double dot(std::size_t n, const double* x, const double* y);
double sumsq(std::size_t n, const double* x);

// ---- complex ops ----

/// y += a*x with complex scalar a
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
/// out = x .* y
void cmul(std::size_t n, const cplx* x, const cplx* y, cplx* out);
/// acc += x .* y
void cmadd(std::size_t n, const cplx* x, const cplx* y, cplx* acc);
/// sum_i w[i] * |x[i]|^2   (w real, one weight per complex entry)
double wsumsq(std::size_t n, const double* w, const cplx* x);
/// out = r .* x (r real per complex entry)
void rcmul(std::size_t n, const double* r, const cplx* x, cplx* out);
/// acc += r .* x
void rcmadd(std::size_t n, const double* r, const cplx* x, cplx* acc);

/// One row of the 5-point stencil:
///   out[j] = c0*row[j] + cx*(row[j-1] + row[j+1]) + cy*(below[j] + above[j])
/// for j = 0..n-1, where row/below/above point at column offset of the first
/// output column (the caller guarantees row[-1] and row[n] are readable).
void stencil5_row(std::size_t n, double c0, double cx, double cy,
                  const cplx* row, const cplx* below, const cplx* above,
                  cplx* out);

// Direct entry points for both implementations; used by the equivalence
// tests. Regular code goes through the dispatched functions above.
namespace scalar {
void axpy(std::size_t n, double a, const double* x, double* y);
void axpby(std::size_t n, double a, const double* x, double b, double* y);
void scale(std::size_t n, double a, double* x);
double dot(std::size_t n, const double* x, const double* y);
double sumsq(std::size_t n, const double* x);
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
void cmul(std::size_t n, const cplx* x, const cplx* y, cplx* out);
void cmadd(std::size_t n, const cplx* x, const cplx* y, cplx* acc);
double wsumsq(std::size_t n, const double* w, const cplx* x);
void rcmul(std::size_t n, const double* r, const cplx* x, cplx* out);
void rcmadd(std::size_t n, const double* r, const cplx* x, cplx* acc);
void stencil5_row(std::size_t n, double c0, double cx, double cy,
                  const cplx* row, const cplx* below, const cplx* above,
                  cplx* out);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define JMGT_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(std::size_t n, double a, const double* x, double* y);
void axpby(std::size_t n, double a, const double* x, double b, double* y);
void scale(std::size_t n, double a, double* x);
double dot(std::size_t n, const double* x, const double* y);
double sumsq(std::size_t n, const double* x);
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y);
void cmul(std::size_t n, const cplx* x, const cplx* y, cplx* out);
void cmadd(std::size_t n, const cplx* x, const cplx* y, cplx* acc);
double wsumsq(std::size_t n, const double* w, const cplx* x);
void rcmul(std::size_t n, const double* r, const cplx* x, cplx* out);
void rcmadd(std::size_t n, const double* r, const cplx* x, cplx* acc);
void stencil5_row(std::size_t n, double c0, double cx, double cy,
                  const cplx* row, const cplx* below, const cplx* above,
                  cplx* out);
} // namespace avx2
#endif

} // namespace jmgt::kernels
