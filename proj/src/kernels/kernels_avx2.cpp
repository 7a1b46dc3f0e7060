// AVX2 variants. This translation unit is the only one compiled with
// -mavx2 -mfma; it must not be entered on hosts without AVX2 (the dispatcher
// checks at startup).

#include "jmgt/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace jmgt::kernels::avx2 {

namespace {
inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// [ar*br - ai*bi, ar*bi + ai*br] for two packed complex numbers per vector
inline __m256d cmul4(__m256d a, __m256d b) {
    __m256d br = _mm256_movedup_pd(b);           // [br0 br0 br1 br1]
    __m256d bi = _mm256_permute_pd(b, 0xF);      // [bi0 bi0 bi1 bi1]
    __m256d as = _mm256_permute_pd(a, 0x5);      // [ai0 ar0 ai1 ar1]
    return _mm256_addsub_pd(_mm256_mul_pd(a, br), _mm256_mul_pd(as, bi));
}
} // namespace

void axpy(std::size_t n, double a, const double* x, double* y) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d y0 = _mm256_loadu_pd(y + i);
        __m256d y1 = _mm256_loadu_pd(y + i + 4);
        y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
        y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), y1);
        _mm256_storeu_pd(y + i, y0);
        _mm256_storeu_pd(y + i + 4, y1);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void axpby(std::size_t n, double a, const double* x, double b, double* y) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
        t = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), t);
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i) y[i] = a * x[i] + b * y[i];
}

void scale(std::size_t n, double a, double* x) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

double dot(std::size_t n, const double* x, const double* y) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc0);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sumsq(std::size_t n, const double* x) { return dot(n, x, x); }

void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const __m256d va = _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
    const double* xd = dp(x);
    double* yd = dp(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        __m256d vy = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(vy, cmul4(va, vx)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void cmul(std::size_t n, const cplx* x, const cplx* y, cplx* out) {
    const double* xd = dp(x);
    const double* yd = dp(y);
    double* od = dp(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(od + 2 * i, cmul4(_mm256_loadu_pd(xd + 2 * i),
                                           _mm256_loadu_pd(yd + 2 * i)));
    for (; i < n; ++i) out[i] = x[i] * y[i];
}

void cmadd(std::size_t n, const cplx* x, const cplx* y, cplx* acc) {
    const double* xd = dp(x);
    const double* yd = dp(y);
    double* ad = dp(acc);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = cmul4(_mm256_loadu_pd(xd + 2 * i), _mm256_loadu_pd(yd + 2 * i));
        _mm256_storeu_pd(ad + 2 * i, _mm256_add_pd(_mm256_loadu_pd(ad + 2 * i), v));
    }
    for (; i < n; ++i) acc[i] += x[i] * y[i];
}

double wsumsq(std::size_t n, const double* w, const cplx* x) {
    const double* xd = dp(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x0 = _mm256_loadu_pd(xd + 2 * i);     // [r0 i0 r1 i1]
        __m256d x1 = _mm256_loadu_pd(xd + 2 * i + 4); // [r2 i2 r3 i3]
        // hadd -> [|x0|^2 |x2|^2 |x1|^2 |x3|^2]
        __m256d m = _mm256_hadd_pd(_mm256_mul_pd(x0, x0), _mm256_mul_pd(x1, x1));
        __m256d vw = _mm256_loadu_pd(w + i); // [w0 w1 w2 w3]
        vw = _mm256_permute4x64_pd(vw, _MM_SHUFFLE(3, 1, 2, 0)); // [w0 w2 w1 w3]
        acc = _mm256_fmadd_pd(m, vw, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        const double re = x[i].real(), im = x[i].imag();
        s += w[i] * (re * re + im * im);
    }
    return s;
}


void rcmul(std::size_t n, const double* r, const cplx* x, cplx* out) {
    const double* xd = dp(x);
    double* od = dp(out);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d rr = _mm256_loadu_pd(r + i);                      // [r0 r1 r2 r3]
        __m256d lo = _mm256_permute4x64_pd(rr, _MM_SHUFFLE(1, 1, 0, 0));
        __m256d hi = _mm256_permute4x64_pd(rr, _MM_SHUFFLE(3, 3, 2, 2));
        _mm256_storeu_pd(od + 2 * i, _mm256_mul_pd(lo, _mm256_loadu_pd(xd + 2 * i)));
        _mm256_storeu_pd(od + 2 * i + 4,
                         _mm256_mul_pd(hi, _mm256_loadu_pd(xd + 2 * i + 4)));
    }
    for (; i < n; ++i) out[i] = r[i] * x[i];
}

void rcmadd(std::size_t n, const double* r, const cplx* x, cplx* acc) {
    const double* xd = dp(x);
    double* ad = dp(acc);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d rr = _mm256_loadu_pd(r + i);
        __m256d lo = _mm256_permute4x64_pd(rr, _MM_SHUFFLE(1, 1, 0, 0));
        __m256d hi = _mm256_permute4x64_pd(rr, _MM_SHUFFLE(3, 3, 2, 2));
        __m256d a0 = _mm256_loadu_pd(ad + 2 * i);
        __m256d a1 = _mm256_loadu_pd(ad + 2 * i + 4);
        a0 = _mm256_fmadd_pd(lo, _mm256_loadu_pd(xd + 2 * i), a0);
        a1 = _mm256_fmadd_pd(hi, _mm256_loadu_pd(xd + 2 * i + 4), a1);
        _mm256_storeu_pd(ad + 2 * i, a0);
        _mm256_storeu_pd(ad + 2 * i + 4, a1);
    }
    for (; i < n; ++i) acc[i] += r[i] * x[i];
}

void stencil5_row(std::size_t n, double c0, double cx, double cy,
                  const cplx* row, const cplx* below, const cplx* above,
                  cplx* out) {
    const __m256d v0 = _mm256_set1_pd(c0);
    const __m256d vx = _mm256_set1_pd(cx);
    const __m256d vy = _mm256_set1_pd(cy);
    const double* r = dp(row);
    const double* b = dp(below);
    const double* a = dp(above);
    double* o = dp(out);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const std::size_t k = 2 * j;
        __m256d horiz = _mm256_add_pd(_mm256_loadu_pd(r + k - 2), _mm256_loadu_pd(r + k + 2));
        __m256d vert = _mm256_add_pd(_mm256_loadu_pd(b + k), _mm256_loadu_pd(a + k));
        __m256d t = _mm256_mul_pd(v0, _mm256_loadu_pd(r + k));
        t = _mm256_fmadd_pd(vx, horiz, t);
        t = _mm256_fmadd_pd(vy, vert, t);
        _mm256_storeu_pd(o + k, t);
    }
    for (; j < n; ++j)
        out[j] = c0 * row[j] + cx * (row[j - 1] + row[j + 1]) +
                 cy * (below[j] + above[j]);
}

} // namespace jmgt::kernels::avx2

#endif // x86-64
