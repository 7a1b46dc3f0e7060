#include "jmgt/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace jmgt::kernels {

namespace {

Isa resolve_isa() {
    if (const char* env = std::getenv("JMGT_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
#if JMGT_HAVE_AVX2_KERNELS
        if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2"))
            return Isa::avx2;
#endif
        return Isa::scalar;
    }
#if JMGT_HAVE_AVX2_KERNELS
    if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
    return Isa::scalar;
}

struct Table {
    void (*axpy)(std::size_t, double, const double*, double*);
    void (*axpby)(std::size_t, double, const double*, double, double*);
    void (*scale)(std::size_t, double, double*);
    double (*dot)(std::size_t, const double*, const double*);
    double (*sumsq)(std::size_t, const double*);
    void (*caxpy)(std::size_t, cplx, const cplx*, cplx*);
    void (*cmul)(std::size_t, const cplx*, const cplx*, cplx*);
    void (*cmadd)(std::size_t, const cplx*, const cplx*, cplx*);
    double (*wsumsq)(std::size_t, const double*, const cplx*);
    void (*rcmul)(std::size_t, const double*, const cplx*, cplx*);
    void (*rcmadd)(std::size_t, const double*, const cplx*, cplx*);
    void (*stencil5_row)(std::size_t, double, double, double, const cplx*,
                         const cplx*, const cplx*, cplx*);
    Isa isa;
};

Table make_table() {
    Table t{};
    t.isa = resolve_isa();
#if JMGT_HAVE_AVX2_KERNELS
    if (t.isa == Isa::avx2) {
        t.axpy = &avx2::axpy;
        t.axpby = &avx2::axpby;
        t.scale = &avx2::scale;
        t.dot = &avx2::dot;
        t.sumsq = &avx2::sumsq;
        t.caxpy = &avx2::caxpy;
        t.cmul = &avx2::cmul;
        t.cmadd = &avx2::cmadd;
        t.wsumsq = &avx2::wsumsq;
        t.rcmul = &avx2::rcmul;
        t.rcmadd = &avx2::rcmadd;
        t.stencil5_row = &avx2::stencil5_row;
        return t;
    }
#endif
    t.axpy = &scalar::axpy;
    t.axpby = &scalar::axpby;
    t.scale = &scalar::scale;
    t.dot = &scalar::dot;
    t.sumsq = &scalar::sumsq;
    t.caxpy = &scalar::caxpy;
    t.cmul = &scalar::cmul;
    t.cmadd = &scalar::cmadd;
    t.wsumsq = &scalar::wsumsq;
    t.rcmul = &scalar::rcmul;
    t.rcmadd = &scalar::rcmadd;
    t.stencil5_row = &scalar::stencil5_row;
    return t;
}

const Table& table() {
    static const Table t = make_table();
    return t;
}

} // namespace

Isa active_isa() { return table().isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        default: return "scalar";
    }
}

void axpy(std::size_t n, double a, const double* x, double* y) { table().axpy(n, a, x, y); }
void axpby(std::size_t n, double a, const double* x, double b, double* y) { table().axpby(n, a, x, b, y); }
void scale(std::size_t n, double a, double* x) { table().scale(n, a, x); }
double dot(std::size_t n, const double* x, const double* y) { return table().dot(n, x, y); }
double sumsq(std::size_t n, const double* x) { return table().sumsq(n, x); }
void caxpy(std::size_t n, cplx a, const cplx* x, cplx* y) { table().caxpy(n, a, x, y); }
void cmul(std::size_t n, const cplx* x, const cplx* y, cplx* out) { table().cmul(n, x, y, out); }
void cmadd(std::size_t n, const cplx* x, const cplx* y, cplx* acc) { table().cmadd(n, x, y, acc); }
double wsumsq(std::size_t n, const double* w, const cplx* x) { return table().wsumsq(n, w, x); }
void rcmul(std::size_t n, const double* r, const cplx* x, cplx* out) { table().rcmul(n, r, x, out); }
void rcmadd(std::size_t n, const double* r, const cplx* x, cplx* acc) { table().rcmadd(n, r, x, acc); }
void stencil5_row(std::size_t n, double c0, double cx, double cy, const cplx* row,
                  const cplx* below, const cplx* above, cplx* out) {
    table().stencil5_row(n, c0, cx, cy, row, below, above, out);
}

} // namespace jmgt::kernels
