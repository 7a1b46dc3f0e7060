#pragma once

// Direct solver for the per-step elliptic system
//     (a I - bcoef * Lap_h) w = rhs        on interior nodes,
// homogeneous Dirichlet implied (boundary contributions are folded into rhs
// by the caller). On the full rectangle this is diagonalized by a 2D DST-I
// (FFTW); masked domains go through a sparse Cholesky factorization (Eigen).
// Both are exact direct solves of the same system and are deterministic.
//
// Instances are not thread-safe; each worker owns its solver.

#include "jmgt/core/field.hpp"
#include "jmgt/core/grid.hpp"

#include <memory>

namespace jmgt {

class HelmholtzSolver {
  public:
    HelmholtzSolver(const Grid& g, double a, double bcoef);
    ~HelmholtzSolver();
    HelmholtzSolver(const HelmholtzSolver&) = delete;
    HelmholtzSolver& operator=(const HelmholtzSolver&) = delete;

    double a() const { return a_; }
    double bcoef() const { return bcoef_; }

    /// rhs/out: packed interior vectors of length grid.interior_count().
    void solve(const double* rhs, double* out);
    void solve_complex(const cplx* rhs, cplx* out);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    double a_, bcoef_;
};

} // namespace jmgt
