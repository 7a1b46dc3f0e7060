#pragma once

// Time integration of the linear MGT system
//   u_ttt + alpha u_tt - b Lap u_t - c^2 Lap u = f,  u|_Sigma = h,
//   (u, u_t, u_tt)(0) = (u0, u1, u2),
// as a first-order system in (u, u_t, u_tt) with an implicit trapezoidal
// step; the per-step elliptic solve is exact (HelmholtzSolver). Second-order
// accurate in dt and h; unconditionally stable for this damped system.
//
// A damped-wave stepper (w_tt - b Lap w + kappa w_t = f) backs the adjoint
// solves and the W-route cross-check scheme.

#include "jmgt/core/coefficients.hpp"
#include "jmgt/core/field.hpp"
#include "jmgt/core/grid.hpp"

namespace jmgt {

struct MgtSolution {
    SpaceTimeField u, ut, utt;
};

/// Solve the linear MGT system. Boundary values equal h exactly at boundary
/// nodes, the initial triple is taken as given. h_t, h_tt on the boundary are
/// produced by second-order time differences of h.
MgtSolution solve_linear(const DataTuple& data, const Coefficients& coeff,
                         const Grid& g);

struct WaveSolution {
    SpaceTimeField y, yt;
};

/// Solve y_tt - b Lap y + kappa y_t = f with Dirichlet trace xi and initial
/// data (y0, y1). kappa may be negative (adjoint equation) as long as
/// 1 + kappa*dt/2 > 0.
WaveSolution solve_damped_wave(const BoundaryField& xi, const SpatialField& y0,
                               const SpatialField& y1, const SpaceTimeField* f,
                               double b, double kappa, const Grid& g);

/// Cross-check scheme: step W = u_t + beta*u through its damped wave form and
/// recover u by the exponential integrating factor of u_t + beta*u = W.
/// Returns the recovered u (agrees with solve_linear to scheme order).
SpaceTimeField solve_linear_via_w(const DataTuple& data, const Coefficients& coeff,
                                  const Grid& g);

/// d/dt^order of a boundary trace (central in time, one-sided ends).
BoundaryField boundary_time_derivative(const BoundaryField& h, double dt,
                                       int order);

} // namespace jmgt
