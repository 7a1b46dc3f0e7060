#pragma once

// Discrete differential operators on masked tensor grids. Space: second-order
// central differences at interior nodes, second-order one-sided at boundary
// nodes. Time: second-order central differences with one-sided closures at
// the first/last levels.

#include "jmgt/core/coefficients.hpp"
#include "jmgt/core/field.hpp"
#include "jmgt/core/grid.hpp"

namespace jmgt {

/// 5-point Laplacian of one spatial level at interior nodes; boundary/exterior
/// entries of `out` are left untouched. Neighbor values (including boundary
/// nodes) are read from `in`.
void laplacian_interior(const Grid& g, const cplx* in, cplx* out);

/// Laplacian at every domain node (one-sided second differences on the
/// boundary ring). Used by diagnostics and norms, not by the solvers.
void laplacian_domain(const Grid& g, const cplx* in, cplx* out);

/// Gradient (d/dx, d/dy) at a domain node; one-sided at boundary nodes.
void gradient_at(const Grid& g, const cplx* in, int ix, int iy, cplx& gx, cplx& gy);

/// k-th time level of the first/second/third time derivative of `f`
/// (central where possible, one-sided second-order at the ends; the third
/// derivative needs levels k-2..k+2 and is only defined for 2 <= k <= nt-2).
void time_derivative_level(const SpaceTimeField& f, int k, int order, double dt,
                           cplx* out);

/// Companion fields u_t, u_tt by time differencing (for fields that did not
/// come out of a solver).
SpaceTimeField time_derivative(const SpaceTimeField& f, double dt, int order);

struct ApplyPWindow {
    int k_lo, k_hi; // inclusive time-level range where the stencil is defined
};

/// Discrete P u = u_ttt + alpha u_tt - b Lap u_t - c^2 Lap u on interior
/// nodes for time levels 2..nt-2; all other entries are zero.
SpaceTimeField apply_P(const SpaceTimeField& u, const Coefficients& coeff,
                       const Grid& g);
ApplyPWindow apply_P_window(const Grid& g);

/// Same operator evaluated through the factorization L u_t + beta L u +
/// gamma u_tt with L = d_tt - b Lap. Agrees with apply_P to rounding.
SpaceTimeField apply_P_factorized(const SpaceTimeField& u,
                                  const Coefficients& coeff, const Grid& g);

/// d_nu u on Sigma by second-order one-sided differences along the axes,
/// projected on the outward normal.
BoundaryField dtn_trace(const SpaceTimeField& u, const Grid& g);

/// Trace of a spatial level on the boundary ring.
void boundary_trace(const Grid& g, const cplx* level, cplx* out_nb);

/// E(t) = 1/2 int (|u_t|^2 + |u_tt|^2 + |grad u|^2 + |grad u_t|^2 + |Lap u|^2)
std::vector<double> energy(const SpaceTimeField& u, const SpaceTimeField& ut,
                           const SpaceTimeField& utt, const Grid& g);

enum class NormKind { L2_Q, L2_Omega_at_t, H1_Omega_at_t, Em_surrogate };

/// Discrete norms (trapezoidal quadrature). `at_level` selects t for the
/// at-t kinds; Em_surrogate(m<=2) needs companions.
double discrete_norm(const SpaceTimeField& u, const Grid& g, NormKind kind,
                     int at_level = 0);
double em_surrogate(const SpaceTimeField& u, const SpaceTimeField& ut,
                    const SpaceTimeField& utt, const Grid& g, int m);

double l2_omega(const Grid& g, const cplx* level);
double h1_omega(const Grid& g, const cplx* level);
double l2_q(const SpaceTimeField& u, const Grid& g);

/// Trapezoidal space-time inner-product-free quadrature of a scalar sequence.
double trapezoid_time(const std::vector<double>& per_level, double dt);

struct CompatReport {
    std::vector<double> residuals; // sup over Gamma, one entry per k = 0..order
    double tolerance;
    bool pass() const {
        for (double r : residuals)
            if (!(r <= tolerance)) return false;
        return true;
    }
};

/// Residuals of the order-(0..order) compatibility conditions between the
/// boundary trace h, the initial triple and the source at t = 0.
CompatReport check_compatibility(const DataTuple& data, const Coefficients& coeff,
                                 const Grid& g, int order, double tol = 1e-8);

namespace detail {
/// Fornberg weights for the m-th derivative at node `at` of the unit-spaced
/// stencil {0, ..., n-1}.
std::vector<double> fd_weights_at(int m, int n, int at);
} // namespace detail

} // namespace jmgt
