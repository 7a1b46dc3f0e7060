#pragma once

// Westervelt-type forward solver: u = v1 + v2 where v1 carries the data and
// v2 is the fixed point of w -> L^{-1}[(p (v1+w)^2)_tt] with zero data,
// iterated in the Picard fashion of the contraction construction.

#include "jmgt/core/mgt_solver.hpp"
#include "jmgt/nonlinear/nonlinearity.hpp"

#include <vector>

namespace jmgt {

/// Expanded form of (p u^2)_tt:
///   p_tt u^2 + 4 p_t u u_t + 2 p (u_t^2 + u u_tt).
SpaceTimeField westervelt_source(const NonlinearityField& p,
                                 const SpaceTimeField& u,
                                 const SpaceTimeField& ut,
                                 const SpaceTimeField& utt, const Grid& g);

struct PicardOptions {
    int max_iterations = 50;
    double tol_rel = 1e-10;
};

struct PicardReport {
    int iterations = 0;
    std::vector<double> residual_history; // relative fixed-point residuals
    double contraction_estimate = 0.0;    // max ratio of successive residuals
    bool converged = false;
    double data_norm = 0.0;
    bool smallness_warning = false; // data norm exceeded the configured delta
};

struct NonlinearSolution {
    MgtSolution sol;
    PicardReport report;
};

/// Discrete surrogate of the data smallness quantity:
/// ||u0||_{H2} + ||u1||_{H1} + ||u2||_{L2} + sup_t (L2(Gamma) of h, h_t, h_tt).
double data_norm_surrogate(const DataTuple& data, const Grid& g);

NonlinearSolution solve_nonlinear(const DataTuple& data,
                                  const NonlinearityField& p,
                                  const Coefficients& coeff, const Grid& g,
                                  double delta,
                                  const PicardOptions& opt = {});

struct TaylorRow {
    double eps;
    double err; // || u(eps h) - eps w1 ||_{L2(Q)}
};

/// First-order Taylor check of the solution map at zero: runs the nonlinear
/// solve at eps*data for each eps and compares with eps times the linear
/// solution of the unit data.
std::vector<TaylorRow> taylor_check(const DataTuple& unit_data,
                                    const NonlinearityField& p,
                                    const Coefficients& coeff, const Grid& g,
                                    const std::vector<double>& eps_list,
                                    const PicardOptions& opt = {});

/// data scaled by a complex factor (h, u0, u1, u2 and f).
DataTuple scale_data(const DataTuple& data, cplx s);
/// a*d1 + b*d2 (shapes must match).
DataTuple combine_data(const DataTuple& d1, cplx a, const DataTuple& d2, cplx b);

} // namespace jmgt
