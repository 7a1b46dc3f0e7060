#pragma once

// Sampling helpers for analytic fields: manufactured solutions, probe data
// and test oracles.

#include "jmgt/core/field.hpp"
#include "jmgt/core/grid.hpp"

#include <functional>

namespace jmgt {

using SpaceFn = std::function<cplx(double, double)>;
using SpaceTimeFn = std::function<cplx(double, double, double)>;

inline SpatialField sample_spatial(const Grid& g, const SpaceFn& f) {
    SpatialField out(g);
    for (int iy = 0; iy < g.ny(); ++iy)
        for (int ix = 0; ix < g.nx(); ++ix)
            if (g.in_domain(ix, iy)) out(ix, iy) = f(g.x(ix), g.y(iy));
    return out;
}

inline SpaceTimeField sample_space_time(const Grid& g, const SpaceTimeFn& f,
                                        Role role = Role::u) {
    SpaceTimeField out(g, role);
    for (int k = 0; k < g.nlev(); ++k)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int ix = 0; ix < g.nx(); ++ix)
                if (g.in_domain(ix, iy))
                    out(k, ix, iy) = f(g.x(ix), g.y(iy), g.t(k));
    return out;
}

inline BoundaryField sample_boundary(const Grid& g, const SpaceTimeFn& f) {
    BoundaryField out(g);
    for (int k = 0; k < g.nlev(); ++k)
        for (int i = 0; i < g.boundary_count(); ++i) {
            const auto& bn = g.boundary()[i];
            out(k, i) = f(g.x(bn.ix), g.y(bn.iy), g.t(k));
        }
    return out;
}

/// Data of the exact solution u (whose first two time derivatives are given
/// analytically), with an optional interior source.
inline DataTuple make_data_from_solution(const Grid& g, const SpaceTimeFn& u,
                                         const SpaceTimeFn& ut,
                                         const SpaceTimeFn& utt,
                                         const SpaceTimeFn* f = nullptr) {
    DataTuple d;
    d.h = sample_boundary(g, u);
    d.u0 = sample_spatial(g, [&](double x, double y) { return u(x, y, 0.0); });
    d.u1 = sample_spatial(g, [&](double x, double y) { return ut(x, y, 0.0); });
    d.u2 = sample_spatial(g, [&](double x, double y) { return utt(x, y, 0.0); });
    if (f) d.f = sample_space_time(g, *f, Role::source);
    return d;
}

inline DataTuple zero_data(const Grid& g) {
    DataTuple d;
    d.h = BoundaryField(g);
    d.u0 = SpatialField(g);
    d.u1 = SpatialField(g);
    d.u2 = SpatialField(g);
    return d;
}

} // namespace jmgt
