#include "jmgt/core/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jmgt {

Grid Grid::rectangle(int nx, int ny, double x0, double y0, double lx, double ly,
                     int nt, double t_final) {
    if (nx < 3 || ny < 3)
        fail(ErrorKind::argument, "grid: need nx, ny >= 3");
    if (nt < 1 || !(t_final > 0) || !(lx > 0) || !(ly > 0))
        fail(ErrorKind::argument, "grid: need nt >= 1, lx, ly, t_final > 0");
    Grid g;
    g.nx_ = nx;
    g.ny_ = ny;
    g.nt_ = nt;
    g.x0_ = x0;
    g.y0_ = y0;
    g.hx_ = lx / (nx - 1);
    g.hy_ = ly / (ny - 1);
    g.t_final_ = t_final;
    g.dt_ = t_final / nt;
    g.full_rectangle_ = true;
    g.mask_.assign(static_cast<std::size_t>(nx) * ny, CellKind::interior);
    for (int ix = 0; ix < nx; ++ix) {
        g.mask_[g.idx(ix, 0)] = CellKind::boundary;
        g.mask_[g.idx(ix, ny - 1)] = CellKind::boundary;
    }
    for (int iy = 0; iy < ny; ++iy) {
        g.mask_[g.idx(0, iy)] = CellKind::boundary;
        g.mask_[g.idx(nx - 1, iy)] = CellKind::boundary;
    }
    g.finalize_topology();
    return g;
}

Grid Grid::disc(int nx, int ny, double x0, double y0, double lx, double ly,
                double cx, double cy, double radius, int nt, double t_final) {
    Grid g = rectangle(nx, ny, x0, y0, lx, ly, nt, t_final);
    if (!(radius > 2 * std::max(g.hx_, g.hy_)))
        fail(ErrorKind::geometry, "grid: disc radius too small for the grid");
    g.full_rectangle_ = false;
    auto inside = [&](int ix, int iy) {
        const double dx = g.x(ix) - cx, dy = g.y(iy) - cy;
        return std::sqrt(dx * dx + dy * dy) <= radius;
    };
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            g.mask_[g.idx(ix, iy)] =
                inside(ix, iy) ? CellKind::interior : CellKind::exterior;
    // Outermost in-disc layer becomes the boundary ring.
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            if (g.mask_[g.idx(ix, iy)] != CellKind::interior) continue;
            const bool edge = ix == 0 || ix == nx - 1 || iy == 0 || iy == ny - 1;
            auto ext = [&](int jx, int jy) {
                return g.mask_[g.idx(jx, jy)] == CellKind::exterior;
            };
            if (edge || ext(ix - 1, iy) || ext(ix + 1, iy) || ext(ix, iy - 1) ||
                ext(ix, iy + 1))
                g.mask_[g.idx(ix, iy)] = CellKind::boundary;
        }
    if (std::count(g.mask_.begin(), g.mask_.end(), CellKind::interior) < 9)
        fail(ErrorKind::geometry, "grid: disc interior too small");
    // Radial normals for the snapped ring; arc shares from the disc perimeter.
    g.boundary_.clear();
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            if (g.mask_[g.idx(ix, iy)] != CellKind::boundary) continue;
            double dx = g.x(ix) - cx, dy = g.y(iy) - cy;
            const double rr = std::sqrt(dx * dx + dy * dy);
            if (rr == 0)
                fail(ErrorKind::geometry, "grid: boundary node at disc center");
            g.boundary_.push_back({ix, iy, dx / rr, dy / rr, 0.0});
        }
    const double ds = 2.0 * M_PI * radius / static_cast<double>(g.boundary_.size());
    for (auto& bn : g.boundary_) bn.ds = ds;
    g.finalize_topology();
    return g;
}

void Grid::finalize_topology() {
    const int n = node_count();
    bindex_.assign(n, -1);
    iindex_.assign(n, -1);
    interior_.clear();
    if (full_rectangle_) {
        boundary_.clear();
        // Perimeter walk weights: interior-of-face nodes get h, corners the
        // mean of the two adjacent segment lengths.
        for (int iy = 0; iy < ny_; ++iy)
            for (int ix = 0; ix < nx_; ++ix) {
                if (mask_[idx(ix, iy)] != CellKind::boundary) continue;
                const bool w = ix == 0, e = ix == nx_ - 1;
                const bool s = iy == 0, nn = iy == ny_ - 1;
                double vx = (e ? 1.0 : 0.0) - (w ? 1.0 : 0.0);
                double vy = (nn ? 1.0 : 0.0) - (s ? 1.0 : 0.0);
                const double len = std::sqrt(vx * vx + vy * vy);
                vx /= len;
                vy /= len;
                const bool corner = (w || e) && (s || nn);
                const double ds = corner ? 0.5 * (hx_ + hy_) : ((w || e) ? hy_ : hx_);
                boundary_.push_back({ix, iy, vx, vy, ds});
            }
    }
    for (std::size_t i = 0; i < boundary_.size(); ++i)
        bindex_[idx(boundary_[i].ix, boundary_[i].iy)] = static_cast<int>(i);
    for (int iy = 0; iy < ny_; ++iy)
        for (int ix = 0; ix < nx_; ++ix)
            if (mask_[idx(ix, iy)] == CellKind::interior) {
                iindex_[idx(ix, iy)] = static_cast<int>(interior_.size());
                interior_.push_back(idx(ix, iy));
            }

    area_w_.assign(n, 0.0);
    const double cell = hx_ * hy_;
    if (full_rectangle_) {
        for (int iy = 0; iy < ny_; ++iy)
            for (int ix = 0; ix < nx_; ++ix) {
                const double wx = (ix == 0 || ix == nx_ - 1) ? 0.5 : 1.0;
                const double wy = (iy == 0 || iy == ny_ - 1) ? 0.5 : 1.0;
                area_w_[idx(ix, iy)] = wx * wy * cell;
            }
    } else {
        for (int iy = 0; iy < ny_; ++iy)
            for (int ix = 0; ix < nx_; ++ix) {
                switch (mask_[idx(ix, iy)]) {
                    case CellKind::interior: area_w_[idx(ix, iy)] = cell; break;
                    case CellKind::boundary: area_w_[idx(ix, iy)] = 0.5 * cell; break;
                    default: break;
                }
            }
    }
    domain_area_ = 0.0;
    for (double w : area_w_) domain_area_ += w;

    diameter_ = 0.0;
    for (std::size_t i = 0; i < boundary_.size(); ++i)
        for (std::size_t j = i + 1; j < boundary_.size(); ++j) {
            const double dx = x(boundary_[i].ix) - x(boundary_[j].ix);
            const double dy = y(boundary_[i].iy) - y(boundary_[j].iy);
            diameter_ = std::max(diameter_, std::sqrt(dx * dx + dy * dy));
        }

    for (const auto& bn : boundary_) {
        const double norm = std::sqrt(bn.nx * bn.nx + bn.ny * bn.ny);
        if (std::abs(norm - 1.0) > 1e-12)
            fail(ErrorKind::geometry, "grid: boundary normal not unit length");
    }
}

double Grid::distance_to_domain(double px, double py) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& bn : boundary_) {
        const double dx = x(bn.ix) - px, dy = y(bn.iy) - py;
        best = std::min(best, std::sqrt(dx * dx + dy * dy));
    }
    return best;
}

} // namespace jmgt
