#pragma once

#include "jmgt/core/error.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace jmgt {

enum class CellKind : std::uint8_t { exterior = 0, boundary = 1, interior = 2 };

struct BoundaryNode {
    int ix, iy;
    double nx, ny; // outward unit normal
    double ds;     // arc-length share for Sigma quadrature
};

/// Uniform tensor grid on a bounding rectangle with a domain mask.
/// Supported domains: the full rectangle, and a disc embedded in the
/// rectangle (boundary nodes snapped to the grid; first-order geometry).
/// Time axis: nt steps of size dt with dt*nt = t_final, i.e. nt+1 levels.
class Grid {
  public:
    static Grid rectangle(int nx, int ny, double x0, double y0, double lx,
                          double ly, int nt, double t_final);
    static Grid disc(int nx, int ny, double x0, double y0, double lx, double ly,
                     double cx, double cy, double radius, int nt,
                     double t_final);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nt() const { return nt_; }
    int nlev() const { return nt_ + 1; }
    double hx() const { return hx_; }
    double hy() const { return hy_; }
    double dt() const { return dt_; }
    double t_final() const { return t_final_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double lx() const { return hx_ * (nx_ - 1); }
    double ly() const { return hy_ * (ny_ - 1); }

    double x(int ix) const { return x0_ + ix * hx_; }
    double y(int iy) const { return y0_ + iy * hy_; }
    double t(int k) const { return k * dt_; }

    bool is_full_rectangle() const { return full_rectangle_; }

    int node_count() const { return nx_ * ny_; }
    int idx(int ix, int iy) const { return iy * nx_ + ix; }
    CellKind kind(int ix, int iy) const { return mask_[idx(ix, iy)]; }
    bool in_domain(int ix, int iy) const {
        return mask_[idx(ix, iy)] != CellKind::exterior;
    }

    const std::vector<BoundaryNode>& boundary() const { return boundary_; }
    int boundary_count() const { return static_cast<int>(boundary_.size()); }
    /// Index into boundary() for a node, or -1.
    int boundary_index(int ix, int iy) const { return bindex_[idx(ix, iy)]; }

    const std::vector<int>& interior_nodes() const { return interior_; }
    int interior_count() const { return static_cast<int>(interior_.size()); }
    /// Index into interior_nodes() for a node, or -1.
    int interior_index(int ix, int iy) const { return iindex_[idx(ix, iy)]; }

    /// Per-node area quadrature weight (trapezoidal on the rectangle,
    /// half-weighted boundary ring on masked domains); zero on exterior nodes.
    const std::vector<double>& area_weights() const { return area_w_; }
    double domain_area() const { return domain_area_; }

    /// Euclidean diameter of the domain (max distance between domain nodes,
    /// evaluated on the boundary ring).
    double diameter() const { return diameter_; }

    /// Largest |x - p| over domain nodes is not needed; smallest is:
    double distance_to_domain(double px, double py) const;

  private:
    Grid() = default;
    void finalize_topology();

    int nx_ = 0, ny_ = 0, nt_ = 0;
    double hx_ = 0, hy_ = 0, dt_ = 0, x0_ = 0, y0_ = 0, t_final_ = 0;
    bool full_rectangle_ = true;
    std::vector<CellKind> mask_;
    std::vector<BoundaryNode> boundary_;
    std::vector<int> bindex_, iindex_, interior_;
    std::vector<double> area_w_;
    double domain_area_ = 0, diameter_ = 0;
};

} // namespace jmgt
