#pragma once

#include "jmgt/core/error.hpp"
#include "jmgt/core/grid.hpp"
#include "jmgt/kernels/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace jmgt {

using cplx = std::complex<double>;

enum class Role { u, u_t, u_tt, source, trace };

const char* role_name(Role r);
Role role_from_name(const std::string& s);

/// One spatial level: ny x nx complex values (x fastest).
class SpatialField {
  public:
    SpatialField() = default;
    SpatialField(int nx, int ny, cplx fill = {})
        : nx_(nx), ny_(ny), v_(static_cast<std::size_t>(nx) * ny, fill) {}
    explicit SpatialField(const Grid& g, cplx fill = {})
        : SpatialField(g.nx(), g.ny(), fill) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    std::size_t size() const { return v_.size(); }
    cplx& operator()(int ix, int iy) { return v_[static_cast<std::size_t>(iy) * nx_ + ix]; }
    cplx operator()(int ix, int iy) const { return v_[static_cast<std::size_t>(iy) * nx_ + ix]; }
    cplx* data() { return v_.data(); }
    const cplx* data() const { return v_.data(); }

  private:
    int nx_ = 0, ny_ = 0;
    std::vector<cplx> v_;
};

/// Complex scalar field on (grid point, time level); x fastest, then y, then t.
class SpaceTimeField {
  public:
    SpaceTimeField() = default;
    SpaceTimeField(int nx, int ny, int nlev, Role role = Role::u, cplx fill = {})
        : nx_(nx), ny_(ny), nlev_(nlev), role_(role),
          v_(static_cast<std::size_t>(nx) * ny * nlev, fill) {}
    SpaceTimeField(const Grid& g, Role role = Role::u, cplx fill = {})
        : SpaceTimeField(g.nx(), g.ny(), g.nlev(), role, fill) {}

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nlev() const { return nlev_; }
    Role role() const { return role_; }
    void set_role(Role r) { role_ = r; }

    std::size_t level_size() const { return static_cast<std::size_t>(nx_) * ny_; }
    std::size_t size() const { return v_.size(); }

    cplx* level(int k) { return v_.data() + k * level_size(); }
    const cplx* level(int k) const { return v_.data() + k * level_size(); }
    std::span<cplx> level_span(int k) { return {level(k), level_size()}; }
    std::span<const cplx> level_span(int k) const { return {level(k), level_size()}; }

    cplx& operator()(int k, int ix, int iy) {
        return v_[k * level_size() + static_cast<std::size_t>(iy) * nx_ + ix];
    }
    cplx operator()(int k, int ix, int iy) const {
        return v_[k * level_size() + static_cast<std::size_t>(iy) * nx_ + ix];
    }
    cplx* data() { return v_.data(); }
    const cplx* data() const { return v_.data(); }

    SpatialField slice(int k) const {
        SpatialField s(nx_, ny_);
        std::copy(level(k), level(k) + level_size(), s.data());
        return s;
    }
    void set_slice(int k, const SpatialField& s) {
        std::copy(s.data(), s.data() + s.size(), level(k));
    }

    bool matches(const Grid& g) const {
        return nx_ == g.nx() && ny_ == g.ny() && nlev_ == g.nlev();
    }
    void require_matches(const Grid& g, const char* who) const {
        if (!matches(g))
            fail(ErrorKind::shape, std::string(who) + ": field/grid shape mismatch");
    }

    bool is_finite() const {
        for (const auto& z : v_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& z : v_) m = std::max(m, std::abs(z));
        return m;
    }

    SpaceTimeField& operator+=(const SpaceTimeField& o) {
        kernels::caxpy(v_.size(), cplx(1.0), o.v_.data(), v_.data());
        return *this;
    }
    SpaceTimeField& operator-=(const SpaceTimeField& o) {
        kernels::caxpy(v_.size(), cplx(-1.0), o.v_.data(), v_.data());
        return *this;
    }
    SpaceTimeField& axpy(cplx a, const SpaceTimeField& o) {
        kernels::caxpy(v_.size(), a, o.v_.data(), v_.data());
        return *this;
    }
    SpaceTimeField& operator*=(cplx a) {
        if (a.imag() == 0.0) {
            kernels::scale(2 * v_.size(), a.real(),
                           reinterpret_cast<double*>(v_.data()));
        } else {
            for (auto& z : v_) z *= a;
        }
        return *this;
    }

  private:
    int nx_ = 0, ny_ = 0, nlev_ = 0;
    Role role_ = Role::u;
    std::vector<cplx> v_;
};

/// Values on the boundary ring over time: (level, boundary-node index).
class BoundaryField {
  public:
    BoundaryField() = default;
    BoundaryField(int nb, int nlev, cplx fill = {})
        : nb_(nb), nlev_(nlev), v_(static_cast<std::size_t>(nb) * nlev, fill) {}
    explicit BoundaryField(const Grid& g, cplx fill = {})
        : BoundaryField(g.boundary_count(), g.nlev(), fill) {}

    int nb() const { return nb_; }
    int nlev() const { return nlev_; }
    cplx& operator()(int k, int i) { return v_[static_cast<std::size_t>(k) * nb_ + i]; }
    cplx operator()(int k, int i) const { return v_[static_cast<std::size_t>(k) * nb_ + i]; }
    cplx* level(int k) { return v_.data() + static_cast<std::size_t>(k) * nb_; }
    const cplx* level(int k) const { return v_.data() + static_cast<std::size_t>(k) * nb_; }
    cplx* data() { return v_.data(); }
    const cplx* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

  private:
    int nb_ = 0, nlev_ = 0;
    std::vector<cplx> v_;
};

/// Dirichlet trace, initial triple and optional interior source for one solve.
struct DataTuple {
    BoundaryField h;
    SpatialField u0, u1, u2;
    SpaceTimeField f; // empty (size 0) means no source
    bool has_f() const { return f.size() > 0; }
};

} // namespace jmgt
