#pragma once

#include "jmgt/core/coefficients.hpp"
#include "jmgt/core/field.hpp"
#include "jmgt/core/grid.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace jmgt {

/// Time-dependent nonlinearity coefficient p(x,t), real-valued, with its
/// time-derivative companions. Analytic families carry exact derivatives;
/// sampled fields get central-difference companions.
class NonlinearityField {
  public:
    static NonlinearityField zero(const Grid& g);

    /// A * exp(-(x-x0)^2/2wx^2 - (y-y0)^2/2wy^2 - (t-t0)^2/2wt^2), optionally
    /// multiplied by a C^2 window that vanishes exactly outside (t_lo, t_hi).
    static NonlinearityField gaussian_bump(
        const Grid& g, double amplitude, double x0, double y0, double wx,
        double wy, double t0, double wt,
        std::optional<std::pair<double, double>> window = std::nullopt);

    /// Sampled values; companions by second-order time differences.
    static NonlinearityField from_samples(
        const Grid& g, std::vector<double> values,
        std::optional<std::pair<double, double>> window = std::nullopt);

    const std::vector<double>& p() const { return p_; }
    const std::vector<double>& pt() const { return pt_; }
    const std::vector<double>& ptt() const { return ptt_; }

    const double* p_level(int k) const { return p_.data() + lev_size_ * k; }
    const double* pt_level(int k) const { return pt_.data() + lev_size_ * k; }
    const double* ptt_level(int k) const { return ptt_.data() + lev_size_ * k; }

    std::optional<std::pair<double, double>> support_window() const {
        return window_;
    }
    bool is_zero() const;
    double max_abs() const;

    /// E^2-surrogate of p (sup_t of H2s(p) + H1(p_t) + L2(p_tt)).
    double em_surrogate_norm(const Grid& g) const;

    /// Assumption window checks: norm bound (throws) and exact-zero support
    /// outside the window (throws on violation when a window is set).
    void check_admissible(const Coefficients& coeff, const Grid& g) const;
    void check_support(const Grid& g) const;

    SpaceTimeField as_field(const Grid& g) const;

  private:
    NonlinearityField() = default;
    std::size_t lev_size_ = 0;
    int nlev_ = 0;
    std::vector<double> p_, pt_, ptt_;
    std::optional<std::pair<double, double>> window_;
};

} // namespace jmgt
