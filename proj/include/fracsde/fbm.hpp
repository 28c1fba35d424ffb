#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace fracsde {

/// Hurst index of a fractional Brownian motion. Stochastic operations require
/// it strictly inside (1/2, 1) with a 1e-9 guard band at each end, because
/// both the Volterra kernel exponents and c_H degenerate at the endpoints.
class HurstIndex {
public:
    explicit HurstIndex(double value);

    double value() const { return value_; }
    double two_h() const { return 2.0 * value_; }

    static constexpr double kGuard = 1e-9;

private:
    double value_;
};

/// Strictly increasing sample times, first point >= 0.
class TimeGrid {
public:
    explicit TimeGrid(std::vector<double> times);

    /// n+1 equally spaced points covering [0, horizon].
    static TimeGrid uniform(double horizon, std::size_t n_steps);

    const std::vector<double>& times() const { return times_; }
    std::size_t size() const { return times_.size(); }
    double operator[](std::size_t i) const { return times_[i]; }
    double front() const { return times_.front(); }
    double back() const { return times_.back(); }
    bool is_uniform() const { return uniform_; }

private:
    std::vector<double> times_;
    bool uniform_;
};

/// One sampled fractional Brownian path on a grid.
struct FbmPath {
    TimeGrid grid;
    std::vector<double> values;
    double hurst;
    std::uint64_t seed;

    /// CSV with header "t,value", 17 significant digits per float.
    void write_csv(std::ostream& os) const;
};

/// R_H(s, t) = (t^{2H} + s^{2H} - |t-s|^{2H}) / 2. Unlike every other entry
/// point, this one also accepts H = 1/2 exactly (Brownian boundary checks).
double covariance(double s, double t, double hurst);

/// The kernel normalisation c_H with c_H^2 = H(2H-1)/Beta(2-2H, H-1/2),
/// evaluated through log-gamma.
double c_h_const(HurstIndex h);

/// Volterra kernel K_H(t, s) = c_H s^{1/2-H} int_s^t (u-s)^{H-3/2} u^{H-1/2} du
/// for s < t, and 0 for s >= t. The endpoint singularity at u = s is absorbed
/// by the substitution w = (u-s)^{H-1/2} before quadrature.
double kernel_k(double t, double s, HurstIndex h, double tol = 1e-10);

/// int_0^{min(s,t)} K_H(s,u) K_H(t,u) du; reproduces covariance(s,t,H).
double kernel_covariance_integral(double s, double t, HurstIndex h, double tol = 1e-8);

/// Covariance matrix of the increments B_{b_i} - B_{a_i}.
Eigen::MatrixXd increment_cov(const std::vector<std::pair<double, double>>& intervals,
                              HurstIndex h);

/// Exact Gaussian sampling of fBm on a fixed grid via dense Cholesky of the
/// grid covariance. Path i is a pure function of (seed, i): draws come from
/// counter-based streams, so sampling is reentrant and schedule-independent.
class FbmSampler {
public:
    FbmSampler(TimeGrid grid, HurstIndex h);

    FbmPath path(std::uint64_t seed, std::uint64_t index) const;

    /// Writes the path values into out (size grid.size()) without allocating.
    void sample_into(std::uint64_t seed, std::uint64_t index, std::vector<double>& out,
                     std::vector<double>& scratch) const;

    const TimeGrid& grid() const { return grid_; }
    double hurst() const { return hurst_.value(); }

private:
    using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    TimeGrid grid_;
    HurstIndex hurst_;
    RowMajorMatrix chol_;    // lower factor over the nonzero-time points
    std::size_t offset_;     // 1 if the grid starts at t = 0
};

std::vector<FbmPath> sample_fbm(const TimeGrid& grid, HurstIndex h, std::uint64_t seed,
                                std::size_t n_paths);

} // namespace fracsde
