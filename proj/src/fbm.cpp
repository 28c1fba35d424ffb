#include "fracsde/fbm.hpp"

#include "fracsde/errors.hpp"
#include "fracsde/quadrature.hpp"
#include "fracsde/rng.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace fracsde {

HurstIndex::HurstIndex(double value) : value_(value) {
    if (!(value >= 0.5 + kGuard && value <= 1.0 - kGuard))
        throw domain_error("Hurst index must lie in [0.5+1e-9, 1-1e-9], got " +
                           std::to_string(value));
}

TimeGrid::TimeGrid(std::vector<double> times) : times_(std::move(times)) {
    if (times_.size() < 1) throw domain_error("time grid needs at least one point");
    if (times_.front() < 0.0) throw domain_error("time grid must start at t >= 0");
    for (std::size_t i = 0; i + 1 < times_.size(); ++i)
        if (!(times_[i] < times_[i + 1]))
            throw domain_error("time grid must be strictly increasing");
    uniform_ = true;
    if (times_.size() > 2) {
        const double dt0 = times_[1] - times_[0];
        for (std::size_t i = 1; i + 1 < times_.size(); ++i) {
            const double dt = times_[i + 1] - times_[i];
            if (std::abs(dt - dt0) > 1e-12 * std::max(dt, dt0)) {
                uniform_ = false;
                break;
            }
        }
    }
}

TimeGrid TimeGrid::uniform(double horizon, std::size_t n_steps) {
    if (!(horizon > 0.0) || n_steps < 1) throw domain_error("uniform grid needs horizon > 0 and steps >= 1");
    std::vector<double> t(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i)
        t[i] = horizon * static_cast<double>(i) / static_cast<double>(n_steps);
    return TimeGrid(std::move(t));
}

void FbmPath::write_csv(std::ostream& os) const {
    os << "t,value\n";
    char buf[96];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid[i], values[i]);
        os << buf;
    }
}

double covariance(double s, double t, double hurst) {
    if (s < 0.0 || t < 0.0) throw domain_error("covariance: times must be nonnegative");
    if (!(hurst >= 0.5 && hurst <= 1.0 - HurstIndex::kGuard))
        throw domain_error("covariance: H must lie in [0.5, 1)");
    const double two_h = 2.0 * hurst;
    return 0.5 * (std::pow(t, two_h) + std::pow(s, two_h) - std::pow(std::abs(t - s), two_h));
}

double c_h_const(HurstIndex h) {
    const double H = h.value();
    // Beta(a, b) = exp(lgamma a + lgamma b - lgamma(a+b))
    const double a = 2.0 - 2.0 * H, b = H - 0.5;
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    return std::sqrt(H * (2.0 * H - 1.0) * std::exp(-log_beta));
}

double kernel_k(double t, double s, HurstIndex h, double tol) {
    if (t < 0.0 || s < 0.0) throw domain_error("kernel_k: times must be nonnegative");
    if (!(tol > 0.0)) throw domain_error("kernel_k: tol must be positive");
    if (s >= t) return 0.0;
    if (s == 0.0) throw domain_error("kernel_k: s = 0 is outside the kernel domain");
    const double H = h.value();
    const double hm = H - 0.5;
    // w = (u-s)^{H-1/2}: (u-s)^{H-3/2} du = dw / (H-1/2), integrand becomes
    // (s + w^{1/(H-1/2)})^{H-1/2}, smooth on [0, (t-s)^{H-1/2}].
    const double q = 1.0 / hm;
    const double upper = std::pow(t - s, hm);
    const double integral = quad::adaptive_gl(
        [&](double w) { return std::pow(s + std::pow(w, q), hm); }, 0.0, upper,
        tol * 0.1 * upper * std::pow(t, hm), tol);
    return c_h_const(h) * std::pow(s, -hm) * integral / hm;
}

double kernel_covariance_integral(double s, double t, HurstIndex h, double tol) {
    const double m = std::min(s, t);
    if (!(m > 0.0)) throw domain_error("kernel_covariance_integral: times must be positive");
    const double H = h.value();
    // Product behaves like u^{1-2H} at u = 0; y = u^{2-2H} absorbs it exactly:
    // du = (1/(2-2H)) y^{(2H-1)/(2-2H)} dy and u^{1-2H} du = dy/(2-2H).
    const double p = 2.0 - 2.0 * H;
    const double inner_tol = std::min(1e-9, 0.02 * tol);
    auto f = [&](double y) {
        const double u = std::pow(y, 1.0 / p);
        const double k1 = kernel_k(s, u, h, inner_tol);
        const double k2 = kernel_k(t, u, h, inner_tol);
        return k1 * k2 * std::pow(u, 2.0 * H - 1.0);
    };
    const double upper = std::pow(m, p);
    return quad::adaptive_gl(f, 0.0, upper, 0.2 * tol, 0.0, 40, 15) / p;
}

Eigen::MatrixXd increment_cov(const std::vector<std::pair<double, double>>& intervals,
                              HurstIndex h) {
    const double two_h = h.two_h();
    const auto n = static_cast<Eigen::Index>(intervals.size());
    for (const auto& [a, b] : intervals) {
        if (a < 0.0 || b < 0.0) throw domain_error("increment_cov: times must be nonnegative");
        if (!(a < b)) throw domain_error("increment_cov: degenerate interval");
    }
    Eigen::MatrixXd m(n, n);
    auto pw = [two_h](double x) { return std::pow(std::abs(x), two_h); };
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const auto [ai, bi] = intervals[static_cast<std::size_t>(i)];
            const auto [aj, bj] = intervals[static_cast<std::size_t>(j)];
            const double v = 0.5 * (pw(bj - ai) + pw(aj - bi) - pw(aj - ai) - pw(bj - bi));
            m(i, j) = m(j, i) = v;
        }
    }
    return m;
}

FbmSampler::FbmSampler(TimeGrid grid, HurstIndex h) : grid_(std::move(grid)), hurst_(h) {
    if (grid_.size() < 2) throw domain_error("FbmSampler: grid needs at least two points");
    offset_ = (grid_.front() == 0.0) ? 1 : 0;
    const auto n = static_cast<Eigen::Index>(grid_.size() - offset_);
    if (n < 1) throw domain_error("FbmSampler: no stochastic grid points");
    Eigen::MatrixXd cov(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double v = covariance(grid_[static_cast<std::size_t>(i) + offset_],
                                        grid_[static_cast<std::size_t>(j) + offset_], hurst_.value());
            cov(i, j) = cov(j, i) = v;
        }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
        // one jitter retry before giving up
        const double jitter = 1e-12 * cov.diagonal().maxCoeff();
        cov.diagonal().array() += jitter;
        llt.compute(cov);
        if (llt.info() != Eigen::Success)
            throw numerical_error("FbmSampler: covariance Cholesky failed after jitter retry",
                                  jitter);
    }
    chol_ = llt.matrixL();
}

void FbmSampler::sample_into(std::uint64_t seed, std::uint64_t index, std::vector<double>& out,
                             std::vector<double>& scratch) const {
    const auto n = static_cast<std::size_t>(chol_.rows());
    scratch.resize(n);
    for (std::size_t j = 0; j < n; ++j) scratch[j] = rng::normal(seed, index, j);
    out.assign(grid_.size(), 0.0);
    // lower-triangular matvec row by row; fixed evaluation order keeps results
    // identical across thread counts
    const Eigen::Map<const Eigen::VectorXd> z(scratch.data(), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        out[i + offset_] = chol_.row(ii).head(ii + 1).dot(z.head(ii + 1));
    }
}

FbmPath FbmSampler::path(std::uint64_t seed, std::uint64_t index) const {
    FbmPath p{grid_, {}, hurst_.value(), seed};
    std::vector<double> scratch;
    sample_into(seed, index, p.values, scratch);
    return p;
}

std::vector<FbmPath> sample_fbm(const TimeGrid& grid, HurstIndex h, std::uint64_t seed,
                                std::size_t n_paths) {
    if (n_paths < 1) throw domain_error("sample_fbm: n_paths must be >= 1");
    if (grid.front() != 0.0) throw domain_error("sample_fbm: grid must start at 0");
    FbmSampler sampler(grid, h);
    std::vector<FbmPath> paths;
    paths.reserve(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i) paths.push_back(sampler.path(seed, i));
    return paths;
}

} // namespace fracsde
