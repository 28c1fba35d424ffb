#pragma once

#include <Eigen/Dense>

#include <vector>

namespace fracsde {

/// E[Z_1^{p_1} ... Z_d^{p_d}] for a centered Gaussian vector Z with the given
/// covariance, by the Wick/Isserlis recursion
///   E[Z_a M] = sum_b Cov(a,b) E[dM/dZ_b],
/// memoized on the reduced power index. Odd total degree returns exactly 0
/// before any arithmetic. Total degree is capped at 24.
double wick_moment(const Eigen::MatrixXd& cov, const std::vector<int>& powers);

inline constexpr int kWickDegreeCap = 24;

} // namespace fracsde
