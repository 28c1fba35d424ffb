#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracsde::quad {

/// Nodes/weights of an n-point rule on its natural interval.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre on [-1, 1]. Cached per n; thread-safe.
const Rule& gauss_legendre(int n);

/// Gauss-Jacobi on [0, 1] with weight x^alpha, alpha > -1. The weight is
/// implicit: sum_i w_i f(x_i) approximates integral_0^1 x^alpha f(x) dx.
Rule gauss_jacobi01(int n, double alpha);

/// Gauss-Hermite for weight e^{-x^2} on the real line (Golub-Welsch).
Rule gauss_hermite(int n);

/// E[f(mu + sd * Z)], Z standard normal, by Gauss-Hermite quadrature.
double normal_expectation(const std::function<double(double)>& f, double mu, double sd,
                          int n = 96);

/// Fixed-order Gauss-Legendre on [a, b].
double fixed_gl(const std::function<double(double)>& f, double a, double b, int n = 15);

/// Globally adaptive Gauss-Legendre by interval bisection. Accepts a panel
/// once its bisection estimate changes by less than the local share of
/// tol_abs or by tol_rel relative to the running total scale. Throws
/// numerical_error with the achieved estimate when max_depth is exceeded.
double adaptive_gl(const std::function<double(double)>& f, double a, double b, double tol_abs,
                   double tol_rel = 0.0, int max_depth = 52, int order = 15);

/// Adaptive integration in sequence over panels [pts[0],pts[1]], ...
double adaptive_gl_panels(const std::function<double(double)>& f, std::span<const double> pts,
                          double tol_abs, double tol_rel = 0.0, int max_depth = 52);

} // namespace fracsde::quad
