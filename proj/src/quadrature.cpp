#include "fracsde/quadrature.hpp"

#include "fracsde/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>

namespace fracsde::quad {

namespace {

Rule legendre_rule(int n) {
    // Newton iteration on P_n with the three-term recurrence; standard
    // Chebyshev-based initial guesses converge in a handful of steps.
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the recurrence,
// weights mu0 * (first eigenvector component)^2.
Rule golub_welsch(const std::vector<double>& a, const std::vector<double>& sqrt_b, double mu0) {
    const int n = static_cast<int>(a.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = a[i];
        if (i + 1 < n) J(i, i + 1) = J(i + 1, i) = sqrt_b[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

double lgamma_(double x) { return std::lgamma(x); }

} // namespace

const Rule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, legendre_rule(n)).first;
    return it->second;
}

Rule gauss_jacobi01(int n, double alpha) {
    if (alpha <= -1.0) throw domain_error("gauss_jacobi01: alpha must exceed -1");
    // Jacobi weight (1-x)^0 (1+x)^alpha on [-1,1], then mapped to [0,1].
    const double a = 0.0, b = alpha;
    std::vector<double> diag(n), offd(n > 1 ? n - 1 : 0);
    diag[0] = (b - a) / (a + b + 2);
    for (int k = 1; k < n; ++k)
        diag[k] = (b * b - a * a) / ((2 * k + a + b) * (2 * k + a + b + 2));
    for (int k = 1; k < n; ++k) {
        double num;
        if (k == 1)
            num = 4.0 * (1 + a) * (1 + b) / ((a + b + 2) * (a + b + 2) * (a + b + 3));
        else {
            const double s = 2.0 * k + a + b;
            num = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1));
        }
        offd[k - 1] = std::sqrt(num);
    }
    const double mu0 =
        std::exp((a + b + 1) * std::log(2.0) + lgamma_(a + 1) + lgamma_(b + 1) - lgamma_(a + b + 2));
    Rule r = golub_welsch(diag, offd, mu0);
    // Map x in [-1,1] -> t = (1+x)/2 in [0,1]; weight (1+x)^alpha = (2t)^alpha,
    // dx = 2 dt, so w -> w / 2^{alpha+1} gives integral of t^alpha f(t).
    const double scale = std::pow(2.0, -(alpha + 1.0));
    for (int i = 0; i < static_cast<int>(r.nodes.size()); ++i) {
        r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
        r.weights[i] *= scale;
    }
    return r;
}

Rule gauss_hermite(int n) {
    std::vector<double> diag(n, 0.0), offd(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) offd[k - 1] = std::sqrt(k / 2.0);
    return golub_welsch(diag, offd, std::sqrt(M_PI));
}

double normal_expectation(const std::function<double(double)>& f, double mu, double sd, int n) {
    static std::mutex mtx;
    static std::map<int, Rule> cache;
    const Rule* rule;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, gauss_hermite(n)).first;
        rule = &it->second;
    }
    const double c = std::sqrt(2.0) * sd;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i)
        acc += rule->weights[i] * f(mu + c * rule->nodes[i]);
    return acc / std::sqrt(M_PI);
}

double fixed_gl(const std::function<double(double)>& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

namespace {

struct AdaptState {
    const std::function<double(double)>* f;
    double tol_abs;
    double tol_rel;
    int order;
    double achieved = 0.0;
    bool failed = false;
};

double adapt_rec(AdaptState& st, double a, double b, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = fixed_gl(*st.f, a, m, st.order);
    const double right = fixed_gl(*st.f, m, b, st.order);
    const double err = std::abs(left + right - whole);
    if (err <= tol || err <= st.tol_rel * std::abs(left + right)) {
        st.achieved += err;
        return left + right;
    }
    if (depth <= 0) {
        st.failed = true;
        st.achieved += err;
        return left + right;
    }
    return adapt_rec(st, a, m, left, 0.5 * tol, depth - 1) +
           adapt_rec(st, m, b, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_gl(const std::function<double(double)>& f, double a, double b, double tol_abs,
                   double tol_rel, int max_depth, int order) {
    if (a == b) return 0.0;
    AdaptState st{&f, tol_abs, tol_rel, order};
    const double whole = fixed_gl(f, a, b, order);
    const double result = adapt_rec(st, a, b, whole, tol_abs, max_depth);
    if (st.failed) throw numerical_error("adaptive quadrature did not converge", st.achieved);
    return result;
}

double adaptive_gl_panels(const std::function<double(double)>& f, std::span<const double> pts,
                          double tol_abs, double tol_rel, int max_depth) {
    double acc = 0.0;
    const double tol_each = tol_abs / static_cast<double>(pts.size() > 1 ? pts.size() - 1 : 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        acc += adaptive_gl(f, pts[i], pts[i + 1], tol_each, tol_rel, max_depth);
    return acc;
}

} // namespace fracsde::quad
