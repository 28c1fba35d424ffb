#include "fracsde/wick.hpp"

#include "fracsde/errors.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>

namespace fracsde {

namespace {

// Degree is capped at 24, so each power fits in 5 bits; for dimension <= 12
// the whole index packs into one collision-free 64-bit key.
std::uint64_t pack_key(const std::vector<int>& p) {
    std::uint64_t k = 0;
    for (int v : p) k = (k << 5) | static_cast<std::uint64_t>(v);
    return k;
}

template <class Memo, class Key>
double wick_rec(const Eigen::MatrixXd& cov, std::vector<int>& p, Memo& memo, const Key& make_key,
                int degree) {
    if (degree == 0) return 1.0;
    const auto key = make_key(p);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::size_t a = 0;
    while (p[a] == 0) ++a;
    --p[a];
    double acc = 0.0;
    for (std::size_t b = 0; b < p.size(); ++b) {
        if (p[b] == 0) continue;
        const double c = cov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        if (c == 0.0) continue;
        const double mult = p[b];
        --p[b];
        acc += c * mult * wick_rec(cov, p, memo, make_key, degree - 2);
        ++p[b];
    }
    ++p[a];
    memo.emplace(key, acc);
    return acc;
}

} // namespace

double wick_moment(const Eigen::MatrixXd& cov, const std::vector<int>& powers) {
    if (static_cast<std::size_t>(cov.rows()) != powers.size() || cov.rows() != cov.cols())
        throw domain_error("wick_moment: covariance / power dimensions disagree");
    int degree = 0;
    for (int p : powers) {
        if (p < 0) throw domain_error("wick_moment: powers must be nonnegative");
        degree += p;
    }
    if (degree > kWickDegreeCap)
        throw guard_error("wick_moment: total degree " + std::to_string(degree) + " exceeds cap " +
                          std::to_string(kWickDegreeCap));
    if (degree % 2 != 0) return 0.0;

    std::vector<int> p = powers;
    if (p.size() <= 12) {
        std::unordered_map<std::uint64_t, double> memo;
        return wick_rec(cov, p, memo, [](const std::vector<int>& v) { return pack_key(v); },
                        degree);
    }
    std::map<std::vector<int>, double> memo;
    return wick_rec(cov, p, memo, [](const std::vector<int>& v) { return v; }, degree);
}

} // namespace fracsde
