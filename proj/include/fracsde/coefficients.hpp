#pragma once

#include "fracsde/fbm.hpp"
#include "fracsde/word.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fracsde {

enum class CoeffMethod { analytic, mc };

/// Expectation of the iterated integral of a word over the unit simplex.
struct CoeffResult {
    double value;
    CoeffMethod method;
    std::optional<double> stderr_;   // present iff method == mc
    double hurst;
};

/// Largest number of dt slots the analytic quadrature accepts; longer words
/// go through the Monte Carlo route.
inline constexpr int kAnalyticDtCap = 3;

/// Analytic coefficient: odd-weight words are exactly 0; otherwise the dt
/// variables are integrated over the ordered simplex while the dB blocks
/// between consecutive dt slots contribute increment powers whose expectation
/// is a Wick moment. A block of g consecutive dB letters contributes
/// (increment)^g / g!.
CoeffResult c_coefficient_analytic(const Word& word, HurstIndex h, double tol = 1e-8);

/// Monte Carlo coefficient over sampled fBm paths on a uniform grid of
/// [0, horizon]. The iterated integral is accumulated step by step through
/// the concatenation identity: the state of all prefix integrals is advanced
/// with the polynomial lift of the step increments (Delta t, Delta B), which
/// keeps the estimator's bias far below its standard error at the mandated
/// step counts (plain left-point sums would not).
CoeffResult c_coefficient_mc(const Word& word, HurstIndex h, std::size_t n_paths,
                             std::size_t n_steps, std::uint64_t seed, double horizon = 1.0);

/// Same estimator for several words sharing one set of sampled paths. Results
/// are bitwise identical to per-word calls with the same seed.
std::vector<CoeffResult> c_coefficients_mc(std::span<const Word> words, HurstIndex h,
                                           std::size_t n_paths, std::size_t n_steps,
                                           std::uint64_t seed, double horizon = 1.0);

/// Pathwise iterated integral of one word along a sampled path.
double iterated_integral(const Word& word, std::span<const double> times,
                         std::span<const double> values);

} // namespace fracsde
