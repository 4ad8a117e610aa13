#include "l2boost/greedy.hpp"

#include <cmath>
#include <limits>

#include "l2boost/base_learner.hpp"
#include "l2boost/rng.hpp"

namespace l2boost {

FiniteDictionary make_dictionary(Matrix vectors, Vector target_coeffs, double ip_denominator) {
    if (vectors.cols() < 1) throw EmptyDesign();
    if (target_coeffs.size() != vectors.cols())
        throw DimensionMismatch("coefficient count != dictionary size");
    FiniteDictionary d;
    d.ip_denominator = ip_denominator;
    const int n = static_cast<int>(vectors.rows());
    for (int j = 0; j < vectors.cols(); ++j) {
        const double norm_sq =
            dot_scaled(vectors.col(j).data(), vectors.col(j).data(), n, ip_denominator);
        if (std::fabs(norm_sq - 1.0) > 1e-10)
            throw ValidationError("dictionary element " + std::to_string(j) +
                                  " is not unit norm");
    }
    d.f = vectors * target_coeffs;
    d.b_bound = target_coeffs.cwiseAbs().sum();
    d.vectors = std::move(vectors);
    d.target_coeffs = std::move(target_coeffs);
    return d;
}

FiniteDictionary from_design(const StandardizedDesign& s) {
    FiniteDictionary d;
    d.vectors = s.g;
    d.f = s.y_centered;
    d.ip_denominator = static_cast<double>(s.n());
    d.b_bound = std::numeric_limits<double>::quiet_NaN();
    return d;
}

GreedyTrace weak_greedy(const FiniteDictionary& d, double b, double nu, int m_steps,
                        Selector selector, std::uint64_t seed) {
    if (!(b > 0.0 && b <= 1.0)) throw BadWeakness(b);
    if (!(nu > 0.0 && nu <= 1.0)) throw ValidationError("step size nu must lie in (0, 1]");
    if (d.size() < 1) throw EmptyDesign();

    const int n = d.dim();
    const bool has_bound = std::isfinite(d.b_bound);
    Rng rng(seed);
    GreedyTrace trace;
    Vector r = d.f;
    trace.initial_norm = std::sqrt(
        std::max(0.0, dot_scaled(r.data(), r.data(), n, d.ip_denominator)));

    for (int m = 1; m <= m_steps; ++m) {
        // Selection reuses the componentwise scan so EXACT_MAX is
        // arithmetic-identical to the boosting base learner.
        const BaseFit fit = componentwise_ls_raw(d.vectors, r, d.ip_denominator);
        int pick = fit.index;
        double ip = fit.coefficient;
        if (selector == Selector::B_WEAK_RANDOM) {
            const double cutoff = b * std::fabs(fit.coefficient);
            std::vector<int> qualifying;
            std::vector<double> ips;
            for (int j = 0; j < d.size(); ++j) {
                const double c =
                    dot_scaled(d.vectors.col(j).data(), r.data(), n, d.ip_denominator);
                if (std::fabs(c) >= cutoff) {
                    qualifying.push_back(j);
                    ips.push_back(c);
                }
            }
            const int choice = rng.below(static_cast<int>(qualifying.size()));
            pick = qualifying[choice];
            ip = ips[choice];
        }
        r -= (nu * ip) * d.vectors.col(pick);
        trace.index.push_back(pick);
        trace.inner.push_back(ip);
        trace.remainder_norm.push_back(std::sqrt(
            std::max(0.0, dot_scaled(r.data(), r.data(), n, d.ip_denominator))));
        trace.bound.push_back(has_bound ? temlyakov_bound(d.b_bound, m, b, nu)
                                        : std::numeric_limits<double>::quiet_NaN());
    }
    return trace;
}

double temlyakov_bound(double b_bound, int m, double b, double nu) {
    if (m < 0) throw ValidationError("m must be >= 0");
    if (!(b > 0.0 && b <= 1.0)) throw BadWeakness(b);
    if (!(nu > 0.0 && nu <= 1.0)) throw ValidationError("step size nu must lie in (0, 1]");
    return b_bound * std::pow(1.0 + nu * (2.0 - nu) * m * b * b, -b / (2.0 * (2.0 + b)));
}

BoundReport verify_bound(const FiniteDictionary& d, double b, double nu, int m_steps,
                         Selector selector, std::uint64_t seed) {
    if (!std::isfinite(d.b_bound))
        throw ValidationError("bound verification needs a coefficient representation");
    BoundReport report;
    report.trace = weak_greedy(d, b, nu, m_steps, selector, seed);
    // m = 0: ||f|| <= B by the triangle inequality over unit elements.
    double max_ratio = d.b_bound > 0.0 ? report.trace.initial_norm / d.b_bound : 0.0;
    int worst = 0;
    for (int m = 1; m <= m_steps; ++m) {
        const double bound = report.trace.bound[m - 1];
        const double norm = report.trace.remainder_norm[m - 1];
        if (bound <= 0.0) continue;
        const double ratio = norm / bound;
        if (ratio > max_ratio) {
            max_ratio = ratio;
            worst = m;
        }
        if (norm > bound * (1.0 + 1e-12)) {
            ++report.violations;
            report.max_ratio = ratio;
            throw BoundViolation(m, ratio);
        }
    }
    report.max_ratio = max_ratio;
    report.worst_step = worst;
    return report;
}

} // namespace l2boost
