#include "l2boost/base_learner.hpp"

#include <cmath>

namespace l2boost {

double dot_scaled(const double* a, const double* b, int n, double denom) {
    long double acc = 0.0L;
    for (int i = 0; i < n; ++i) acc += static_cast<long double>(a[i]) * b[i];
    return static_cast<double>(acc / denom);
}

BaseFit componentwise_ls_raw(const Matrix& g, const Vector& u, double denom) {
    const int n = static_cast<int>(g.rows());
    const int p = static_cast<int>(g.cols());
    if (p == 0) throw EmptyDesign();
    if (u.size() != n) throw DimensionMismatch("residual length != design rows");

    int best = 0;
    double best_coef = dot_scaled(g.col(0).data(), u.data(), n, denom);
    double best_abs = std::fabs(best_coef);
    for (int j = 1; j < p; ++j) {
        const double c = dot_scaled(g.col(j).data(), u.data(), n, denom);
        const double a = std::fabs(c);
        if (a > best_abs) {  // strict: smallest index wins ties
            best = j;
            best_coef = c;
            best_abs = a;
        }
    }
    BaseFit f;
    f.index = best;
    f.coefficient = best_coef;
    f.correlation = best_coef;
    const double uu = dot_scaled(u.data(), u.data(), n, denom);
    f.rss_after = denom * (uu - best_coef * best_coef);
    if (f.rss_after < 0.0) f.rss_after = 0.0;  // rounding guard near exact fits
    return f;
}

BaseFit componentwise_ls(const StandardizedDesign& g, const Vector& u) {
    return componentwise_ls_raw(g.g, u, static_cast<double>(g.n()));
}

} // namespace l2boost
