#ifndef L2BOOST_BASE_LEARNER_HPP
#define L2BOOST_BASE_LEARNER_HPP

#include "l2boost/data.hpp"

namespace l2boost {

/// Result of one componentwise least-squares fit. `index` is the 0-based
/// column Ĵ; `coefficient` is β̂_Ĵ = <u, g_Ĵ>_(n); `correlation` keeps the
/// same value for inspection; `rss_after` is the unshrunk residual sum of
/// squares n(||u||²_(n) − β̂²).
struct BaseFit {
    int index = 0;
    double coefficient = 0.0;
    double rss_after = 0.0;
    double correlation = 0.0;
};

/// (1/denom) * sum_i a_i b_i accumulated in extended precision, so that
/// selection compares deterministic values. Shared with greedy_theory's
/// empirical inner product — bit-identical arithmetic is what makes the
/// sample/population bridge exact.
double dot_scaled(const double* a, const double* b, int n, double denom);

/// One base-procedure step: picks the column maximizing |<u, g_j>_(n)|,
/// smallest index on exact ties.
BaseFit componentwise_ls(const StandardizedDesign& g, const Vector& u);

/// Same scan on a raw column matrix (used internally by boosting and by
/// the greedy replay); columns must have unit empirical norm under
/// <a,b> = (1/denom) sum a_i b_i.
BaseFit componentwise_ls_raw(const Matrix& g, const Vector& u, double denom);

} // namespace l2boost

#endif
