#ifndef L2BOOST_BASELINES_HPP
#define L2BOOST_BASELINES_HPP

#include <cstdint>

#include "l2boost/data.hpp"
#include "l2boost/simulation.hpp"

namespace l2boost {

/// Least squares on the standardized design (needs p < n, full rank).
SparseCoefficients ols_fit(const StandardizedDesign& g);

/// min ||y - G theta||^2 + lambda ||theta||^2 on the standardized scale;
/// the intercept is unpenalized via centering. Solved in the dual form
/// when p > n.
Vector ridge_theta(const StandardizedDesign& g, double lambda);
SparseCoefficients ridge_fit(const StandardizedDesign& g, double lambda);

/// 50 geometric points spanning [1e-4, 1e4].
std::vector<double> ridge_default_grid();

struct RidgeCvResult {
    SparseCoefficients coef;
    double lambda = 0.0;
    std::vector<double> cv_errors;  // mean squared prediction error per grid point
};

/// Ten-fold CV over the grid; per fold the training part is re-standardized
/// and all grid solutions come from one SVD.
RidgeCvResult ridge_cv(const Dataset& d, const std::vector<double>& grid, std::uint64_t seed);

/// One lambda per setting: the grid point minimizing the exact MSE averaged
/// over replications (drawn with the shared replication seeding).
struct RidgeOracleResult {
    double lambda_star = 0.0;
    std::vector<double> per_rep_mse;  // at lambda_star
    Matrix mse_matrix;                // reps x grid
};

RidgeOracleResult ridge_oracle(const SimulationModel& setting, int n, int reps,
                               std::uint64_t base_seed, const std::vector<double>& grid);

/// Greedy forward selection under classical AIC = n log(RSS/n) + 2(k+1);
/// stops when no addition decreases AIC, then refits OLS on the active set.
struct ForwardResult {
    SparseCoefficients coef;
    std::vector<int> order;    // columns in entry order
    std::vector<double> aic;   // AIC after each entry; aic[0] is the empty model
};

ForwardResult forward_select_aic(const StandardizedDesign& g);

struct LassoConfig {
    int grid_size = 100;
    double lambda_min_ratio = 1e-3;
    double tol = 1e-8;
    int max_sweeps = 10000;
};

/// Cyclic coordinate descent for (2n)^{-1} ||y - G theta||^2 + lambda |theta|_1
/// on the standardized scale. `warm` seeds the iteration.
Vector lasso_theta(const StandardizedDesign& g, double lambda, const LassoConfig& cfg,
                   Vector warm);
SparseCoefficients lasso_cd(const StandardizedDesign& g, double lambda,
                            const LassoConfig& cfg = {});

/// lambda_max = max_j |<y_c, g_j>_(n)| down to lambda_max * ratio, geometric.
std::vector<double> lasso_grid(const StandardizedDesign& g, const LassoConfig& cfg);

/// Warm-started solutions along the grid (standardized scale, one column
/// per grid point).
Matrix lasso_path(const StandardizedDesign& g, const std::vector<double>& grid,
                  const LassoConfig& cfg);

struct LassoCvResult {
    SparseCoefficients coef;
    double lambda = 0.0;
    std::vector<double> grid;
    std::vector<double> cv_errors;  // +inf past the active-set cut
};

/// Ten-fold CV over the grid. Like the LARS path, solutions whose active set
/// (counting the intercept) would exceed min(n, p+1) are never selectable;
/// the grid is cut where the full-data path first crosses that bound.
LassoCvResult lasso_cv(const Dataset& d, const LassoConfig& cfg, std::uint64_t seed);

/// One shared grid index per setting (the grid is geometric in
/// lambda/lambda_max, so a fixed index is a fixed relative penalty): the
/// index minimizing the exact MSE averaged over replications, like ridge.
struct LassoOracleResult {
    int index_star = 0;
    std::vector<double> per_rep_mse;     // at index_star
    std::vector<double> per_rep_lambda;  // each replication's lambda there
    Matrix mse_matrix;                   // reps x grid
};

LassoOracleResult lasso_oracle(const SimulationModel& setting, int n, int reps,
                               std::uint64_t base_seed, const LassoConfig& cfg);

/// Rows standardized by the centers/scales of s (for out-of-fold prediction).
Matrix apply_standardization(const StandardizedDesign& s, const Matrix& x_rows);

} // namespace l2boost

#endif
