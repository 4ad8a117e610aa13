#include "l2boost/baselines.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "l2boost/base_learner.hpp"
#include "l2boost/model_selection.hpp"

namespace l2boost {

namespace {

Vector ols_theta(const StandardizedDesign& g) {
    if (g.p() >= g.n()) throw SingularDesign("p >= n: least squares is not identified");
    Eigen::ColPivHouseholderQR<Matrix> qr(g.g);
    if (qr.rank() < g.p()) throw SingularDesign("design is rank deficient");
    return qr.solve(g.y_centered);
}

} // namespace

Matrix apply_standardization(const StandardizedDesign& s, const Matrix& x_rows) {
    if (x_rows.cols() != s.p()) throw DimensionMismatch("row width != design width");
    return (x_rows.rowwise() - s.centers.transpose()).array().rowwise() /
           s.scales.transpose().array();
}

SparseCoefficients ols_fit(const StandardizedDesign& g) {
    return unstandardize_coefficients(ols_theta(g), g);
}

Vector ridge_theta(const StandardizedDesign& g, double lambda) {
    if (lambda < 0.0) throw ValidationError("ridge penalty must be >= 0");
    if (lambda == 0.0) return ols_theta(g);
    const int n = g.n(), p = g.p();
    if (p <= n) {
        Matrix a = g.g.transpose() * g.g;
        a.diagonal().array() += lambda;
        return Eigen::LLT<Matrix>(a).solve(g.g.transpose() * g.y_centered);
    }
    // dual form: theta = G'(GG' + lambda I)^{-1} y
    Matrix k = g.g * g.g.transpose();
    k.diagonal().array() += lambda;
    return g.g.transpose() * Eigen::LLT<Matrix>(k).solve(g.y_centered);
}

SparseCoefficients ridge_fit(const StandardizedDesign& g, double lambda) {
    return unstandardize_coefficients(ridge_theta(g, lambda), g);
}

std::vector<double> ridge_default_grid() {
    std::vector<double> grid(50);
    for (int i = 0; i < 50; ++i)
        grid[i] = 1e-4 * std::pow(1e8, static_cast<double>(i) / 49.0);
    return grid;
}

RidgeCvResult ridge_cv(const Dataset& d, const std::vector<double>& grid, std::uint64_t seed) {
    if (grid.empty()) throw ValidationError("empty ridge grid");
    const int n = d.n();
    const std::vector<int> fold = kfold_split(n, 10, seed);
    std::vector<double> err(grid.size(), 0.0);
    for (int f = 0; f < 10; ++f) {
        std::vector<int> tr, te;
        for (int i = 0; i < n; ++i) (fold[i] == f ? te : tr).push_back(i);
        Matrix xtr(tr.size(), d.p()), xte(te.size(), d.p());
        Vector ytr(tr.size()), yte(te.size());
        for (size_t i = 0; i < tr.size(); ++i) xtr.row(i) = d.x.row(tr[i]), ytr[i] = d.y[tr[i]];
        for (size_t i = 0; i < te.size(); ++i) xte.row(i) = d.x.row(te[i]), yte[i] = d.y[te[i]];
        const StandardizedDesign s = standardize(make_dataset(xtr, ytr));
        // one SVD serves the whole grid: theta = V diag(d/(d^2+lambda)) U' y
        Eigen::BDCSVD<Matrix> svd(s.g, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Vector uy = svd.matrixU().transpose() * s.y_centered;
        const Vector sv = svd.singularValues();
        const Matrix gte = apply_standardization(s, xte);
        for (size_t i = 0; i < grid.size(); ++i) {
            Vector shrunk(sv.size());
            for (int k = 0; k < sv.size(); ++k)
                shrunk[k] = sv[k] * uy[k] / (sv[k] * sv[k] + grid[i]);
            const Vector theta = svd.matrixV() * shrunk;
            const Vector pred = (gte * theta).array() + s.y_center;
            err[i] += (yte - pred).squaredNorm();
        }
    }
    for (auto& e : err) e /= n;
    const auto it = std::min_element(err.begin(), err.end());
    const double lambda = grid[static_cast<size_t>(it - err.begin())];
    RidgeCvResult r;
    r.lambda = lambda;
    r.cv_errors = std::move(err);
    r.coef = ridge_fit(standardize(d), lambda);
    return r;
}

RidgeOracleResult ridge_oracle(const SimulationModel& setting, int n, int reps,
                               std::uint64_t base_seed, const std::vector<double>& grid) {
    if (grid.empty() || reps < 1) throw ValidationError("ridge oracle needs grid and reps");
    RidgeOracleResult out;
    out.mse_matrix.resize(reps, static_cast<int>(grid.size()));
    for (int r = 0; r < reps; ++r) {
        const Replication rep = replication_draw(setting, n, base_seed, r);
        const StandardizedDesign s = standardize(rep.data);
        SparseCoefficients truth = make_sparse(rep.model.intercept_true, rep.model.beta_true);
        Eigen::BDCSVD<Matrix> svd(s.g, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Vector uy = svd.matrixU().transpose() * s.y_centered;
        const Vector sv = svd.singularValues();
        for (size_t i = 0; i < grid.size(); ++i) {
            Vector shrunk(sv.size());
            for (int k = 0; k < sv.size(); ++k)
                shrunk[k] = sv[k] * uy[k] / (sv[k] * sv[k] + grid[i]);
            const SparseCoefficients est =
                unstandardize_coefficients(svd.matrixV() * shrunk, s);
            out.mse_matrix(r, static_cast<int>(i)) = exact_mse(est, truth, rep.model.v);
        }
    }
    const Vector col_mean = out.mse_matrix.colwise().mean();
    int best = 0;
    for (int i = 1; i < col_mean.size(); ++i)
        if (col_mean[i] < col_mean[best]) best = i;
    out.lambda_star = grid[best];
    out.per_rep_mse.resize(reps);
    for (int r = 0; r < reps; ++r) out.per_rep_mse[r] = out.mse_matrix(r, best);
    return out;
}

ForwardResult forward_select_aic(const StandardizedDesign& g) {
    const int n = g.n(), p = g.p();
    const double nd = static_cast<double>(n);
    ForwardResult out;
    Vector r = g.y_centered;
    double rss = r.squaredNorm();
    double cur_aic = nd * std::log(rss / nd) + 2.0;
    out.aic.push_back(cur_aic);

    Matrix q(n, std::min(p, n));  // orthonormal basis of the active columns
    int k = 0;
    std::vector<char> in_model(p, 0);
    const int k_cap = std::min(p, n - 2);
    while (k < k_cap) {
        int best_j = -1;
        double best_gain = 0.0;
        Vector best_z;
        for (int j = 0; j < p; ++j) {
            if (in_model[j]) continue;
            Vector z = g.g.col(j);
            if (k > 0) z -= q.leftCols(k) * (q.leftCols(k).transpose() * z);
            const double zn = z.norm();
            if (zn < 1e-10 * std::sqrt(nd)) continue;  // numerically in the span
            const double proj = r.dot(z) / zn;
            const double gain = proj * proj;
            if (gain > best_gain) {
                best_gain = gain;
                best_j = j;
                best_z = z / zn;
            }
        }
        if (best_j < 0) break;
        const double new_rss = rss - best_gain;
        if (new_rss <= 0.0) break;  // interpolation; AIC undefined past here
        const double new_aic = nd * std::log(new_rss / nd) + 2.0 * (k + 2);
        if (new_aic >= cur_aic) break;
        q.col(k) = best_z;
        r -= r.dot(best_z) * best_z;
        rss = new_rss;
        cur_aic = new_aic;
        in_model[best_j] = 1;
        out.order.push_back(best_j);
        out.aic.push_back(new_aic);
        ++k;
    }

    Vector theta = Vector::Zero(p);
    if (k > 0) {  // OLS refit on the selected columns
        Matrix sub(n, k);
        for (int i = 0; i < k; ++i) sub.col(i) = g.g.col(out.order[i]);
        const Vector coef = Eigen::ColPivHouseholderQR<Matrix>(sub).solve(g.y_centered);
        for (int i = 0; i < k; ++i) theta[out.order[i]] = coef[i];
    }
    out.coef = unstandardize_coefficients(theta, g);
    return out;
}

namespace {

// Coordinate descent core; never throws. Writes the final KKT gap so callers
// can decide how strict to be (the tiny-lambda tail with p >> n has
// non-unique optima where the gap closes very slowly).
Vector cd_solve(const StandardizedDesign& g, double lambda, const LassoConfig& cfg, Vector warm,
                double* gap_out) {
    const int n = g.n(), p = g.p();
    const double nd = static_cast<double>(n);
    Vector theta = warm.size() == p ? std::move(warm) : Vector::Zero(p);
    Vector col_sq(p);  // (1/n)||g_j||^2, exactly 1 up to rounding
    for (int j = 0; j < p; ++j) col_sq[j] = g.g.col(j).squaredNorm() / nd;
    Vector r = g.y_centered - g.g * theta;

    auto sweep = [&](const std::vector<int>& cols) {
        double max_delta = 0.0;
        for (int j : cols) {
            const double old = theta[j];
            const double rho = g.g.col(j).dot(r) / nd + col_sq[j] * old;
            const double mag = std::fabs(rho) - lambda;
            const double next = mag > 0.0 ? std::copysign(mag, rho) / col_sq[j] : 0.0;
            const double delta = next - old;
            if (delta != 0.0) {
                r -= delta * g.g.col(j);
                theta[j] = next;
                max_delta = std::max(max_delta, std::fabs(delta));
            }
        }
        return max_delta;
    };

    std::vector<int> all(p);
    for (int j = 0; j < p; ++j) all[j] = j;
    int sweeps = 0;
    while (true) {
        if (sweeps++ >= cfg.max_sweeps) break;
        const double full_delta = sweep(all);
        if (full_delta <= cfg.tol) break;
        // iterate on the active set until stable, then re-check all columns
        std::vector<int> active;
        for (int j = 0; j < p; ++j)
            if (theta[j] != 0.0) active.push_back(j);
        while (sweeps < cfg.max_sweeps && !active.empty()) {
            ++sweeps;
            if (sweep(active) <= cfg.tol) break;
        }
    }

    // KKT certificate: |(1/n)<r, g_j>| <= lambda (+slack) everywhere,
    // with equality at active coordinates.
    double gap = 0.0;
    for (int j = 0; j < p; ++j) {
        const double c = g.g.col(j).dot(r) / nd;
        if (theta[j] != 0.0)
            gap = std::max(gap, std::fabs(c - std::copysign(lambda, theta[j])));
        else
            gap = std::max(gap, std::max(0.0, std::fabs(c) - lambda));
    }
    if (gap_out) *gap_out = gap;
    return theta;
}

int active_count(const Vector& theta) {
    int k = 0;
    for (int j = 0; j < theta.size(); ++j)
        if (theta[j] != 0.0) ++k;
    return k;
}

} // namespace

Vector lasso_theta(const StandardizedDesign& g, double lambda, const LassoConfig& cfg,
                   Vector warm) {
    if (lambda < 0.0) throw ValidationError("lasso penalty must be >= 0");
    double gap = 0.0;
    Vector theta = cd_solve(g, lambda, cfg, std::move(warm), &gap);
    if (gap > 1e3 * cfg.tol) throw NoConvergence(gap);
    return theta;
}

SparseCoefficients lasso_cd(const StandardizedDesign& g, double lambda, const LassoConfig& cfg) {
    return unstandardize_coefficients(lasso_theta(g, lambda, cfg, Vector()), g);
}

std::vector<double> lasso_grid(const StandardizedDesign& g, const LassoConfig& cfg) {
    double lambda_max = 0.0;
    for (int j = 0; j < g.p(); ++j)
        lambda_max = std::max(
            lambda_max, std::fabs(dot_scaled(g.y_centered.data(), g.g.col(j).data(), g.n(),
                                             static_cast<double>(g.n()))));
    if (lambda_max <= 0.0) lambda_max = 1.0;  // constant response: any grid gives 0
    std::vector<double> grid(cfg.grid_size);
    for (int i = 0; i < cfg.grid_size; ++i)
        grid[i] =
            lambda_max * std::pow(cfg.lambda_min_ratio,
                                  static_cast<double>(i) / (cfg.grid_size > 1 ? cfg.grid_size - 1 : 1));
    return grid;
}

Matrix lasso_path(const StandardizedDesign& g, const std::vector<double>& grid,
                  const LassoConfig& cfg) {
    Matrix path(g.p(), static_cast<int>(grid.size()));
    Vector warm = Vector::Zero(g.p());
    for (size_t i = 0; i < grid.size(); ++i) {
        warm = lasso_theta(g, grid[i], cfg, warm);
        path.col(static_cast<int>(i)) = warm;
    }
    return path;
}

LassoCvResult lasso_cv(const Dataset& d, const LassoConfig& cfg, std::uint64_t seed) {
    const int n = d.n();
    if (n < 10) throw BadFoldCount(10, n);
    const StandardizedDesign full = standardize(d);
    const std::vector<double> grid = lasso_grid(full, cfg);
    const int cap = std::min(n, d.p() + 1);  // actives counting the intercept

    // Full-data path from lambda_max down, stopping like the LARS path does
    // once the active set (plus intercept) would exceed min(n, p+1). Grid
    // points past that cut are never selectable.
    Matrix path = Matrix::Zero(d.p(), cfg.grid_size);
    std::vector<double> gaps(grid.size(), 0.0);
    size_t usable = 0;
    {
        Vector warm = Vector::Zero(d.p());
        for (size_t i = 0; i < grid.size(); ++i) {
            warm = cd_solve(full, grid[i], cfg, std::move(warm), &gaps[i]);
            if (active_count(warm) + 1 > cap) break;
            path.col(static_cast<int>(i)) = warm;
            usable = i + 1;
        }
    }

    const std::vector<int> fold = kfold_split(n, 10, seed);
    std::vector<double> err(grid.size(), std::numeric_limits<double>::infinity());
    std::fill(err.begin(), err.begin() + static_cast<long>(usable), 0.0);
    for (int f = 0; f < 10; ++f) {
        std::vector<int> tr, te;
        for (int i = 0; i < n; ++i) (fold[i] == f ? te : tr).push_back(i);
        Matrix xtr(tr.size(), d.p()), xte(te.size(), d.p());
        Vector ytr(tr.size()), yte(te.size());
        for (size_t i = 0; i < tr.size(); ++i) xtr.row(i) = d.x.row(tr[i]), ytr[i] = d.y[tr[i]];
        for (size_t i = 0; i < te.size(); ++i) xte.row(i) = d.x.row(te[i]), yte[i] = d.y[te[i]];
        const StandardizedDesign s = standardize(make_dataset(xtr, ytr));
        const Matrix gte = apply_standardization(s, xte);
        Vector warm = Vector::Zero(d.p());
        for (size_t i = 0; i < usable; ++i) {
            warm = cd_solve(s, grid[i], cfg, std::move(warm), nullptr);
            const Vector pred = (gte * warm).array() + s.y_center;
            err[i] += (yte - pred).squaredNorm();
        }
    }
    for (size_t i = 0; i < usable; ++i) err[i] /= n;
    const auto it = std::min_element(err.begin(), err.begin() + static_cast<long>(usable));
    const size_t best = static_cast<size_t>(it - err.begin());
    if (gaps[best] > 1e3 * cfg.tol) throw NoConvergence(gaps[best]);

    LassoCvResult out;
    out.lambda = grid[best];
    out.grid = grid;
    out.cv_errors = std::move(err);
    out.coef = unstandardize_coefficients(path.col(static_cast<int>(best)), full);
    return out;
}

LassoOracleResult lasso_oracle(const SimulationModel& setting, int n, int reps,
                               std::uint64_t base_seed, const LassoConfig& cfg) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    LassoOracleResult out;
    out.mse_matrix = Matrix::Constant(reps, cfg.grid_size, nan);
    Matrix lambdas = Matrix::Zero(reps, cfg.grid_size);
    const int cap = std::min(n, setting.p + 1);
    for (int r = 0; r < reps; ++r) {
        const Replication rep = replication_draw(setting, n, base_seed, r);
        const StandardizedDesign s = standardize(rep.data);
        const SparseCoefficients truth =
            make_sparse(rep.model.intercept_true, rep.model.beta_true);
        const std::vector<double> grid = lasso_grid(s, cfg);
        Vector warm = Vector::Zero(setting.p);
        for (int i = 0; i < cfg.grid_size; ++i) {
            double gap = 0.0;
            warm = cd_solve(s, grid[static_cast<size_t>(i)], cfg, std::move(warm), &gap);
            if (active_count(warm) + 1 > cap) break;  // same LARS-style cut as lasso_cv
            if (gap <= 1e3 * cfg.tol)
                out.mse_matrix(r, i) =
                    exact_mse(unstandardize_coefficients(warm, s), truth, rep.model.v);
            lambdas(r, i) = grid[static_cast<size_t>(i)];
        }
    }
    // The grids differ across replications only through lambda_max, so a fixed
    // index is a fixed penalty relative to lambda_max. Only indices solved
    // cleanly for every replication compete.
    int best = 0;
    double best_mean = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.grid_size; ++i) {
        const double mean = out.mse_matrix.col(i).mean();
        if (std::isfinite(mean) && mean < best_mean) {
            best_mean = mean;
            best = i;
        }
    }
    out.index_star = best;
    out.per_rep_mse.resize(static_cast<size_t>(reps));
    out.per_rep_lambda.resize(static_cast<size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        out.per_rep_mse[static_cast<size_t>(r)] = out.mse_matrix(r, best);
        out.per_rep_lambda[static_cast<size_t>(r)] = lambdas(r, best);
    }
    return out;
}

} // namespace l2boost
