#include "l2boost/data.hpp"

#include <cmath>

namespace l2boost {

Dataset make_dataset(Matrix x, Vector y, std::vector<std::string> column_names) {
    if (x.rows() < 2) throw ValidationError("need at least 2 rows");
    if (x.cols() < 1) throw ValidationError("need at least 1 predictor column");
    if (y.size() != x.rows())
        throw DimensionMismatch("response length " + std::to_string(y.size()) +
                                " != row count " + std::to_string(x.rows()));
    if (!x.allFinite() || !y.allFinite())
        throw ValidationError("non-finite entry in data");
    if (!column_names.empty() && static_cast<int>(column_names.size()) != x.cols())
        throw DimensionMismatch("column name count mismatch");
    return Dataset{std::move(x), std::move(y), std::move(column_names)};
}

StandardizedDesign standardize(const Dataset& d) {
    const int n = d.n();
    const int p = d.p();
    StandardizedDesign s;
    s.g.resize(n, p);
    s.centers.resize(p);
    s.scales.resize(p);
    for (int j = 0; j < p; ++j) {
        const double center = d.x.col(j).mean();
        double second_moment = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = d.x(i, j) - center;
            second_moment += v * v;
        }
        second_moment /= n;
        if (second_moment <= 0.0) throw ZeroVarianceColumn(j);
        const double scale = std::sqrt(second_moment);
        s.centers[j] = center;
        s.scales[j] = scale;
        s.g.col(j) = (d.x.col(j).array() - center) / scale;
    }
    s.y_center = d.y.mean();
    s.y_centered = d.y.array() - s.y_center;
    return s;
}

SparseCoefficients make_sparse(double intercept, Vector beta) {
    SparseCoefficients c;
    c.intercept = intercept;
    c.beta = std::move(beta);
    for (int j = 0; j < c.beta.size(); ++j)
        if (c.beta[j] != 0.0) c.active_set.push_back(j);
    return c;
}

SparseCoefficients unstandardize_coefficients(const Vector& theta, const StandardizedDesign& s) {
    if (theta.size() != s.p())
        throw DimensionMismatch("coefficient length != design width");
    Vector beta(theta.size());
    double intercept = s.y_center;
    for (int j = 0; j < theta.size(); ++j) {
        beta[j] = theta[j] / s.scales[j];
        intercept -= beta[j] * s.centers[j];
    }
    return make_sparse(intercept, std::move(beta));
}

double exact_mse(const SparseCoefficients& est, const SparseCoefficients& truth, const Matrix& v) {
    if (est.beta.size() != truth.beta.size() || v.rows() != est.beta.size() ||
        v.cols() != est.beta.size())
        throw DimensionMismatch("exact_mse arguments disagree on dimension");
    const Vector d = est.beta - truth.beta;
    const double mu = est.intercept - truth.intercept;
    return mu * mu + d.dot(v * d);
}

Vector predict_linear(const SparseCoefficients& c, const Matrix& x_rows) {
    if (x_rows.cols() != c.beta.size())
        throw DimensionMismatch("prediction rows have wrong width");
    return (x_rows * c.beta).array() + c.intercept;
}

} // namespace l2boost
