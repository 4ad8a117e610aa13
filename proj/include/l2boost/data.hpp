#ifndef L2BOOST_DATA_HPP
#define L2BOOST_DATA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "l2boost/errors.hpp"

namespace l2boost {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Raw regression data: n rows of p predictors plus a response vector.
struct Dataset {
    Matrix x;
    Vector y;
    std::vector<std::string> column_names;  // optional, may be empty

    int n() const { return static_cast<int>(x.rows()); }
    int p() const { return static_cast<int>(x.cols()); }
};

/// Validates invariants (n >= 2, p >= 1, finite entries, matching lengths).
Dataset make_dataset(Matrix x, Vector y, std::vector<std::string> column_names = {});

/// Column-rescaled design: every column has empirical mean 0 and empirical
/// norm 1 under the 1/n inner product, i.e. sum_i g_ij^2 = n. The response
/// is centered; centers and scales are kept so fits map back to the
/// original predictor scale.
struct StandardizedDesign {
    Matrix g;
    Vector centers;
    Vector scales;
    double y_center = 0.0;
    Vector y_centered;

    int n() const { return static_cast<int>(g.rows()); }
    int p() const { return static_cast<int>(g.cols()); }
};

StandardizedDesign standardize(const Dataset& d);

/// Intercept plus coefficients on the original predictor scale.
struct SparseCoefficients {
    double intercept = 0.0;
    Vector beta;
    std::vector<int> active_set;  // indices j with beta[j] != 0
};

SparseCoefficients make_sparse(double intercept, Vector beta);

/// Maps coefficients on the standardized scale back to the original scale.
/// intercept = y_center - sum_j beta_j * center_j with beta_j = theta_j / scale_j.
SparseCoefficients unstandardize_coefficients(const Vector& theta, const StandardizedDesign& s);

/// Closed-form MSE E[(f_hat(X) - f(X))^2] for a mean-zero Gaussian design
/// with covariance v: (mu_hat - mu)^2 + (beta_hat - beta)' V (beta_hat - beta).
double exact_mse(const SparseCoefficients& est, const SparseCoefficients& truth, const Matrix& v);

/// intercept + x_rows * beta for rows on the original scale.
Vector predict_linear(const SparseCoefficients& c, const Matrix& x_rows);

} // namespace l2boost

#endif
