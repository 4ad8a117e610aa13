#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "l2boost/baselines.hpp"
#include "l2boost/boosting.hpp"
#include "l2boost/csv.hpp"
#include "test_util.hpp"

using namespace l2boost;

namespace {

StandardizedDesign design_from_columns(Matrix g, Vector y_centered) {
    StandardizedDesign s;
    const int p = static_cast<int>(g.cols());
    s.centers = Vector::Zero(p);
    s.scales = Vector::Ones(p);
    s.y_centered = std::move(y_centered);
    s.g = std::move(g);
    return s;
}

// three non-constant Hadamard columns of order 4: orthogonal, mean zero,
// n^{-1} sum g^2 = 1
Matrix hadamard_columns() {
    Matrix g(4, 3);
    g << 1, 1, 1, -1, 1, -1, 1, -1, -1, -1, -1, 1;
    return g;
}

// independent straight-line reimplementation of the boosting loop
struct NaiveStep {
    int index;
    double increment;
    double rss;
};

std::vector<NaiveStep> naive_boost(const Matrix& g, Vector u, double nu, int steps) {
    const int n = static_cast<int>(g.rows());
    const int p = static_cast<int>(g.cols());
    std::vector<NaiveStep> out;
    for (int m = 0; m < steps; ++m) {
        int best = 0;
        double best_val = 0.0;
        double best_abs = -1.0;
        for (int j = 0; j < p; ++j) {
            long double s = 0.0L;
            for (int i = 0; i < n; ++i) s += static_cast<long double>(u[i]) * g(i, j);
            const double val = static_cast<double>(s / n);
            if (std::fabs(val) > best_abs) {
                best_abs = std::fabs(val);
                best_val = val;
                best = j;
            }
        }
        const double inc = nu * best_val;
        u -= inc * g.col(best);
        long double r = 0.0L;
        for (int i = 0; i < n; ++i) r += static_cast<long double>(u[i]) * u[i];
        out.push_back({best, inc, static_cast<double>(r)});
    }
    return out;
}

} // namespace

TEST_CASE("p=1, nu=1: one step reaches the least-squares slope, then stalls") {
    const Dataset d = testutil::random_dataset(20, 1, 3);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = 1.0;
    cfg.m_max = 5;
    const BoostPath path = boost_fit(s, cfg);
    const double slope = s.y_centered.dot(s.g.col(0)) / s.n();
    CHECK(path.increment[0] == doctest::Approx(slope).epsilon(1e-12));
    for (int m = 2; m <= path.length(); ++m)
        CHECK(std::fabs(path.increment[m - 1]) < 1e-12);
}

TEST_CASE("orthonormal columns, nu=1: greedy decomposition in coefficient order") {
    Vector y(4);
    y << 5.0, 1.0, 3.0, 2.0;
    const Vector yc = y.array() - y.mean();
    const StandardizedDesign s = design_from_columns(hadamard_columns(), yc);
    BoostConfig cfg;
    cfg.nu = 1.0;
    cfg.m_max = 10;
    const BoostPath path = boost_fit(s, cfg);

    // inner products (1.25, 0.25, 0.75) are all dyadic, so selection
    // order and exact termination are forced
    REQUIRE(path.length() == 3);
    CHECK(path.index == std::vector<int>{0, 2, 1});
    CHECK(path.increment[0] == doctest::Approx(1.25));
    CHECK(path.increment[1] == doctest::Approx(0.75));
    CHECK(path.increment[2] == doctest::Approx(0.25));
    CHECK(path.rss[2] == 0.0);
    CHECK(path.truncated);

    // fitted columns have zero residual inner product afterwards
    const Vector u = yc - s.g * theta_at(path, 3);
    for (int j = 0; j < 3; ++j) CHECK(std::fabs(u.dot(s.g.col(j))) < 1e-12);
}

TEST_CASE("first 20 steps match an independent reimplementation") {
    const Dataset d = testutil::random_dataset(10, 4, 17);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = 0.1;
    cfg.m_max = 20;
    const BoostPath path = boost_fit(s, cfg);
    const auto naive = naive_boost(s.g, s.y_centered, cfg.nu, 20);
    REQUIRE(path.length() == 20);
    for (int m = 0; m < 20; ++m) {
        CHECK(path.index[m] == naive[m].index);
        CHECK(path.increment[m] == doctest::Approx(naive[m].increment).epsilon(1e-12));
        CHECK(path.rss[m] == doctest::Approx(naive[m].rss).epsilon(1e-10));
    }
}

TEST_CASE("RSS recursion holds per step") {
    const Dataset d = testutil::random_dataset(25, 8, 29);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = 0.1;
    cfg.m_max = 100;
    const BoostPath path = boost_fit(s, cfg);
    const int n = s.n();
    double prev = path.rss0;
    for (int m = 1; m <= path.length(); ++m) {
        const double beta = path.increment[m - 1] / cfg.nu;
        const double drop = cfg.nu * (2.0 - cfg.nu) * n * beta * beta;
        CHECK(path.rss[m - 1] == doctest::Approx(prev - drop).epsilon(1e-8));
        CHECK(path.rss[m - 1] <= prev + 1e-12);  // nonincreasing
        prev = path.rss[m - 1];
    }
}

TEST_CASE("nu=1 boosting converges to the least-squares solution") {
    const Dataset d = testutil::random_dataset(30, 4, 41);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = 1.0;
    cfg.m_max = 300;
    const BoostPath path = boost_fit(s, cfg);
    const SparseCoefficients boosted = coefficients_at(path, path.length(), s);
    const SparseCoefficients ols = ols_fit(s);
    CHECK((boosted.beta - ols.beta).lpNorm<Eigen::Infinity>() < 1e-6);
    CHECK(boosted.intercept == doctest::Approx(ols.intercept).epsilon(1e-6));
}

TEST_CASE("FSLR takes fixed-size steps and starts like L2Boost") {
    const Dataset d = testutil::random_dataset(15, 6, 53);
    const StandardizedDesign s = standardize(d);
    BoostConfig l2;
    l2.nu = 0.1;
    l2.m_max = 50;
    BoostConfig fslr = l2;
    fslr.variant = BoostVariant::FSLR;
    const BoostPath a = boost_fit(s, l2);
    const BoostPath b = boost_fit(s, fslr);
    CHECK(a.index[0] == b.index[0]);
    for (int m = 0; m < b.length(); ++m) CHECK(std::fabs(b.increment[m]) == fslr.nu);
}

TEST_CASE("predict reconstructs through either parameterization") {
    const Dataset d = testutil::random_dataset(12, 5, 61);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.m_max = 40;
    const BoostPath path = boost_fit(s, cfg);

    // m = 0 is the intercept-only model
    const Vector p0 = predict(path, 0, s, d.x);
    for (int i = 0; i < d.n(); ++i) CHECK(p0[i] == doctest::Approx(d.y.mean()));

    const Dataset fresh = testutil::random_dataset(7, 5, 62);
    const Vector via_predict = predict(path, 40, s, fresh.x);
    const Vector via_coef = predict_linear(coefficients_at(path, 40, s), fresh.x);
    CHECK((via_predict - via_coef).lpNorm<Eigen::Infinity>() < 1e-10);

    // training rows: original-scale predictions = centered fitted + mean
    const Vector fit_std = fitted_at(path, 40, s);
    const Vector fit_orig = predict(path, 40, s, d.x);
    for (int i = 0; i < d.n(); ++i)
        CHECK(fit_orig[i] == doctest::Approx(fit_std[i] + s.y_center).epsilon(1e-10));
}

TEST_CASE("single shrunk step maps back to exactly one scaled coefficient") {
    const Dataset d = testutil::random_dataset(18, 4, 71);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = 0.1;
    cfg.m_max = 1;
    const BoostPath path = boost_fit(s, cfg);
    const SparseCoefficients c = coefficients_at(path, 1, s);
    REQUIRE(c.active_set.size() == 1);
    const int j = c.active_set[0];
    CHECK(j == path.index[0]);
    CHECK(c.beta[j] == doctest::Approx(path.increment[0] / s.scales[j]).epsilon(1e-14));
}

TEST_CASE("iteration bounds are enforced") {
    const Dataset d = testutil::random_dataset(10, 3, 83);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.m_max = 10;
    const BoostPath path = boost_fit(s, cfg);
    CHECK_THROWS_AS(theta_at(path, -1), IterationOutOfRange);
    CHECK_THROWS_AS(theta_at(path, path.length() + 1), IterationOutOfRange);
    CHECK_THROWS_AS(predict(path, path.length() + 1, s, d.x), IterationOutOfRange);
}

TEST_CASE("boost_fit validates its configuration") {
    const Dataset d = testutil::random_dataset(10, 3, 97);
    const StandardizedDesign s = standardize(d);
    BoostConfig bad;
    bad.nu = 0.0;
    CHECK_THROWS_AS(boost_fit(s, bad), ValidationError);
    bad.nu = 1.5;
    CHECK_THROWS_AS(boost_fit(s, bad), ValidationError);
    bad.nu = 0.1;
    bad.m_max = 0;
    CHECK_THROWS_AS(boost_fit(s, bad), ValidationError);
}

TEST_CASE("path CSV export has one row per iteration") {
    const Dataset d = testutil::random_dataset(10, 3, 101);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.m_max = 12;
    const BoostPath path = boost_fit(s, cfg);
    const std::string file = "test_boosting_path.csv";
    write_path_csv(path, file);
    const CsvTable t = read_csv(file);
    CHECK(t.header == std::vector<std::string>{"m", "index", "increment", "rss", "trace",
                                               "criterion"});
    REQUIRE(t.nrow() == path.length());
    for (int m = 0; m < path.length(); ++m) {
        CHECK(t.number(m, 0) == doctest::Approx(m + 1));
        CHECK(static_cast<int>(t.number(m, 1)) == path.index[m]);
        CHECK(t.number(m, 3) == path.rss[m]);  // format_double round-trips exactly
    }
    std::remove(file.c_str());
}

TEST_CASE("resynchronization leaves the path consistent") {
    const Dataset d = testutil::random_dataset(20, 5, 113);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = 0.1;
    cfg.m_max = 1200;  // crosses two resync points
    const BoostPath path = boost_fit(s, cfg);
    const Vector u = s.y_centered - s.g * theta_at(path, path.length());
    CHECK(u.squaredNorm() == doctest::Approx(path.rss.back()).epsilon(1e-8));
}
