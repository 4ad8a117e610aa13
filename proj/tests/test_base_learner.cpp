#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "l2boost/base_learner.hpp"
#include "l2boost/rng.hpp"
#include "test_util.hpp"

using namespace l2boost;

namespace {

StandardizedDesign design_from_columns(Matrix g) {
    // columns must already have mean 0 and n^{-1} sum g^2 = 1
    StandardizedDesign s;
    const int p = static_cast<int>(g.cols());
    s.centers = Vector::Zero(p);
    s.scales = Vector::Ones(p);
    s.y_centered = Vector::Zero(g.rows());
    s.g = std::move(g);
    return s;
}

} // namespace

TEST_CASE("zero residuals tie-break to the first column") {
    Matrix g(2, 3);
    g << -1.0, -1.0, -1.0, 1.0, 1.0, 1.0;
    const StandardizedDesign s = design_from_columns(g);
    const BaseFit fit = componentwise_ls(s, Vector::Zero(2));
    CHECK(fit.index == 0);
    CHECK(fit.coefficient == doctest::Approx(0.0));
    CHECK(fit.rss_after == doctest::Approx(0.0));
}

TEST_CASE("single column exact fit") {
    Matrix g(2, 1);
    g << -1.0, 1.0;
    const StandardizedDesign s = design_from_columns(g);
    Vector u(2);
    u << -2.0, 2.0;
    const BaseFit fit = componentwise_ls(s, u);
    CHECK(fit.index == 0);
    CHECK(fit.coefficient == doctest::Approx(2.0));
    CHECK(fit.rss_after == doctest::Approx(0.0));
    CHECK(fit.correlation == doctest::Approx(2.0));
}

TEST_CASE("selection matches a brute-force scan over columns") {
    const Dataset d = testutil::random_dataset(4, 3, 21);
    const StandardizedDesign s = standardize(d);
    const Vector u = s.y_centered;
    const int n = s.n();

    int best_j = -1;
    double best_rss = 0.0, best_beta = 0.0;
    for (int j = 0; j < s.p(); ++j) {
        const double beta = u.dot(s.g.col(j)) / n;
        const double rss = (u - beta * s.g.col(j)).squaredNorm();
        if (best_j < 0 || rss < best_rss) {
            best_j = j;
            best_rss = rss;
            best_beta = beta;
        }
    }
    const BaseFit fit = componentwise_ls(s, u);
    CHECK(fit.index == best_j);
    CHECK(fit.coefficient == doctest::Approx(best_beta).epsilon(1e-12));
    CHECK(fit.rss_after == doctest::Approx(best_rss).epsilon(1e-10));
}

TEST_CASE("scale equivariance in the residual vector") {
    const Dataset d = testutil::random_dataset(12, 5, 33);
    const StandardizedDesign s = standardize(d);
    const Vector u = s.y_centered;
    const BaseFit base = componentwise_ls(s, u);

    for (double c : {2.5, 0.1, -3.0}) {
        const BaseFit scaled = componentwise_ls(s, Vector(c * u));
        CHECK(scaled.index == base.index);
        CHECK(scaled.coefficient == doctest::Approx(c * base.coefficient).epsilon(1e-12));
    }
}

TEST_CASE("rss_after satisfies the unit-norm energy identity") {
    const Dataset d = testutil::random_dataset(15, 4, 55);
    const StandardizedDesign s = standardize(d);
    const Vector u = s.y_centered;
    const int n = s.n();
    const BaseFit fit = componentwise_ls(s, u);
    const double expected = u.squaredNorm() - n * fit.coefficient * fit.coefficient;
    CHECK(fit.rss_after == doctest::Approx(expected).epsilon(1e-10));
    CHECK(fit.rss_after <= u.squaredNorm() + 1e-12);
}

TEST_CASE("column permutation maps the selected index through the permutation") {
    const Dataset d = testutil::random_dataset(10, 6, 77);
    const StandardizedDesign s = standardize(d);
    const Vector u = s.y_centered;
    const BaseFit fit = componentwise_ls(s, u);

    const std::vector<int> perm = {4, 2, 0, 5, 1, 3};  // permuted column j = original perm[j]
    Matrix gp(s.n(), s.p());
    for (int j = 0; j < s.p(); ++j) gp.col(j) = s.g.col(perm[j]);
    StandardizedDesign sp = design_from_columns(gp);
    const BaseFit pfit = componentwise_ls(sp, u);
    CHECK(perm[pfit.index] == fit.index);
    CHECK(pfit.coefficient == doctest::Approx(fit.coefficient).epsilon(1e-14));
}

TEST_CASE("empty design is rejected") {
    StandardizedDesign s;
    s.g = Matrix::Zero(4, 0);
    s.centers = Vector::Zero(0);
    s.scales = Vector::Zero(0);
    s.y_centered = Vector::Zero(4);
    CHECK_THROWS_AS(componentwise_ls(s, Vector::Zero(4)), EmptyDesign);
}

TEST_CASE("dot_scaled agrees with plain summation on benign data") {
    Rng rng(9);
    const int n = 101;
    Vector a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = rng.normal(), b[i] = rng.normal();
    long double ref = 0.0;
    for (int i = 0; i < n; ++i) ref += static_cast<long double>(a[i]) * b[i];
    ref /= n;
    CHECK(dot_scaled(a.data(), b.data(), n, static_cast<double>(n)) ==
          doctest::Approx(static_cast<double>(ref)).epsilon(1e-15));
}
