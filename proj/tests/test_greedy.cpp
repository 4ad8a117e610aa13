#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "l2boost/boosting.hpp"
#include "l2boost/greedy.hpp"
#include "l2boost/rng.hpp"

using namespace l2boost;

namespace {

// Random dictionary with unit-norm columns under <a,b> = sum a_i b_i and a
// sparse coefficient representation.
FiniteDictionary random_dictionary(int n, int p, int support, std::uint64_t seed,
                                   double coef_scale = 1.0) {
    Rng rng(seed);
    Matrix v(n, p);
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i < n; ++i) v(i, j) = rng.normal();
        v.col(j) /= v.col(j).norm();
    }
    Vector c = Vector::Zero(p);
    for (int s = 0; s < support; ++s) c[rng.below(p)] += coef_scale * rng.normal();
    return make_dictionary(std::move(v), std::move(c));
}

} // namespace

TEST_CASE("make_dictionary validation") {
    Matrix empty(3, 0);
    CHECK_THROWS_AS(make_dictionary(empty, Vector(0)), EmptyDesign);

    Matrix id = Matrix::Identity(3, 3);
    Vector two(2);
    two << 1.0, 2.0;
    CHECK_THROWS_AS(make_dictionary(id, two), DimensionMismatch);

    Matrix bad = Matrix::Identity(3, 3);
    bad(0, 0) = 2.0;  // column norm 2
    Vector three = Vector::Ones(3);
    CHECK_THROWS_AS(make_dictionary(bad, three), ValidationError);

    Vector coeffs(3);
    coeffs << 2.0, -3.0, 0.5;
    const FiniteDictionary d = make_dictionary(Matrix::Identity(3, 3), coeffs);
    CHECK(d.b_bound == doctest::Approx(5.5).epsilon(1e-15));
    CHECK(d.f == coeffs);  // identity dictionary synthesizes f = coeffs
    CHECK(d.dim() == 3);
    CHECK(d.size() == 3);

    // Scaled inner product: columns of sqrt(n)-scale are unit under 1/n.
    const int n = 4;
    Matrix scaled = Matrix::Identity(n, n) * std::sqrt(static_cast<double>(n));
    const FiniteDictionary ds = make_dictionary(scaled, Vector::Ones(n), n);
    CHECK(ds.ip_denominator == 4.0);
}

TEST_CASE("single orthonormal element is annihilated in one pure step") {
    Vector c = Vector::Zero(4);
    c[1] = 3.0;
    const FiniteDictionary d = make_dictionary(Matrix::Identity(4, 4), c);
    const GreedyTrace t = weak_greedy(d, 1.0, 1.0, 3, Selector::EXACT_MAX);
    CHECK(t.initial_norm == doctest::Approx(3.0).epsilon(1e-15));
    REQUIRE(t.index.size() == 3);
    CHECK(t.index[0] == 1);
    CHECK(t.inner[0] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(t.remainder_norm[0] == 0.0);
    CHECK(t.remainder_norm[1] <= 1e-15);
    CHECK(t.remainder_norm[2] <= 1e-15);
}

TEST_CASE("orthonormal dictionary replays the coordinate recursion") {
    // With an identity dictionary the greedy recursion acts coordinatewise:
    // the chosen coordinate shrinks by (1 - nu), everything else is frozen.
    Vector c(4);
    c << 4.0, -3.0, 2.0, 1.0;
    const FiniteDictionary d = make_dictionary(Matrix::Identity(4, 4), c);
    for (double nu : {1.0, 0.5, 0.1}) {
        const int steps = 25;
        const GreedyTrace t = weak_greedy(d, 1.0, nu, steps, Selector::EXACT_MAX);
        Vector r = c;
        for (int m = 0; m < steps; ++m) {
            int jstar = 0;
            for (int j = 1; j < 4; ++j)
                if (std::fabs(r[j]) > std::fabs(r[jstar])) jstar = j;
            CHECK(t.index[m] == jstar);
            CHECK(t.inner[m] == doctest::Approx(r[jstar]).epsilon(1e-12));
            r[jstar] -= nu * r[jstar];
            CHECK(t.remainder_norm[m] == doctest::Approx(r.norm()).epsilon(1e-12));
        }
    }
}

TEST_CASE("b-weak selection rule holds on random dictionaries") {
    int checked = 0;
    for (int inst = 0; inst < 50; ++inst) {
        const int n = 5 + static_cast<int>(inst % 6) * 7;   // 5..40
        const int p = 3 + static_cast<int>(inst % 8) * 8;   // 3..59
        const FiniteDictionary d = random_dictionary(n, p, 4, 7000 + inst);
        const double b = inst % 2 == 0 ? 0.5 : 1.0;
        const double nu = inst % 3 == 0 ? 1.0 : 0.1;
        const Selector sel = inst % 2 == 0 ? Selector::B_WEAK_RANDOM : Selector::EXACT_MAX;
        const int steps = 30;
        const GreedyTrace t = weak_greedy(d, b, nu, steps, sel, 17 + inst);

        Vector r = d.f;
        for (int m = 0; m < steps; ++m) {
            double maxip = 0.0;
            int argmax = 0;
            for (int j = 0; j < p; ++j) {
                const double ip = d.vectors.col(j).dot(r);
                if (std::fabs(ip) > maxip) {
                    maxip = std::fabs(ip);
                    argmax = j;
                }
            }
            // The recorded inner product is the actual one of the pick.
            const double ip_pick = d.vectors.col(t.index[m]).dot(r);
            CHECK(t.inner[m] == doctest::Approx(ip_pick).epsilon(1e-9));
            // b-weakness: the pick captures at least b of the best.
            CHECK(std::fabs(t.inner[m]) >= b * maxip - 1e-9);
            if (sel == Selector::EXACT_MAX) CHECK(t.index[m] == argmax);
            r -= (nu * t.inner[m]) * d.vectors.col(t.index[m]);
            ++checked;
        }
        // Norm monotonicity: each step removes nu(2-nu) inner^2 >= 0.
        for (int m = 1; m < steps; ++m)
            CHECK(t.remainder_norm[m] <= t.remainder_norm[m - 1] + 1e-12);
        CHECK(t.remainder_norm[0] <= t.initial_norm + 1e-12);
    }
    CHECK(checked == 50 * 30);
}

TEST_CASE("greedy decomposition identity") {
    // f = sum_m nu <R^{m-1}f, g_m> g_m + R^M f, exactly the recursion run
    // backwards.
    const FiniteDictionary d = random_dictionary(20, 15, 5, 33);
    const double nu = 0.3;
    const int steps = 60;
    const GreedyTrace t = weak_greedy(d, 1.0, nu, steps, Selector::EXACT_MAX);
    Vector rebuilt = Vector::Zero(20);
    for (int m = 0; m < steps; ++m) rebuilt += (nu * t.inner[m]) * d.vectors.col(t.index[m]);
    Vector r = d.f;
    for (int m = 0; m < steps; ++m) r -= (nu * t.inner[m]) * d.vectors.col(t.index[m]);
    CHECK((d.f - rebuilt - r).norm() <= 1e-10);
    CHECK(r.norm() == doctest::Approx(t.remainder_norm[steps - 1]).epsilon(1e-10));
}

TEST_CASE("weak_greedy validation") {
    const FiniteDictionary d = random_dictionary(10, 6, 3, 5);
    CHECK_THROWS_AS(weak_greedy(d, 0.0, 1.0, 5, Selector::EXACT_MAX), BadWeakness);
    CHECK_THROWS_AS(weak_greedy(d, 1.5, 1.0, 5, Selector::EXACT_MAX), BadWeakness);
    CHECK_THROWS_AS(weak_greedy(d, 0.5, 0.0, 5, Selector::EXACT_MAX), ValidationError);
    CHECK_THROWS_AS(weak_greedy(d, 0.5, 1.2, 5, Selector::EXACT_MAX), ValidationError);
    FiniteDictionary empty;
    empty.vectors.resize(4, 0);
    empty.f = Vector::Zero(4);
    CHECK_THROWS_AS(weak_greedy(empty, 0.5, 0.5, 5, Selector::EXACT_MAX), EmptyDesign);
}

TEST_CASE("temlyakov bound closed forms") {
    CHECK(temlyakov_bound(7.0, 0, 0.5, 0.3) == 7.0);  // m = 0 collapses to B
    // nu = 1, b = 1: B (1 + m)^{-1/6}.
    CHECK(temlyakov_bound(1.0, 4, 1.0, 1.0) ==
          doctest::Approx(std::pow(5.0, -1.0 / 6.0)).epsilon(1e-15));
    // nu = 1, b = 1/2: B (1 + m/4)^{-1/10}.
    for (int m : {1, 3, 10, 200}) {
        CHECK(temlyakov_bound(2.0, m, 0.5, 1.0) ==
              doctest::Approx(2.0 * std::pow(1.0 + m / 4.0, -0.1)).epsilon(1e-15));
    }
    // Decreasing in m; smaller nu(2-nu) weakens the decay.
    for (int m = 1; m < 50; ++m)
        CHECK(temlyakov_bound(3.0, m, 0.5, 0.7) < temlyakov_bound(3.0, m - 1, 0.5, 0.7));
    for (int m : {1, 5, 20})
        CHECK(temlyakov_bound(3.0, m, 0.5, 1.0) < temlyakov_bound(3.0, m, 0.5, 0.1));

    CHECK_THROWS_AS(temlyakov_bound(1.0, -1, 0.5, 0.5), ValidationError);
    CHECK_THROWS_AS(temlyakov_bound(1.0, 3, 0.0, 0.5), BadWeakness);
    CHECK_THROWS_AS(temlyakov_bound(1.0, 3, 0.5, 2.0), ValidationError);
}

TEST_CASE("verify_bound certifies the theorem on random instances") {
    // Zero target: every remainder is 0, bound 0-safe.
    const FiniteDictionary zero = make_dictionary(Matrix::Identity(5, 5), Vector::Zero(5));
    const BoundReport rz = verify_bound(zero, 0.5, 0.5, 10);
    CHECK(rz.violations == 0);
    CHECK(rz.max_ratio == 0.0);

    int instances = 0;
    for (int inst = 0; inst < 20; ++inst) {
        const int n = 8 + (inst % 5) * 8;
        const int p = 4 + (inst % 7) * 8;
        const FiniteDictionary d = random_dictionary(n, p, 3 + inst % 4, 9100 + inst, 2.0);
        const double b = inst % 2 == 0 ? 0.5 : 1.0;
        const double nu = inst % 2 == 0 ? 1.0 : 0.1;
        const Selector sel = inst % 3 == 0 ? Selector::B_WEAK_RANDOM : Selector::EXACT_MAX;
        const BoundReport rep = verify_bound(d, b, nu, 200, sel, 31 + inst);
        CHECK(rep.violations == 0);
        CHECK(rep.max_ratio <= 1.0 + 1e-12);
        CHECK(rep.worst_step >= 0);
        CHECK(rep.worst_step <= 200);
        REQUIRE(rep.trace.index.size() == 200);
        ++instances;
    }
    CHECK(instances == 20);

    // No coefficient representation, no bound.
    FiniteDictionary free;
    free.vectors = Matrix::Identity(3, 3);
    free.f = Vector::Ones(3);
    free.b_bound = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(verify_bound(free, 0.5, 0.5, 5), ValidationError);
}

TEST_CASE("from_design bridges greedy to boosting exactly") {
    for (int inst = 0; inst < 20; ++inst) {
        Rng rng(4000 + inst);
        const int n = 10 + (inst % 4) * 10;
        const int p = 3 + (inst % 5) * 4;
        Matrix x(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < p; ++j) x(i, j) = rng.normal();
        Vector y(n);
        for (int i = 0; i < n; ++i) y[i] = x(i, 0) - 0.7 * x(i, p - 1) + 0.5 * rng.normal();
        const Dataset data = make_dataset(std::move(x), std::move(y), {});
        const StandardizedDesign s = standardize(data);

        const double nu = inst % 2 == 0 ? 0.1 : 1.0;
        const int steps = 40;  // below the resync interval: bit-exact replay
        BoostConfig cfg;
        cfg.nu = nu;
        cfg.m_max = steps;
        const BoostPath path = boost_fit(s, cfg);

        const FiniteDictionary d = from_design(s);
        CHECK(d.ip_denominator == static_cast<double>(n));
        CHECK(std::isnan(d.b_bound));
        const GreedyTrace t = weak_greedy(d, 1.0, nu, path.length(), Selector::EXACT_MAX);

        REQUIRE(t.index.size() == static_cast<size_t>(path.length()));
        for (int m = 0; m < path.length(); ++m) {
            CHECK(t.index[m] == path.index[m]);
            // increment = nu * beta-hat and the greedy inner product IS
            // beta-hat under the empirical inner product: bitwise equal.
            CHECK(path.increment[m] == nu * t.inner[m]);
            CHECK(std::isnan(t.bound[m]));
            // ||R^m f||^2 = RSS_m / n for the same recursion.
            CHECK(t.remainder_norm[m] * t.remainder_norm[m] ==
                  doctest::Approx(path.rss[m] / n).epsilon(1e-9));
        }
        CHECK(t.initial_norm * t.initial_norm ==
              doctest::Approx(path.rss0 / n).epsilon(1e-12));
    }
}
