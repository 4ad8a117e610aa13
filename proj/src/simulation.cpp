#include "l2boost/simulation.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace l2boost {

namespace {

Eigen::LLT<Matrix> checked_llt(const Matrix& v) {
    Eigen::LLT<Matrix> llt(v);
    if (llt.info() != Eigen::Success) throw NotPositiveDefinite();
    return llt;
}

} // namespace

Matrix block_covariance(int p) {
    Matrix v = Matrix::Identity(p, p);
    for (int j = 0; j + 1 < p; ++j) v(j, j + 1) = v(j + 1, j) = 0.677;
    for (int j = 0; j + 2 < p; ++j) v(j, j + 2) = v(j + 2, j) = 0.323;
    return v;
}

SimulationModel make_model_41(int p, CovKind cov) {
    if (p < 3) throw ValidationError("model (4.1) needs p >= 3");
    SimulationModel m;
    m.p = p;
    const double a = cov == CovKind::IDENTITY ? 1.0 : 0.779;
    m.v = cov == CovKind::IDENTITY ? Matrix::Identity(p, p) : block_covariance(p);
    if (cov == CovKind::BLOCK) checked_llt(m.v);
    m.beta_true = Vector::Zero(p);
    m.beta_true[0] = 5.0 * a;
    m.beta_true[1] = 2.0 * a;
    m.beta_true[2] = 1.0 * a;
    m.intercept_true = a;
    m.noise_sd = 2.0;
    m.label = std::string(cov == CovKind::IDENTITY ? "(4.2)" : "(4.3)") +
              " p=" + std::to_string(p);
    return m;
}

SimulationModel make_model_46() {
    SimulationModel m;
    m.p = 100;
    m.v = block_covariance(100);
    checked_llt(m.v);
    m.beta_true = Vector::Constant(100, 0.2);
    m.intercept_true = 0.2;
    m.noise_sd = 0.5;
    m.label = "(4.6)";
    return m;
}

KappaSolution solve_kappa(int n, double noise_var) {
    if (n < 2) throw ValidationError("solve_kappa needs n >= 2");
    if (noise_var < 0.0) throw ValidationError("noise variance must be >= 0");
    KappaSolution sol;
    if (noise_var == 0.0) return sol;  // kappa = 0 exactly

    // rhs(kappa) is finite and strictly decreasing for kappa > 0 (the sum
    // runs over the finitely many j with a_j < 1/kappa), so bisection on
    // rhs(kappa) - kappa applies once the bracket straddles the root.
    auto rhs = [&](double kappa) {
        double s = 0.0;
        for (int j = 1;; ++j) {
            const double a = std::pow(static_cast<double>(j), 0.51);
            const double lam = 1.0 - kappa * a;
            if (lam <= 0.0) break;
            s += a * lam;
        }
        return noise_var * s / n;
    };
    // The term count of rhs grows like kappa^{-1/0.51}, so the lower
    // bracket is found by halving from 1 instead of starting microscopic.
    double hi = 1.0, lo = 0.5;
    if (!(rhs(hi) < hi)) throw FixedPointFailure();
    for (int guard = 0; !(rhs(lo) > lo); ++guard) {
        if (guard > 60) throw FixedPointFailure();
        hi = lo;
        lo *= 0.5;
    }
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (rhs(mid) > mid ? lo : hi) = mid;
    }
    sol.kappa = 0.5 * (lo + hi);
    for (int j = 1;; ++j) {
        const double a = std::pow(static_cast<double>(j), 0.51);
        if (a * sol.kappa > 1.0) break;
        sol.a.push_back(a);
        sol.lambda.push_back(std::max(0.0, 1.0 - sol.kappa * a));
    }
    sol.p = static_cast<int>(sol.a.size());
    return sol;
}

SimulationModel make_model_44(int n, double noise_sd, std::uint64_t seed) {
    const KappaSolution sol = solve_kappa(n, noise_sd * noise_sd);
    if (sol.p < 1) throw FixedPointFailure();
    SimulationModel m;
    m.p = sol.p;
    m.v = Matrix::Identity(sol.p, sol.p);
    m.noise_sd = noise_sd;
    m.intercept_true = 0.0;
    m.beta_is_random = true;
    m.beta_sd.resize(sol.p);
    for (int j = 0; j < sol.p; ++j)
        m.beta_sd[j] = std::sqrt(sol.lambda[j] / (n * sol.kappa * sol.a[j]));
    m.label = "(4.4)";
    m.beta_true = realize(m, seed).beta_true;
    return m;
}

SimulationModel realize(const SimulationModel& model, std::uint64_t seed) {
    if (!model.beta_is_random) return model;
    SimulationModel m = model;
    m.beta_true.resize(m.p);  // may arrive unsized from make_model_44
    Rng rng(seed);
    for (int j = 0; j < m.p; ++j) m.beta_true[j] = m.beta_sd[j] * rng.normal();
    return m;
}

Replication replication_draw(const SimulationModel& model, int n, std::uint64_t base_seed,
                             int rep) {
    const std::uint64_t rep_seed = mix_seed(base_seed, kRepStream + static_cast<std::uint64_t>(rep));
    Replication r;
    r.model = realize(model, mix_seed(rep_seed, kBetaStream));
    r.data = draw_dataset(r.model, n, mix_seed(rep_seed, kDataStream));
    return r;
}

Dataset draw_dataset(const SimulationModel& model, int n, std::uint64_t seed) {
    if (n < 2) throw ValidationError("need n >= 2");
    const int p = model.p;
    Rng rng(seed);
    Matrix x(n, p);
    const bool identity = model.v.isIdentity(0.0);
    Matrix l;
    if (!identity) l = checked_llt(model.v).matrixL();
    Vector z(p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) z[j] = rng.normal();
        if (identity)
            x.row(i) = z.transpose();
        else
            x.row(i) = (l * z).transpose();
    }
    Vector y(n);
    for (int i = 0; i < n; ++i)
        y[i] = model.intercept_true + x.row(i).dot(model.beta_true) + model.noise_sd * rng.normal();
    std::vector<std::string> names(p);
    for (int j = 0; j < p; ++j) names[j] = "x" + std::to_string(j + 1);
    return make_dataset(std::move(x), std::move(y), std::move(names));
}

} // namespace l2boost
