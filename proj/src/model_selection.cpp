#include "l2boost/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace l2boost {

HatState make_hat_state(int n) {
    HatState s;
    s.b = Matrix::Zero(n, n);
    return s;
}

void hat_update(HatState& state, const Vector& x_col, double nu) {
    const double xx = x_col.squaredNorm();
    if (xx <= 0.0) throw ZeroColumn();
    const Vector r = x_col - state.b.transpose() * x_col;
    const double s = nu / xx;
    state.b.noalias() += s * x_col * r.transpose();
    state.trace += s * x_col.dot(r);
    state.m += 1;
}

void HatTrace::update(const Vector& x_col, double nu) {
    const double xx = x_col.squaredNorm();
    if (xx <= 0.0) throw ZeroColumn();
    // B' x = sum_k rs_k (xs_k . x) with the nu/||x||^2 factors folded into rs.
    Vector r = x_col;
    for (size_t k = 0; k < xs_.size(); ++k) r -= rs_[k] * xs_[k].dot(x_col);
    const double s = nu / xx;
    trace_ += s * x_col.dot(r);
    xs_.push_back(x_col);
    rs_.push_back(s * r);
}

double aicc(double rss, double trace_m, int n) {
    if (rss <= 0.0) throw ZeroSigma();
    if (trace_m + 2.0 >= static_cast<double>(n)) throw DegenerateDenominator();
    const double nd = static_cast<double>(n);
    return std::log(rss / nd) + (1.0 + trace_m / nd) / (1.0 - (trace_m + 2.0) / nd);
}

double aic_bernoulli(const Vector& y, const Vector& fitted, double trace_m) {
    if (y.size() != fitted.size()) throw DimensionMismatch("labels vs fitted length");
    constexpr double kDelta = 1e-6;
    double loglik = 0.0;
    for (int i = 0; i < y.size(); ++i) {
        const double p = std::clamp(fitted[i], kDelta, 1.0 - kDelta);
        loglik += y[i] * std::log(p) + (1.0 - y[i]) * std::log(1.0 - p);
    }
    return -2.0 * loglik + 2.0 * trace_m;
}

StoppingResult select_m(const std::vector<double>& criterion_values,
                        const std::vector<char>& valid_mask, StoppingRule rule) {
    if (criterion_values.size() != valid_mask.size())
        throw DimensionMismatch("criterion/valid mask lengths differ");
    int best = -1;
    for (size_t i = 0; i < criterion_values.size(); ++i) {
        if (!valid_mask[i]) continue;
        if (best < 0 || criterion_values[i] < criterion_values[best])
            best = static_cast<int>(i);
    }
    if (best < 0) throw NoValidIteration();
    StoppingResult r;
    r.m_hat = best + 1;
    r.criterion_values = criterion_values;
    r.rule = rule;
    return r;
}

StoppingResult aicc_stop(BoostPath& path, const StandardizedDesign& s, int m_upp) {
    if (path.variant != BoostVariant::L2BOOST)
        throw ValidationError("trace-based stopping is defined for L2BOOST only");
    const int n = s.n();
    const int limit = m_upp < 0 ? path.length() : std::min(m_upp, path.length());
    HatState hat = make_hat_state(n);
    Vector fitted = Vector::Zero(n);
    std::vector<double> values(limit);
    std::vector<char> valid(limit);
    for (int m = 1; m <= limit; ++m) {
        const auto col = s.g.col(path.index[m - 1]);
        hat_update(hat, col, path.nu);
        fitted += path.increment[m - 1] * col;
        const double rss = (s.y_centered - fitted).squaredNorm();
        path.trace[m - 1] = hat.trace;
        double v = std::numeric_limits<double>::quiet_NaN();
        char ok = 1;
        try {
            v = aicc(rss, hat.trace, n);
        } catch (const NumericalError&) {
            ok = 0;
        }
        values[m - 1] = v;
        valid[m - 1] = ok;
        path.criterion[m - 1] = v;
    }
    return select_m(values, valid, StoppingRule::AICC);
}

StoppingResult bernoulli_stop(BoostPath& path, const StandardizedDesign& s, const Vector& y01,
                              double prob_offset, int m_upp) {
    if (path.variant != BoostVariant::L2BOOST)
        throw ValidationError("trace-based stopping is defined for L2BOOST only");
    const int n = s.n();
    const int limit = m_upp < 0 ? path.length() : std::min(m_upp, path.length());
    HatTrace hat(n);
    Vector fitted = Vector::Zero(n);
    Vector probs(n);
    std::vector<double> values(limit);
    std::vector<char> valid(limit, 1);
    for (int m = 1; m <= limit; ++m) {
        const auto col = s.g.col(path.index[m - 1]);
        hat.update(col, path.nu);
        fitted += path.increment[m - 1] * col;
        probs = fitted.array() + prob_offset;
        const double v = aic_bernoulli(y01, probs, hat.trace());
        values[m - 1] = v;
        path.trace[m - 1] = hat.trace();
        path.criterion[m - 1] = v;
    }
    return select_m(values, valid, StoppingRule::AIC_BERNOULLI);
}

StoppingResult oracle_stop(const BoostPath& path, const StandardizedDesign& s,
                           const SimulationModel& truth) {
    if (truth.p != path.p) throw DimensionMismatch("truth dimension != path width");
    // Incremental quadratic form: one boosting step changes a single
    // original-scale coefficient by delta, so d'Vd updates in O(p).
    Vector d = -truth.beta_true;
    Vector w = truth.v * d;
    double qf = d.dot(w);
    double mu_diff = s.y_center - truth.intercept_true;
    double best = mu_diff * mu_diff + qf;
    int best_m = 0;
    std::vector<double> values(path.length());
    for (int m = 1; m <= path.length(); ++m) {
        const int j = path.index[m - 1];
        const double delta = path.increment[m - 1] / s.scales[j];
        mu_diff -= delta * s.centers[j];
        qf += 2.0 * delta * w[j] + delta * delta * truth.v(j, j);
        w += delta * truth.v.col(j);
        d[j] += delta;
        if (m % 500 == 0) {  // bound drift in the running quadratic form
            w = truth.v * d;
            qf = d.dot(w);
        }
        const double mse = mu_diff * mu_diff + qf;
        values[m - 1] = mse;
        if (mse < best) {
            best = mse;
            best_m = m;
        }
    }
    StoppingResult r;
    r.m_hat = best_m;
    r.criterion_values = std::move(values);
    r.rule = StoppingRule::ORACLE;
    return r;
}

std::vector<int> kfold_split(int n, int k, std::uint64_t seed,
                             const std::vector<int>* stratify_labels) {
    if (k < 2 || k > n) throw BadFoldCount(k, n);
    if (stratify_labels && static_cast<int>(stratify_labels->size()) != n)
        throw DimensionMismatch("stratify label length != n");
    Rng rng(seed);
    auto shuffle = [&](std::vector<int>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[rng.below(i + 1)]);
    };
    std::vector<int> fold(n);
    if (!stratify_labels) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        shuffle(perm);
        for (int i = 0; i < n; ++i) fold[perm[i]] = i % k;
        return fold;
    }
    // Deal each class round-robin, continuing the same global counter so
    // overall and per-class fold sizes both stay within one of each other.
    std::vector<int> classes = *stratify_labels;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    int pos = 0;
    for (int c : classes) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if ((*stratify_labels)[i] == c) members.push_back(i);
        shuffle(members);
        for (int i : members) fold[i] = pos++ % k;
    }
    return fold;
}

} // namespace l2boost
