#include "l2boost/classification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "l2boost/rng.hpp"
#include "l2boost/simulation.hpp"

namespace l2boost {

namespace {

void check_binary(const Vector& y) {
    for (int i = 0; i < y.size(); ++i)
        if (y[i] != 0.0 && y[i] != 1.0)
            throw ValidationError("response must be coded 0/1 for classification");
}

} // namespace

Dataset preprocess_microarray(const ExpressionMatrix& e) {
    const int n = static_cast<int>(e.raw.rows());
    const int p = static_cast<int>(e.raw.cols());
    if (static_cast<int>(e.labels.size()) != n)
        throw DimensionMismatch("label count != sample count");
    if ((e.raw.array() < 0.0).any()) throw ValidationError("expression values must be >= 0");
    Matrix x(n, p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j)
            x(i, j) = std::log10(std::clamp(e.raw(i, j), 100.0, 16000.0));
        const double mean = x.row(i).mean();
        double var = 0.0;
        for (int j = 0; j < p; ++j) var += (x(i, j) - mean) * (x(i, j) - mean);
        var /= p;
        if (var <= 0.0) throw ZeroVarianceSample(i);
        x.row(i) = (x.row(i).array() - mean) / std::sqrt(var);
    }
    Vector y(n);
    for (int i = 0; i < n; ++i) {
        if (e.labels[i] != 0 && e.labels[i] != 1)
            throw ValidationError("labels must be 0/1");
        y[i] = e.labels[i];
    }
    return make_dataset(std::move(x), std::move(y), e.gene_names);
}

std::vector<int> plugin_classify(const Vector& fitted, double threshold) {
    std::vector<int> out(fitted.size());
    for (int i = 0; i < fitted.size(); ++i) out[i] = fitted[i] > threshold ? 1 : 0;
    return out;
}

BinaryBoostFit fit_binary_boost(const Dataset& d, ResponseCoding coding, const BoostConfig& cfg,
                                int m_upp) {
    check_binary(d.y);
    Dataset coded = d;
    if (coding == ResponseCoding::CENTERED) coded.y = d.y.array() - 0.5;
    BinaryBoostFit fit;
    fit.design = standardize(coded);
    fit.path = boost_fit(fit.design, cfg);
    fit.prob_offset =
        coding == ResponseCoding::CENTERED ? fit.design.y_center + 0.5 : fit.design.y_center;
    fit.stop = bernoulli_stop(fit.path, fit.design, d.y, fit.prob_offset, m_upp);
    fit.coef = coefficients_at(fit.path, fit.stop.m_hat, fit.design);
    return fit;
}

Vector predict_probability(const BinaryBoostFit& fit, const Matrix& x_rows,
                           ResponseCoding coding) {
    Vector p = predict_linear(fit.coef, x_rows);
    if (coding == ResponseCoding::CENTERED) p.array() += 0.5;
    return p;
}

CvResult cv_misclassification(const Dataset& d, const CvScheme& scheme, ResponseCoding coding,
                              const BoostConfig& cfg, int m_upp) {
    check_binary(d.y);
    if (!(scheme.train_fraction > 0.0 && scheme.train_fraction < 1.0))
        throw ValidationError("train fraction must lie in (0, 1)");
    const int n = d.n();
    std::vector<std::vector<int>> by_class(2);
    for (int i = 0; i < n; ++i) by_class[d.y[i] > 0.5 ? 1 : 0].push_back(i);
    if (by_class[0].empty() || by_class[1].empty())
        throw ValidationError("both classes must be present");

    CvResult out;
    for (int t = 0; t < scheme.repeats; ++t) {
        Rng rng(mix_seed(mix_seed(scheme.seed, kRepStream + static_cast<std::uint64_t>(t)),
                         kSplitStream));
        std::vector<int> train, test;
        for (const auto& members : by_class) {
            std::vector<int> idx = members;
            for (int i = static_cast<int>(idx.size()) - 1; i > 0; --i)
                std::swap(idx[i], idx[rng.below(i + 1)]);
            const int n_c = static_cast<int>(idx.size());
            if (n_c < 2) throw DegenerateSplit();
            int take = static_cast<int>(std::floor(scheme.train_fraction * n_c + 0.5));
            take = std::clamp(take, 1, n_c - 1);
            for (int i = 0; i < n_c; ++i) (i < take ? train : test).push_back(idx[i]);
        }
        Matrix xtr(train.size(), d.p()), xte(test.size(), d.p());
        Vector ytr(train.size()), yte(test.size());
        for (size_t i = 0; i < train.size(); ++i) {
            xtr.row(i) = d.x.row(train[i]);
            ytr[i] = d.y[train[i]];
        }
        for (size_t i = 0; i < test.size(); ++i) {
            xte.row(i) = d.x.row(test[i]);
            yte[i] = d.y[test[i]];
        }
        const BinaryBoostFit fit =
            fit_binary_boost(make_dataset(xtr, ytr, d.column_names), coding, cfg, m_upp);
        const std::vector<int> pred = plugin_classify(predict_probability(fit, xte, coding));
        int errors = 0;
        for (size_t i = 0; i < test.size(); ++i)
            if (pred[i] != static_cast<int>(yte[i])) ++errors;
        out.per_repeat.push_back(static_cast<double>(errors) / test.size());
    }
    out.rate = std::accumulate(out.per_repeat.begin(), out.per_repeat.end(), 0.0) /
               out.per_repeat.size();
    return out;
}

std::vector<ScaledCoef> scaled_coefficients(const SparseCoefficients& coef, const Dataset& d) {
    if (coef.beta.size() != d.p()) throw DimensionMismatch("coefficient length != p");
    std::vector<ScaledCoef> out;
    for (int j : coef.active_set) {
        const double mean = d.x.col(j).mean();
        double var = 0.0;
        for (int i = 0; i < d.n(); ++i) var += (d.x(i, j) - mean) * (d.x(i, j) - mean);
        var /= d.n();
        ScaledCoef c;
        c.index = j;
        c.name = d.column_names.empty() ? "x" + std::to_string(j + 1) : d.column_names[j];
        c.value = coef.beta[j] * std::sqrt(var);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const ScaledCoef& a, const ScaledCoef& b) { return a.value < b.value; });
    return out;
}

WilcoxonResult wilcoxon_rank_genes(const Dataset& d) {
    check_binary(d.y);
    const int n = d.n(), p = d.p();
    int n1 = 0;
    for (int i = 0; i < n; ++i) n1 += d.y[i] > 0.5 ? 1 : 0;
    if (n1 == 0 || n1 == n) throw ValidationError("both classes must be present");
    WilcoxonResult out;
    out.centered.resize(p);
    std::vector<int> order(n);
    std::vector<double> ranks(n);
    for (int j = 0; j < p; ++j) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return d.x(a, j) < d.x(b, j); });
        for (int i = 0; i < n;) {  // midranks over tied runs
            int k = i;
            while (k + 1 < n && d.x(order[k + 1], j) == d.x(order[i], j)) ++k;
            const double mid = 0.5 * (i + k) + 1.0;
            for (int t = i; t <= k; ++t) ranks[order[t]] = mid;
            i = k + 1;
        }
        double w = 0.0;
        for (int i = 0; i < n; ++i)
            if (d.y[i] > 0.5) w += ranks[i];
        out.centered[j] = w - n1 * (n + 1) / 2.0;
    }
    out.ranking.resize(p);
    std::iota(out.ranking.begin(), out.ranking.end(), 0);
    std::sort(out.ranking.begin(), out.ranking.end(), [&](int a, int b) {
        const double fa = std::fabs(out.centered[a]), fb = std::fabs(out.centered[b]);
        return fa != fb ? fa > fb : a < b;
    });
    return out;
}

} // namespace l2boost
