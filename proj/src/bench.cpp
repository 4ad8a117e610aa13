#include "l2boost/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <thread>

#include "l2boost/boosting.hpp"
#include "l2boost/csv.hpp"
#include "l2boost/version.hpp"

namespace l2boost {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void parallel_for(int tasks, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || tasks <= 1) {
        for (int t = 0; t < tasks; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    const int workers = std::min(threads, tasks);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) fn(t);
        });
    for (auto& th : pool) th.join();
}

void finalize(BenchmarkCell& cell) {
    std::vector<double> ok;
    for (double v : cell.mse)
        if (std::isfinite(v)) ok.push_back(v);
    cell.reps = static_cast<int>(ok.size());
    cell.failures = static_cast<int>(cell.mse.size()) - cell.reps;
    if (ok.empty()) {
        cell.missing = true;
        cell.mean = kNaN;
        cell.se = kNaN;
        return;
    }
    cell.mean = pairwise_sum(ok.data(), ok.size()) / ok.size();
    if (ok.size() < 2) {
        cell.se = 0.0;
        return;
    }
    std::vector<double> sq(ok.size());
    for (size_t i = 0; i < ok.size(); ++i) sq[i] = (ok[i] - cell.mean) * (ok[i] - cell.mean);
    const double var = pairwise_sum(sq.data(), sq.size()) / (ok.size() - 1);
    cell.se = std::sqrt(var / ok.size());
}

} // namespace

double pairwise_sum(const double* v, size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::L2BOOST_AICC: return "l2boost";
        case Method::L2BOOST_ORACLE: return "l2boost*";
        case Method::OLS: return "ols";
        case Method::RIDGE_CV: return "ridge-cv";
        case Method::RIDGE_ORACLE: return "ridge*";
        case Method::FORWARD_AIC: return "fwd-aic";
        case Method::LASSO_CV: return "lasso-cv";
        case Method::LASSO_ORACLE: return "lasso*";
    }
    return "?";
}

const BenchmarkCell* BenchmarkReport::find(const std::string& setting, Method m) const {
    for (const auto& c : cells)
        if (c.setting == setting && c.method == method_name(m)) return &c;
    return nullptr;
}

BenchmarkReport run_benchmark(const std::vector<BenchmarkSetting>& settings,
                              const std::vector<Method>& methods, int reps,
                              std::uint64_t base_seed, const BenchOptions& opt) {
    if (reps < 1) throw ValidationError("need at least one replication");
    BenchmarkReport report;
    report.base_seed = base_seed;
    report.reps = reps;
    report.rng_algorithm = kRngAlgorithm;
    report.config_lines = {"version=" + std::string(kVersion),
                           "base_seed=" + std::to_string(base_seed),
                           "reps=" + std::to_string(reps),
                           "nu=" + format_double(opt.nu),
                           "m_max=" + std::to_string(opt.m_max),
                           "rng=" + std::string(kRngAlgorithm)};

    auto wants = [&](Method m) {
        for (Method x : methods)
            if (x == m) return true;
        return false;
    };
    const bool boost_any = wants(Method::L2BOOST_AICC) || wants(Method::L2BOOST_ORACLE);

    for (const auto& setting : settings) {
        const std::string label = setting.label.empty() ? setting.model.label : setting.label;
        std::vector<BenchmarkCell> cells;
        for (Method m : methods) {
            BenchmarkCell c;
            c.setting = label;
            c.method = method_name(m);
            c.mse.assign(reps, kNaN);
            if (m == Method::L2BOOST_AICC || m == Method::LASSO_CV) c.active.assign(reps, -1);
            cells.push_back(std::move(c));
        }
        auto cell_of = [&](Method m) -> BenchmarkCell& {
            for (auto& c : cells)
                if (c.method == method_name(m)) return c;
            throw ValidationError("method not configured");
        };

        // Per-replication exact-MSE curves over m; the oracle iteration is the
        // single m* minimizing the column mean, as for ridge* and lasso*.
        Matrix oracle_curves;
        if (wants(Method::L2BOOST_ORACLE)) oracle_curves = Matrix::Zero(reps, opt.m_max + 1);

        parallel_for(reps, opt.threads, [&](int r) {
            const Replication rep = replication_draw(setting.model, setting.n, base_seed, r);
            const StandardizedDesign s = standardize(rep.data);
            const SparseCoefficients truth =
                make_sparse(rep.model.intercept_true, rep.model.beta_true);
            const std::uint64_t cv_seed = mix_seed(
                mix_seed(base_seed, kRepStream + static_cast<std::uint64_t>(r)), kCvStream);

            BoostPath path;
            if (boost_any) {
                BoostConfig bc;
                bc.nu = opt.nu;
                bc.m_max = opt.m_max;
                path = boost_fit(s, bc);
            }
            if (wants(Method::L2BOOST_AICC)) {
                auto& cell = cell_of(Method::L2BOOST_AICC);
                try {
                    const StoppingResult stop = aicc_stop(path, s);
                    const SparseCoefficients est = coefficients_at(path, stop.m_hat, s);
                    cell.mse[r] = exact_mse(est, truth, rep.model.v);
                    cell.active[r] = static_cast<int>(est.active_set.size()) + 1;
                } catch (const NumericalError&) {
                }
            }
            if (wants(Method::L2BOOST_ORACLE)) {
                const StoppingResult stop = oracle_stop(path, s, rep.model);
                double last = exact_mse(coefficients_at(path, 0, s), truth, rep.model.v);
                oracle_curves(r, 0) = last;
                for (int m = 1; m <= opt.m_max; ++m) {
                    if (m <= path.length()) last = stop.criterion_values[static_cast<size_t>(m - 1)];
                    oracle_curves(r, m) = last;  // a truncated path keeps its final fit
                }
            }
            if (wants(Method::OLS)) {
                auto& cell = cell_of(Method::OLS);
                try {
                    cell.mse[r] = exact_mse(ols_fit(s), truth, rep.model.v);
                } catch (const NumericalError&) {
                }
            }
            if (wants(Method::RIDGE_CV)) {
                auto& cell = cell_of(Method::RIDGE_CV);
                const RidgeCvResult fit = ridge_cv(rep.data, opt.ridge_grid, cv_seed);
                cell.mse[r] = exact_mse(fit.coef, truth, rep.model.v);
            }
            if (wants(Method::FORWARD_AIC)) {
                auto& cell = cell_of(Method::FORWARD_AIC);
                cell.mse[r] = exact_mse(forward_select_aic(s).coef, truth, rep.model.v);
            }
            if (wants(Method::LASSO_CV)) {
                auto& cell = cell_of(Method::LASSO_CV);
                try {
                    const LassoCvResult fit = lasso_cv(rep.data, opt.lasso, cv_seed);
                    cell.mse[r] = exact_mse(fit.coef, truth, rep.model.v);
                    cell.active[r] = static_cast<int>(fit.coef.active_set.size()) + 1;
                } catch (const NumericalError&) {
                }
            }
        });

        if (wants(Method::L2BOOST_ORACLE)) {
            auto& cell = cell_of(Method::L2BOOST_ORACLE);
            int m_star = 0;
            double best = std::numeric_limits<double>::infinity();
            for (int m = 0; m <= opt.m_max; ++m) {
                const double mean = oracle_curves.col(m).mean();
                if (mean < best) {
                    best = mean;
                    m_star = m;
                }
            }
            for (int r = 0; r < reps; ++r) cell.mse[r] = oracle_curves(r, m_star);
        }
        if (wants(Method::RIDGE_ORACLE)) {
            auto& cell = cell_of(Method::RIDGE_ORACLE);
            const RidgeOracleResult res =
                ridge_oracle(setting.model, setting.n, reps, base_seed, opt.ridge_grid);
            cell.mse = res.per_rep_mse;
        }
        if (wants(Method::LASSO_ORACLE)) {
            auto& cell = cell_of(Method::LASSO_ORACLE);
            cell.mse =
                lasso_oracle(setting.model, setting.n, reps, base_seed, opt.lasso).per_rep_mse;
        }
        for (auto& c : cells) {
            finalize(c);
            report.cells.push_back(std::move(c));
        }
    }
    return report;
}

void write_long_csv(const BenchmarkReport& report, const std::string& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + file + "'");
    for (const auto& line : report.config_lines) out << "# " << line << "\n";
    out << "setting,method,rep,mse,active\n";
    for (const auto& c : report.cells)
        for (size_t r = 0; r < c.mse.size(); ++r)
            out << c.setting << ',' << c.method << ',' << r << ',' << format_double(c.mse[r])
                << ',' << (c.active.empty() ? -1 : c.active[r]) << '\n';
}

void write_summary_markdown(const BenchmarkReport& report, const std::string& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + file + "'");
    out << "# Benchmark summary\n\n";
    for (const auto& line : report.config_lines) out << "- " << line << "\n";
    out << "\n| setting | method | mean MSE (SE) | reps | failures |\n";
    out << "|---|---|---|---|---|\n";
    char buf[64];
    for (const auto& c : report.cells) {
        if (c.missing) {
            out << "| " << c.setting << " | " << c.method << " | — | 0 | " << c.failures
                << " |\n";
            continue;
        }
        std::snprintf(buf, sizeof buf, "%.3f (%.3f)", c.mean, c.se);
        out << "| " << c.setting << " | " << c.method << " | " << buf << " | " << c.reps << " | "
            << c.failures << " |\n";
    }
}

} // namespace l2boost
