#ifndef L2BOOST_BENCH_HPP
#define L2BOOST_BENCH_HPP

#include <cstdint>
#include <string>

#include "l2boost/baselines.hpp"
#include "l2boost/model_selection.hpp"
#include "l2boost/simulation.hpp"

namespace l2boost {

enum class Method {
    L2BOOST_AICC,
    L2BOOST_ORACLE,
    OLS,
    RIDGE_CV,
    RIDGE_ORACLE,
    FORWARD_AIC,
    LASSO_CV,
    LASSO_ORACLE,
};

std::string method_name(Method m);

struct BenchmarkSetting {
    SimulationModel model;
    int n = 20;
    std::string label;  // defaults to model.label
};

struct BenchOptions {
    double nu = 0.1;
    int m_max = 5000;
    int threads = 1;
    LassoConfig lasso;
    std::vector<double> ridge_grid = ridge_default_grid();
};

struct BenchmarkCell {
    std::string setting;
    std::string method;
    std::vector<double> mse;    // per replication; NaN where the method failed
    std::vector<int> active;    // selected variables incl. intercept (boost/lasso)
    double mean = 0.0;
    double se = 0.0;
    int reps = 0;               // successful replications
    int failures = 0;
    bool missing = false;       // method inapplicable in this setting
};

struct BenchmarkReport {
    std::vector<BenchmarkCell> cells;
    std::uint64_t base_seed = 0;
    int reps = 0;
    std::string rng_algorithm;
    std::vector<std::string> config_lines;

    const BenchmarkCell* find(const std::string& setting, Method m) const;
};

/// Data for replication r is drawn once (from the replication stream of
/// base_seed) and shared by every method; oracle tuning sees the same draws
/// through the shared seeding recipe.
BenchmarkReport run_benchmark(const std::vector<BenchmarkSetting>& settings,
                              const std::vector<Method>& methods, int reps,
                              std::uint64_t base_seed, const BenchOptions& opt = {});

/// Deterministic summation independent of accumulation chunking.
double pairwise_sum(const double* v, size_t n);

void write_long_csv(const BenchmarkReport& report, const std::string& file);
void write_summary_markdown(const BenchmarkReport& report, const std::string& file);

} // namespace l2boost

#endif
