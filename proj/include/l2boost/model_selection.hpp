#ifndef L2BOOST_MODEL_SELECTION_HPP
#define L2BOOST_MODEL_SELECTION_HPP

#include <cstdint>
#include <optional>

#include "l2boost/boosting.hpp"
#include "l2boost/data.hpp"
#include "l2boost/simulation.hpp"

namespace l2boost {

/// Boosting hat matrix B_m kept as a dense n x n matrix. B_m is generally
/// non-symmetric; B_m applied to the centered response reproduces the
/// boosting fitted values.
struct HatState {
    Matrix b;
    double trace = 0.0;
    int m = 0;
};

HatState make_hat_state(int n);

/// Rank-one update B_m = B_{m-1} + (nu/||x||^2) x r' with r = (I-B_{m-1})'x;
/// adds (nu/||x||^2) x'r to the trace.
void hat_update(HatState& state, const Vector& x_col, double nu);

/// Trace-only tracker: stores the rank-one factors instead of the full
/// matrix, so one update costs O(m n) rather than O(n^2). Produces the same
/// trace sequence as HatState up to rounding.
class HatTrace {
public:
    explicit HatTrace(int n) : n_(n) {}
    void update(const Vector& x_col, double nu);
    double trace() const { return trace_; }
    int m() const { return static_cast<int>(xs_.size()); }

private:
    int n_;
    double trace_ = 0.0;
    std::vector<Vector> xs_;       // selected columns
    std::vector<Vector> rs_;       // r vectors, scaled by nu/||x||^2
};

/// Corrected AIC of Eq. (2.3): log(rss/n) + (1 + tr/n)/(1 - (tr+2)/n).
double aicc(double rss, double trace_m, int n);

/// -2 log-likelihood + 2 trace, probabilities clamped to [1e-6, 1-1e-6].
double aic_bernoulli(const Vector& y, const Vector& fitted, double trace_m);

enum class StoppingRule { AICC, AIC_BERNOULLI, ORACLE, FIXED };

struct StoppingResult {
    int m_hat = 0;  // ORACLE may legitimately pick 0 (intercept-only)
    std::vector<double> criterion_values;  // entry m-1 is the value at iteration m
    StoppingRule rule = StoppingRule::AICC;
};

/// Smallest m attaining the minimum among valid entries (1-based m).
StoppingResult select_m(const std::vector<double>& criterion_values,
                        const std::vector<char>& valid_mask, StoppingRule rule);

/// Runs the hat recursion along the path, fills path.trace and
/// path.criterion for m = 1..m_upp and returns the AIC_c minimizer.
/// Invalid entries (trace+2 >= n, zero residual variance) are skipped.
StoppingResult aicc_stop(BoostPath& path, const StandardizedDesign& s, int m_upp = -1);

/// Same walk with the Bernoulli AIC of Section 4.4; y01 are the 0/1 labels
/// and prob_offset turns the centered fitted values into probabilities.
StoppingResult bernoulli_stop(BoostPath& path, const StandardizedDesign& s, const Vector& y01,
                              double prob_offset, int m_upp = -1);

/// Minimizes the exact MSE against the known truth over m = 0..M.
StoppingResult oracle_stop(const BoostPath& path, const StandardizedDesign& s,
                           const SimulationModel& truth);

/// Fold labels in {0..k-1}; sizes differ by at most one, also per class
/// when stratify_labels is given. Deterministic in seed.
std::vector<int> kfold_split(int n, int k, std::uint64_t seed,
                             const std::vector<int>* stratify_labels = nullptr);

} // namespace l2boost

#endif
