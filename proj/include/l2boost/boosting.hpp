#ifndef L2BOOST_BOOSTING_HPP
#define L2BOOST_BOOSTING_HPP

#include <string>

#include "l2boost/base_learner.hpp"
#include "l2boost/data.hpp"

namespace l2boost {

enum class BoostVariant { L2BOOST, FSLR };

struct BoostConfig {
    double nu = 0.1;
    int m_max = 5000;
    BoostVariant variant = BoostVariant::L2BOOST;
    // Residuals are updated incrementally; every resync_interval steps they
    // are recomputed from the accumulated coefficients to bound drift.
    int resync_interval = 500;
};

/// The whole iteration history. increment[m] is ν·β̂ (L2BOOST) or
/// ν·sign(β̂) (FSLR) on the standardized scale; rss[m] is the residual sum
/// of squares after step m (index 0 = first iteration). trace/criterion are
/// filled later by model_selection and stay NaN until then.
struct BoostPath {
    std::vector<int> index;
    std::vector<double> increment;
    std::vector<double> rss;
    std::vector<double> trace;
    std::vector<double> criterion;
    int n = 0;
    int p = 0;
    double nu = 0.0;
    BoostVariant variant = BoostVariant::L2BOOST;
    double rss0 = 0.0;       // sum of squares of the centered response
    bool truncated = false;  // RSS underflowed to zero before m_max

    int length() const { return static_cast<int>(index.size()); }
};

BoostPath boost_fit(const StandardizedDesign& g, const BoostConfig& cfg);

/// Coefficients on the standardized scale after m steps (sum of increments).
Vector theta_at(const BoostPath& path, int m);

/// Coefficients mapped back to the original scale; m = 0 is intercept-only.
SparseCoefficients coefficients_at(const BoostPath& path, int m, const StandardizedDesign& s);

/// Predictions on the original scale for new original-scale rows.
Vector predict(const BoostPath& path, int m, const StandardizedDesign& s, const Matrix& x_rows);

/// Fitted values on the centered/standardized training scale after m steps
/// (what the hat matrix B_m produces from the centered response).
Vector fitted_at(const BoostPath& path, int m, const StandardizedDesign& s);

/// CSV with columns m,index,increment,rss,trace,criterion.
void write_path_csv(const BoostPath& path, const std::string& file);

} // namespace l2boost

#endif
