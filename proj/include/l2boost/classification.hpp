#ifndef L2BOOST_CLASSIFICATION_HPP
#define L2BOOST_CLASSIFICATION_HPP

#include <cstdint>
#include <string>

#include "l2boost/boosting.hpp"
#include "l2boost/data.hpp"
#include "l2boost/model_selection.hpp"

namespace l2boost {

/// Raw expression data: samples x genes, nonnegative units, binary labels.
struct ExpressionMatrix {
    Matrix raw;
    std::vector<int> labels;
    std::vector<std::string> gene_names;
};

/// Clip to [100, 16000], take log10, standardize each SAMPLE (row) to mean
/// 0 / variance 1; labels become the 0/1 response.
Dataset preprocess_microarray(const ExpressionMatrix& e);

/// 1 iff fitted > threshold (strict), so exactly 1/2 classifies as 0.
std::vector<int> plugin_classify(const Vector& fitted, double threshold = 0.5);

enum class ResponseCoding { ZERO_ONE, CENTERED };

struct CvScheme {
    double train_fraction = 2.0 / 3.0;
    int repeats = 50;
    std::uint64_t seed = 0;
    bool stratified = true;
};

/// Boosting fit on a binary response with Bernoulli-AIC stopping. The
/// returned prob_offset maps centered fitted values to probabilities.
struct BinaryBoostFit {
    StandardizedDesign design;
    BoostPath path;
    StoppingResult stop;
    SparseCoefficients coef;  // original scale, response scale of the coding
    double prob_offset = 0.0;
};

BinaryBoostFit fit_binary_boost(const Dataset& d, ResponseCoding coding, const BoostConfig& cfg,
                                int m_upp = -1);

/// Probabilities for new original-scale rows.
Vector predict_probability(const BinaryBoostFit& fit, const Matrix& x_rows,
                           ResponseCoding coding);

struct CvResult {
    double rate = 0.0;
    std::vector<double> per_repeat;
};

/// Repeated stratified train/test splits (sizes ~2n/3 and n/3), boosting
/// with Bernoulli-AIC stopping on the training part, plug-in classification
/// of the held-out part.
CvResult cv_misclassification(const Dataset& d, const CvScheme& scheme, ResponseCoding coding,
                              const BoostConfig& cfg, int m_upp = -1);

struct ScaledCoef {
    int index = 0;
    std::string name;
    double value = 0.0;  // beta_j * sd(X_j)
};

/// Scaled coefficients of the active variables in ascending order.
std::vector<ScaledCoef> scaled_coefficients(const SparseCoefficients& coef, const Dataset& d);

struct WilcoxonResult {
    Vector centered;           // rank sum of class-1 samples minus its null mean
    std::vector<int> ranking;  // gene indices, largest |centered| first
};

/// Two-sample Wilcoxon rank-sum per gene with midranks for ties.
WilcoxonResult wilcoxon_rank_genes(const Dataset& d);

} // namespace l2boost

#endif
