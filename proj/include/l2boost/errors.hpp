#ifndef L2BOOST_ERRORS_HPP
#define L2BOOST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace l2boost {

// Exit-code categories for the CLI: validation errors map to 1,
// numerical failures to 2, bound violations to 3.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVarianceColumn : ValidationError {
    int column;
    explicit ZeroVarianceColumn(int j)
        : ValidationError("column " + std::to_string(j) + " has zero empirical variance"),
          column(j) {}
};

struct ZeroVarianceSample : ValidationError {
    int row;
    explicit ZeroVarianceSample(int i)
        : ValidationError("sample " + std::to_string(i) + " is constant after clip/log"),
          row(i) {}
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct EmptyDesign : ValidationError {
    EmptyDesign() : ValidationError("design has no columns") {}
};

struct IterationOutOfRange : ValidationError {
    explicit IterationOutOfRange(int m, int m_max)
        : ValidationError("iteration " + std::to_string(m) + " outside [0, " +
                          std::to_string(m_max) + "]") {}
};

struct ZeroColumn : ValidationError {
    ZeroColumn() : ValidationError("selected column has zero norm") {}
};

struct BadFoldCount : ValidationError {
    explicit BadFoldCount(int k, int n)
        : ValidationError("fold count " + std::to_string(k) + " invalid for n = " +
                          std::to_string(n)) {}
};

struct BadWeakness : ValidationError {
    explicit BadWeakness(double b)
        : ValidationError("weakness parameter " + std::to_string(b) + " outside (0, 1]") {}
};

struct DegenerateSplit : ValidationError {
    DegenerateSplit() : ValidationError("a class vanished from a training split") {}
};

struct DegenerateDenominator : NumericalError {
    DegenerateDenominator() : NumericalError("trace + 2 >= n in corrected AIC denominator") {}
};

struct ZeroSigma : NumericalError {
    ZeroSigma() : NumericalError("residual variance underflowed to zero") {}
};

struct NoValidIteration : NumericalError {
    NoValidIteration() : NumericalError("no iteration is valid for criterion selection") {}
};

struct SingularDesign : NumericalError {
    using NumericalError::NumericalError;
};

struct NoConvergence : NumericalError {
    double kkt_gap;
    explicit NoConvergence(double gap)
        : NumericalError("coordinate descent did not converge, KKT gap " + std::to_string(gap)),
          kkt_gap(gap) {}
};

struct FixedPointFailure : NumericalError {
    FixedPointFailure() : NumericalError("bisection bracket invalid for kappa fixed point") {}
};

struct NotPositiveDefinite : NumericalError {
    NotPositiveDefinite() : NumericalError("covariance matrix failed Cholesky factorization") {}
};

struct BoundViolation : NumericalError {
    int step;
    double ratio;
    BoundViolation(int m, double r)
        : NumericalError("remainder norm exceeds greedy bound at step " + std::to_string(m) +
                         " (ratio " + std::to_string(r) + ")"),
          step(m), ratio(r) {}
};

} // namespace l2boost

#endif
