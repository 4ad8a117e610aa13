#ifndef L2BOOST_GREEDY_HPP
#define L2BOOST_GREEDY_HPP

#include <cstdint>

#include "l2boost/data.hpp"

namespace l2boost {

/// Finite dictionary in an N-dimensional inner-product space with
/// <a, b> = (1/ip_denominator) sum_i a_i b_i. Columns must have unit norm
/// under that inner product. When target_coeffs is present, f equals
/// vectors * target_coeffs and b_bound = sum |coeffs|; otherwise f is an
/// arbitrary target (the bound is then unavailable).
struct FiniteDictionary {
    Matrix vectors;       // N x p
    Vector target_coeffs; // may be empty
    Vector f;
    double b_bound = 0.0;
    double ip_denominator = 1.0;

    int dim() const { return static_cast<int>(vectors.rows()); }
    int size() const { return static_cast<int>(vectors.cols()); }
};

/// Validates unit norms (1e-10 relative) and synthesizes f from the
/// coefficients.
FiniteDictionary make_dictionary(Matrix vectors, Vector target_coeffs,
                                 double ip_denominator = 1.0);

/// Dictionary view of a standardized design under the empirical inner
/// product: the same arithmetic componentwise_ls uses, so a greedy run
/// replays boost_fit exactly.
FiniteDictionary from_design(const StandardizedDesign& s);

enum class Selector { EXACT_MAX, B_WEAK_RANDOM };

/// Per step m (0-based entry = step m+1): selected index, inner product
/// <R^{m-1}f, g_S>, remainder norm ||R^m f||, and the Temlyakov bound at m
/// (NaN when the dictionary has no coefficient representation).
struct GreedyTrace {
    std::vector<int> index;
    std::vector<double> inner;
    std::vector<double> remainder_norm;
    std::vector<double> bound;
    double initial_norm = 0.0;
};

/// R^m f = R^{m-1} f - nu <R^{m-1} f, g_S> g_S. EXACT_MAX picks the
/// largest |inner product| (smallest index on ties); B_WEAK_RANDOM picks
/// uniformly among indices achieving at least b times the maximum.
GreedyTrace weak_greedy(const FiniteDictionary& d, double b, double nu, int m_steps,
                        Selector selector, std::uint64_t seed = 0);

/// B (1 + nu(2-nu) m b^2)^{-b/(2(2+b))}; nu = 1 is the classical bound.
double temlyakov_bound(double b_bound, int m, double b, double nu);

struct BoundReport {
    double max_ratio = 0.0;  // max over m of ||R^m f|| / bound(m)
    int worst_step = 0;
    int violations = 0;
    GreedyTrace trace;
};

/// Checks ||R^m f|| <= temlyakov_bound for m = 0..m_steps; throws
/// BoundViolation on failure (the bound is a theorem, so a violation
/// signals an implementation bug).
BoundReport verify_bound(const FiniteDictionary& d, double b, double nu, int m_steps,
                         Selector selector = Selector::EXACT_MAX, std::uint64_t seed = 0);

} // namespace l2boost

#endif
