#ifndef L2BOOST_SIMULATION_HPP
#define L2BOOST_SIMULATION_HPP

#include <cstdint>
#include <string>

#include "l2boost/data.hpp"
#include "l2boost/rng.hpp"

namespace l2boost {

enum class CovKind { IDENTITY, BLOCK };

/// Generative linear model: X ~ N(0, v), Y = intercept + beta'X + noise.
/// When beta_is_random, beta_true is one realization and beta_sd holds the
/// per-coordinate standard deviations used to redraw it per replication.
struct SimulationModel {
    int p = 0;
    Matrix v;
    Vector beta_true;
    double intercept_true = 0.0;
    double noise_sd = 1.0;
    std::string label;
    bool beta_is_random = false;
    Vector beta_sd;
};

/// Banded covariance: 1 on the diagonal, 0.677 at lag 1, 0.323 at lag 2.
Matrix block_covariance(int p);

/// f(X) = a(V)(1 + 5X1 + 2X2 + X3), noise sd 2. IDENTITY: a = 1.
/// BLOCK: banded V with a = 0.779 (keeps the signal-to-noise ratio level).
/// Any p >= 3 is accepted; coefficients beyond the third are zero.
SimulationModel make_model_41(int p, CovKind cov);

/// f(X) = 0.2 + 0.2 * sum_{j=1}^{100} Xj with banded V, noise sd 0.5.
SimulationModel make_model_46();

/// Fixed point kappa = noise_var * n^{-1} * sum_j a_j (1 - kappa a_j)_+
/// with a_j = j^0.51; p is the largest j with a_j <= 1/kappa.
struct KappaSolution {
    double kappa = 0.0;
    int p = 0;
    std::vector<double> a;       // a_j, j = 1..p
    std::vector<double> lambda;  // (1 - kappa a_j)_+
};

KappaSolution solve_kappa(int n, double noise_var);

/// Random-coefficient model: beta_j ~ N(0, lambda_j / (n kappa a_j)),
/// identity covariance. `seed` draws the stored beta realization.
SimulationModel make_model_44(int n, double noise_sd, std::uint64_t seed);

/// Fresh beta draw for beta_is_random models; returns others unchanged.
SimulationModel realize(const SimulationModel& model, std::uint64_t seed);

/// n iid rows X ~ N(0, v) via the Cholesky factor, Y = intercept +
/// beta'X + noise_sd * N(0,1). Deterministic per (model, n, seed).
Dataset draw_dataset(const SimulationModel& model, int n, std::uint64_t seed);

// Sub-seed streams mixed into a replication seed, so one replication yields
// independent data / coefficient / CV randomness.
inline constexpr std::uint64_t kDataStream = 1;
inline constexpr std::uint64_t kBetaStream = 2;
inline constexpr std::uint64_t kCvStream = 3;
inline constexpr std::uint64_t kSplitStream = 4;
// Replication r draws from mix_seed(base, kRepStream + r): nearby base seeds
// must not share replication streams, so r goes through the mix, not added
// to the base.
inline constexpr std::uint64_t kRepStream = 1000;

/// The one seeding recipe every replication loop uses: realizes random
/// coefficients (when present) and draws the data for replication `rep`.
struct Replication {
    SimulationModel model;
    Dataset data;
};

Replication replication_draw(const SimulationModel& model, int n, std::uint64_t base_seed,
                             int rep);

} // namespace l2boost

#endif
