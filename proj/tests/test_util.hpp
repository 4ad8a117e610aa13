#ifndef L2BOOST_TEST_UTIL_HPP
#define L2BOOST_TEST_UTIL_HPP

#include "l2boost/data.hpp"
#include "l2boost/rng.hpp"

namespace testutil {

// Gaussian design with a linear signal plus noise. Continuous draws, so
// columns are never constant.
inline l2boost::Dataset random_dataset(int n, int p, std::uint64_t seed, double signal = 1.0,
                                       double noise = 1.0) {
    l2boost::Rng rng(seed);
    l2boost::Matrix x(n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) x(i, j) = rng.normal();
    l2boost::Vector beta(p);
    for (int j = 0; j < p; ++j) beta[j] = signal * rng.normal();
    l2boost::Vector y = x * beta;
    for (int i = 0; i < n; ++i) y[i] += noise * rng.normal();
    return l2boost::make_dataset(std::move(x), std::move(y));
}

} // namespace testutil

#endif
