#include "l2boost/boosting.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "l2boost/csv.hpp"

namespace l2boost {

BoostPath boost_fit(const StandardizedDesign& g, const BoostConfig& cfg) {
    if (!(cfg.nu > 0.0 && cfg.nu <= 1.0))
        throw ValidationError("step size nu must lie in (0, 1]");
    if (cfg.m_max < 1) throw ValidationError("m_max must be >= 1");
    if (g.p() == 0) throw EmptyDesign();

    const int n = g.n();
    const double nd = static_cast<double>(n);

    BoostPath path;
    path.n = n;
    path.p = g.p();
    path.nu = cfg.nu;
    path.variant = cfg.variant;
    path.index.reserve(cfg.m_max);
    path.increment.reserve(cfg.m_max);
    path.rss.reserve(cfg.m_max);

    Vector u = g.y_centered;
    Vector theta = Vector::Zero(g.p());
    path.rss0 = nd * dot_scaled(u.data(), u.data(), n, nd);

    for (int m = 1; m <= cfg.m_max; ++m) {
        const BaseFit fit = componentwise_ls_raw(g.g, u, nd);
        const double inc = cfg.variant == BoostVariant::L2BOOST
                               ? cfg.nu * fit.coefficient
                               : cfg.nu * (fit.coefficient > 0.0   ? 1.0
                                           : fit.coefficient < 0.0 ? -1.0
                                                                   : 0.0);
        u -= inc * g.g.col(fit.index);
        theta[fit.index] += inc;
        if (cfg.resync_interval > 0 && m % cfg.resync_interval == 0)
            u = g.y_centered - g.g * theta;

        path.index.push_back(fit.index);
        path.increment.push_back(inc);
        const double rss = nd * dot_scaled(u.data(), u.data(), n, nd);
        path.rss.push_back(rss);
        if (rss <= 0.0) {
            path.truncated = true;
            break;
        }
    }
    path.trace.assign(path.index.size(), std::numeric_limits<double>::quiet_NaN());
    path.criterion.assign(path.index.size(), std::numeric_limits<double>::quiet_NaN());
    return path;
}

Vector theta_at(const BoostPath& path, int m) {
    if (m < 0 || m > path.length()) throw IterationOutOfRange(m, path.length());
    Vector theta = Vector::Zero(path.p);
    for (int i = 0; i < m; ++i) theta[path.index[i]] += path.increment[i];
    return theta;
}

SparseCoefficients coefficients_at(const BoostPath& path, int m, const StandardizedDesign& s) {
    if (s.p() != path.p) throw DimensionMismatch("design width != path width");
    return unstandardize_coefficients(theta_at(path, m), s);
}

Vector predict(const BoostPath& path, int m, const StandardizedDesign& s, const Matrix& x_rows) {
    return predict_linear(coefficients_at(path, m, s), x_rows);
}

Vector fitted_at(const BoostPath& path, int m, const StandardizedDesign& s) {
    if (m < 0 || m > path.length()) throw IterationOutOfRange(m, path.length());
    return s.g * theta_at(path, m);
}

void write_path_csv(const BoostPath& path, const std::string& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + file + "'");
    out << "m,index,increment,rss,trace,criterion\n";
    for (int m = 0; m < path.length(); ++m)
        out << (m + 1) << ',' << path.index[m] << ',' << format_double(path.increment[m]) << ','
            << format_double(path.rss[m]) << ',' << format_double(path.trace[m]) << ','
            << format_double(path.criterion[m]) << '\n';
}

} // namespace l2boost
