#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l2boost/baselines.hpp"
#include "l2boost/bench.hpp"
#include "l2boost/boosting.hpp"
#include "l2boost/classification.hpp"
#include "l2boost/greedy.hpp"
#include "l2boost/model_selection.hpp"
#include "l2boost/simulation.hpp"
#include "l2boost/version.hpp"

namespace py = pybind11;
using namespace l2boost;

namespace {

// One-call fit: standardize, boost, stop by AIC_c, map back.
py::dict fit_boost(const Matrix& x, const Vector& y, double nu, int m_max, int m_upp) {
    const Dataset d = make_dataset(x, y);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = nu;
    cfg.m_max = m_max;
    BoostPath path = boost_fit(s, cfg);
    const StoppingResult stop = aicc_stop(path, s, m_upp);
    const SparseCoefficients coef = coefficients_at(path, stop.m_hat, s);
    py::dict out;
    out["m_hat"] = stop.m_hat;
    out["intercept"] = coef.intercept;
    out["beta"] = coef.beta;
    out["active_set"] = coef.active_set;
    out["criterion"] = stop.criterion_values;
    out["rss"] = path.rss;
    out["selected"] = path.index;
    return out;
}

py::dict lasso_cv_py(const Matrix& x, const Vector& y, std::uint64_t seed) {
    const LassoCvResult r = lasso_cv(make_dataset(x, y), LassoConfig{}, seed);
    py::dict out;
    out["intercept"] = r.coef.intercept;
    out["beta"] = r.coef.beta;
    out["lambda"] = r.lambda;
    out["cv_errors"] = r.cv_errors;
    out["grid"] = r.grid;
    return out;
}

py::dict solve_kappa_py(int n, double noise_var) {
    const KappaSolution sol = solve_kappa(n, noise_var);
    py::dict out;
    out["kappa"] = sol.kappa;
    out["p"] = sol.p;
    out["lambda"] = sol.lambda;
    return out;
}

py::dict verify_bound_py(const Matrix& vectors, const Vector& coeffs, double b, double nu,
                         int m_steps) {
    const FiniteDictionary d = make_dictionary(vectors, coeffs);
    const BoundReport rep = verify_bound(d, b, nu, m_steps);
    py::dict out;
    out["max_ratio"] = rep.max_ratio;
    out["worst_step"] = rep.worst_step;
    out["violations"] = rep.violations;
    out["remainder_norms"] = rep.trace.remainder_norm;
    out["bounds"] = rep.trace.bound;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "componentwise L2 boosting core";
    m.attr("__version__") = kVersion;
    m.attr("rng_algorithm") = kRngAlgorithm;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def("fit_boost", &fit_boost, py::arg("x"), py::arg("y"), py::arg("nu") = 0.1,
          py::arg("m_max") = 5000, py::arg("m_upp") = -1,
          "L2 boosting with componentwise least squares and AIC_c stopping");
    m.def("ols", [](const Matrix& x, const Vector& y) {
        const SparseCoefficients c = ols_fit(standardize(make_dataset(x, y)));
        return py::make_tuple(c.intercept, c.beta);
    });
    m.def("ridge", [](const Matrix& x, const Vector& y, double lam) {
        const SparseCoefficients c = ridge_fit(standardize(make_dataset(x, y)), lam);
        return py::make_tuple(c.intercept, c.beta);
    });
    m.def("lasso", [](const Matrix& x, const Vector& y, double lam) {
        const SparseCoefficients c = lasso_cd(standardize(make_dataset(x, y)), lam);
        return py::make_tuple(c.intercept, c.beta);
    });
    m.def("lasso_cv", &lasso_cv_py, py::arg("x"), py::arg("y"), py::arg("seed") = 0);
    m.def("solve_kappa", &solve_kappa_py, py::arg("n"), py::arg("noise_var") = 1.0);
    m.def("temlyakov_bound", &temlyakov_bound, py::arg("b_bound"), py::arg("m"), py::arg("b"),
          py::arg("nu") = 1.0);
    m.def("verify_bound", &verify_bound_py, py::arg("vectors"), py::arg("coeffs"), py::arg("b"),
          py::arg("nu"), py::arg("m_steps"));
    m.def("draw_dataset", [](const std::string& setting, int p, int n, std::uint64_t seed) {
        SimulationModel model;
        if (setting == "42")
            model = make_model_41(p, CovKind::IDENTITY);
        else if (setting == "43")
            model = make_model_41(p, CovKind::BLOCK);
        else if (setting == "46")
            model = make_model_46();
        else
            throw ValidationError("unknown setting '" + setting + "'");
        const Dataset d = draw_dataset(model, n, seed);
        return py::make_tuple(d.x, d.y);
    });
}
