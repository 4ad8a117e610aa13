#include "l2boost/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "l2boost/bench.hpp"
#include "l2boost/boosting.hpp"
#include "l2boost/classification.hpp"
#include "l2boost/csv.hpp"
#include "l2boost/greedy.hpp"
#include "l2boost/model_selection.hpp"
#include "l2boost/version.hpp"

namespace l2boost {

namespace {

Method parse_method(const std::string& name) {
    static const std::vector<std::pair<std::string, Method>> table = {
        {"l2boost", Method::L2BOOST_AICC}, {"l2boost*", Method::L2BOOST_ORACLE},
        {"ols", Method::OLS},              {"ridge-cv", Method::RIDGE_CV},
        {"ridge*", Method::RIDGE_ORACLE},  {"fwd-aic", Method::FORWARD_AIC},
        {"lasso-cv", Method::LASSO_CV},    {"lasso*", Method::LASSO_ORACLE},
    };
    for (const auto& [key, m] : table)
        if (key == name) return m;
    throw ValidationError("unknown method '" + name + "'");
}

struct FitArgs {
    std::string input, response, out_prefix = "fit";
    double nu = 0.1;
    int m_max = 5000;
    int fixed_m = -1;
    std::string stop = "aicc";
    std::string variant = "l2boost";
};

void cmd_fit(const FitArgs& a) {
    const Dataset d = read_dataset_csv(a.input, a.response);
    const StandardizedDesign s = standardize(d);
    BoostConfig cfg;
    cfg.nu = a.nu;
    cfg.m_max = a.m_max;
    cfg.variant = a.variant == "fslr" ? BoostVariant::FSLR : BoostVariant::L2BOOST;
    BoostPath path = boost_fit(s, cfg);

    int m_hat = 0;
    if (a.stop == "fixed") {
        if (a.fixed_m < 0) throw ValidationError("--m is required with --stop fixed");
        if (a.fixed_m > path.length()) throw IterationOutOfRange(a.fixed_m, path.length());
        m_hat = a.fixed_m;
    } else if (a.stop == "aicc") {
        m_hat = aicc_stop(path, s).m_hat;
    } else {
        throw ValidationError("unknown stopping rule '" + a.stop + "'");
    }
    const SparseCoefficients coef = coefficients_at(path, m_hat, s);

    CsvTable tab;
    tab.header = {"name", "coefficient", "scaled_coefficient"};
    tab.rows.push_back({"(intercept)", format_double(coef.intercept), format_double(0.0)});
    for (int j = 0; j < d.p(); ++j) {
        const std::string name =
            d.column_names.empty() ? "x" + std::to_string(j + 1) : d.column_names[j];
        // scaled coefficient: beta_j * sd(X_j), the Fig. 2 convention
        tab.rows.push_back({name, format_double(coef.beta[j]),
                            format_double(coef.beta[j] * s.scales[j])});
    }
    write_csv(a.out_prefix + "_coefficients.csv", tab,
              {"version=" + std::string(kVersion), "m_hat=" + std::to_string(m_hat)});
    write_path_csv(path, a.out_prefix + "_path.csv");

    std::ofstream plot(a.out_prefix + "_criterion.dat", std::ios::binary);
    if (!plot) throw ValidationError("cannot write criterion plot data");
    for (int m = 1; m <= path.length(); ++m)
        if (std::isfinite(path.criterion[m - 1]))
            plot << m << ' ' << format_double(path.criterion[m - 1]) << '\n';

    std::cout << "m_hat=" << m_hat << "\nintercept=" << format_double(coef.intercept)
              << "\nactive=" << coef.active_set.size() << "\n";
}

struct SimArgs {
    std::string table;  // table1 | table2 | table3 | sec43 (preset)
    std::string setting;
    int p = 10;
    int n = 20;
    int reps = 50;
    std::uint64_t seed = 18;
    double nu = 0.1;
    int m_max = 5000;
    int threads = 1;
    std::vector<std::string> methods;
    std::string out_prefix = "simulate";
};

SimulationModel named_model(const std::string& setting, int p, std::uint64_t seed) {
    if (setting == "42") return make_model_41(p, CovKind::IDENTITY);
    if (setting == "43") return make_model_41(p, CovKind::BLOCK);
    if (setting == "46") return make_model_46();
    if (setting == "44") return make_model_44(100, 1.0, seed);
    throw ValidationError("unknown setting '" + setting + "' (use 42, 43, 44, 46)");
}

void cmd_simulate(const SimArgs& a) {
    std::vector<BenchmarkSetting> settings;
    std::vector<Method> methods;
    if (a.table == "table1") {
        for (int p : {3, 10, 100}) settings.push_back({make_model_41(p, CovKind::IDENTITY), 20});
        for (int p : {3, 10, 100}) settings.push_back({make_model_41(p, CovKind::BLOCK), 20});
        methods = {Method::L2BOOST_AICC, Method::LASSO_CV, Method::FORWARD_AIC,
                   Method::RIDGE_ORACLE, Method::OLS};
    } else if (a.table == "table2") {
        for (int p : {3, 10, 100}) settings.push_back({make_model_41(p, CovKind::IDENTITY), 20});
        for (int p : {3, 10, 100}) settings.push_back({make_model_41(p, CovKind::BLOCK), 20});
        methods = {Method::L2BOOST_ORACLE, Method::LASSO_ORACLE};
    } else if (a.table == "table3") {
        settings.push_back({make_model_41(3, CovKind::IDENTITY), 20, "(4.2) n=20 p=3"});
        settings.push_back({make_model_41(30, CovKind::IDENTITY), 40, "(4.2) n=40 p=30"});
        settings.push_back({make_model_41(300, CovKind::IDENTITY), 60, "(4.2) n=60 p=300"});
        methods = {Method::L2BOOST_AICC, Method::LASSO_CV, Method::L2BOOST_ORACLE,
                   Method::LASSO_ORACLE};
    } else if (a.table == "sec43") {
        settings.push_back({make_model_46(), 20});
        methods = {Method::L2BOOST_AICC, Method::LASSO_CV, Method::RIDGE_CV};
    } else if (a.table.empty()) {
        if (a.setting.empty())
            throw ValidationError("pass --table or --setting");
        BenchmarkSetting s{named_model(a.setting, a.p, a.seed), a.n};
        settings.push_back(std::move(s));
        for (const auto& name : a.methods) methods.push_back(parse_method(name));
        if (methods.empty()) methods = {Method::L2BOOST_AICC};
    } else {
        throw ValidationError("unknown table preset '" + a.table + "'");
    }
    if (!a.table.empty() && !a.methods.empty()) {
        methods.clear();
        for (const auto& name : a.methods) methods.push_back(parse_method(name));
    }

    BenchOptions opt;
    opt.nu = a.nu;
    opt.m_max = a.m_max;
    opt.threads = a.threads;
    const BenchmarkReport report = run_benchmark(settings, methods, a.reps, a.seed, opt);
    write_long_csv(report, a.out_prefix + "_long.csv");
    write_summary_markdown(report, a.out_prefix + "_summary.md");

    for (const auto& c : report.cells) {
        std::cout << c.setting << "  " << c.method << "  ";
        if (c.missing)
            std::cout << "-\n";
        else
            std::cout << c.mean << " (" << c.se << ")\n";
    }
}

struct ClassifyArgs {
    std::string expression, labels;
    int repeats = 50;
    std::uint64_t seed = 18;
    std::string coding = "zero-one";
    double nu = 0.1;
    int m_max = 2000;
    int m_upp = -1;
    double train_fraction = 2.0 / 3.0;
    bool microarray = false;
    std::string out_prefix = "classify";
};

void cmd_classify(const ClassifyArgs& a) {
    Dataset d = read_dataset_csv(a.expression, a.labels);
    if (a.microarray) {
        ExpressionMatrix e;
        e.raw = d.x;
        e.gene_names = d.column_names;
        e.labels.resize(d.n());
        for (int i = 0; i < d.n(); ++i) e.labels[i] = d.y[i] > 0.5 ? 1 : 0;
        d = preprocess_microarray(e);
    }
    const ResponseCoding coding =
        a.coding == "centered" ? ResponseCoding::CENTERED : ResponseCoding::ZERO_ONE;
    CvScheme scheme;
    scheme.repeats = a.repeats;
    scheme.seed = a.seed;
    scheme.train_fraction = a.train_fraction;
    BoostConfig cfg;
    cfg.nu = a.nu;
    cfg.m_max = a.m_max;

    const CvResult cv = cv_misclassification(d, scheme, coding, cfg, a.m_upp);
    CsvTable reps;
    reps.header = {"repeat", "misclassification_rate"};
    for (size_t t = 0; t < cv.per_repeat.size(); ++t)
        reps.rows.push_back({std::to_string(t), format_double(cv.per_repeat[t])});
    write_csv(a.out_prefix + "_repeats.csv", reps,
              {"version=" + std::string(kVersion), "rng=" + std::string(kRngAlgorithm),
               "seed=" + std::to_string(a.seed)});

    const BinaryBoostFit fit = fit_binary_boost(d, coding, cfg, a.m_upp);
    CsvTable coefs;
    coefs.header = {"name", "scaled_coefficient"};
    for (const auto& c : scaled_coefficients(fit.coef, d))
        coefs.rows.push_back({c.name, format_double(c.value)});
    write_csv(a.out_prefix + "_coefficients.csv", coefs,
              {"m_hat=" + std::to_string(fit.stop.m_hat)});

    std::cout << "cv_misclassification=" << cv.rate << "\nrepeats=" << a.repeats
              << "\nm_hat_full_fit=" << fit.stop.m_hat << "\n";
}

struct GreedyArgs {
    int instances = 100;
    double b = 0.5;
    double nu = 1.0;
    int steps = 200;
    std::uint64_t seed = 18;
    int max_dim = 40;
    int max_size = 60;
    std::string selector = "max";
    std::string out;
};

void cmd_greedy_check(const GreedyArgs& a) {
    if (!(a.b > 0.0 && a.b <= 1.0)) throw BadWeakness(a.b);
    const Selector sel = a.selector == "random" ? Selector::B_WEAK_RANDOM : Selector::EXACT_MAX;
    CsvTable tab;
    tab.header = {"instance", "dim", "size", "b_bound", "max_ratio", "worst_step"};
    for (int inst = 0; inst < a.instances; ++inst) {
        Rng rng(mix_seed(a.seed, static_cast<std::uint64_t>(inst)));
        const int dim = 2 + rng.below(std::max(1, a.max_dim - 1));
        const int size = 2 + rng.below(std::max(1, a.max_size - 1));
        Matrix vecs(dim, size);
        for (int j = 0; j < size; ++j) {
            for (int i = 0; i < dim; ++i) vecs(i, j) = rng.normal();
            vecs.col(j).normalize();
        }
        Vector coeffs(size);
        for (int j = 0; j < size; ++j)
            coeffs[j] = rng.below(3) == 0 ? 2.0 * rng.uniform() - 1.0 : 0.0;
        const FiniteDictionary dict = make_dictionary(std::move(vecs), std::move(coeffs));
        const BoundReport rep = verify_bound(dict, a.b, a.nu, a.steps, sel,
                                             mix_seed(a.seed, 1000003 + inst));
        tab.rows.push_back({std::to_string(inst), std::to_string(dim), std::to_string(size),
                            format_double(dict.b_bound), format_double(rep.max_ratio),
                            std::to_string(rep.worst_step)});
    }
    if (!a.out.empty())
        write_csv(a.out, tab, {"b=" + format_double(a.b), "nu=" + format_double(a.nu)});
    std::cout << "instances=" << a.instances << "\nviolations=0\n";
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"componentwise L2 boosting for high-dimensional linear models"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config");
    app.allow_config_extras(false);
    app.require_subcommand(1);

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "boost a CSV dataset");
    fit_cmd->add_option("--input", fit.input, "input CSV")->required();
    fit_cmd->add_option("--response", fit.response, "response column name")->required();
    fit_cmd->add_option("--nu", fit.nu, "step size in (0,1]");
    fit_cmd->add_option("--m-max", fit.m_max, "maximum iterations");
    fit_cmd->add_option("--stop", fit.stop, "stopping rule: aicc or fixed");
    fit_cmd->add_option("--m", fit.fixed_m, "iteration count for --stop fixed");
    fit_cmd->add_option("--variant", fit.variant, "l2boost or fslr");
    fit_cmd->add_option("--out-prefix", fit.out_prefix, "output file prefix");

    SimArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "run the benchmark harness");
    sim_cmd->add_option("--table", sim.table, "preset: table1, table2, table3, sec43");
    sim_cmd->add_option("--setting", sim.setting, "single setting: 42, 43, 44, 46");
    sim_cmd->add_option("--p", sim.p, "dimension for settings 42/43");
    sim_cmd->add_option("--n", sim.n, "sample size");
    sim_cmd->add_option("--reps", sim.reps, "replications");
    sim_cmd->add_option("--seed", sim.seed, "base seed");
    sim_cmd->add_option("--nu", sim.nu, "boosting step size");
    sim_cmd->add_option("--m-max", sim.m_max, "boosting iteration cap");
    sim_cmd->add_option("--threads", sim.threads, "worker cap for replications");
    sim_cmd->add_option("--methods", sim.methods, "method names (comma separated)")
        ->delimiter(',');
    sim_cmd->add_option("--out-prefix", sim.out_prefix, "output file prefix");

    ClassifyArgs cls;
    auto* cls_cmd = app.add_subcommand("classify", "binary classification via boosting");
    cls_cmd->add_option("--expression", cls.expression, "expression CSV")->required();
    cls_cmd->add_option("--labels", cls.labels, "label column name")->required();
    cls_cmd->add_option("--repeats", cls.repeats, "CV repeats");
    cls_cmd->add_option("--seed", cls.seed, "seed");
    cls_cmd->add_option("--coding", cls.coding, "zero-one or centered");
    cls_cmd->add_option("--nu", cls.nu, "step size");
    cls_cmd->add_option("--m-max", cls.m_max, "boosting iteration cap");
    cls_cmd->add_option("--m-upp", cls.m_upp, "criterion search upper bound");
    cls_cmd->add_option("--train-fraction", cls.train_fraction, "training split fraction");
    cls_cmd->add_flag("--microarray", cls.microarray, "clip/log/row-standardize first");
    cls_cmd->add_option("--out-prefix", cls.out_prefix, "output file prefix");

    GreedyArgs greedy;
    auto* greedy_cmd = app.add_subcommand("greedy-check", "verify the Temlyakov bound");
    greedy_cmd->add_option("--instances", greedy.instances, "number of random dictionaries");
    greedy_cmd->add_option("--b", greedy.b, "weakness parameter in (0,1]");
    greedy_cmd->add_option("--nu", greedy.nu, "step size in (0,1]");
    greedy_cmd->add_option("--steps", greedy.steps, "greedy steps per instance");
    greedy_cmd->add_option("--seed", greedy.seed, "seed");
    greedy_cmd->add_option("--max-dim", greedy.max_dim, "max ambient dimension");
    greedy_cmd->add_option("--max-size", greedy.max_size, "max dictionary size");
    greedy_cmd->add_option("--selector", greedy.selector, "max or random");
    greedy_cmd->add_option("--out", greedy.out, "per-instance ratio CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (fit_cmd->parsed()) cmd_fit(fit);
        if (sim_cmd->parsed()) cmd_simulate(sim);
        if (cls_cmd->parsed()) cmd_classify(cls);
        if (greedy_cmd->parsed()) cmd_greedy_check(greedy);
    } catch (const BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace l2boost
