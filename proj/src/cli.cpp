#include "symprod/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "symprod/errors.hpp"
#include "symprod/io.hpp"
#include "symprod/pipelines.hpp"
#include "symprod/verify.hpp"

namespace symprod {

namespace {

constexpr long kDefaultMaxTruncation = 64;

// Flag values that fail to parse are usage errors, not document errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long max_truncation() {
    const char* env = std::getenv("SYMPROD_MAX_N");
    if (!env) return kDefaultMaxTruncation;
    try {
        return std::max(0L, std::stol(env));
    } catch (...) {
        return kDefaultMaxTruncation;
    }
}

GradedClass basepoint_class(const SpaceModel& model, const YRationalFunction& scale) {
    const auto& module1 = *model.module(1);
    for (std::size_t i = 0; i < module1.rank(); ++i)
        if (module1.half_degree(i) == 0)
            return GradedClass::basis_element(model.module(1), i, scale);
    throw UsageError("model has no half-degree-0 basis element in module 1");
}

GradedClass resolve_base(const std::string& spec, const SpaceModel& model, bool builtin_model) {
    if (spec.rfind("file:", 0) == 0) {
        return load_class(spec.substr(5), model);
    }
    if (spec.rfind("chi=", 0) == 0) {
        const YPolynomial chi = YPolynomial::parse(spec.substr(4));
        return basepoint_class(model, YRationalFunction(chi));
    }
    if (!builtin_model)
        throw UsageError("base '" + spec + "' requires a builtin model; use file: or chi=");
    const bool is_point = model.module(1)->rank() == 1;
    if (spec == "hirzebruch") {
        if (is_point) return basepoint_class(model, YRationalFunction(Rational(1)));
        return negate_y(hirzebruch_class_pn(1));
    }
    if (spec == "todd" || spec == "chern" || spec == "l") {
        if (is_point) return basepoint_class(model, YRationalFunction(Rational(1)));
        const ClassicalGenus genus = spec == "todd"  ? ClassicalGenus::todd
                                     : spec == "chern" ? ClassicalGenus::chern
                                                        : ClassicalGenus::l;
        return genus_class_pn(1, genus);
    }
    throw UsageError("unknown base '" + spec + "'");
}

void print_pont_series(const PontSeries& series, unsigned limit, const std::string& format,
                       std::ostream& out) {
    if (format == "table-doc") {
        // Serialization is re-consumable: each term is a class document.
        out << serialize_pont_series(series, limit) << "\n";
        return;
    }
    for (unsigned n = 0; n <= limit; ++n) out << "n=" << n << ": " << series.term(n).str() << "\n";
}

int cmd_classes(const std::string& model_spec, const std::string& base_spec,
                const std::string& pipeline, long truncation, const std::string& format,
                const std::optional<std::string>& y_eval, std::optional<long> ichi,
                std::ostream& out) {
    const unsigned N = static_cast<unsigned>(truncation);

    std::optional<SpaceModel> model;
    bool builtin_model = true;
    if (model_spec == "point") {
        model.emplace(point_model(std::max(N, 1u)));
    } else if (model_spec == "p1") {
        model.emplace(p1_model(std::max(N, 1u)));
    } else if (model_spec.rfind("file:", 0) == 0) {
        builtin_model = false;
        model.emplace(load_model(model_spec.substr(5)));
        if (model->truncation() < N)
            throw UsageError("--N exceeds the truncation of the loaded model (" +
                             std::to_string(model->truncation()) + ")");
    } else {
        throw UsageError("unknown model '" + model_spec + "'");
    }

    std::optional<Rational> y0;
    if (y_eval) {
        try {
            y0 = Rational::parse(*y_eval);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
    }
    GradedClass base = [&] {
        try {
            return resolve_base(base_spec, *model, builtin_model);
        } catch (const ParseError& e) {
            if (base_spec.rfind("file:", 0) == 0) throw;  // document error
            throw UsageError(e.what());
        }
    }();

    PontSeries series = [&] {
        if (pipeline == "hirzebruch") return symmetric_class_series(*model, base);
        if (pipeline == "todd") return todd_series_direct(*model, base);
        if (pipeline == "chern") return chern_series_direct(*model, base);
        if (pipeline == "chern-limit") return chern_limit_series(*model, base);
        if (pipeline == "l") {
            if (!ichi) throw UsageError("pipeline 'l' requires --ichi");
            return l_series(*model, base, *ichi);
        }
        throw UsageError("unknown pipeline '" + pipeline + "'");
    }();

    if (y0) {
        for (unsigned n = 0; n <= series.truncation(); ++n)
            series.set_term(n, specialize_y(series.term(n), *y0, SpecializeMode::evaluate));
    }
    print_pont_series(series, N, format, out);
    return 0;
}

int cmd_verify(const std::string& suite_name, long truncation, long seed, std::ostream& out) {
    Suite suite;
    if (suite_name == "p1")
        suite = Suite::p1;
    else if (suite_name == "oracle")
        suite = Suite::oracle;
    else if (suite_name == "genera")
        suite = Suite::genera;
    else if (suite_name == "specializations")
        suite = Suite::specializations;
    else if (suite_name == "all")
        suite = Suite::all;
    else
        throw UsageError("unknown suite '" + suite_name + "'");

    const SuiteReport report = run_suite(suite, static_cast<unsigned>(truncation),
                                         static_cast<unsigned>(seed));
    for (const CheckResult& check : report.checks) {
        out << (check.pass ? "PASS" : "FAIL") << " " << check.name;
        if (!check.pass && !check.detail.empty()) out << " (" << check.detail << ")";
        out << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_genera(const std::optional<std::string>& chi_y, std::optional<long> sigma,
               std::optional<long> chi, std::optional<long> chi_a, long truncation,
               const std::string& format, std::ostream& out) {
    const unsigned N = static_cast<unsigned>(truncation);
    const int selectors = int(bool(chi_y)) + int(sigma || chi) + int(bool(chi_a));
    if (selectors != 1)
        throw UsageError("choose exactly one of --chi-y, --sigma/--chi, --chi-a");

    ScalarSeries series(N);
    if (chi_y) {
        YPolynomial g;
        try {
            g = YPolynomial::parse(*chi_y);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        series = chi_series(g, N);
    } else if (chi_a) {
        series = arithmetic_genus_series(*chi_a, N);
    } else {
        if (!sigma || !chi) throw UsageError("--sigma and --chi must be given together");
        series = zagier_signature_series(*sigma, *chi, N);
    }

    if (format == "table-doc") {
        out << serialize_scalar_series(series) << "\n";
    } else {
        for (unsigned n = 0; n <= N; ++n) out << "n=" << n << ": " << series[n].str() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generating series of characteristic classes of symmetric products"};
    app.require_subcommand(1);

    // classes
    auto* classes = app.add_subcommand("classes", "Compute a class-level generating series");
    std::string model_spec;
    std::string base_spec;
    std::string pipeline;
    std::string format = "text";
    long truncation = -1;
    std::optional<std::string> y_eval;
    std::optional<long> ichi;
    classes->add_option("--model", model_spec, "point | p1 | file:PATH")->required();
    classes->add_option("--base", base_spec,
                        "hirzebruch | todd | chern | l | chi=POLY | file:PATH")
        ->required();
    classes->add_option("--pipeline", pipeline, "hirzebruch | todd | chern | chern-limit | l")
        ->required();
    classes->add_option("--N", truncation, "truncation order")->required();
    classes->add_option("--format", format, "text | table-doc");
    classes->add_option("--y-eval", y_eval, "evaluate coefficients at a rational y");
    classes->add_option("--ichi", ichi, "intersection Euler characteristic for pipeline l");

    // verify
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    long verify_n = 6;
    long seed = 0;
    verify->add_option("--suite", suite, "p1 | oracle | genera | specializations | all");
    verify->add_option("--N", verify_n, "truncation order (default 6)");
    verify->add_option("--seed", seed, "seed for randomized models");

    // genera
    auto* genera = app.add_subcommand("genera", "Compute a scalar genus series");
    std::optional<std::string> chi_y;
    std::optional<long> sigma;
    std::optional<long> chi;
    std::optional<long> chi_a;
    long genera_n = -1;
    std::string genera_format = "text";
    genera->add_option("--chi-y", chi_y, "Hodge polynomial in y");
    genera->add_option("--sigma", sigma, "signature");
    genera->add_option("--chi", chi, "Euler characteristic");
    genera->add_option("--chi-a", chi_a, "arithmetic genus");
    genera->add_option("--N", genera_n, "truncation order")->required();
    genera->add_option("--format", genera_format, "text | table-doc");

    std::vector<const char*> argv;
    argv.push_back("symprod");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const auto check_truncation = [&](long n) {
        if (n < 0) throw UsageError("--N must be nonnegative");
        if (n > max_truncation())
            throw UsageError("--N exceeds SYMPROD_MAX_N (" + std::to_string(max_truncation()) +
                             ")");
    };

    try {
        if (classes->parsed()) {
            check_truncation(truncation);
            if (format != "text" && format != "table-doc")
                throw UsageError("unknown format '" + format + "'");
            return cmd_classes(model_spec, base_spec, pipeline, truncation, format, y_eval, ichi,
                               out);
        }
        if (verify->parsed()) {
            check_truncation(verify_n);
            return cmd_verify(suite, verify_n, seed, out);
        }
        check_truncation(genera_n);
        if (genera_format != "text" && genera_format != "table-doc")
            throw UsageError("unknown format '" + genera_format + "'");
        return cmd_genera(chi_y, sigma, chi, chi_a, genera_n, genera_format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParityError& e) {
        err << "error: " << e.what() << "\n";
        return 6;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    } catch (const ValidationError& e) {
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace symprod
