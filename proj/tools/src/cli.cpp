#include "normfilt_cli/cli.hpp"

#include "normfilt/errors.hpp"
#include "normfilt/filtration.hpp"
#include "normfilt/graded_rings.hpp"
#include "normfilt/hilbert.hpp"
#include "normfilt/integral_closure.hpp"
#include "normfilt/json_io.hpp"
#include "normfilt/theorem_suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#ifndef NORMFILT_DATA_DIR
#define NORMFILT_DATA_DIR "data"
#endif

namespace normfilt::cli {

namespace {

constexpr Exponent kOracleMaxK = 12;
constexpr int kCrossCheckSamples = 64;

std::string join(const std::vector<std::int64_t>& values) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? "," : "") << values[i];
    }
    os << ')';
    return os.str();
}

std::string optional_text(const std::optional<std::int64_t>& v, const char* absent) {
    return v ? std::to_string(*v) : std::string(absent);
}

std::string fact_text(const Fact& fact) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return join(v);
            }
        },
        fact);
}

void emit_json(std::ostream& out, const Json& j) {
    out << j.dump(2) << '\n';
}

unsigned worker_count() {
    return std::max(1u, std::thread::hardware_concurrency());
}

// Owns the cache of one base ideal together with its on-disk copy.
class Session {
public:
    Session(const RunConfig& config, MonomialIdeal base, std::ostream& err)
        : config_(config), err_(err), cache_(std::make_unique<ClosureCache>(base)) {
        if (!config_.use_cache) {
            return;
        }
        dir_ = resolve_cache_dir(config_.cache_dir);
        auto stored = load_cache(dir_, base);
        if (stored.empty()) {
            return;
        }
        for (auto& [n, ideal] : stored) {
            cache_->seed(n, std::move(ideal));
        }
        if (auto broken = cache_->check_filtration_laws()) {
            if (config_.verbose) {
                err_ << "cache: ignoring " << (dir_ / cache_file_name(base)).string() << ": " << *broken << '\n';
            }
            cache_ = std::make_unique<ClosureCache>(std::move(base));
            return;
        }
        loaded_ = cache_->snapshot().size();
        if (config_.verbose) {
            err_ << "cache: hit " << (dir_ / cache_file_name(base)).string() << " (" << loaded_
                 << " closures)\n";
        }
    }

    ClosureCache& cache() { return *cache_; }

    void populate(unsigned n_max) { cache_->populate(n_max, worker_count()); }

    void save() {
        if (!config_.use_cache) {
            return;
        }
        const auto snapshot = cache_->snapshot();
        if (snapshot.size() == loaded_) {
            return;
        }
        try {
            save_cache(dir_, cache_->base(), snapshot);
        } catch (const std::exception& e) {
            if (config_.verbose) {
                err_ << "cache: not saved: " << e.what() << '\n';
            }
        }
    }

private:
    const RunConfig& config_;
    std::ostream& err_;
    std::unique_ptr<ClosureCache> cache_;
    std::filesystem::path dir_;
    std::size_t loaded_ = 0;
};

MonomialIdeal require_ideal(const RunConfig& config) {
    if (!config.ideal_path) {
        throw InputError("--ideal is required for " + config.command);
    }
    return load_ideal(*config.ideal_path);
}

void require_m_primary(const MonomialIdeal& ideal) {
    if (!is_m_primary(ideal)) {
        throw NotMPrimary(ideal.to_string());
    }
}

// Compares Newton-polyhedron membership with the power oracle on random points.
std::size_t cross_check(const MonomialIdeal& ideal, const MonomialIdeal& closure, unsigned n, std::uint64_t seed,
                        std::ostream& err) {
    std::mt19937_64 rng(seed);
    const Exponent bound = std::max<Exponent>(1, ideal.max_coordinate() * static_cast<Exponent>(n));
    std::uniform_int_distribution<Exponent> coord(0, bound);
    PowerOracle oracle(ideal);
    std::size_t disagreements = 0;
    for (int s = 0; s < kCrossCheckSamples; ++s) {
        std::vector<Exponent> c(ideal.dim());
        for (auto& x : c) {
            x = coord(rng);
        }
        const ExponentVector a(std::move(c));
        const bool in_closure = closure.contains(a);
        const auto k = oracle.witness(a, n, kOracleMaxK);
        if (k && !in_closure) {
            ++disagreements;
            err << "cross-check: " << a.to_string() << " has a power in I^" << (*k * n)
                << " but is outside the computed closure\n";
        }
    }
    return disagreements;
}

int cmd_closure(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const MonomialIdeal ideal = require_ideal(config);
    if (config.power < 1) {
        throw InputError("--power must be at least 1");
    }
    Session session(config, ideal, err);
    session.populate(config.power);
    const MonomialIdeal& closure = session.cache().closure(config.power);
    session.save();

    std::size_t disagreements = 0;
    if (config.seed) {
        disagreements = cross_check(ideal, closure, config.power, *config.seed, err);
    }
    if (config.format == Format::Json) {
        Json j{{"base", to_json(ideal)}, {"power", config.power}, {"closure", to_json(closure)}};
        if (config.seed) {
            j["cross_check"] = {{"seed", *config.seed},
                                {"samples", kCrossCheckSamples},
                                {"disagreements", disagreements}};
        }
        emit_json(out, j);
    } else {
        out << "I = " << ideal.to_string() << '\n';
        out << "closure(I^" << config.power << "): " << closure.gens().size() << " minimal generators\n";
        for (const auto& g : closure.gens()) {
            out << "  " << g.to_string() << '\n';
        }
        if (config.seed) {
            out << "cross-check (seed " << *config.seed << ", " << kCrossCheckSamples
                << " samples): " << disagreements << " disagreements\n";
        }
    }
    return disagreements == 0 ? Success : CheckFailure;
}

int cmd_hilbert(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const MonomialIdeal ideal = require_ideal(config);
    require_m_primary(ideal);
    Session session(config, ideal, err);
    session.populate(config.max_n);
    const HilbertTable table = normal_table(session.cache(), config.max_n);
    session.save();
    const BinomialPolynomial fitted = fit(table);
    const auto multiplicity = multiplicity_check(ideal, fitted);

    if (config.format == Format::Json) {
        Json j = to_json(table, fitted);
        j["multiplicity_matches_product"] = multiplicity ? Json(*multiplicity) : Json(nullptr);
        emit_json(out, j);
    } else {
        out << "I = " << ideal.to_string() << '\n';
        out << std::setw(4) << "n" << std::setw(14) << "H(n)" << std::setw(14) << "P(n)" << '\n';
        for (unsigned n = 0; n <= table.n_max(); ++n) {
            out << std::setw(4) << n << std::setw(14) << table.values[n] << std::setw(14)
                << fitted.evaluate(n) << '\n';
        }
        out << "e = " << join(fitted.coeffs) << '\n';
        out << "postulation = " << optional_text(fitted.postulation, "none (agrees on the whole table)") << '\n';
        if (multiplicity) {
            out << "e_0 = product of exponents: " << (*multiplicity ? "yes" : "no") << '\n';
        }
    }
    return multiplicity.value_or(true) ? Success : CheckFailure;
}

int cmd_reduction(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const MonomialIdeal ideal = require_ideal(config);
    std::optional<MonomialIdeal> j;
    if (config.reduction_ideal_path) {
        j = load_ideal(*config.reduction_ideal_path);
    }
    Session session(config, ideal, err);
    session.populate(config.max_n);
    const ReductionReport report = reduction_number(session.cache(), j, config.max_n);
    std::optional<std::vector<Length>> lengths;
    if (is_m_primary(ideal)) {
        lengths = graded_quotient_lengths(session.cache(), config.max_n - 1);
    }
    session.save();

    if (config.format == Format::Json) {
        Json doc = to_json(report);
        doc["graded_lengths"] = lengths ? Json(*lengths) : Json(nullptr);
        emit_json(out, doc);
    } else {
        out << "I = " << ideal.to_string() << ", J = " << report.reduction_ideal.to_string() << '\n';
        out << "window n = 0.." << report.n_max - 1 << ", failures:";
        for (unsigned n : report.failures) {
            out << ' ' << n;
        }
        out << (report.failures.empty() ? " none\n" : "\n");
        if (report.r_bar) {
            out << "r_bar = " << *report.r_bar << " (certified on the window)\n";
        } else {
            out << "r_bar not certified: the last window position fails, increase --max-n\n";
        }
        if (lengths) {
            out << "graded lengths = " << join(*lengths) << '\n';
        }
    }
    return Success;
}

int cmd_hi_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const MonomialIdeal ideal = require_ideal(config);
    if (config.r < 1) {
        throw InputError("--r must be at least 1");
    }
    Session session(config, ideal, err);
    session.populate(config.max_n + config.r);
    const HIReport report = hi_check(session.cache(), config.r, config.max_n);
    session.save();

    if (config.format == Format::Json) {
        emit_json(out, to_json(report));
    } else {
        out << "I = " << ideal.to_string() << '\n';
        out << "HI_" << report.r << " for n = 0.." << report.n_max << ": " << (report.passed ? "holds" : "fails")
            << '\n';
        if (report.witness) {
            out << "witness at n = " << report.witness->n << ": " << report.witness->monomial.to_string()
                << " lies in I^n ∩ closure(I^{n+r}) but not in I^n closure(I^r)\n";
        }
    }
    return report.passed ? Success : CheckFailure;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const MonomialIdeal ideal = require_ideal(config);
    require_m_primary(ideal);
    if (config.k < 1) {
        throw InputError("--k must be at least 1");
    }
    if (config.type < 1) {
        throw InputError("--type must be at least 1");
    }
    Session session(config, ideal, err);
    session.populate(config.max_n + 1);
    const SuiteSummary summary = run_suite(session.cache(), config.k, config.type, config.max_n);
    session.save();

    if (config.format == Format::Json) {
        emit_json(out, to_json(summary));
    } else {
        out << "I = " << ideal.to_string() << ", k = " << config.k << ", n_max = " << config.max_n << '\n';
        for (const auto& w : summary.warnings) {
            out << "warning: " << w << '\n';
        }
        for (const auto& r : summary.reports) {
            out << '\n' << r.check << ": " << to_string(r.verdict()) << '\n';
            for (const auto& h : r.hypotheses) {
                out << "  [" << to_string(h.status) << "] " << h.name;
                if (!h.detail.empty()) {
                    out << ": " << h.detail;
                }
                out << '\n';
            }
            out << "  conclusion " << r.conclusion.name << ": " << (r.conclusion.holds ? "holds" : "fails");
            if (!r.conclusion.detail.empty()) {
                out << " (" << r.conclusion.detail << ")";
            }
            out << '\n';
            for (const auto& [key, value] : r.facts) {
                out << "  " << key << " = " << fact_text(value) << '\n';
            }
            for (const auto& note : r.notes) {
                out << "  note: " << note << '\n';
            }
        }
        out << "\nsummary:";
        for (Verdict v : {Verdict::TheoremConfirmed, Verdict::HypothesesUnmet, Verdict::Inconclusive,
                          Verdict::Contradiction}) {
            out << ' ' << to_string(v) << '=' << summary.count(v);
        }
        out << '\n';
    }
    return summary.has_hard_failure() ? CheckFailure : Success;
}

void render_series(const RunConfig& config, std::ostream& out, Json doc, const HilbertSeries& series,
                   const PostulationReduction& pr, const std::vector<std::int64_t>& e,
                   const std::vector<std::string>& notes) {
    if (config.format == Format::Json) {
        doc["dim"] = series.dim;
        doc["numerator"] = series.numerator;
        doc["e"] = e;
        doc["postulation"] = pr.postulation;
        doc["reduction"] = pr.reduction ? Json(*pr.reduction) : Json(nullptr);
        doc["notes"] = notes;
        emit_json(out, doc);
        return;
    }
    out << "series = " << series.to_string() << '\n';
    out << "e = " << join(e) << '\n';
    out << "postulation = " << pr.postulation << '\n';
    if (pr.reduction) {
        out << "reduction number = " << *pr.reduction << " (postulation + d, Cohen-Macaulay asserted)\n";
    } else {
        out << "reduction number not derived: Cohen-Macaulay not asserted (use --cm)\n";
    }
    for (const auto& note : notes) {
        out << "note: " << note << '\n';
    }
}

// The fitted polynomial of the expanded series must reproduce e; a mismatch is a bug.
bool series_fit_agrees(const HilbertSeries& series, const std::vector<std::int64_t>& e) {
    const unsigned terms = static_cast<unsigned>(2 * (series.dim + 1) + series.numerator.size() + 2);
    return fit(samuel_table(series, terms)).coeffs == e;
}

int cmd_sr(const RunConfig& config, std::ostream& out, std::ostream&) {
    const auto path = config.complex_path.value_or(bundled_complex_path());
    const SimplicialComplex complex = load_complex(path);
    bool cm = config.cohen_macaulay;
    {
        std::ifstream in(path);
        const Json raw = Json::parse(in, nullptr, false);
        cm = cm || (raw.is_object() && raw.value("cohen_macaulay", false));
    }
    std::vector<std::int64_t> h;
    try {
        h = h_vector(complex);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto f = f_vector(complex);
    const HilbertSeries series = series_from_h(h, complex.krull_dim());
    const auto e = coefficients_from_series(series);
    const auto pr = postulation_and_reduction(series, cm);
    const bool agrees = series_fit_agrees(series, e);
    std::vector<std::string> notes;
    if (!cm) {
        notes.emplace_back("Cohen-Macaulay not asserted; reduction number omitted");
    }
    if (config.format == Format::Text) {
        out << "complex: " << complex.vertex_count() << " vertices, " << complex.facets().size() << " facets\n";
        out << "f = " << join(f) << '\n';
        out << "h = " << join(h) << '\n';
    }
    render_series(config, out, Json{{"f", f}, {"h", h}, {"fit_agrees", agrees}}, series, pr, e, notes);
    return agrees ? Success : CheckFailure;
}

int cmd_hypersurface(const RunConfig& config, std::ostream& out, std::ostream&) {
    if (config.hyper_d < 1) {
        throw InputError("--d must be at least 1");
    }
    if (config.hyper_n < 1) {
        throw InputError("--n must be at least 1");
    }
    const HilbertSeries series = diagonal_hypersurface_series(config.hyper_d, config.hyper_n);
    const auto e = coefficients_from_series(series);
    // A hypersurface ring is Cohen-Macaulay.
    const auto pr = postulation_and_reduction(series, true);
    std::vector<std::string> notes;
    if (auto note = diagonal_hypersurface_scope_note(config.hyper_d, config.hyper_n)) {
        notes.push_back(*note);
    }
    const bool agrees = series_fit_agrees(series, e);
    if (config.format == Format::Text) {
        out << "x_0^" << config.hyper_n << " + ... + x_" << config.hyper_d << '^' << config.hyper_n
            << ", d = " << config.hyper_d << '\n';
    }
    render_series(config, out, Json{{"n", config.hyper_n}, {"fit_agrees", agrees}}, series, pr, e, notes);
    return agrees ? Success : CheckFailure;
}

} // namespace

std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("NORMFILT_CACHE_DIR"); env && *env) {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "normfilt";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "normfilt";
    }
    return std::filesystem::temp_directory_path() / "normfilt";
}

std::filesystem::path bundled_complex_path() {
    return std::filesystem::path(NORMFILT_DATA_DIR) / "shellable_8_vertices.json";
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.max_n < 2) {
            throw InputError("--max-n must be at least 2");
        }
        if (config.command == "closure") {
            return cmd_closure(config, out, err);
        }
        if (config.command == "hilbert") {
            return cmd_hilbert(config, out, err);
        }
        if (config.command == "reduction") {
            return cmd_reduction(config, out, err);
        }
        if (config.command == "hi-check") {
            return cmd_hi_check(config, out, err);
        }
        if (config.command == "verify") {
            return cmd_verify(config, out, err);
        }
        if (config.command == "sr") {
            return cmd_sr(config, out, err);
        }
        if (config.command == "hypersurface") {
            return cmd_hypersurface(config, out, err);
        }
        throw InputError("unknown command " + config.command);
    } catch (const FitError& e) {
        err << "error: " << e.what() << '\n';
        return InputFailure;
    } catch (const std::invalid_argument& e) {
        // InputError, DimensionMismatch and validation failures
        err << "error: " << e.what() << '\n';
        return InputFailure;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return InputFailure;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Normal filtrations of monomial ideals: closures, Hilbert coefficients, reduction numbers"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string cache_dir;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", cache_dir, "Closure cache directory (else $NORMFILT_CACHE_DIR)");
    app.add_flag("--no-cache", [&](std::int64_t) { config.use_cache = false; }, "Do not read or write the cache");
    app.add_flag("-v,--verbose", config.verbose, "Log cache activity to stderr");

    const auto ideal_opt = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
               "--ideal", [&](const std::string& p) { config.ideal_path = p; }, "Monomial ideal JSON file")
            ->required();
    };
    const auto max_n_opt = [&](CLI::App* sub) {
        sub->add_option("--max-n", config.max_n, "Largest n examined")->capture_default_str();
    };

    auto* closure = app.add_subcommand("closure", "Minimal generators of the closure of I^n");
    ideal_opt(closure);
    closure->add_option("--power", config.power, "Power n")->capture_default_str();
    auto* seed_opt = closure->add_option("--seed", seed, "Cross-check random points against the power oracle");

    auto* hilbert = app.add_subcommand("hilbert", "Normal Hilbert function, fitted coefficients, postulation");
    ideal_opt(hilbert);
    max_n_opt(hilbert);

    auto* reduction = app.add_subcommand("reduction", "Normal reduction number on a window");
    ideal_opt(reduction);
    max_n_opt(reduction);
    reduction->add_option_function<std::string>(
        "--reduction-ideal", [&](const std::string& p) { config.reduction_ideal_path = p; },
        "Reduction ideal J (defaults to I)");

    auto* hi = app.add_subcommand("hi-check", "Test I^n ∩ closure(I^{n+r}) = I^n closure(I^r)");
    ideal_opt(hi);
    max_n_opt(hi);
    hi->add_option("--r", config.r, "r")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the coefficient checks for one k");
    ideal_opt(verify);
    max_n_opt(verify);
    verify->add_option("--k", config.k, "k")->capture_default_str();
    verify->add_option("--type", config.type, "Type t(R) of the ring")->capture_default_str();

    auto* sr = app.add_subcommand("sr", "Stanley-Reisner ring of a simplicial complex");
    sr->add_option_function<std::string>(
        "--complex", [&](const std::string& p) { config.complex_path = p; },
        "Complex JSON file (defaults to the bundled shellable complex)");
    sr->add_flag("--cm", config.cohen_macaulay, "Assert that the ring is Cohen-Macaulay");

    auto* hyper = app.add_subcommand("hypersurface", "Diagonal hypersurface x_0^n + ... + x_d^n");
    hyper->add_option("--d", config.hyper_d, "Dimension d")->required();
    hyper->add_option("--n", config.hyper_n, "Degree n")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return InputFailure;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.format = format == "json" ? Format::Json : Format::Text;
    if (!cache_dir.empty()) {
        config.cache_dir = cache_dir;
    }
    if (seed_opt->count() > 0) {
        config.seed = seed;
    }
    return execute(config, out, err);
}

} // namespace normfilt::cli
