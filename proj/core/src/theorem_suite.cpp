#include "normfilt/theorem_suite.hpp"

#include "normfilt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace normfilt {

namespace {

using Hypothesis = TheoremReport::Hypothesis;

std::string window_note(unsigned n_max) {
    return "window-limited: verified for n <= " + std::to_string(n_max) + " only";
}

Hypothesis status_of(std::string name, std::optional<bool> value, std::string detail = {}) {
    if (!value) {
        return {std::move(name), HypothesisStatus::Assumed, detail.empty() ? "not computed" : detail};
    }
    return {std::move(name), *value ? HypothesisStatus::Pass : HypothesisStatus::Fail, std::move(detail)};
}

Hypothesis parameter_hypothesis(const MonomialIdeal& base) {
    return status_of("parameter ideal", base.is_parameter_ideal(),
                     base.is_parameter_ideal() ? "generated by pure powers of distinct variables"
                                               : "not generated by a system of parameters");
}

std::string describe_hi(const HIReport& hi) {
    if (hi.passed) {
        return "holds for n <= " + std::to_string(hi.n_max);
    }
    return "fails at n = " + std::to_string(hi.witness->n) + ", witness " + hi.witness->monomial.to_string();
}

std::vector<HIReport> hi_reports(ClosureCache& cache, unsigned k, unsigned n_max) {
    std::vector<HIReport> out;
    for (unsigned p = 1; p + 2 <= k; ++p) {
        out.push_back(hi_check(cache, p, n_max));
    }
    return out;
}

void add_hi_hypotheses(TheoremReport& report, const std::vector<HIReport>& reports, bool proxy) {
    for (const auto& hi : reports) {
        std::string name = "HI_" + std::to_string(hi.r);
        if (proxy) {
            name += " (consequence-level proxy for the local-cohomology condition)";
        }
        report.hypotheses.push_back(status_of(std::move(name), hi.passed, describe_hi(hi)));
    }
}

void require_window(unsigned k, unsigned n_max) {
    if (k < 2) {
        throw std::invalid_argument("this check needs k >= 2");
    }
    if (n_max < k) {
        throw std::invalid_argument("window too short: need n_max >= k = " + std::to_string(k));
    }
}

std::int64_t coefficient(const BinomialPolynomial& fitted, std::size_t i) {
    return i < fitted.coeffs.size() ? fitted.coeffs[i] : 0;
}

} // namespace

AlphaCoefficients alpha_from_lengths(std::span<const Length> quotient_lengths, unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("alpha coefficients need k >= 2");
    }
    if (quotient_lengths.size() < k - 1) {
        throw std::invalid_argument("alpha coefficients need quotient lengths for i <= k-2");
    }
    AlphaCoefficients out;
    out.k = k;
    for (unsigned j = 1; j <= k - 1; ++j) {
        std::int64_t a = 0;
        for (unsigned i = j - 1; i <= k - 2; ++i) {
            a += binomial(i, j - 1) * quotient_lengths[i];
        }
        out.alphas.push_back(a);
    }
    return out;
}

AlphaCoefficients alpha(ClosureCache& cache, unsigned k) {
    if (k < 2) {
        throw std::invalid_argument("alpha coefficients need k >= 2");
    }
    const auto lengths = graded_quotient_lengths(cache, k - 2);
    return alpha_from_lengths(lengths, k);
}

std::pair<std::int64_t, std::int64_t> binomial_identity_sides(std::int64_t i, std::int64_t n,
                                                              std::int64_t d) {
    const std::int64_t lhs = binomial(n + d - i - 1, d - 1);
    std::int64_t rhs = 0;
    for (std::int64_t j = 1; j <= i + 1; ++j) {
        const std::int64_t term = binomial(i, j - 1) * binomial(n + d - j, d - j);
        rhs += (j % 2 == 1) ? term : -term;
    }
    return {lhs, rhs};
}

std::string to_string(HypothesisStatus status) {
    switch (status) {
    case HypothesisStatus::Pass: return "pass";
    case HypothesisStatus::Fail: return "fail";
    case HypothesisStatus::Assumed: return "assumed";
    }
    return "unknown";
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::TheoremConfirmed: return "theorem-confirmed";
    case Verdict::HypothesesUnmet: return "hypotheses-unmet";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Contradiction: return "contradiction";
    }
    return "unknown";
}

Verdict TheoremReport::verdict() const {
    const auto has = [&](HypothesisStatus s) {
        return std::ranges::any_of(hypotheses, [&](const Hypothesis& h) { return h.status == s; });
    };
    if (has(HypothesisStatus::Fail)) {
        return Verdict::HypothesesUnmet;
    }
    if (conclusion.holds) {
        return Verdict::TheoremConfirmed;
    }
    return has(HypothesisStatus::Assumed) ? Verdict::Inconclusive : Verdict::Contradiction;
}

TheoremReport hspoly_bound_check(ClosureCache& cache, const BinomialPolynomial& fitted, unsigned k,
                                 unsigned n_max) {
    require_window(k, n_max);
    const MonomialIdeal& base = cache.base();
    const auto d = static_cast<std::int64_t>(cache.dim());

    TheoremReport report;
    report.instance = base.to_string();
    report.check = "normal-hilbert-bound";
    report.k = k;
    report.hypotheses.push_back(parameter_hypothesis(base));
    if (k + 1 <= static_cast<unsigned>(d)) {
        report.hypotheses.push_back(status_of("k <= d-1", true));
    } else if (k == static_cast<unsigned>(d)) {
        report.hypotheses.push_back(status_of("k <= d", true));
        report.notes.push_back("warning: k = d is outside the k <= d-1 form of the bound; evaluated anyway");
    } else {
        report.hypotheses.push_back(status_of("k <= d", false, "k exceeds the dimension"));
    }
    add_hi_hypotheses(report, hi_reports(cache, k, n_max), false);

    const auto lengths = graded_quotient_lengths(cache, k - 2);
    const auto alphas = alpha_from_lengths(lengths, k);
    const Length colength_i = colength(base);

    std::vector<std::int64_t> lhs_values;
    std::vector<std::int64_t> rhs_values;
    std::vector<std::int64_t> violations;
    std::vector<std::int64_t> strict;
    for (unsigned n = k - 2; n <= n_max; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        const Length lhs = colength(cache.closure(n + 1));
        std::int64_t rhs = colength_i * binomial(nn + d, d);
        for (unsigned j = 1; j <= k - 1; ++j) {
            const std::int64_t term = alphas.alphas[j - 1] * binomial(nn + d - j, d - j);
            rhs += (j % 2 == 0) ? term : -term;
        }
        lhs_values.push_back(lhs);
        rhs_values.push_back(rhs);
        if (lhs > rhs) {
            violations.push_back(nn);
        } else if (lhs < rhs) {
            strict.push_back(nn);
        }
    }
    const bool equality = violations.empty() && strict.empty();

    const ReductionReport reduction = reduction_number(cache, std::nullopt, n_max + 1);
    const bool reduction_bounded = *reduction.at_most(k - 1);

    report.facts["alphas"] = alphas.alphas;
    report.facts["colength_I"] = colength_i;
    report.facts["e0_equals_colength_I"] = coefficient(fitted, 0) == colength_i;
    report.facts["n_from"] = static_cast<std::int64_t>(k - 2);
    report.facts["lhs"] = lhs_values;
    report.facts["rhs"] = rhs_values;
    report.facts["equality_everywhere"] = equality;
    report.facts["r_bar_at_most_k_minus_1"] = reduction_bounded;
    if (reduction.r_bar) {
        report.facts["r_bar"] = static_cast<std::int64_t>(*reduction.r_bar);
    }

    std::string detail;
    if (!violations.empty()) {
        detail = "inequality violated at n = " + std::to_string(violations.front());
    } else {
        detail = std::string("inequality holds; equality ") + (equality ? "everywhere" : "fails") +
                 ", r_bar <= k-1 is " + (reduction_bounded ? "true" : "false");
    }
    report.conclusion = {"bound holds and (equality <=> r_bar <= k-1)",
                         violations.empty() && equality == reduction_bounded, detail};
    report.notes.push_back(window_note(n_max));
    return report;
}

TheoremReport e1_sum_check(ClosureCache& cache, const BinomialPolynomial& fitted, unsigned k,
                           unsigned n_max) {
    require_window(k, n_max);
    const MonomialIdeal& base = cache.base();

    TheoremReport report;
    report.instance = base.to_string();
    report.check = "e1-sum";
    report.k = k;
    report.hypotheses.push_back(parameter_hypothesis(base));
    add_hi_hypotheses(report, hi_reports(cache, k, n_max), false);

    const auto lengths = graded_quotient_lengths(cache, k - 2);
    const std::int64_t sum = std::accumulate(lengths.begin(), lengths.end(), std::int64_t{0});
    const std::int64_t e1 = coefficient(fitted, 1);
    const ReductionReport reduction = reduction_number(cache, std::nullopt, n_max);
    const bool reduction_bounded = *reduction.at_most(k - 1);
    const bool equal = e1 == sum;

    report.facts["e1"] = e1;
    report.facts["length_sum"] = sum;
    report.facts["r_bar_at_most_k_minus_1"] = reduction_bounded;
    report.conclusion = {"(e1 = sum) <=> r_bar <= k-1", equal == reduction_bounded,
                         "e1 = " + std::to_string(e1) + ", sum = " + std::to_string(sum) +
                             ", r_bar <= k-1 is " + (reduction_bounded ? "true" : "false")};
    report.notes.push_back(window_note(n_max));
    return report;
}

TheoremReport e2_identity_check(ClosureCache& cache, const BinomialPolynomial& fitted, unsigned k,
                                unsigned n_max) {
    require_window(k, n_max);
    const MonomialIdeal& base = cache.base();
    const std::size_t d = cache.dim();

    TheoremReport report;
    report.instance = base.to_string();
    report.check = "e2-identity";
    report.k = k;
    report.hypotheses.push_back(status_of("d >= 2", d >= 2));
    report.hypotheses.push_back(parameter_hypothesis(base));
    add_hi_hypotheses(report, hi_reports(cache, k, n_max), true);

    const auto lengths = graded_quotient_lengths(cache, n_max - 1);
    const std::int64_t e1 = coefficient(fitted, 1);
    const std::int64_t e2 = coefficient(fitted, 2);
    std::int64_t rhs = static_cast<std::int64_t>(k - 2) * e1;
    for (unsigned i = 0; i + 3 <= k; ++i) {
        rhs -= static_cast<std::int64_t>(k - 2 - i) * lengths[i];
    }
    const bool identity = e2 == rhs;
    const ReductionReport reduction = reduction_number(cache, std::nullopt, n_max);
    const bool reduction_bounded = *reduction.at_most(k - 1);
    bool holds = !identity || reduction_bounded;
    std::string detail = std::string("identity ") + (identity ? "holds" : "does not hold (premise false)") +
                         ", r_bar <= k-1 is " + (reduction_bounded ? "true" : "false");

    report.facts["e1"] = e1;
    report.facts["e2"] = e2;
    report.facts["identity_rhs"] = rhs;
    report.facts["identity_holds"] = identity;
    report.facts["r_bar_at_most_k_minus_1"] = reduction_bounded;

    if (d == 2) {
        if (reduction.r_bar) {
            std::int64_t sum = 0;
            std::int64_t weighted = 0;
            for (std::size_t i = 0; i < lengths.size(); ++i) {
                sum += lengths[i];
                weighted += static_cast<std::int64_t>(i) * lengths[i];
            }
            const bool sums_ok = sum == e1 && weighted == e2;
            report.facts["sum_lengths"] = sum;
            report.facts["sum_i_lengths"] = weighted;
            report.facts["d2_sum_formulas_hold"] = sums_ok;
            holds = holds && sums_ok;
            detail += std::string("; d = 2 sum formulas ") + (sums_ok ? "hold" : "fail");
        } else {
            report.notes.push_back("d = 2 sum formulas not evaluated: r_bar not certified in the window");
        }
    }
    report.conclusion = {"identity implies r_bar <= k-1", holds, detail};
    report.notes.push_back(window_note(n_max));
    return report;
}

TheoremReport containment_consequence_check(ClosureCache& cache, const BinomialPolynomial& fitted,
                                            unsigned k, unsigned n_max) {
    const std::size_t d = cache.dim();
    if (k < 1 || k > d) {
        throw std::invalid_argument("containment consequence needs 1 <= k <= d");
    }
    const MonomialIdeal& base = cache.base();

    TheoremReport report;
    report.instance = base.to_string();
    report.check = "containment-consequence";
    report.k = k;
    report.hypotheses.push_back(parameter_hypothesis(base));
    report.hypotheses.push_back(status_of("d >= 2", d >= 2));
    if (k <= 3 || d <= 3) {
        report.hypotheses.push_back(status_of("local-cohomology vanishing", true,
                                              "vacuous: empty index range for this k and d"));
    } else {
        report.hypotheses.push_back(status_of("local-cohomology vanishing", std::nullopt,
                                              "not computable here"));
    }

    const std::int64_t ek = coefficient(fitted, k);
    report.facts["e_k"] = ek;
    bool holds = ek >= 0;
    std::string detail = "e_" + std::to_string(k) + " = " + std::to_string(ek);
    if (ek < 0) {
        report.notes.push_back("negative e_k: noteworthy counter-instance to the instance's hypotheses");
    }
    if (ek == 0) {
        std::optional<unsigned> failure;
        for (unsigned n = 0; n <= n_max && !failure; ++n) {
            if (!cache.ordinary_power(n).contains(cache.closure(n + k - 1))) {
                failure = n;
            }
        }
        report.facts["containment_holds"] = !failure.has_value();
        if (failure) {
            holds = false;
            detail += "; closure(I^{n+k-1}) not inside I^n at n = " + std::to_string(*failure);
        } else {
            detail += "; closure(I^{n+k-1}) inside I^n for all n <= " + std::to_string(n_max);
        }
    }
    report.conclusion = {"e_k >= 0 and (e_k = 0 implies containment)", holds, detail};
    report.notes.push_back(window_note(n_max));
    return report;
}

TheoremReport vanishing_equivalence_check(const EquivalenceInput& input, unsigned k) {
    if (k >= input.e.size()) {
        throw std::invalid_argument("no coefficient e_" + std::to_string(k) + " for dimension " +
                                    std::to_string(input.dim));
    }
    if (!input.r_bar_at_most_k_minus_1) {
        throw std::invalid_argument("reduction-number bound undetermined for this window");
    }
    TheoremReport report;
    report.instance = input.instance;
    report.check = "vanishing-equivalence";
    report.k = k;
    report.type_input = input.type;

    report.hypotheses.push_back(status_of("d >= 3", input.dim >= 3,
                                          input.dim >= 3 ? "" : "outside theorem scope"));
    report.hypotheses.push_back(status_of("2 <= k <= d", k >= 2 && k <= input.dim));
    report.hypotheses.push_back(status_of("parameter ideal", input.parameter_ideal));
    report.hypotheses.push_back(status_of("closure(I) = m", input.closure_is_maximal));
    if (k >= 3) {
        if (input.hi_reports) {
            for (const auto& hi : *input.hi_reports) {
                report.hypotheses.push_back(status_of(
                    "HI_" + std::to_string(hi.r) +
                        " (consequence-level proxy for the local-cohomology condition)",
                    hi.passed, describe_hi(hi)));
            }
        } else {
            report.hypotheses.push_back(status_of(
                "HI_p for p <= k-2 (consequence-level proxy for the local-cohomology condition)",
                std::nullopt));
        }
    }
    std::optional<bool> type_ok;
    if (input.graded_length_k_minus_1) {
        type_ok = *input.graded_length_k_minus_1 >= input.type;
        report.facts["graded_length_k_minus_1"] = *input.graded_length_k_minus_1;
    }
    report.hypotheses.push_back(status_of("l(closure(I^{k-1}) / I closure(I^{k-2})) >= t(R)", type_ok));

    const std::int64_t ek = input.e[k];
    const bool vanishes = ek == 0;
    const bool bounded = *input.r_bar_at_most_k_minus_1;
    report.facts["e_k"] = ek;
    report.facts["r_bar_at_most_k_minus_1"] = bounded;
    if (input.r_bar) {
        report.facts["r_bar"] = *input.r_bar;
    }
    if (vanishes && input.graded_length_k_minus_1) {
        report.facts["type_bound_holds"] = *input.graded_length_k_minus_1 <= input.type;
    }
    report.conclusion = {"e_k = 0 <=> r_bar <= k-1", vanishes == bounded,
                         "e_" + std::to_string(k) + " = " + std::to_string(ek) + ", r_bar <= k-1 is " +
                             (bounded ? "true" : "false")};
    return report;
}

TheoremReport vanishing_equivalence_check(ClosureCache& cache, const BinomialPolynomial& fitted,
                                          unsigned k, std::int64_t type, unsigned n_max) {
    if (n_max < std::max(k, 2u)) {
        throw std::invalid_argument("window too short: need n_max >= k");
    }
    const MonomialIdeal& base = cache.base();
    EquivalenceInput input;
    input.instance = base.to_string();
    input.dim = cache.dim();
    input.e = fitted.coeffs;
    input.type = type;
    input.parameter_ideal = base.is_parameter_ideal();
    input.closure_is_maximal = equals(cache.closure(1), MonomialIdeal::maximal(cache.dim()));
    input.hi_reports = hi_reports(cache, k, n_max);
    if (k >= 2) {
        input.graded_length_k_minus_1 = graded_quotient_lengths(cache, k - 2).back();
    }
    const ReductionReport reduction = reduction_number(cache, std::nullopt, n_max);
    input.r_bar_at_most_k_minus_1 = reduction.at_most(k - 1);
    if (reduction.r_bar) {
        input.r_bar = *reduction.r_bar;
    }
    TheoremReport report = vanishing_equivalence_check(input, k);
    report.notes.push_back(window_note(n_max));
    return report;
}

std::size_t SuiteSummary::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::ranges::count_if(reports, [&](const TheoremReport& r) { return r.verdict() == v; }));
}

SuiteSummary run_suite(ClosureCache& cache, unsigned k, std::int64_t type, unsigned n_max) {
    if (!is_m_primary(cache.base())) {
        throw NotMPrimary(cache.base().to_string());
    }
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (n_max < std::max(k, 2u)) {
        throw std::invalid_argument("window too short: need --max-n >= k");
    }
    const std::size_t d = cache.dim();
    const BinomialPolynomial fitted = fit(normal_table(cache, n_max + 1));

    SuiteSummary summary;
    if (k >= 2) {
        summary.reports.push_back(hspoly_bound_check(cache, fitted, k, n_max));
        summary.reports.push_back(e1_sum_check(cache, fitted, k, n_max));
        if (d >= 2) {
            summary.reports.push_back(e2_identity_check(cache, fitted, k, n_max));
        } else {
            summary.warnings.push_back("e2 identity skipped: needs d >= 2");
        }
    } else {
        summary.warnings.push_back(
            "k = 1 is outside the scope of the bound, e1-sum and e2 checks; running the rest only");
    }
    if (k <= d) {
        summary.reports.push_back(containment_consequence_check(cache, fitted, k, n_max));
        summary.reports.push_back(vanishing_equivalence_check(cache, fitted, k, type, n_max));
    } else {
        summary.warnings.push_back("k > d: e_k does not exist; containment and vanishing checks skipped");
    }
    return summary;
}

} // namespace normfilt
