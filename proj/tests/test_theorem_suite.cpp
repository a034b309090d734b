#include "normfilt/errors.hpp"
#include "normfilt/graded_rings.hpp"
#include "normfilt/theorem_suite.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace normfilt;

namespace {

MonomialIdeal ideal(std::size_t dim, std::vector<ExponentVector> gens) {
    return MonomialIdeal::minimalize(std::move(gens), dim);
}

const MonomialIdeal kX2Y2 = MonomialIdeal::minimalize({{2, 0}, {0, 2}}, 2);

template <typename T>
T fact(const TheoremReport& report, const std::string& key) {
    return std::get<T>(report.facts.at(key));
}

} // namespace

TEST(Alpha, FromLengths) {
    const std::vector<Length> lengths{3, 2, 1, 0};
    EXPECT_EQ(alpha_from_lengths(lengths, 2).alphas, (std::vector<std::int64_t>{3}));
    // alpha_1 = 3+2+1, alpha_2 = 2 + 2*1, alpha_3 = 1
    EXPECT_EQ(alpha_from_lengths(lengths, 4).alphas, (std::vector<std::int64_t>{6, 4, 1}));
    EXPECT_THROW(alpha_from_lengths(lengths, 1), std::invalid_argument);
    EXPECT_THROW(alpha_from_lengths(lengths, 6), std::invalid_argument);
}

TEST(Alpha, Examples) {
    ClosureCache c22(kX2Y2);
    EXPECT_EQ(alpha(c22, 2).alphas, (std::vector<std::int64_t>{1}));
    ClosureCache m(MonomialIdeal::maximal(2));
    for (unsigned k = 2; k <= 5; ++k) {
        for (auto a : alpha(m, k).alphas) {
            EXPECT_EQ(a, 0);
        }
    }
}

TEST(Alpha, MatchesDirectSummation) {
    oracle::IdealGenerator gen(oracle::kDefaultSeed + 30);
    for (int trial = 0; trial < 6; ++trial) {
        ClosureCache c(gen.m_primary_ideal(2, 2, 3));
        const auto lengths = graded_quotient_lengths(c, 5);
        for (unsigned k = 2; k <= 6; ++k) {
            const auto a = alpha(c, k);
            ASSERT_EQ(a.alphas.size(), k - 1);
            for (unsigned j = 1; j <= k - 1; ++j) {
                std::int64_t direct = 0;
                for (unsigned i = j - 1; i <= k - 2; ++i) {
                    direct += oracle::falling_binomial(i, j - 1) * lengths[i];
                }
                ASSERT_EQ(a.alphas[j - 1], direct) << "k=" << k << " j=" << j;
            }
        }
    }
}

TEST(BinomialIdentity, HoldsOnTheGrid) {
    for (std::int64_t i = 0; i <= 6; ++i) {
        for (std::int64_t n = 0; n <= 10; ++n) {
            for (std::int64_t d = 1; d <= 5; ++d) {
                const auto [lhs, rhs] = binomial_identity_sides(i, n, d);
                ASSERT_EQ(lhs, rhs) << i << ' ' << n << ' ' << d;
                ASSERT_EQ(lhs, oracle::falling_binomial(n + d - i - 1, d - 1));
            }
        }
    }
}

TEST(Verdict, DerivedFromHypothesesAndConclusion) {
    TheoremReport r;
    r.hypotheses = {{"a", HypothesisStatus::Pass, ""}};
    r.conclusion.holds = true;
    EXPECT_EQ(r.verdict(), Verdict::TheoremConfirmed);
    r.conclusion.holds = false;
    EXPECT_EQ(r.verdict(), Verdict::Contradiction);
    r.hypotheses.push_back({"b", HypothesisStatus::Assumed, ""});
    EXPECT_EQ(r.verdict(), Verdict::Inconclusive);
    r.hypotheses.push_back({"c", HypothesisStatus::Fail, ""});
    EXPECT_EQ(r.verdict(), Verdict::HypothesesUnmet);
    r.conclusion.holds = true;
    EXPECT_EQ(r.verdict(), Verdict::HypothesesUnmet);
    EXPECT_EQ(to_string(Verdict::TheoremConfirmed), "theorem-confirmed");
    EXPECT_EQ(to_string(HypothesisStatus::Assumed), "assumed");
}

TEST(BoundCheck, X2Y2EqualityEverywhere) {
    ClosureCache c(kX2Y2);
    const auto fitted = fit(normal_table(c, 9));
    const auto report = hspoly_bound_check(c, fitted, 2, 8);
    EXPECT_EQ(report.verdict(), Verdict::TheoremConfirmed);
    EXPECT_TRUE(fact<bool>(report, "equality_everywhere"));
    const auto lhs = fact<std::vector<std::int64_t>>(report, "lhs");
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const auto n = static_cast<std::int64_t>(i) + 1; // n_from = 0, value at n+1
        EXPECT_EQ(lhs[i], 2 * n * n + n);
    }
    EXPECT_EQ(lhs, fact<std::vector<std::int64_t>>(report, "rhs"));
    EXPECT_THROW(hspoly_bound_check(c, fitted, 1, 8), std::invalid_argument);
    EXPECT_THROW(hspoly_bound_check(c, fitted, 3, 2), std::invalid_argument);
}

TEST(BoundCheck, NeverContradictedOnRandomIdeals) {
    oracle::IdealGenerator gen(oracle::kDefaultSeed + 31);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        ClosureCache c(gen.m_primary_ideal(dim, 2, 3));
        const unsigned n_max = 6;
        const auto fitted = fit(normal_table(c, n_max + 1));
        for (unsigned k = 2; k <= 3; ++k) {
            const auto report = hspoly_bound_check(c, fitted, k, n_max);
            EXPECT_NE(report.verdict(), Verdict::Contradiction) << c.base().to_string() << " k=" << k;
        }
    }
}

TEST(E1Sum, Examples) {
    ClosureCache c22(kX2Y2);
    const auto f22 = fit(normal_table(c22, 9));
    const auto r22 = e1_sum_check(c22, f22, 2, 8);
    EXPECT_EQ(r22.verdict(), Verdict::TheoremConfirmed);
    EXPECT_EQ(fact<std::int64_t>(r22, "e1"), 1);
    EXPECT_EQ(fact<std::int64_t>(r22, "length_sum"), 1);
    ClosureCache m(MonomialIdeal::maximal(2));
    EXPECT_EQ(e1_sum_check(m, fit(normal_table(m, 9)), 2, 8).verdict(), Verdict::TheoremConfirmed);
    ClosureCache c33(ideal(2, {{3, 0}, {0, 3}}));
    const auto r33 = e1_sum_check(c33, fit(normal_table(c33, 9)), 2, 8);
    EXPECT_EQ(r33.verdict(), Verdict::TheoremConfirmed);
    EXPECT_EQ(fact<std::int64_t>(r33, "e1"), 3);
    EXPECT_EQ(fact<std::int64_t>(r33, "length_sum"), 3);
}

TEST(E2Identity, Examples) {
    ClosureCache c22(kX2Y2);
    const auto report = e2_identity_check(c22, fit(normal_table(c22, 9)), 2, 8);
    EXPECT_EQ(report.verdict(), Verdict::TheoremConfirmed);
    EXPECT_EQ(fact<std::int64_t>(report, "e2"), 0);
    EXPECT_EQ(fact<std::int64_t>(report, "sum_lengths"), 1);
    EXPECT_EQ(fact<std::int64_t>(report, "sum_i_lengths"), 0);
    EXPECT_TRUE(fact<bool>(report, "d2_sum_formulas_hold"));
    ClosureCache m(MonomialIdeal::maximal(2));
    EXPECT_EQ(e2_identity_check(m, fit(normal_table(m, 9)), 2, 8).verdict(), Verdict::TheoremConfirmed);
}

TEST(Containment, Examples) {
    ClosureCache c22(kX2Y2);
    const auto report = containment_consequence_check(c22, fit(normal_table(c22, 7)), 2, 6);
    EXPECT_EQ(report.verdict(), Verdict::TheoremConfirmed);
    EXPECT_TRUE(fact<bool>(report, "containment_holds"));
    // m^{2(n+1)} inside (x^2, y^2)^n, checked independently
    for (unsigned n = 0; n <= 6; ++n) {
        EXPECT_TRUE(power(kX2Y2, n).contains(power(MonomialIdeal::maximal(2), 2 * (n + 1))));
    }
    ClosureCache m(MonomialIdeal::maximal(2));
    EXPECT_EQ(containment_consequence_check(m, fit(normal_table(m, 7)), 1, 6).verdict(),
              Verdict::TheoremConfirmed);
    ClosureCache c33(ideal(2, {{3, 0}, {0, 3}}));
    const auto r33 = containment_consequence_check(c33, fit(normal_table(c33, 7)), 2, 5);
    EXPECT_NE(r33.verdict(), Verdict::Contradiction);
    EXPECT_THROW(containment_consequence_check(c22, fit(normal_table(c22, 7)), 3, 6), std::invalid_argument);
}

TEST(VanishingEquivalence, MaximalIdealInDimensionThree) {
    ClosureCache m(MonomialIdeal::maximal(3));
    const auto fitted = fit(normal_table(m, 9));
    const auto report = vanishing_equivalence_check(m, fitted, 3, 1, 8);
    // ℓ(m^2 / m m) = 0 < t(R) = 1, so one hypothesis fails; the equivalence still holds
    EXPECT_EQ(report.verdict(), Verdict::HypothesesUnmet);
    EXPECT_TRUE(report.conclusion.holds);
    EXPECT_EQ(fact<std::int64_t>(report, "e_k"), 0);
    EXPECT_EQ(fact<std::int64_t>(report, "r_bar"), 0);
}

TEST(VanishingEquivalence, X2Y2Z2HasUnmetHypothesisButEvaluates) {
    ClosureCache c(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    const auto fitted = fit(normal_table(c, 9));
    EXPECT_EQ(fitted.coeffs, (std::vector<std::int64_t>{8, 4, 0, 0}));
    const auto report = vanishing_equivalence_check(c, fitted, 3, 1, 8);
    EXPECT_EQ(report.verdict(), Verdict::HypothesesUnmet); // closure(I) = m^2 != m
    EXPECT_TRUE(report.conclusion.holds);
    EXPECT_EQ(fact<std::int64_t>(report, "r_bar"), 1);
}

TEST(VanishingEquivalence, HypersurfaceSeries) {
    const auto series = diagonal_hypersurface_series(4, 3);
    const auto pr = postulation_and_reduction(series, true);
    ASSERT_TRUE(pr.reduction);
    EquivalenceInput input;
    input.instance = "diagonal hypersurface d=4 n=3";
    input.dim = 4;
    input.e = coefficients_from_series(series);
    input.r_bar = *pr.reduction;
    input.closure_is_maximal = true;
    for (unsigned k = 3; k <= 4; ++k) {
        input.r_bar_at_most_k_minus_1 = *pr.reduction <= static_cast<std::int64_t>(k) - 1;
        const auto report = vanishing_equivalence_check(input, k);
        EXPECT_TRUE(report.conclusion.holds) << "k=" << k;
        EXPECT_EQ(report.verdict(), Verdict::TheoremConfirmed) << "k=" << k;
    }
    // a fabricated r_bar > 2 contradicts e_3 = 0; with assumed hypotheses that is inconclusive
    input.r_bar_at_most_k_minus_1 = false;
    EXPECT_EQ(vanishing_equivalence_check(input, 3).verdict(), Verdict::Inconclusive);
    input.r_bar_at_most_k_minus_1.reset();
    EXPECT_THROW(vanishing_equivalence_check(input, 3), std::invalid_argument);
}

TEST(RunSuite, X2Y2AllConfirmedOrOutOfScope) {
    ClosureCache c(kX2Y2);
    const auto summary = run_suite(c, 2, 1, 8);
    EXPECT_FALSE(summary.has_hard_failure());
    EXPECT_EQ(summary.count(Verdict::TheoremConfirmed), 4u);
    for (const auto& r : summary.reports) {
        if (r.check == "vanishing-equivalence") {
            EXPECT_EQ(r.verdict(), Verdict::HypothesesUnmet); // d = 2 is outside its scope
        } else {
            EXPECT_EQ(r.verdict(), Verdict::TheoremConfirmed) << r.check;
        }
    }
}

TEST(RunSuite, ScopeWarningsAndErrors) {
    ClosureCache m(MonomialIdeal::maximal(2));
    const auto k1 = run_suite(m, 1, 1, 8);
    EXPECT_FALSE(k1.warnings.empty());
    EXPECT_EQ(k1.reports.size(), 2u);
    const auto k2 = run_suite(m, 2, 1, 8);
    EXPECT_EQ(k2.count(Verdict::TheoremConfirmed) + k2.count(Verdict::HypothesesUnmet), k2.reports.size());
    const auto k3 = run_suite(m, 3, 1, 8);
    EXPECT_FALSE(k3.warnings.empty());
    ClosureCache not_primary(ideal(2, {{1, 0}}));
    EXPECT_THROW(run_suite(not_primary, 2, 1, 8), NotMPrimary);
    EXPECT_THROW(run_suite(m, 5, 1, 4), std::invalid_argument);
}

TEST(RunSuite, NoContradictionsOnRandomIdeals) {
    oracle::IdealGenerator gen(oracle::kDefaultSeed + 32);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        ClosureCache c(gen.m_primary_ideal(dim, 2, 3));
        for (unsigned k = 2; k <= dim; ++k) {
            const auto summary = run_suite(c, k, 1, 6);
            EXPECT_FALSE(summary.has_hard_failure()) << c.base().to_string() << " k=" << k;
        }
    }
}

TEST(SignConvention, FittedCoefficientsReproduceTable) {
    ClosureCache c(ideal(2, {{4, 0}, {3, 1}, {0, 4}}));
    const auto table = normal_table(c, 9);
    const auto fitted = fit(table);
    for (unsigned n = 1; n <= 9; ++n) {
        EXPECT_EQ(oracle::binomial_basis_value(fitted.coeffs, n), table.values[n]);
    }
}
