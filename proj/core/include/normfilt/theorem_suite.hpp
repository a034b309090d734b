#pragma once

#include "normfilt/filtration.hpp"
#include "normfilt/hilbert.hpp"
#include "normfilt/integral_closure.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace normfilt {

/// alpha_j = sum_{i=j-1}^{k-2} C(i, j-1) ℓ(closure(I^{i+1}) / I closure(I^i)), j = 1..k-1.
struct AlphaCoefficients {
    unsigned k = 2;
    std::vector<std::int64_t> alphas; // alphas[j-1] = alpha_j
};

/// Throws std::invalid_argument for k < 2 or too few lengths.
AlphaCoefficients alpha_from_lengths(std::span<const Length> quotient_lengths, unsigned k);
AlphaCoefficients alpha(ClosureCache& cache, unsigned k);

/// Both sides of C(n+d-i-1, d-1) = sum_{j=1}^{i+1} (-1)^{j-1} C(i, j-1) C(n+d-j, d-j).
std::pair<std::int64_t, std::int64_t> binomial_identity_sides(std::int64_t i, std::int64_t n,
                                                              std::int64_t d);

enum class HypothesisStatus { Pass, Fail, Assumed };
enum class Verdict { TheoremConfirmed, HypothesesUnmet, Inconclusive, Contradiction };

std::string to_string(HypothesisStatus status);
std::string to_string(Verdict verdict);

using Fact = std::variant<bool, std::int64_t, std::vector<std::int64_t>, std::string>;

/// One instance-level check of a stated result.
///
/// The verdict is derived: any failed hypothesis gives HypothesesUnmet; with
/// every hypothesis passed or assumed, a conclusion that holds gives
/// TheoremConfirmed; a conclusion that fails is a Contradiction when nothing
/// was assumed (an implementation bug) and Inconclusive otherwise.
struct TheoremReport {
    struct Hypothesis {
        std::string name;
        HypothesisStatus status = HypothesisStatus::Pass;
        std::string detail;
    };
    struct Conclusion {
        std::string name;
        bool holds = false;
        std::string detail;
    };

    std::string instance;
    std::string check;
    unsigned k = 0;
    std::vector<Hypothesis> hypotheses;
    Conclusion conclusion;
    std::optional<std::int64_t> type_input;
    std::map<std::string, Fact> facts;
    std::vector<std::string> notes;

    Verdict verdict() const;
};

/// Inequality ℓ(R/closure(I^{n+1})) <= ℓ(R/I) C(n+d,d) - alpha_1 C(n+d-1,d-1) + ...
/// for k-2 <= n <= n_max, and whether equality everywhere matches r_bar <= k-1.
/// Requires 2 <= k and n_max >= k.
TheoremReport hspoly_bound_check(ClosureCache& cache, const BinomialPolynomial& fitted, unsigned k,
                                 unsigned n_max);

/// e_1 = sum_{j=0}^{k-2} ℓ(closure(I^{j+1}) / I closure(I^j)) iff r_bar <= k-1.
TheoremReport e1_sum_check(ClosureCache& cache, const BinomialPolynomial& fitted, unsigned k,
                           unsigned n_max);

/// e_2 = (k-2) e_1 - sum_{i=0}^{k-3} (k-2-i) ℓ_i implies r_bar <= k-1; in
/// dimension 2 also e_1 = sum ℓ_i and e_2 = sum i ℓ_i.
TheoremReport e2_identity_check(ClosureCache& cache, const BinomialPolynomial& fitted, unsigned k,
                                unsigned n_max);

/// e_k >= 0, and e_k = 0 implies closure(I^{n+k-1}) ⊆ I^n for 0 <= n <= n_max.
TheoremReport containment_consequence_check(ClosureCache& cache, const BinomialPolynomial& fitted,
                                            unsigned k, unsigned n_max);

/// Inputs of the e_k = 0 <=> r_bar <= k-1 equivalence. Absent optionals are
/// reported as assumed rather than checked.
struct EquivalenceInput {
    std::string instance;
    std::size_t dim = 0;
    std::vector<std::int64_t> e;
    std::optional<bool> r_bar_at_most_k_minus_1;
    std::optional<std::int64_t> r_bar;
    std::optional<bool> parameter_ideal;
    std::optional<bool> closure_is_maximal;
    /// Outcome of HI_p for p = 1..k-2, in order; absent when not computed.
    std::optional<std::vector<HIReport>> hi_reports;
    std::optional<Length> graded_length_k_minus_1; // ℓ(closure(I^{k-1}) / I closure(I^{k-2}))
    std::int64_t type = 1;
};

TheoremReport vanishing_equivalence_check(const EquivalenceInput& input, unsigned k);
TheoremReport vanishing_equivalence_check(ClosureCache& cache, const BinomialPolynomial& fitted,
                                          unsigned k, std::int64_t type, unsigned n_max);

struct SuiteSummary {
    std::vector<TheoremReport> reports;
    std::vector<std::string> warnings;

    std::size_t count(Verdict v) const;
    bool has_hard_failure() const { return count(Verdict::Contradiction) > 0; }
};

/// Every check above for one monomial ideal and one k. The ideal must be
/// m-primary; the table is fitted on 0..n_max+1.
SuiteSummary run_suite(ClosureCache& cache, unsigned k, std::int64_t type, unsigned n_max);

} // namespace normfilt
