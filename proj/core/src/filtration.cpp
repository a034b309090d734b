#include "normfilt/filtration.hpp"

#include "normfilt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace normfilt {

HIReport hi_check(ClosureCache& cache, unsigned r, unsigned n_max) {
    if (r < 1) {
        throw std::invalid_argument("HI_r needs r >= 1");
    }
    HIReport report;
    report.r = r;
    report.n_max = n_max;
    const MonomialIdeal& closure_r = cache.closure(r);
    for (unsigned n = 0; n <= n_max; ++n) {
        const MonomialIdeal& power_n = cache.ordinary_power(n);
        const MonomialIdeal lhs = intersect(power_n, cache.closure(n + r));
        const MonomialIdeal rhs = multiply(power_n, closure_r);
        if (equals(lhs, rhs)) {
            continue;
        }
        // rhs ⊆ lhs always, so some generator of lhs escapes rhs; gens are lex-sorted.
        auto it = std::ranges::find_if(lhs.gens(), [&](const ExponentVector& g) { return !rhs.contains(g); });
        if (it == lhs.gens().end()) {
            throw std::logic_error("I^n closure(I^r) is not contained in I^n ∩ closure(I^{n+r})");
        }
        report.passed = false;
        report.witness = HIReport::Witness{n, *it};
        break;
    }
    return report;
}

std::optional<bool> ReductionReport::at_most(unsigned bound) const {
    if (std::ranges::any_of(failures, [&](unsigned n) { return n >= bound; })) {
        return false;
    }
    if (n_max == 0 || n_max - 1 < bound) {
        return std::nullopt;
    }
    return true;
}

ReductionReport reduction_number(ClosureCache& cache, const std::optional<MonomialIdeal>& reduction_ideal,
                                 unsigned n_max) {
    if (n_max < 2) {
        throw std::invalid_argument("reduction number window needs n_max >= 2");
    }
    const MonomialIdeal& base = cache.base();
    MonomialIdeal j = reduction_ideal.value_or(base);
    if (j.dim() != base.dim()) {
        throw DimensionMismatch(base.dim(), j.dim());
    }
    if (!base.contains(j)) {
        throw std::invalid_argument("reduction ideal " + j.to_string() + " is not contained in " +
                                    base.to_string());
    }
    ReductionReport report{j, n_max, {}, std::nullopt};
    for (unsigned n = 0; n < n_max; ++n) {
        const MonomialIdeal product = multiply(j, cache.closure(n));
        const MonomialIdeal& next = cache.closure(n + 1);
        if (!next.contains(product)) {
            throw std::logic_error("J closure(I^" + std::to_string(n) + ") is not inside closure(I^" +
                                   std::to_string(n + 1) + ")");
        }
        if (!equals(product, next)) {
            report.failures.push_back(n);
        }
    }
    if (report.failures.empty()) {
        report.r_bar = 0;
    } else if (report.failures.back() != n_max - 1) {
        report.r_bar = report.failures.back() + 1;
    }
    return report;
}

std::vector<Length> graded_quotient_lengths(ClosureCache& cache, unsigned i_max) {
    if (!is_m_primary(cache.base())) {
        throw NotMPrimary(cache.base().to_string());
    }
    std::vector<Length> out;
    out.reserve(i_max + 1);
    for (unsigned i = 0; i <= i_max; ++i) {
        const MonomialIdeal product = multiply(cache.base(), cache.closure(i));
        // product ⊆ closure(i+1), both m-primary: the quotient length is a colength difference.
        out.push_back(colength(product) - colength(cache.closure(i + 1)));
    }
    return out;
}

} // namespace normfilt
