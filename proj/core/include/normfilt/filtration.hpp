#pragma once

#include "normfilt/hilbert.hpp"
#include "normfilt/integral_closure.hpp"

#include <optional>
#include <vector>

namespace normfilt {

/// Outcome of testing I^n ∩ closure(I^{n+r}) = I^n closure(I^r) for 0 <= n <= n_max.
struct HIReport {
    struct Witness {
        unsigned n = 0;
        ExponentVector monomial; // in the intersection, not in the product
    };

    unsigned r = 1;
    unsigned n_max = 0;
    bool passed = true;
    std::optional<Witness> witness;
};

HIReport hi_check(ClosureCache& cache, unsigned r, unsigned n_max);

/// Normal reduction number of I with respect to J ⊆ I, certified on a window.
///
/// failures holds every 0 <= n <= n_max-1 with J closure(I^n) != closure(I^{n+1}).
/// r_bar is 1 + max(failures) (0 without failures) and is absent when the
/// last window position fails, since then nothing is certified.
struct ReductionReport {
    MonomialIdeal reduction_ideal;
    unsigned n_max = 0;
    std::vector<unsigned> failures;
    std::optional<unsigned> r_bar;

    /// Whether r_bar(I) <= bound is established by the window: no failure at
    /// any n >= bound. A failure at n proves r_bar >= n+1 outright.
    /// Absent if the window ends before `bound` (n_max - 1 < bound).
    std::optional<bool> at_most(unsigned bound) const;
};

/// J defaults to I. Throws std::invalid_argument when J ⊄ I or n_max < 2,
/// and std::logic_error if some J closure(I^n) escapes closure(I^{n+1}).
ReductionReport reduction_number(ClosureCache& cache, const std::optional<MonomialIdeal>& reduction_ideal,
                                 unsigned n_max);

/// ℓ(closure(I^{i+1}) / I closure(I^i)) for i = 0..i_max. Throws NotMPrimary.
std::vector<Length> graded_quotient_lengths(ClosureCache& cache, unsigned i_max);

} // namespace normfilt
