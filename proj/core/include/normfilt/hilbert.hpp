#pragma once

#include "normfilt/integral_closure.hpp"
#include "normfilt/monomial_ideal.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace normfilt {

using Length = std::int64_t;

/// Generalized binomial C(t, k) = t(t-1)...(t-k+1)/k! for any integer t and
/// k >= 0; C(t, k) = 0 for k < 0. Overflow throws.
std::int64_t binomial(std::int64_t t, std::int64_t k);

/// ℓ(R/J): the number of standard monomials of an m-primary monomial ideal.
/// Throws NotMPrimary otherwise. The unit ideal has colength 0.
Length colength(const MonomialIdeal& ideal);

/// H(n) = ℓ(R/closure(I^n)) for n = 0..n_max, with H(0) = 0.
struct HilbertTable {
    std::size_t dim = 0;
    std::optional<MonomialIdeal> base;
    std::vector<Length> values;

    unsigned n_max() const { return static_cast<unsigned>(values.size()) - 1; }
};

HilbertTable normal_table(ClosureCache& cache, unsigned n_max);

/// e_0 C(x+d-1, d) - e_1 C(x+d-2, d-1) + ... + (-1)^d e_d.
///
/// `postulation` is the largest tabulated n where the table and the
/// polynomial disagree; absent when they agree on every tabulated n.
struct BinomialPolynomial {
    std::size_t dim = 0;
    std::vector<std::int64_t> coeffs;
    std::optional<std::int64_t> postulation;

    std::int64_t evaluate(std::int64_t x) const;
};

/// Raised when the last two windows of d+1 values are not explained by one
/// polynomial (or the table is shorter than 2(d+1) values).
class FitError : public std::runtime_error {
public:
    FitError(const std::string& what, std::optional<unsigned> first_disagreement)
        : std::runtime_error(what), first_disagreement_(first_disagreement) {}

    std::optional<unsigned> first_disagreement() const { return first_disagreement_; }

private:
    std::optional<unsigned> first_disagreement_;
};

/// Solves for e_0..e_d from the last d+1 values (exact rational elimination),
/// requires the d+1 values before them to agree, then scans the whole table
/// for the postulation number. A non-integral solution is a logic_error.
BinomialPolynomial fit(const HilbertTable& table);
BinomialPolynomial fit(std::span<const Length> values, std::size_t dim);

/// For a parameter ideal (x_1^{a_1}, ..., x_d^{a_d}), whether e_0 = prod a_i.
/// Absent for ideals that are not parameter ideals.
std::optional<bool> multiplicity_check(const MonomialIdeal& ideal, const BinomialPolynomial& fitted);

} // namespace normfilt
