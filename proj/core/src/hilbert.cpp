#include "normfilt/hilbert.hpp"

#include "normfilt/errors.hpp"
#include "normfilt/rational_lp.hpp"

#include <algorithm>
#include <limits>

namespace normfilt {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("binomial coefficient overflows int64");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

std::int64_t binomial(std::int64_t t, std::int64_t k) {
    if (k < 0) {
        return 0;
    }
    if (t < 0) {
        // C(t, k) = (-1)^k C(k - t - 1, k)
        const std::int64_t v = binomial(k - t - 1, k);
        return (k % 2 == 0) ? v : -v;
    }
    if (t < k) {
        return 0;
    }
    k = std::min(k, t - k);
    __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * (t - k + i) / i; // exact: acc is C(t-k+i, i) afterwards
        narrow(acc);
    }
    return narrow(acc);
}

Length colength(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) {
        return 0;
    }
    if (!is_m_primary(ideal)) {
        throw NotMPrimary(ideal.to_string());
    }
    const std::size_t d = ideal.dim();
    std::vector<Exponent> sides(d);
    const auto pure = ideal.pure_power_exponents();
    for (std::size_t j = 0; j < d; ++j) {
        sides[j] = *pure[j];
    }

    // For each prefix q of the box, the standard monomials (q, t) are those
    // with t below the smallest last coordinate of a generator dividing q.
    Length total = 0;
    std::vector<Exponent> q(d - 1, 0);
    while (true) {
        Exponent column = sides[d - 1];
        for (const auto& g : ideal.gens()) {
            bool divides_prefix = true;
            for (std::size_t k = 0; k + 1 < d && divides_prefix; ++k) {
                divides_prefix = g[k] <= q[k];
            }
            if (divides_prefix) {
                column = std::min(column, g[d - 1]);
            }
        }
        total += column;

        std::size_t k = d - 1;
        while (k-- > 0) {
            if (++q[k] < sides[k]) {
                break;
            }
            q[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) {
            break;
        }
    }
    return total;
}

HilbertTable normal_table(ClosureCache& cache, unsigned n_max) {
    HilbertTable table;
    table.dim = cache.dim();
    table.base = cache.base();
    table.values.reserve(n_max + 1);
    table.values.push_back(0);
    for (unsigned n = 1; n <= n_max; ++n) {
        table.values.push_back(colength(cache.closure(n)));
    }
    return table;
}

std::int64_t BinomialPolynomial::evaluate(std::int64_t x) const {
    const auto d = static_cast<std::int64_t>(dim);
    __int128 acc = 0;
    for (std::int64_t i = 0; i <= d; ++i) {
        const __int128 term = static_cast<__int128>(coeffs[i]) * binomial(x + d - 1 - i, d - i);
        acc += (i % 2 == 0) ? term : -term;
    }
    return narrow(acc);
}

BinomialPolynomial fit(std::span<const Length> values, std::size_t dim) {
    using lp::Rational;
    const std::size_t unknowns = dim + 1;
    if (values.size() < 2 * unknowns) {
        throw FitError("table too short: need at least " + std::to_string(2 * unknowns) +
                           " values (n = 0.." + std::to_string(2 * unknowns - 1) +
                           "); increase --max-n",
                       std::nullopt);
    }
    const auto d = static_cast<std::int64_t>(dim);
    const std::size_t first = values.size() - unknowns;

    // Rows: sum_i (-1)^i C(n+d-1-i, d-i) e_i = H(n) for the last d+1 values of n.
    std::vector<std::vector<Rational>> m(unknowns, std::vector<Rational>(unknowns + 1));
    for (std::size_t r = 0; r < unknowns; ++r) {
        const auto n = static_cast<std::int64_t>(first + r);
        for (std::int64_t i = 0; i <= d; ++i) {
            const std::int64_t b = binomial(n + d - 1 - i, d - i);
            m[r][i] = static_cast<long>((i % 2 == 0) ? b : -b);
        }
        m[r][unknowns] = static_cast<long>(values[first + r]);
    }
    for (std::size_t col = 0; col < unknowns; ++col) {
        std::size_t pivot = col;
        while (pivot < unknowns && sgn(m[pivot][col]) == 0) {
            ++pivot;
        }
        if (pivot == unknowns) {
            throw std::logic_error("binomial basis evaluation matrix is singular");
        }
        std::swap(m[col], m[pivot]);
        for (std::size_t r = 0; r < unknowns; ++r) {
            if (r == col || sgn(m[r][col]) == 0) {
                continue;
            }
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= unknowns; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }

    BinomialPolynomial poly;
    poly.dim = dim;
    for (std::size_t i = 0; i < unknowns; ++i) {
        Rational e = m[i][unknowns] / m[i][i];
        e.canonicalize();
        if (e.get_den() != 1) {
            throw std::logic_error("non-integral Hilbert coefficient e_" + std::to_string(i) +
                                   " = " + e.get_str());
        }
        if (!e.get_num().fits_slong_p()) {
            throw std::overflow_error("Hilbert coefficient overflows");
        }
        poly.coeffs.push_back(e.get_num().get_si());
    }

    const std::size_t check_from = first - unknowns;
    for (std::size_t n = check_from; n < first; ++n) {
        if (poly.evaluate(static_cast<std::int64_t>(n)) != values[n]) {
            throw FitError("not yet polynomial: value at n = " + std::to_string(n) +
                               " disagrees with the polynomial through the last " +
                               std::to_string(unknowns) + " values; increase --max-n",
                           static_cast<unsigned>(n));
        }
    }
    for (std::size_t n = check_from; n-- > 0;) {
        if (poly.evaluate(static_cast<std::int64_t>(n)) != values[n]) {
            poly.postulation = static_cast<std::int64_t>(n);
            break;
        }
    }
    return poly;
}

BinomialPolynomial fit(const HilbertTable& table) {
    return fit(table.values, table.dim);
}

std::optional<bool> multiplicity_check(const MonomialIdeal& ideal, const BinomialPolynomial& fitted) {
    if (!ideal.is_parameter_ideal()) {
        return std::nullopt;
    }
    std::int64_t product = 1;
    for (const auto& e : ideal.pure_power_exponents()) {
        if (__builtin_mul_overflow(product, *e, &product)) {
            throw std::overflow_error("multiplicity overflows");
        }
    }
    return !fitted.coeffs.empty() && fitted.coeffs.front() == product;
}

} // namespace normfilt
