#include "normfilt/rational_lp.hpp"

#include <stdexcept>

namespace normfilt::lp {

namespace {

struct Tableau {
    std::vector<std::vector<Rational>> rows; // each row: columns..., rhs
    std::vector<std::size_t> basis;          // basic column per row
    std::vector<Rational> reduced;           // phase-I reduced costs per column
    Rational objective;                      // current sum of artificials
    std::size_t columns = 0;

    void pivot(std::size_t r, std::size_t c) {
        auto& pivot_row = rows[r];
        const Rational p = pivot_row[c];
        for (auto& v : pivot_row) {
            v /= p;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) {
                continue;
            }
            const Rational f = rows[i][c];
            for (std::size_t k = 0; k <= columns; ++k) {
                rows[i][k] -= f * pivot_row[k];
            }
        }
        if (sgn(reduced[c]) != 0) {
            const Rational f = reduced[c];
            for (std::size_t k = 0; k < columns; ++k) {
                reduced[k] -= f * pivot_row[k];
            }
            objective += f * pivot_row[columns];
        }
        basis[r] = c;
    }
};

} // namespace

std::optional<std::vector<Rational>> find_feasible_point(const std::vector<Constraint>& constraints,
                                                         std::size_t variable_count) {
    const std::size_t m = constraints.size();
    for (const auto& c : constraints) {
        if (c.coeffs.size() != variable_count) {
            throw std::invalid_argument("constraint width does not match variable count");
        }
    }

    // Column layout: originals, one slack per <= row, one artificial per row needing one.
    std::size_t slack_count = 0;
    for (const auto& c : constraints) {
        slack_count += c.relation == Relation::LessEqual ? 1 : 0;
    }
    std::vector<bool> needs_artificial(m);
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        needs_artificial[i] = !(c.relation == Relation::LessEqual && sgn(c.rhs) >= 0);
        artificial_count += needs_artificial[i] ? 1 : 0;
    }

    Tableau t;
    t.columns = variable_count + slack_count + artificial_count;
    const std::size_t first_artificial = variable_count + slack_count;
    t.rows.assign(m, std::vector<Rational>(t.columns + 1));
    t.basis.assign(m, 0);
    t.reduced.assign(t.columns, Rational(0));

    std::size_t next_slack = variable_count;
    std::size_t next_artificial = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        auto& row = t.rows[i];
        const int sign = sgn(c.rhs) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < variable_count; ++j) {
            row[j] = sign * c.coeffs[j];
        }
        row[t.columns] = sign * c.rhs;
        std::optional<std::size_t> slack;
        if (c.relation == Relation::LessEqual) {
            slack = next_slack++;
            row[*slack] = sign;
        }
        if (needs_artificial[i]) {
            const std::size_t a = next_artificial++;
            row[a] = 1;
            t.basis[i] = a;
            for (std::size_t k = 0; k < first_artificial; ++k) {
                t.reduced[k] -= row[k];
            }
            t.objective += row[t.columns];
        } else {
            t.basis[i] = *slack;
        }
    }

    while (true) {
        // Bland: lowest-index improving column, lowest-index basic variable on ratio ties.
        std::optional<std::size_t> entering;
        for (std::size_t k = 0; k < t.columns; ++k) {
            if (sgn(t.reduced[k]) < 0) {
                entering = k;
                break;
            }
        }
        if (!entering) {
            break;
        }
        std::optional<std::size_t> leaving;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            const Rational& a = t.rows[i][*entering];
            if (sgn(a) <= 0) {
                continue;
            }
            Rational ratio = t.rows[i][t.columns] / a;
            if (!leaving || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[*leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (!leaving) {
            // Phase-I objective is bounded below by zero, so this is unreachable.
            throw std::logic_error("unbounded phase-I simplex");
        }
        t.pivot(*leaving, *entering);
    }

    if (sgn(t.objective) != 0) {
        return std::nullopt;
    }
    std::vector<Rational> point(variable_count, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < variable_count) {
            point[t.basis[i]] = t.rows[i][t.columns];
        }
    }
    return point;
}

} // namespace normfilt::lp
