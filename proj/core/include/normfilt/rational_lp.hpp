#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace normfilt::lp {

using Rational = mpq_class;

enum class Relation { LessEqual, Equal };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/// Decides whether {x >= 0 : every constraint holds} is non-empty, exactly.
///
/// Phase-I simplex on a dense tableau with Bland's rule, so it terminates
/// without any tolerance. Rows with a non-negative right-hand side and a
/// `<=` relation start with their slack in the basis; every other row gets
/// an artificial variable. Returns a feasible point when one exists.
std::optional<std::vector<Rational>> find_feasible_point(const std::vector<Constraint>& constraints,
                                                         std::size_t variable_count);

inline bool is_feasible(const std::vector<Constraint>& constraints, std::size_t variable_count) {
    return find_feasible_point(constraints, variable_count).has_value();
}

} // namespace normfilt::lp
