#pragma once

#include "normfilt/monomial_ideal.hpp"
#include "normfilt/rational_lp.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace normfilt {

/// Newton polyhedron of a non-zero monomial ideal: conv(generators) + R^d_{>=0}.
///
/// For monomial ideals x^a lies in the integral closure of I^n exactly when a
/// lies in n*NP(I), i.e. when some lambda >= 0 with sum(lambda) = n satisfies
/// sum(lambda_i * v_i) <= a componentwise. Membership is decided by an exact
/// rational feasibility test over those lambda; facets are never computed.
class NewtonPolyhedron {
public:
    explicit NewtonPolyhedron(const MonomialIdeal& ideal);

    std::size_t dim() const { return dim_; }
    const std::vector<ExponentVector>& vertices_source() const { return vertices_; }

    /// a in n * NP(I). Throws DimensionMismatch, or std::invalid_argument for n <= 0.
    bool contains(const ExponentVector& a, Exponent n) const;

    /// A lambda certificate for a in n * NP(I), when there is one.
    std::optional<std::vector<lp::Rational>> certificate(const ExponentVector& a, Exponent n) const;

private:
    std::size_t dim_;
    std::vector<ExponentVector> vertices_;
    Exponent min_degree_ = 0;
};

bool membership_level(const NewtonPolyhedron& np, const ExponentVector& a, Exponent n);

/// Minimal generators of the integral closure of I^n for n >= 1.
///
/// Minimal generators have every coordinate <= n*M (M the largest generator
/// coordinate of I): if a_j > n*M then every point sum(lambda_i v_i) with
/// sum(lambda) = n has j-th coordinate <= n*M <= a_j - 1, so a - e_j is still
/// in n*NP(I) and a is not minimal. Within that box the member set is an
/// up-set, so for every prefix (a_1..a_{d-1}) the smallest admissible a_d is
/// found by bisection and the resulting staircase points are minimalized.
MonomialIdeal compute_closure_power(const NewtonPolyhedron& np, Exponent n);

/// The normal filtration {closure(I^n)} of a fixed base ideal, memoized.
///
/// Stored ideals are never modified or erased, so references returned by
/// closure() stay valid for the lifetime of the cache. Insertion is guarded
/// by a mutex; two threads asking for the same n may both compute it, and the
/// first insert wins.
class ClosureCache {
public:
    /// Throws std::invalid_argument for the zero ideal.
    explicit ClosureCache(MonomialIdeal base);

    const MonomialIdeal& base() const { return base_; }
    std::size_t dim() const { return base_.dim(); }
    const NewtonPolyhedron& polyhedron() const { return polyhedron_; }

    /// closure(I^n); n = 0 gives the unit ideal.
    const MonomialIdeal& closure(unsigned n);
    /// I^n, memoized alongside the closures.
    const MonomialIdeal& ordinary_power(unsigned n);

    /// Computes every closure up to n_max, `workers` at a time.
    void populate(unsigned n_max, unsigned workers = 1);

    /// Cached n >= 1 (for persistence).
    std::map<unsigned, MonomialIdeal> snapshot() const;
    /// Seeds a closure computed elsewhere (e.g. loaded from disk). Ignored if present.
    void seed(unsigned n, MonomialIdeal ideal);

    /// Checks closures[n] ⊇ I^n, closures[n+1] ⊆ closures[n] and
    /// closures[a]*closures[b] ⊆ closures[a+b] on every cached n. Returns a
    /// description of the first violation.
    std::optional<std::string> check_filtration_laws();

private:
    MonomialIdeal base_;
    NewtonPolyhedron polyhedron_;
    MonomialIdeal unit_;
    mutable std::mutex mutex_;
    std::map<unsigned, MonomialIdeal> closures_;
    std::map<unsigned, MonomialIdeal> powers_;
};

const MonomialIdeal& closure_power(ClosureCache& cache, unsigned n);

/// One-sided power test: x^{ka} in I^{kn} for some 1 <= k <= k_max.
/// True is conclusive; false only says no witness up to k_max.
bool oracle_membership(const MonomialIdeal& ideal, const ExponentVector& a, Exponent n,
                       Exponent k_max);

/// Batch form of oracle_membership for one ideal. Keeps, per m, the set of
/// all exponent sums of m generators (a generating set of I^m, not
/// minimalized) together with a prefix-minimum table over the first d-1
/// coordinates, so each query is a table lookup.
class PowerOracle {
public:
    explicit PowerOracle(MonomialIdeal ideal);

    /// x^b in I^m
    bool power_contains(unsigned m, const ExponentVector& b);
    /// Smallest k <= k_max with x^{ka} in I^{kn}, if any.
    std::optional<Exponent> witness(const ExponentVector& a, Exponent n, Exponent k_max);

private:
    struct Level;
    const Level& level(unsigned m);

    MonomialIdeal ideal_;
    std::vector<std::shared_ptr<Level>> levels_;
};

/// Smallest h <= n_max with closure(I^{n+h}) ⊆ I^n for every 1 <= n <= n_max.
std::optional<unsigned> rees_gap(ClosureCache& cache, unsigned n_max);

} // namespace normfilt
