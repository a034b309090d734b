#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace normfilt {

using Exponent = std::int64_t;

/// Exponent of a monomial x^a in d variables. Entries are non-negative.
/// Ordering is lexicographic, which is also the canonical storage order of
/// generator sets.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<Exponent> coords);
    ExponentVector(std::initializer_list<Exponent> coords);

    static ExponentVector zero(std::size_t dim);
    /// x_j^power
    static ExponentVector pure_power(std::size_t dim, std::size_t j, Exponent power);

    std::size_t dim() const { return coords_.size(); }
    Exponent operator[](std::size_t j) const { return coords_[j]; }
    std::span<const Exponent> coords() const { return coords_; }

    Exponent degree() const;
    bool is_zero() const;

    /// Componentwise <=, i.e. x^this divides x^other.
    bool divides(const ExponentVector& other) const;

    /// Index of the only non-zero coordinate, if there is exactly one.
    /// The zero vector is a pure power of every variable and returns nullopt.
    std::optional<std::size_t> pure_power_index() const;

    ExponentVector operator+(const ExponentVector& other) const;
    ExponentVector scaled(Exponent k) const;
    ExponentVector lcm(const ExponentVector& other) const;
    ExponentVector with(std::size_t j, Exponent value) const;

    std::string to_string() const;

    auto operator<=>(const ExponentVector&) const = default;
    bool operator==(const ExponentVector&) const = default;

private:
    std::vector<Exponent> coords_;
};

/// A monomial ideal of k[x_1..x_d] stored by its minimal generators, sorted
/// lexicographically. The zero ideal has no generators; the unit ideal is
/// generated by the zero vector.
class MonomialIdeal {
public:
    /// Ideal generated by `raw_gens`, reduced to a divisibility-minimal set.
    static MonomialIdeal minimalize(std::vector<ExponentVector> raw_gens, std::size_t dim);

    static MonomialIdeal zero(std::size_t dim);
    static MonomialIdeal unit(std::size_t dim);
    /// m = (x_1, ..., x_d)
    static MonomialIdeal maximal(std::size_t dim);
    /// (x_1^{a_1}, ..., x_d^{a_d})
    static MonomialIdeal parameter(std::span<const Exponent> powers);

    std::size_t dim() const { return dim_; }
    const std::vector<ExponentVector>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

    bool contains(const ExponentVector& a) const;
    /// other ⊆ this
    bool contains(const MonomialIdeal& other) const;

    /// For each variable, the smallest a with x_j^a in the ideal (absent when
    /// no pure power of x_j is a generator).
    std::vector<std::optional<Exponent>> pure_power_exponents() const;

    /// Generated by pure powers of distinct variables, one per variable.
    bool is_parameter_ideal() const;

    /// Largest coordinate over all generators; 0 for zero and unit ideals.
    Exponent max_coordinate() const;

    std::string to_string() const;

    bool operator==(const MonomialIdeal& other) const = default;

private:
    MonomialIdeal(std::size_t dim, std::vector<ExponentVector> gens)
        : dim_(dim), gens_(std::move(gens)) {}

    std::size_t dim_ = 1;
    std::vector<ExponentVector> gens_;
};

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& a);
MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
/// I^n, with I^0 the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
/// Same minimal generators. Throws DimensionMismatch across rings.
bool equals(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
/// Every variable has a pure power among the generators. False for the zero ideal.
bool is_m_primary(const MonomialIdeal& ideal);

} // namespace normfilt
