#pragma once

#include "normfilt/hilbert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace normfilt {

/// A simplicial complex on vertices 1..vertex_count given by its facets.
/// Facets are stored sorted and pairwise non-contained; input order is kept
/// (it documents a shelling order where one is known).
class SimplicialComplex {
public:
    /// Throws std::invalid_argument on an empty facet list, vertices out of
    /// range, repeated vertices in a facet, or a facet contained in another.
    SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// Krull dimension of the Stanley-Reisner ring, i.e. largest facet size.
    std::size_t krull_dim() const;

private:
    int vertex_count_;
    std::vector<std::vector<int>> facets_;
};

/// (f_{-1}, f_0, ..., f_{dim}) counted by enumerating every face of every facet.
std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

/// h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}, with d = f.size() - 1.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f);
/// Inverse transform: f_{i-1} = sum_{j=0}^{i} C(d-j, i-j) h_j.
std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h);

/// h-vector of a pure complex. Throws std::invalid_argument naming two facets
/// of different sizes otherwise.
std::vector<std::int64_t> h_vector(const SimplicialComplex& complex);

/// h(t) / (1-t)^dim. Trailing zeros of h are kept for display.
struct HilbertSeries {
    std::size_t dim = 0;
    std::vector<std::int64_t> numerator;

    /// Numerator degree with trailing zeros dropped; absent for a zero numerator.
    std::optional<std::int64_t> numerator_degree() const;
    /// Coefficients of the series up to t^terms-1.
    std::vector<std::int64_t> expand(std::size_t terms) const;
    std::string to_string() const;
};

HilbertSeries series_from_h(std::vector<std::int64_t> h, std::size_t dim);

/// (1 - t^n) / (1-t)^{d+1} = (1 + t + ... + t^{n-1}) / (1-t)^d.
/// Throws for n < 1; see diagonal_hypersurface_scope_note for n > d.
HilbertSeries diagonal_hypersurface_series(std::size_t d, std::int64_t n);
std::optional<std::string> diagonal_hypersurface_scope_note(std::size_t d, std::int64_t n);

/// e_i = sum_{j >= i} C(j, i) h_j for i = 0..dim.
std::vector<std::int64_t> coefficients_from_series(const HilbertSeries& series);

/// ℓ(R/m^n) for n = 0..n_max read off h(t)/(1-t)^{d+1}, ready for fit().
HilbertTable samuel_table(const HilbertSeries& series, unsigned n_max);

struct PostulationReduction {
    std::int64_t postulation = 0;
    /// postulation + dim, only when the associated graded ring is declared
    /// Cohen-Macaulay (the relation is a derivation that depends on it).
    std::optional<std::int64_t> reduction;
};

PostulationReduction postulation_and_reduction(const HilbertSeries& series, bool cohen_macaulay);

} // namespace normfilt
