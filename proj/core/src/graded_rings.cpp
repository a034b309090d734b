#include "normfilt/graded_rings.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace normfilt {

namespace {

std::string facet_string(const std::vector<int>& facet) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < facet.size(); ++i) {
        os << (i ? "," : "") << facet[i];
    }
    os << '}';
    return os.str();
}

} // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets)
    : vertex_count_(vertex_count), facets_(std::move(facets)) {
    if (facets_.empty()) {
        throw std::invalid_argument("empty simplicial complex: no facets");
    }
    for (auto& facet : facets_) {
        std::ranges::sort(facet);
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
            throw std::invalid_argument("repeated vertex in facet " + facet_string(facet));
        }
        for (int v : facet) {
            if (v < 1 || v > vertex_count_) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                            std::to_string(vertex_count_));
            }
        }
    }
    for (std::size_t a = 0; a < facets_.size(); ++a) {
        for (std::size_t b = 0; b < facets_.size(); ++b) {
            if (a != b && std::ranges::includes(facets_[b], facets_[a])) {
                throw std::invalid_argument("facet " + facet_string(facets_[a]) + " is contained in " +
                                            facet_string(facets_[b]));
            }
        }
    }
}

std::size_t SimplicialComplex::krull_dim() const {
    std::size_t d = 0;
    for (const auto& facet : facets_) {
        d = std::max(d, facet.size());
    }
    return d;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
    std::set<std::vector<int>> faces;
    for (const auto& facet : complex.facets()) {
        if (facet.size() >= 63) {
            throw std::invalid_argument("facet too large to enumerate its faces");
        }
        const std::uint64_t subsets = std::uint64_t{1} << facet.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < facet.size(); ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    face.push_back(facet[i]);
                }
            }
            faces.insert(std::move(face));
        }
    }
    std::vector<std::int64_t> f(complex.krull_dim() + 1, 0);
    for (const auto& face : faces) {
        ++f[face.size()];
    }
    return f;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f) {
    if (f.empty()) {
        throw std::invalid_argument("empty f-vector");
    }
    const auto d = static_cast<std::int64_t>(f.size()) - 1;
    std::vector<std::int64_t> h(f.size(), 0);
    for (std::int64_t j = 0; j <= d; ++j) {
        for (std::int64_t i = 0; i <= j; ++i) {
            const std::int64_t term = binomial(d - i, j - i) * f[i];
            h[j] += ((j - i) % 2 == 0) ? term : -term;
        }
    }
    return h;
}

std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h) {
    if (h.empty()) {
        throw std::invalid_argument("empty h-vector");
    }
    const auto d = static_cast<std::int64_t>(h.size()) - 1;
    std::vector<std::int64_t> f(h.size(), 0);
    for (std::int64_t i = 0; i <= d; ++i) {
        for (std::int64_t j = 0; j <= i; ++j) {
            f[i] += binomial(d - j, i - j) * h[j];
        }
    }
    return f;
}

std::vector<std::int64_t> h_vector(const SimplicialComplex& complex) {
    const auto& facets = complex.facets();
    for (const auto& facet : facets) {
        if (facet.size() != facets.front().size()) {
            throw std::invalid_argument("complex is not pure: facets " + facet_string(facets.front()) +
                                        " and " + facet_string(facet) + " have different sizes");
        }
    }
    return h_from_f(f_vector(complex));
}

std::optional<std::int64_t> HilbertSeries::numerator_degree() const {
    for (std::size_t j = numerator.size(); j-- > 0;) {
        if (numerator[j] != 0) {
            return static_cast<std::int64_t>(j);
        }
    }
    return std::nullopt;
}

std::vector<std::int64_t> HilbertSeries::expand(std::size_t terms) const {
    const auto d = static_cast<std::int64_t>(dim);
    std::vector<std::int64_t> out(terms, 0);
    for (std::size_t n = 0; n < terms; ++n) {
        for (std::size_t j = 0; j < numerator.size() && j <= n; ++j) {
            const auto shift = static_cast<std::int64_t>(n - j);
            // coefficient of t^shift in (1-t)^{-d}
            const std::int64_t c = d == 0 ? (shift == 0 ? 1 : 0) : binomial(shift + d - 1, d - 1);
            out[n] += numerator[j] * c;
        }
    }
    return out;
}

std::string HilbertSeries::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (std::size_t j = 0; j < numerator.size(); ++j) {
        const std::int64_t c = numerator[j];
        if (c == 0) {
            continue;
        }
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << '-';
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (j == 0 || mag != 1) {
            os << mag;
        }
        if (j >= 1) {
            os << 't';
        }
        if (j >= 2) {
            os << '^' << j;
        }
        first = false;
    }
    if (first) {
        os << '0';
    }
    os << ")/(1-t)^" << dim;
    return os.str();
}

HilbertSeries series_from_h(std::vector<std::int64_t> h, std::size_t dim) {
    return HilbertSeries{dim, std::move(h)};
}

HilbertSeries diagonal_hypersurface_series(std::size_t d, std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("hypersurface degree must be at least 1");
    }
    return HilbertSeries{d, std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)};
}

std::optional<std::string> diagonal_hypersurface_scope_note(std::size_t d, std::int64_t n) {
    if (n > static_cast<std::int64_t>(d)) {
        return "degree n = " + std::to_string(n) + " exceeds d = " + std::to_string(d) +
               "; the series formula is applied outside the range n <= d";
    }
    return std::nullopt;
}

std::vector<std::int64_t> coefficients_from_series(const HilbertSeries& series) {
    std::vector<std::int64_t> e(series.dim + 1, 0);
    for (std::size_t i = 0; i <= series.dim; ++i) {
        for (std::size_t j = i; j < series.numerator.size(); ++j) {
            e[i] += binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i)) * series.numerator[j];
        }
    }
    return e;
}

HilbertTable samuel_table(const HilbertSeries& series, unsigned n_max) {
    HilbertTable table;
    table.dim = series.dim;
    const auto graded = series.expand(n_max);
    table.values.assign(n_max + 1, 0);
    for (unsigned n = 1; n <= n_max; ++n) {
        table.values[n] = table.values[n - 1] + graded[n - 1];
    }
    return table;
}

PostulationReduction postulation_and_reduction(const HilbertSeries& series, bool cohen_macaulay) {
    const auto degree = series.numerator_degree();
    if (!degree) {
        throw std::invalid_argument("zero Hilbert series numerator");
    }
    PostulationReduction out;
    out.postulation = *degree - static_cast<std::int64_t>(series.dim);
    if (cohen_macaulay) {
        out.reduction = out.postulation + static_cast<std::int64_t>(series.dim);
    }
    return out;
}

} // namespace normfilt
