#include "normfilt/monomial_ideal.hpp"

#include "normfilt/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace normfilt {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
    Exponent out{};
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("exponent overflow in monomial arithmetic");
    }
    return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
    Exponent out{};
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("exponent overflow in monomial arithmetic");
    }
    return out;
}

void require_same_dim(std::size_t expected, std::size_t actual) {
    if (expected != actual) {
        throw DimensionMismatch(expected, actual);
    }
}

} // namespace

ExponentVector::ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("exponent vector needs at least one coordinate");
    }
    for (Exponent c : coords_) {
        if (c < 0) {
            throw std::invalid_argument("negative exponent in " + to_string());
        }
    }
}

ExponentVector::ExponentVector(std::initializer_list<Exponent> coords)
    : ExponentVector(std::vector<Exponent>(coords)) {}

ExponentVector ExponentVector::zero(std::size_t dim) {
    return ExponentVector(std::vector<Exponent>(dim, 0));
}

ExponentVector ExponentVector::pure_power(std::size_t dim, std::size_t j, Exponent power) {
    std::vector<Exponent> c(dim, 0);
    c.at(j) = power;
    return ExponentVector(std::move(c));
}

Exponent ExponentVector::degree() const {
    Exponent total = 0;
    for (Exponent c : coords_) {
        total = checked_add(total, c);
    }
    return total;
}

bool ExponentVector::is_zero() const {
    return std::ranges::all_of(coords_, [](Exponent c) { return c == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
    require_same_dim(dim(), other.dim());
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] > other.coords_[j]) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> ExponentVector::pure_power_index() const {
    std::optional<std::size_t> index;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] != 0) {
            if (index) {
                return std::nullopt;
            }
            index = j;
        }
    }
    return index;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    require_same_dim(dim(), other.dim());
    std::vector<Exponent> out(coords_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked_add(coords_[j], other.coords_[j]);
    }
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::scaled(Exponent k) const {
    if (k < 0) {
        throw std::invalid_argument("negative scale factor");
    }
    std::vector<Exponent> out(coords_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = checked_mul(coords_[j], k);
    }
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
    require_same_dim(dim(), other.dim());
    std::vector<Exponent> out(coords_.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = std::max(coords_[j], other.coords_[j]);
    }
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::with(std::size_t j, Exponent value) const {
    std::vector<Exponent> out = coords_;
    out.at(j) = value;
    return ExponentVector(std::move(out));
}

std::string ExponentVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        os << (j ? "," : "") << coords_[j];
    }
    os << ')';
    return os.str();
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<ExponentVector> raw_gens, std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("monomial ideal needs at least one variable");
    }
    for (const auto& g : raw_gens) {
        require_same_dim(dim, g.dim());
    }
    std::ranges::sort(raw_gens);
    raw_gens.erase(std::unique(raw_gens.begin(), raw_gens.end()), raw_gens.end());

    // A generator can only be divided by one of strictly smaller degree, so a
    // degree-ordered sweep only has to test against already accepted ones.
    std::vector<std::pair<Exponent, const ExponentVector*>> by_degree;
    by_degree.reserve(raw_gens.size());
    for (const auto& g : raw_gens) {
        by_degree.emplace_back(g.degree(), &g);
    }
    std::ranges::stable_sort(by_degree, {}, &std::pair<Exponent, const ExponentVector*>::first);

    std::vector<ExponentVector> kept;
    for (const auto& [deg, g] : by_degree) {
        const bool dominated = std::ranges::any_of(kept, [&](const ExponentVector& k) {
            return k.divides(*g);
        });
        if (!dominated) {
            kept.push_back(*g);
        }
    }
    std::ranges::sort(kept);
    return MonomialIdeal(dim, std::move(kept));
}

MonomialIdeal MonomialIdeal::zero(std::size_t dim) {
    return minimalize({}, dim);
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
    return minimalize({ExponentVector::zero(dim)}, dim);
}

MonomialIdeal MonomialIdeal::maximal(std::size_t dim) {
    std::vector<ExponentVector> gens;
    for (std::size_t j = 0; j < dim; ++j) {
        gens.push_back(ExponentVector::pure_power(dim, j, 1));
    }
    return minimalize(std::move(gens), dim);
}

MonomialIdeal MonomialIdeal::parameter(std::span<const Exponent> powers) {
    std::vector<ExponentVector> gens;
    for (std::size_t j = 0; j < powers.size(); ++j) {
        if (powers[j] < 1) {
            throw std::invalid_argument("parameter ideal needs positive exponents");
        }
        gens.push_back(ExponentVector::pure_power(powers.size(), j, powers[j]));
    }
    return minimalize(std::move(gens), powers.size());
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
    require_same_dim(dim_, a.dim());
    return std::ranges::any_of(gens_, [&](const ExponentVector& g) { return g.divides(a); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    require_same_dim(dim_, other.dim_);
    return std::ranges::all_of(other.gens_, [&](const ExponentVector& g) { return contains(g); });
}

std::vector<std::optional<Exponent>> MonomialIdeal::pure_power_exponents() const {
    std::vector<std::optional<Exponent>> out(dim_);
    for (const auto& g : gens_) {
        if (g.is_zero()) {
            std::ranges::fill(out, Exponent{0});
            return out;
        }
        if (auto j = g.pure_power_index()) {
            // Minimality leaves at most one pure power per variable.
            out[*j] = g[*j];
        }
    }
    return out;
}

bool MonomialIdeal::is_parameter_ideal() const {
    if (gens_.size() != dim_) {
        return false;
    }
    std::vector<bool> seen(dim_, false);
    for (const auto& g : gens_) {
        auto j = g.pure_power_index();
        if (!j || seen[*j]) {
            return false;
        }
        seen[*j] = true;
    }
    return true;
}

Exponent MonomialIdeal::max_coordinate() const {
    Exponent m = 0;
    for (const auto& g : gens_) {
        for (Exponent c : g.coords()) {
            m = std::max(m, c);
        }
    }
    return m;
}

std::string MonomialIdeal::to_string() const {
    if (is_zero()) {
        return "(0)";
    }
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        os << (i ? ", " : "") << gens_[i].to_string();
    }
    os << ']';
    return os.str();
}

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& a) {
    return ideal.contains(a);
}

MonomialIdeal sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_dim(lhs.dim(), rhs.dim());
    std::vector<ExponentVector> gens = lhs.gens();
    gens.insert(gens.end(), rhs.gens().begin(), rhs.gens().end());
    return MonomialIdeal::minimalize(std::move(gens), lhs.dim());
}

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_dim(lhs.dim(), rhs.dim());
    std::vector<ExponentVector> gens;
    gens.reserve(lhs.gens().size() * rhs.gens().size());
    for (const auto& a : lhs.gens()) {
        for (const auto& b : rhs.gens()) {
            gens.push_back(a + b);
        }
    }
    return MonomialIdeal::minimalize(std::move(gens), lhs.dim());
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
    MonomialIdeal out = MonomialIdeal::unit(ideal.dim());
    for (unsigned i = 0; i < n; ++i) {
        out = multiply(out, ideal);
    }
    return out;
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_dim(lhs.dim(), rhs.dim());
    std::vector<ExponentVector> gens;
    gens.reserve(lhs.gens().size() * rhs.gens().size());
    for (const auto& a : lhs.gens()) {
        for (const auto& b : rhs.gens()) {
            gens.push_back(a.lcm(b));
        }
    }
    return MonomialIdeal::minimalize(std::move(gens), lhs.dim());
}

bool equals(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_dim(lhs.dim(), rhs.dim());
    return lhs.gens() == rhs.gens();
}

bool is_m_primary(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        return false;
    }
    return std::ranges::all_of(ideal.pure_power_exponents(),
                               [](const auto& e) { return e.has_value(); });
}

} // namespace normfilt
