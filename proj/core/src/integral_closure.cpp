#include "normfilt/integral_closure.hpp"

#include "normfilt/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace normfilt {

namespace {

Exponent checked_product(Exponent a, Exponent b) {
    Exponent out{};
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("enumeration bound overflows");
    }
    return out;
}

// Row-major layout of a (dims)-dimensional box [0, side)^dims.
struct BoxIndex {
    std::size_t dims = 0;
    std::size_t side = 1;
    std::size_t cells = 1;
    std::vector<std::size_t> strides;

    BoxIndex(std::size_t dims_, std::size_t side_) : dims(dims_), side(side_), strides(dims_) {
        std::size_t stride = 1;
        for (std::size_t k = dims; k-- > 0;) {
            strides[k] = stride;
            if (side != 0 && stride > std::numeric_limits<std::size_t>::max() / side) {
                throw std::overflow_error("enumeration box too large");
            }
            stride *= side;
        }
        cells = stride;
    }
};

} // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal)
    : dim_(ideal.dim()), vertices_(ideal.gens()) {
    if (ideal.is_zero()) {
        throw std::invalid_argument("the zero ideal has no Newton polyhedron");
    }
    min_degree_ = std::numeric_limits<Exponent>::max();
    for (const auto& v : vertices_) {
        min_degree_ = std::min(min_degree_, v.degree());
    }
}

std::optional<std::vector<lp::Rational>> NewtonPolyhedron::certificate(const ExponentVector& a,
                                                                       Exponent n) const {
    if (a.dim() != dim_) {
        throw DimensionMismatch(dim_, a.dim());
    }
    if (n <= 0) {
        throw std::invalid_argument("membership level must be positive");
    }
    const std::size_t g = vertices_.size();
    for (std::size_t i = 0; i < g; ++i) {
        if (vertices_[i].scaled(n).divides(a)) {
            std::vector<lp::Rational> lambda(g, lp::Rational(0));
            lambda[i] = n;
            return lambda;
        }
    }
    // Every point of n*NP(I) has total degree >= n * min_degree.
    if (a.degree() < checked_product(n, min_degree_)) {
        return std::nullopt;
    }

    std::vector<lp::Constraint> rows;
    rows.reserve(dim_ + 1);
    for (std::size_t j = 0; j < dim_; ++j) {
        lp::Constraint c;
        c.coeffs.reserve(g);
        for (const auto& v : vertices_) {
            c.coeffs.emplace_back(static_cast<long>(v[j]));
        }
        c.relation = lp::Relation::LessEqual;
        c.rhs = static_cast<long>(a[j]);
        rows.push_back(std::move(c));
    }
    lp::Constraint total;
    total.coeffs.assign(g, lp::Rational(1));
    total.relation = lp::Relation::Equal;
    total.rhs = static_cast<long>(n);
    rows.push_back(std::move(total));
    return lp::find_feasible_point(rows, g);
}

bool NewtonPolyhedron::contains(const ExponentVector& a, Exponent n) const {
    return certificate(a, n).has_value();
}

bool membership_level(const NewtonPolyhedron& np, const ExponentVector& a, Exponent n) {
    return np.contains(a, n);
}

MonomialIdeal compute_closure_power(const NewtonPolyhedron& np, Exponent n) {
    if (n <= 0) {
        throw std::invalid_argument("closure power must be positive");
    }
    const std::size_t d = np.dim();
    Exponent max_coord = 0;
    for (const auto& v : np.vertices_source()) {
        for (Exponent c : v.coords()) {
            max_coord = std::max(max_coord, c);
        }
    }
    const Exponent bound = checked_product(n, max_coord);
    const BoxIndex box(d - 1, static_cast<std::size_t>(bound) + 1);

    constexpr Exponent kNone = -1;
    std::vector<Exponent> staircase(box.cells, kNone);
    std::vector<Exponent> prefix(d - 1, 0);
    std::vector<ExponentVector> candidates;

    auto point = [&](Exponent last) {
        std::vector<Exponent> c(prefix);
        c.push_back(last);
        return ExponentVector(std::move(c));
    };

    for (std::size_t idx = 0; idx < box.cells; ++idx) {
        if (idx > 0) {
            for (std::size_t k = d - 1; k-- > 0;) {
                if (++prefix[k] <= bound) {
                    break;
                }
                prefix[k] = 0;
            }
        }
        // The member set is an up-set: f(p) <= f(p - e_j).
        Exponent hi = bound;
        bool hi_is_member = false;
        for (std::size_t k = 0; k + 1 < d; ++k) {
            if (prefix[k] == 0) {
                continue;
            }
            const Exponent neighbour = staircase[idx - box.strides[k]];
            if (neighbour != kNone && neighbour <= hi) {
                hi = neighbour;
                hi_is_member = true;
            }
        }
        if (!hi_is_member && !np.contains(point(hi), n)) {
            continue;
        }
        Exponent lo = 0;
        while (lo < hi) {
            const Exponent mid = lo + (hi - lo) / 2;
            if (np.contains(point(mid), n)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        staircase[idx] = hi;
        candidates.push_back(point(hi));
    }
    return MonomialIdeal::minimalize(std::move(candidates), d);
}

ClosureCache::ClosureCache(MonomialIdeal base)
    : base_(std::move(base)), polyhedron_(base_), unit_(MonomialIdeal::unit(base_.dim())) {}

const MonomialIdeal& ClosureCache::closure(unsigned n) {
    if (n == 0) {
        return unit_;
    }
    {
        std::lock_guard lock(mutex_);
        if (auto it = closures_.find(n); it != closures_.end()) {
            return it->second;
        }
    }
    MonomialIdeal computed = compute_closure_power(polyhedron_, static_cast<Exponent>(n));
    std::lock_guard lock(mutex_);
    return closures_.try_emplace(n, std::move(computed)).first->second;
}

const MonomialIdeal& ClosureCache::ordinary_power(unsigned n) {
    if (n == 0) {
        return unit_;
    }
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find(n); it != powers_.end()) {
        return it->second;
    }
    unsigned start = 1;
    MonomialIdeal acc = base_;
    if (auto it = powers_.lower_bound(n); it != powers_.begin()) {
        --it;
        start = it->first;
        acc = it->second;
    }
    for (unsigned m = start + 1; m <= n; ++m) {
        acc = multiply(acc, base_);
        powers_.try_emplace(m, acc);
    }
    return powers_.try_emplace(n, std::move(acc)).first->second;
}

void ClosureCache::populate(unsigned n_max, unsigned workers) {
    if (workers <= 1 || n_max <= 1) {
        for (unsigned n = 1; n <= n_max; ++n) {
            closure(n);
        }
        return;
    }
    std::atomic<unsigned> next{1};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min(workers, n_max); ++w) {
        pool.emplace_back([&] {
            for (unsigned n = next++; n <= n_max; n = next++) {
                closure(n);
            }
        });
    }
}

std::map<unsigned, MonomialIdeal> ClosureCache::snapshot() const {
    std::lock_guard lock(mutex_);
    return closures_;
}

void ClosureCache::seed(unsigned n, MonomialIdeal ideal) {
    if (n == 0) {
        return;
    }
    if (ideal.dim() != dim()) {
        throw DimensionMismatch(dim(), ideal.dim());
    }
    std::lock_guard lock(mutex_);
    closures_.try_emplace(n, std::move(ideal));
}

std::optional<std::string> ClosureCache::check_filtration_laws() {
    const auto cached = snapshot();
    for (const auto& [n, c] : cached) {
        if (!c.contains(ordinary_power(n))) {
            return "closure(" + std::to_string(n) + ") does not contain I^" + std::to_string(n);
        }
        if (auto next = cached.find(n + 1); next != cached.end() && !c.contains(next->second)) {
            return "closure(" + std::to_string(n + 1) + ") is not inside closure(" +
                   std::to_string(n) + ")";
        }
        for (const auto& [m, other] : cached) {
            auto target = cached.find(n + m);
            if (m > n || target == cached.end()) {
                continue;
            }
            if (!target->second.contains(multiply(c, other))) {
                return "closure(" + std::to_string(n) + ")*closure(" + std::to_string(m) +
                       ") is not inside closure(" + std::to_string(n + m) + ")";
            }
        }
    }
    return std::nullopt;
}

const MonomialIdeal& closure_power(ClosureCache& cache, unsigned n) {
    return cache.closure(n);
}

bool oracle_membership(const MonomialIdeal& ideal, const ExponentVector& a, Exponent n,
                       Exponent k_max) {
    if (k_max < 1) {
        throw std::invalid_argument("oracle needs k_max >= 1");
    }
    if (n < 1) {
        throw std::invalid_argument("membership level must be positive");
    }
    const MonomialIdeal step = power(ideal, static_cast<unsigned>(n));
    MonomialIdeal acc = step;
    for (Exponent k = 1; k <= k_max; ++k) {
        if (k > 1) {
            acc = multiply(acc, step);
        }
        if (contains_monomial(acc, a.scaled(k))) {
            return true;
        }
    }
    return false;
}

struct PowerOracle::Level {
    std::vector<ExponentVector> sums;
    Exponent bound = 0;                // every coordinate of every sum is <= bound
    std::optional<BoxIndex> box;       // prefix table layout, when small enough
    std::vector<Exponent> prefix_min;  // min last coordinate over dominated prefixes
};

PowerOracle::PowerOracle(MonomialIdeal ideal) : ideal_(std::move(ideal)) {}

const PowerOracle::Level& PowerOracle::level(unsigned m) {
    constexpr std::size_t kMaxTableCells = std::size_t{1} << 22;
    const std::size_t d = ideal_.dim();
    if (levels_.empty()) {
        auto zero = std::make_shared<Level>();
        zero->sums.push_back(ExponentVector::zero(d));
        levels_.push_back(zero);
    }
    while (levels_.size() <= m) {
        const Level& prev = *levels_.back();
        auto next = std::make_shared<Level>();
        for (const auto& s : prev.sums) {
            for (const auto& g : ideal_.gens()) {
                next->sums.push_back(s + g);
            }
        }
        std::ranges::sort(next->sums);
        next->sums.erase(std::unique(next->sums.begin(), next->sums.end()), next->sums.end());
        for (const auto& s : next->sums) {
            for (Exponent c : s.coords()) {
                next->bound = std::max(next->bound, c);
            }
        }
        const BoxIndex box(d - 1, static_cast<std::size_t>(next->bound) + 1);
        if (box.cells <= kMaxTableCells) {
            constexpr Exponent kInf = std::numeric_limits<Exponent>::max();
            next->prefix_min.assign(box.cells, kInf);
            for (const auto& s : next->sums) {
                std::size_t idx = 0;
                for (std::size_t k = 0; k + 1 < d; ++k) {
                    idx += static_cast<std::size_t>(s[k]) * box.strides[k];
                }
                next->prefix_min[idx] = std::min(next->prefix_min[idx], s[d - 1]);
            }
            for (std::size_t k = 0; k + 1 < d; ++k) {
                for (std::size_t idx = 0; idx < box.cells; ++idx) {
                    if ((idx / box.strides[k]) % box.side != 0) {
                        next->prefix_min[idx] =
                            std::min(next->prefix_min[idx], next->prefix_min[idx - box.strides[k]]);
                    }
                }
            }
            next->box = box;
        }
        levels_.push_back(std::move(next));
    }
    return *levels_[m];
}

bool PowerOracle::power_contains(unsigned m, const ExponentVector& b) {
    if (b.dim() != ideal_.dim()) {
        throw DimensionMismatch(ideal_.dim(), b.dim());
    }
    if (ideal_.is_zero()) {
        return m == 0;
    }
    const Level& lvl = level(m);
    if (!lvl.box) {
        return std::ranges::any_of(lvl.sums, [&](const ExponentVector& s) { return s.divides(b); });
    }
    const std::size_t d = ideal_.dim();
    std::size_t idx = 0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        idx += static_cast<std::size_t>(std::min(b[k], lvl.bound)) * lvl.box->strides[k];
    }
    return lvl.prefix_min[idx] <= b[d - 1];
}

std::optional<Exponent> PowerOracle::witness(const ExponentVector& a, Exponent n, Exponent k_max) {
    if (n < 1 || k_max < 1) {
        throw std::invalid_argument("oracle needs n >= 1 and k_max >= 1");
    }
    for (Exponent k = 1; k <= k_max; ++k) {
        if (power_contains(static_cast<unsigned>(checked_product(k, n)), a.scaled(k))) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<unsigned> rees_gap(ClosureCache& cache, unsigned n_max) {
    for (unsigned h = 0; h <= n_max; ++h) {
        bool ok = true;
        for (unsigned n = 1; n <= n_max && ok; ++n) {
            ok = cache.ordinary_power(n).contains(cache.closure(n + h));
        }
        if (ok) {
            return h;
        }
    }
    return std::nullopt;
}

} // namespace normfilt
