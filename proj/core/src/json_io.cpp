#include "normfilt/json_io.hpp"

#include "normfilt/integral_closure.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace normfilt {

namespace {

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": malformed JSON: " + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::int64_t integer(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        throw InputError(what + " must be an integer");
    }
    return j.get<std::int64_t>();
}

Json optional_json(const std::optional<std::int64_t>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json fact_json(const Fact& fact) {
    return std::visit([](const auto& v) { return Json(v); }, fact);
}

// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

Json to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.gens()) {
        gens.push_back(std::vector<Exponent>(g.coords().begin(), g.coords().end()));
    }
    return Json{{"dim", ideal.dim()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
    const std::int64_t dim = integer(field(j, "dim"), "dim");
    if (dim < 1) {
        throw InputError("dim must be positive");
    }
    const Json& gens = field(j, "gens");
    if (!gens.is_array()) {
        throw InputError("gens must be an array");
    }
    std::vector<ExponentVector> raw;
    for (const Json& g : gens) {
        if (!g.is_array() || static_cast<std::int64_t>(g.size()) != dim) {
            throw InputError("every generator must be an array of " + std::to_string(dim) + " exponents");
        }
        std::vector<Exponent> coords;
        for (const Json& e : g) {
            const std::int64_t v = integer(e, "exponent");
            if (v < 0) {
                throw InputError("exponents must be non-negative");
            }
            coords.push_back(v);
        }
        raw.emplace_back(std::move(coords));
    }
    return MonomialIdeal::minimalize(std::move(raw), static_cast<std::size_t>(dim));
}

MonomialIdeal load_ideal(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    try {
        return ideal_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json to_json(const SimplicialComplex& complex) {
    return Json{{"vertices", complex.vertex_count()}, {"facets", complex.facets()}};
}

SimplicialComplex complex_from_json(const Json& j) {
    const std::int64_t vertices = integer(field(j, "vertices"), "vertices");
    const Json& facets = field(j, "facets");
    if (!facets.is_array()) {
        throw InputError("facets must be an array");
    }
    std::vector<std::vector<int>> out;
    for (const Json& f : facets) {
        if (!f.is_array() || f.empty()) {
            throw InputError("every facet must be a non-empty array of vertices");
        }
        std::vector<int> facet;
        for (const Json& v : f) {
            facet.push_back(static_cast<int>(integer(v, "vertex")));
        }
        out.push_back(std::move(facet));
    }
    try {
        return SimplicialComplex(static_cast<int>(vertices), std::move(out));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
    const Json j = read_json_file(path);
    try {
        return complex_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json to_json(const HilbertTable& table, const BinomialPolynomial& fitted) {
    return Json{{"values", table.values}, {"e", fitted.coeffs}, {"postulation", optional_json(fitted.postulation)}};
}

Json to_json(const HIReport& report) {
    Json witness = nullptr;
    if (report.witness) {
        const auto& m = report.witness->monomial;
        witness = Json{{"n", report.witness->n},
                       {"monomial", std::vector<Exponent>(m.coords().begin(), m.coords().end())}};
    }
    return Json{{"r", report.r}, {"n_max", report.n_max}, {"passed", report.passed}, {"witness", witness}};
}

Json to_json(const ReductionReport& report) {
    return Json{{"reduction_ideal", to_json(report.reduction_ideal)},
                {"n_max", report.n_max},
                {"failures", report.failures},
                {"r_bar", report.r_bar ? Json(*report.r_bar) : Json(nullptr)}};
}

Json to_json(const TheoremReport& report) {
    Json hypotheses = Json::array();
    for (const auto& h : report.hypotheses) {
        hypotheses.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
    }
    Json facts = Json::object();
    for (const auto& [key, value] : report.facts) {
        facts[key] = fact_json(value);
    }
    return Json{{"instance", report.instance},
                {"check", report.check},
                {"k", report.k},
                {"verdict", to_string(report.verdict())},
                {"hypotheses", hypotheses},
                {"conclusion",
                 {{"name", report.conclusion.name},
                  {"holds", report.conclusion.holds},
                  {"detail", report.conclusion.detail}}},
                {"type", optional_json(report.type_input)},
                {"facts", facts},
                {"notes", report.notes}};
}

Json to_json(const SuiteSummary& summary) {
    Json reports = Json::array();
    for (const auto& r : summary.reports) {
        reports.push_back(to_json(r));
    }
    Json counts = Json::object();
    for (Verdict v : {Verdict::TheoremConfirmed, Verdict::HypothesesUnmet, Verdict::Inconclusive,
                      Verdict::Contradiction}) {
        counts[to_string(v)] = summary.count(v);
    }
    return Json{{"reports", reports},
                {"warnings", summary.warnings},
                {"counts", counts},
                {"passed", !summary.has_hard_failure()}};
}

std::string cache_file_name(const MonomialIdeal& base) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json(base).dump())));
    return std::string("closure-") + buf + ".json";
}

void save_cache(const std::filesystem::path& dir, const MonomialIdeal& base,
                const std::map<unsigned, MonomialIdeal>& closures) {
    Json entries = Json::object();
    for (const auto& [n, ideal] : closures) {
        entries[std::to_string(n)] = to_json(ideal);
    }
    const Json doc{{"base", to_json(base)}, {"closures", entries}};
    std::filesystem::create_directories(dir);
    const auto target = dir / cache_file_name(base);
    auto temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp);
        if (!out) {
            throw std::runtime_error("cannot write " + temp.string());
        }
        out << doc.dump() << '\n';
    }
    std::filesystem::rename(temp, target);
}

std::map<unsigned, MonomialIdeal> load_cache(const std::filesystem::path& dir, const MonomialIdeal& base) {
    std::map<unsigned, MonomialIdeal> out;
    const auto path = dir / cache_file_name(base);
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        return out;
    }
    try {
        const Json doc = read_json_file(path);
        if (!(ideal_from_json(field(doc, "base")) == base)) {
            return {};
        }
        const NewtonPolyhedron np(base);
        for (const auto& [key, value] : field(doc, "closures").items()) {
            const unsigned long n = std::stoul(key);
            MonomialIdeal ideal = ideal_from_json(value);
            if (n == 0 || ideal.dim() != base.dim()) {
                return {};
            }
            for (const auto& g : ideal.gens()) {
                if (!np.contains(g, static_cast<Exponent>(n))) {
                    return {};
                }
            }
            out.emplace(static_cast<unsigned>(n), std::move(ideal));
        }
    } catch (const std::exception&) {
        return {};
    }
    return out;
}

} // namespace normfilt
