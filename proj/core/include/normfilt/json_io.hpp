#pragma once

#include "normfilt/filtration.hpp"
#include "normfilt/graded_rings.hpp"
#include "normfilt/hilbert.hpp"
#include "normfilt/monomial_ideal.hpp"
#include "normfilt/theorem_suite.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace normfilt {

using Json = nlohmann::json;

/// Malformed instance data: bad JSON, wrong shape, out-of-range values.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// {"dim": d, "gens": [[...], ...]}; gens are minimalized on load.
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);
MonomialIdeal load_ideal(const std::filesystem::path& path);

/// {"vertices": n, "facets": [[...], ...]}
Json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex load_complex(const std::filesystem::path& path);

/// {"values": [...], "e": [...], "postulation": n | null}
Json to_json(const HilbertTable& table, const BinomialPolynomial& fitted);
Json to_json(const HIReport& report);
Json to_json(const ReductionReport& report);
Json to_json(const TheoremReport& report);
Json to_json(const SuiteSummary& summary);

/// Cache file name for a base ideal: a hash of its canonical JSON.
std::string cache_file_name(const MonomialIdeal& base);

/// Writes {"base": ..., "closures": {"1": ..., ...}} atomically (temp file + rename).
void save_cache(const std::filesystem::path& dir, const MonomialIdeal& base,
                const std::map<unsigned, MonomialIdeal>& closures);

/// Reads the cache file for `base`. Missing, unreadable or corrupt files, a
/// different base, and entries whose generators fall outside the closure
/// all yield an empty map.
std::map<unsigned, MonomialIdeal> load_cache(const std::filesystem::path& dir, const MonomialIdeal& base);

} // namespace normfilt
