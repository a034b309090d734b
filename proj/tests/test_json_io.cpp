#include "normfilt/json_io.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace normfilt;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("normfilt_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write(const std::filesystem::path& path, const std::string& text) {
    std::ofstream(path) << text;
}

} // namespace

TEST(IdealJson, MinimalizesAndRoundTrips) {
    const auto I = ideal_from_json(Json::parse(R"({"dim": 2, "gens": [[2,1],[0,2],[2,0]]})"));
    EXPECT_EQ(I, MonomialIdeal::minimalize({{0, 2}, {2, 0}}, 2));
    const std::string text = to_json(I).dump();
    EXPECT_EQ(text, R"({"dim":2,"gens":[[0,2],[2,0]]})");
    EXPECT_EQ(to_json(ideal_from_json(Json::parse(text))).dump(), text);
    EXPECT_TRUE(ideal_from_json(Json::parse(R"({"dim": 3, "gens": []})")).is_zero());
}

TEST(IdealJson, MalformedInputs) {
    for (const char* bad : {R"({"gens": [[1]]})", R"({"dim": 0, "gens": []})", R"({"dim": 2, "gens": [[1]]})",
                            R"({"dim": 2, "gens": [[1, -1]]})", R"({"dim": 2, "gens": [[1, 0.5]]})",
                            R"({"dim": 2, "gens": 3})", R"([1, 2])"}) {
        EXPECT_THROW(ideal_from_json(Json::parse(bad)), InputError) << bad;
    }
    const auto dir = scratch_dir("malformed");
    write(dir / "broken.json", "{\"dim\": 2, ");
    EXPECT_THROW(load_ideal(dir / "broken.json"), InputError);
    EXPECT_THROW(load_ideal(dir / "missing.json"), InputError);
}

TEST(ComplexJson, LoadAndErrors) {
    const auto c = complex_from_json(Json::parse(R"({"vertices": 3, "facets": [[1,2],[2,3]]})"));
    EXPECT_EQ(c.facets().size(), 2u);
    EXPECT_EQ(to_json(c).dump(), R"({"facets":[[1,2],[2,3]],"vertices":3})");
    EXPECT_THROW(complex_from_json(Json::parse(R"({"vertices": 3, "facets": [[1,5]]})")), InputError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"vertices": 3, "facets": [[]]})")), InputError);
    EXPECT_THROW(complex_from_json(Json::parse(R"({"vertices": 3})")), InputError);
}

TEST(ReportJson, Shapes) {
    HIReport hi;
    hi.r = 1;
    hi.n_max = 3;
    hi.passed = false;
    hi.witness = HIReport::Witness{1, ExponentVector{2, 2, 2}};
    EXPECT_EQ(to_json(hi).dump(), R"({"n_max":3,"passed":false,"r":1,"witness":{"monomial":[2,2,2],"n":1}})");
    hi.witness.reset();
    hi.passed = true;
    EXPECT_TRUE(to_json(hi)["witness"].is_null());

    HilbertTable table{2, std::nullopt, {0, 3, 10}};
    BinomialPolynomial fitted{2, {4, 1, 0}, std::nullopt};
    EXPECT_EQ(to_json(table, fitted).dump(), R"({"e":[4,1,0],"postulation":null,"values":[0,3,10]})");
    fitted.postulation = 0;
    EXPECT_EQ(to_json(table, fitted)["postulation"], 0);

    TheoremReport report;
    report.check = "e1-sum";
    report.k = 2;
    report.hypotheses = {{"h", HypothesisStatus::Assumed, ""}};
    report.conclusion = {"c", true, ""};
    report.facts["v"] = std::vector<std::int64_t>{1, 2};
    report.facts["b"] = true;
    const Json j = to_json(report);
    EXPECT_EQ(j["verdict"], "theorem-confirmed");
    EXPECT_EQ(j["facts"]["v"], Json::parse("[1,2]"));
    EXPECT_EQ(Json::parse(j.dump(2)).dump(2), j.dump(2));
}

TEST(CacheFile, SaveLoadAndReject) {
    const auto dir = scratch_dir("cache");
    const auto base = MonomialIdeal::minimalize({{2, 0}, {0, 2}}, 2);
    std::map<unsigned, MonomialIdeal> closures{
        {1, MonomialIdeal::minimalize({{2, 0}, {1, 1}, {0, 2}}, 2)},
        {2, power(MonomialIdeal::maximal(2), 4)},
    };
    EXPECT_TRUE(load_cache(dir, base).empty());
    save_cache(dir, base, closures);
    EXPECT_EQ(load_cache(dir, base), closures);
    EXPECT_TRUE(std::filesystem::exists(dir / cache_file_name(base)));
    EXPECT_TRUE(load_cache(dir, MonomialIdeal::maximal(2)).empty());

    // a generator outside the closure invalidates the file
    closures.insert_or_assign(1, MonomialIdeal::maximal(2));
    save_cache(dir, base, closures);
    EXPECT_TRUE(load_cache(dir, base).empty());

    write(dir / cache_file_name(base), "not json");
    EXPECT_TRUE(load_cache(dir, base).empty());
    write(dir / cache_file_name(base), R"({"base": {"dim": 2, "gens": [[0,2],[2,0]]}, "closures": {"x": 1}})");
    EXPECT_TRUE(load_cache(dir, base).empty());
}

TEST(CacheFile, NameDependsOnCanonicalGenerators) {
    const auto a = MonomialIdeal::minimalize({{2, 0}, {0, 2}}, 2);
    const auto b = MonomialIdeal::minimalize({{0, 2}, {2, 0}, {3, 3}}, 2);
    EXPECT_EQ(cache_file_name(a), cache_file_name(b));
    EXPECT_NE(cache_file_name(a), cache_file_name(MonomialIdeal::maximal(2)));
}
