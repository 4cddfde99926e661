#include <refloor/json_io.hpp>

#include <gtest/gtest.h>

using namespace refloor;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(Json, PolygonRoundTrip) {
    auto p = polygon_from_string(R"({"vertices": [[0,0],[3,0],[0,3]]})");
    EXPECT_EQ(p, polygon_from_string("[[0,3],[0,0],[3,0]]"));
    EXPECT_EQ(polygon_from_json(to_json(p)), p);
    EXPECT_EQ(to_json(p).dump(), R"({"vertices":[[0,0],[3,0],[0,3]]})");
}

TEST(Json, PolygonErrors) {
    EXPECT_EQ(code_of([] { polygon_from_string("[[0,0],[1.5,0],[0,1]]"); }), ErrorCode::NotLattice);
    EXPECT_EQ(code_of([] { polygon_from_string("[[0,0],[1,0]"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { polygon_from_string("[[0,0],[4,0],[1,1],[0,4]]"); }), ErrorCode::NotConvex);
}

TEST(Json, LaurentAndData) {
    SymLaurent g = SymLaurent::monomial(2) + SymLaurent::monomial(0, 10) + SymLaurent::monomial(-2);
    EXPECT_EQ(to_json(g).dump(), R"([[-2,"1"],[0,"10"],[2,"1"]])");
    auto d = h_transverse_data(polygon_from_string("[[0,0],[3,0],[0,3]]"));
    auto j = to_json(d);
    EXPECT_EQ(j["y"], 9);
    EXPECT_EQ(j["L"], json({0, 0, 0}));
    EXPECT_EQ(j["n_k"]["1"], 3);
    EXPECT_EQ(to_json(TPoly(std::vector<BigInt>{1, -2})).dump(), R"(["1","-2"])");
}

TEST(Json, Pairings) {
    auto S = pairing_from_json(json::parse("[[3,4],[1,2]]"));
    EXPECT_EQ(to_json(S).dump(), "[[1,2],[3,4]]");
    EXPECT_EQ(code_of([] { pairing_from_json(json::parse("[[1,3]]")); }), ErrorCode::InvalidPairing);
    EXPECT_EQ(code_of([] { pairing_from_json(json::parse("{}")); }), ErrorCode::InvalidPairing);
}

TEST(Json, InvariantResult) {
    auto p = polygon_from_string("[[0,0],[3,0],[0,3]]");
    SymLaurent g = SymLaurent::monomial(2) + SymLaurent::monomial(0, 8) + SymLaurent::monomial(-2);
    auto j = invariant_result_json(p, 1, Pairing::standard(1), g);
    EXPECT_EQ(j["degree"], 1);
    EXPECT_EQ(j["coefficients_by_codegree"], json({"1", "8", "1"}));
    EXPECT_EQ(j["pairing"], json::parse("[[1,2]]"));
}

TEST(Json, MultiPolyTerms) {
    auto p = MultiPoly::variable("y") - MultiPoly(2) * MultiPoly::variable("s");
    auto j = to_json(p);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["exponents"]["y"], 1);
    EXPECT_EQ(j[1]["coeff"], "-2");
}
