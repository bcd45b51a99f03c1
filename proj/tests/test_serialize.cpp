#include "doctest.h"
#include "msym/macdonald.hpp"
#include "msym/serialize.hpp"

using namespace msym;

TEST_CASE("label round trip") {
    const MPartition p{{2, 0, 0, 2}, {4, 1, 1}};
    const Json j = to_json(p);
    CHECK(j.dump() == R"({"a":[2,0,0,2],"lambda":[4,1,1]})");
    CHECK(mpartition_from_json(j) == p);
    CHECK_THROWS_AS(mpartition_from_json(Json::parse(R"({"a":[1],"lambda":[1,2]})")), std::invalid_argument);
    CHECK_THROWS_AS(mpartition_from_json(Json::parse(R"({"a":[-1],"lambda":[]})")), std::invalid_argument);
}

TEST_CASE("polynomial round trip") {
    const MultiPoly e = nonsym_E({1, 0});
    const Json j = to_json(e);
    CHECK(j["nvars"] == 2);
    CHECK(poly_from_json(j) == e);
    CHECK(poly_from_json(Json::parse(j.dump())) == e);
    CHECK(poly_from_json(to_json(MultiPoly(3))) == MultiPoly(3));
}

TEST_CASE("expansion round trip") {
    for (auto b : {ExpansionBasis::m_Lambda, ExpansionBasis::p_Lambda_t, ExpansionBasis::P_Lambda}) {
        const MultiPoly f = msym_P(MPartition{{1}, {1}}, 3) + msym_P(MPartition{{0}, {2}}, 3);
        const Expansion ex = expand_in_basis(f, 1, b);
        const Json j = to_json(ex);
        CHECK(j["basis"] == expansion_basis_name(b));
        CHECK(j["m"] == 1);
        CHECK(expansion_from_json(Json::parse(j.dump())) == ex);
    }
    CHECK_THROWS_AS(expansion_from_json(Json::parse(
                        R"({"basis":"m","m":1,"terms":[{"label":{"a":[1,0],"lambda":[]},"coeff":"1"}]})")),
                    std::invalid_argument);
}

TEST_CASE("kernel serialization") {
    const BiPoly k = BiPoly::tensor(MultiPoly::variable(2, 1), MultiPoly::variable(1, 1));
    const Json j = to_json(k);
    CHECK(j.dump() == R"({"nx":2,"ny":1,"terms":[{"x":[1,0],"y":[1],"coeff":"1"}]})");
}
