#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvlab/json_io.hpp"

using namespace mvlab;
namespace mj = mvlab::json;
using Json = nlohmann::json;

TEST_CASE("Lusztig datum round trip") {
    const LusztigDatum a(Rank(3), {1, 0, 2, 0, 0, 4});
    const Json j = mj::encode(a);
    CHECK(j["schema"] == mj::kLusztigSchema);
    CHECK(j["n"] == 3);
    CHECK(j["a"].size() == 3);
    CHECK(j["a"]["1,2"] == 1);
    CHECK(j["a"]["2,3"] == 2);
    CHECK(j["a"]["3,4"] == 4);
    CHECK(mj::decode_lusztig(j) == a);
    CHECK(mj::decode_lusztig(Json{{"n", 3}, {"entries", a.entries()}}) == a);
    CHECK(mj::decode_lusztig(Json{{"n", 2}, {"a", Json::object()}}).is_zero());
}

TEST_CASE("Lusztig datum decode errors") {
    CHECK_THROWS_AS(mj::decode_lusztig(Json{{"a", Json::object()}}), Error);
    CHECK_THROWS_AS(mj::decode_lusztig(Json{{"n", 2}, {"a", {{"1,4", 1}}}}), Error);
    CHECK_THROWS_AS(mj::decode_lusztig(Json{{"n", 2}, {"a", {{"x", 1}}}}), Error);
    CHECK_THROWS_AS(mj::decode_lusztig(Json{{"n", 2}, {"a", {{"1,2", -1}}}}), Error);
    CHECK_THROWS_AS(mj::decode_lusztig(Json{{"n", 2}, {"entries", {1, 2}}}), Error);
    CHECK_THROWS_AS(mj::decode_lusztig(Json{{"n", 0}, {"a", Json::object()}}), Error);
    CHECK_THROWS_AS(mj::decode_lusztig(Json::array()), Error);
}

TEST_CASE("BZ datum round trip") {
    const BZDatum M = psi(LusztigDatum(Rank(2), {1, 0, 0}));
    const Json j = mj::encode(M);
    CHECK(j["schema"] == mj::kBZSchema);
    CHECK(j["flavor"] == "e");
    CHECK(j["M"].size() == 6);
    CHECK(j["M"]["2"] == -1);
    CHECK(j["M"]["2,3"] == -1);
    CHECK(mj::decode_bz(j) == M);
    CHECK(mj::decode_bz(mj::encode(star(M))) == star(M));
    CHECK_THROWS_AS(mj::decode_bz(Json{{"n", 2}, {"flavor", "x"}, {"M", Json::object()}}), Error);
    CHECK_THROWS_AS(mj::decode_bz(Json{{"n", 2}, {"flavor", "e"}, {"M", {{"1,2,3", 0}}}}), Error);
}

TEST_CASE("polytope, orientation and moves") {
    const Json p = mj::encode(mv_vertices(BZDatum(Rank(1), Flavor::W0)));
    CHECK(p["schema"] == mj::kPolytopeSchema);
    CHECK(p["vertices"].size() == 2);
    CHECK(p["halfspaces"].size() == 2);
    CHECK(p["vertices"][0].contains("w"));
    CHECK(p["vertices"][0].contains("mu"));

    const Json o = mj::encode(Orientation::parse(Rank(3), "RL"));
    CHECK(o["n"] == 3);
    CHECK(o["dirs"] == "RL");

    const BraidMove m{BraidMove::Kind::Braid, 2};
    CHECK(mj::encode(m) == Json{{"kind", "3move"}, {"pos", 2}});
    CHECK(mj::decode_move(mj::encode(m)) == m);
    CHECK_THROWS_AS(mj::decode_move(Json{{"kind", "4move"}, {"pos", 1}}), Error);
    CHECK(mj::encode_word(ReducedWord::lex_minimal(Rank(2))) == Json{1, 2, 1});
}

TEST_CASE("keys and errors") {
    CHECK(mj::root_key(Root{2, 5}) == "2,5");
    CHECK(mj::maya_key(MayaDiagram(Rank(3), {1, 4})) == "1,4");
    const Json e = mj::error_object("invalid_input", "boom");
    CHECK(e["schema"] == mj::kErrorSchema);
    CHECK(e["error"] == "invalid_input");
    CHECK(e["message"] == "boom");
}
