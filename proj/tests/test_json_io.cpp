#include <doctest.h>

#include "test_util.hpp"
#include "vpa/json_io.hpp"

using namespace vpa;
using testutil::classical_cross;
using testutil::F;
using testutil::Q;
using testutil::scalars;

namespace {

Errc code_of(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return Errc::schema_error;
}

} // namespace

TEST_CASE("emit/parse round trips") {
    for (auto f : {Q(), F(7)}) {
        for (const auto& texts :
             std::vector<std::vector<std::string>>{{}, {"2"}, {"1", "1"}, {"2", "3", "5"}}) {
            auto v = construct_standard(f, scalars(f, texts)).algebra;
            std::string doc = emit_algebra(v);
            auto parsed = parse_algebra(doc);
            REQUIRE(std::holds_alternative<VectorProductAlgebra>(parsed));
            CHECK(std::get<VectorProductAlgebra>(parsed) == v);
            CHECK(emit_algebra(parsed) == doc); // emit . parse = id on canonical docs

            auto h = hurwitz(v);
            std::string hdoc = emit_algebra(h);
            auto hparsed = parse_algebra(hdoc);
            REQUIRE(std::holds_alternative<UnitalCompositionAlgebra>(hparsed));
            CHECK(std::get<UnitalCompositionAlgebra>(hparsed) == h);
            CHECK(emit_algebra(hparsed) == hdoc);
        }
    }
}

TEST_CASE("documents carry exact scalars and the identity marker") {
    auto v = construct_standard(Q(), scalars(Q(), {"1/2", "-2/3"})).algebra;
    std::string doc = emit_algebra(v);
    CHECK(doc.find("\"1/2\"") != std::string::npos);
    CHECK(doc.find("\"-1/3\"") != std::string::npos); // 1/2 * -2/3 on the gram diagonal
    CHECK(doc.find("identity_index") == std::string::npos);

    std::string hdoc = emit_algebra(hurwitz(v));
    CHECK(hdoc.find("\"identity_index\":0") != std::string::npos);

    // the parsed cross product passes the axioms
    auto parsed = parse_algebra(emit_algebra(classical_cross(Q())));
    CHECK(check_axioms(std::get<VectorProductAlgebra>(parsed)).all_ok());
}

TEST_CASE("schema validation") {
    // a minimal valid dim-1 document to mutate
    const std::string good = R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":1,)"
                             R"("gram":[["1"]],"structure":[[["0"]]]})";
    CHECK(std::holds_alternative<VectorProductAlgebra>(parse_algebra(good)));

    CHECK(code_of("not json at all") == Errc::schema_error);
    CHECK(code_of("[]") == Errc::schema_error);
    CHECK(code_of(R"({"schema":"vpa-2","field":{"kind":"Q"},"dim":0,"gram":[],"structure":[]})") ==
          Errc::schema_error);
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Fp","p":2},"dim":0,"gram":[],"structure":[]})") ==
          Errc::char_two_rejected);
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Fp","p":9},"dim":0,"gram":[],"structure":[]})") ==
          Errc::schema_error);
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"R"},"dim":0,"gram":[],"structure":[]})") ==
          Errc::schema_error);
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":0,"gram":[],"structure":[],"x":1})") ==
          Errc::schema_error);

    // shapes
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":2,"gram":[["1"]],"structure":[]})") ==
          Errc::shape_error);
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":1,"gram":[["1"]],)"
                  R"("structure":[[["0","0"]]]})") == Errc::shape_error);

    // scalars
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":1,"gram":[["x"]],)"
                  R"("structure":[[["0"]]]})") == Errc::bad_scalar);
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Fp","p":5},"dim":1,"gram":[["7"]],)"
                  R"("structure":[[["0"]]]})") == Errc::bad_scalar);
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":1,"gram":[[1]],)"
                  R"("structure":[[["0"]]]})") == Errc::schema_error); // numbers are not scalars

    // gram asymmetry names the entry
    try {
        parse_algebra(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":2,)"
                      R"("gram":[["0","1"],["2","0"]],"structure":)"
                      R"([[["0","0"],["0","0"]],[["0","0"],["0","0"]]]})");
        FAIL("expected a schema error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::schema_error);
        CHECK(std::string(e.what()).find("gram[0][1]") != std::string::npos);
    }

    // anti-symmetry is demanded for vector product documents...
    const std::string skew = R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":2,)"
                             R"("gram":[["1","0"],["0","1"]],"structure":)"
                             R"([[["0","0"],["1","0"]],[["0","0"],["0","0"]]]})";
    CHECK(code_of(skew) == Errc::schema_error);

    // ...but not when identity_index marks a unital document
    const std::string unital = R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":2,)"
                               R"("gram":[["1","0"],["0","1"]],"structure":)"
                               R"([[["1","0"],["0","1"]],[["0","1"],["-1","0"]]],)"
                               R"("identity_index":0})";
    CHECK(std::holds_alternative<UnitalCompositionAlgebra>(parse_algebra(unital)));
    CHECK(code_of(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":1,"gram":[["1"]],)"
                  R"("structure":[[["1"]]],"identity_index":3})") == Errc::schema_error);

    // non-canonical scalars are canonicalized on read
    auto v = parse_algebra(R"({"schema":"vpa-1","field":{"kind":"Q"},"dim":1,)"
                           R"("gram":[["2/4"]],"structure":[[["0"]]]})");
    CHECK(std::get<VectorProductAlgebra>(v).gram().entries().at(0, 0) ==
          Scalar::parse(Q(), "1/2"));
}
