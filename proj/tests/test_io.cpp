/*
 * Copyright 2026 the rdlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include "rdlin/io.hpp"

using namespace rdlin;

TEST_CASE("matrix json round-trips and keeps its key order", "[io]") {
    const std::string text =
        R"({"m": 4, "modulus": "0x13", "rows": [["0x1","0x1","0x1"],["0x1","0x2","0x4"],["0x1","0x4","0x6"]]})";
    Mat m = mat_of_json(ordered_json::parse(text));
    CHECK(m.rows() == 3);
    CHECK(m.f->degree() == 4);
    CHECK(m.f->modulus() == 0x13);
    CHECK(m.at(2, 2) == 0x6);

    const std::string emitted = mat_to_json(m).dump();
    CHECK(emitted ==
          R"({"m":4,"modulus":"0x13","rows":[["0x1","0x1","0x1"],["0x1","0x2","0x4"],["0x1","0x4","0x6"]]})");
    CHECK(mat_of_json(ordered_json::parse(emitted)) == m);
}

TEST_CASE("vector json round-trips", "[io]") {
    auto f = field_default(8);
    Vec v = vec_from(f, {0, 1, 0xAB});
    const std::string emitted = vec_to_json(v).dump();
    CHECK(emitted == R"({"m":8,"modulus":"0x11b","entries":["0x0","0x1","0xab"]})");
    CHECK(vec_of_json(ordered_json::parse(emitted)) == v);
}

TEST_CASE("witness json matches the documented shape", "[io]") {
    const std::string text =
        R"({"m":4,"modulus":"0x13","n":3,"u":["0x1","0xd","0x0"],"v":["0x1","0x0","0xd"],"method":"search-bounded"})";
    Witness w = witness_of_json(ordered_json::parse(text));
    CHECK(w.u.e == std::vector<Elem>{1, 0xD, 0});
    CHECK(w.v.e == std::vector<Elem>{1, 0, 0xD});
    CHECK(w.method == WitnessMethod::SearchBounded);
    CHECK_FALSE(w.verified);
    CHECK(witness_to_json(w).dump() == text);
}

TEST_CASE("analysis report json carries the verdict fields in order", "[io]") {
    auto f = field_default(4);

    SECTION("3x3 with a condition hit") {
        Mat m = mat_from_rows(f, {{1, 1, 1}, {1, 2, 4}, {1, 4, 6}});
        ordered_json j = report_to_json(analyze(m));
        const std::string s = j.dump();
        CHECK(s.find(R"("mds":true,"branch_diff":4,"branch_lin":4,"rd":"has","method":"char-3x3","conditions":[3],"witness":{)") != std::string::npos);
        CHECK(j["witness"]["method"] == "char-3x3");
        CHECK(j["trace"].is_array());
        Witness w = witness_of_json(j["witness"]);
        CHECK(verify_witness(m, std::as_const(w)).ok);
    }

    SECTION("no-rd verdict has a null witness") {
        Mat m = mat_from_rows(f, {{1, 1, 1}, {1, 2, 4}, {1, 8, 0xC}});
        ordered_json j = report_to_json(analyze(m));
        CHECK(j["rd"] == "none");
        CHECK(j["witness"].is_null());
        CHECK(j["conditions"].empty());
    }

    SECTION("branch numbers go null when nothing pins them") {
        Mat m = identity(f, 7);
        ordered_json j = report_to_json(analyze(m));
        CHECK_FALSE(j["mds"].get<bool>());
        CHECK(j["branch_diff"].is_null());
        CHECK(j["branch_lin"].is_null());
        CHECK(j["rd"] == "has");
    }
}

TEST_CASE("decomposition json exposes abcd only for order three", "[io]") {
    auto f = field_default(4);
    Mat m = mat_from_rows(f, {{1, 1, 1}, {1, 2, 4}, {1, 4, 6}});
    ordered_json j = decomposition_to_json(decompose(m));
    CHECK(j["D1"] == ordered_json::array({"0x1", "0x1", "0x1"}));
    CHECK(j["D2"] == ordered_json::array({"0x1", "0x1", "0x1"}));
    CHECK(j["abcd"] == ordered_json::array({"0x2", "0x4", "0x4", "0x6"}));

    Mat m4 = cauchy(vec_from(f, {1, 2, 3, 4}), vec_from(f, {5, 6, 7, 8}));
    ordered_json j4 = decomposition_to_json(decompose(m4));
    CHECK_FALSE(j4.contains("abcd"));
    CHECK(j4["M1"].size() == 4);
}

TEST_CASE("census stats serialize to json and csv", "[io]") {
    EnumStats st = enumerate3(3);
    CHECK(enum_to_json(st).dump() ==
          R"({"m":3,"modulus":"0xb","mds_quadruples":390,"no_rd_quadruples":0,"total_mds":"6554730","total_no_rd":"0"})");
    CHECK(enum_to_csv(st) ==
          "m,modulus,mds_quadruples,no_rd_quadruples,total_mds,total_no_rd\n"
          "3,0xb,390,0,6554730,0\n");
}

TEST_CASE("parser rejects malformed inputs with a parse error", "[io]") {
    auto expect_parse_error = [](const std::string& text) {
        REQUIRE_THROWS_MATCHES(mat_of_json(ordered_json::parse(text)), Error,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::StartsWith("ParseError")));
    };
    expect_parse_error(R"({"modulus":"0x13","rows":[["0x1"]]})");
    expect_parse_error(R"({"m":4,"rows":[["0x1"]]})");
    expect_parse_error(R"({"m":4,"modulus":"0x13"})");
    expect_parse_error(R"({"m":4,"modulus":"0x13","rows":[]})");
    expect_parse_error(R"({"m":4,"modulus":"0x13","rows":[["0x1","0x2"],["0x1"]]})");
    expect_parse_error(R"({"m":4,"modulus":"0x13","rows":[["0x1","0x20"],["0x1","0x2"]]})");
    expect_parse_error(R"({"m":4,"modulus":"0x13","rows":[["1","0x2"],["0x1","0x2"]]})");
    expect_parse_error(R"({"m":1,"modulus":"0x3","rows":[["0x1"]]})");

    // A reducible modulus is caught by field construction instead.
    REQUIRE_THROWS_MATCHES(
        mat_of_json(ordered_json::parse(R"({"m":4,"modulus":"0x10","rows":[["0x1"]]})")),
        Error,
        Catch::Matchers::MessageMatches(Catch::Matchers::StartsWith("ReducibleModulus")));

    REQUIRE_THROWS_AS(
        witness_of_json(ordered_json::parse(
            R"({"m":4,"modulus":"0x13","n":2,"u":["0x1"],"v":["0x1","0x2"],"method":"search-full"})")),
        Error);
    REQUIRE_THROWS_AS(
        witness_of_json(ordered_json::parse(
            R"({"m":4,"modulus":"0x13","n":1,"u":["0x1"],"v":["0x2"],"method":"guesswork"})")),
        Error);
}

TEST_CASE("parser accepts integer entries and uppercase hex digits", "[io]") {
    Mat a = mat_of_json(ordered_json::parse(R"({"m":4,"modulus":"0x13","rows":[[1,"0XD"],["0xD",0]]})"));
    CHECK(a.at(0, 0) == 1);
    CHECK(a.at(0, 1) == 0xD);
    CHECK(a.at(1, 0) == 0xD);
    CHECK(a.at(1, 1) == 0);
}
