#include "logk3/documents.hpp"

#include "logk3/iitaka.hpp"
#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace logk3;
using namespace logk3::testsupport;

TEST_CASE("type-only pair documents round-trip and are byte-stable") {
    PairDocument doc;
    doc.name = "three-cycle";
    doc.pair.shape = make_circular({Int(0), Int(-2), Int(-3)});

    const std::string text = emit_pair_document(doc);
    CHECK(parse_pair_document(text) == doc);
    CHECK(emit_pair_document(parse_pair_document(text)) == text);

    CHECK(text == R"({
  "name": "three-cycle",
  "mode": "type",
  "boundary": {
    "kind": "circular",
    "lambdas": [
      0,
      -2,
      -3
    ]
  }
}
)");
}

TEST_CASE("elliptic and nodal documents carry the self-intersection") {
    for (const BoundaryShape& sh : {BoundaryShape::elliptic(9), BoundaryShape::nodal(-1)}) {
        PairDocument doc{"one-component", {sh, std::nullopt}};
        CHECK(parse_pair_document(emit_pair_document(doc)) == doc);
    }
    const std::string nodal_text = emit_pair_document({"n", {BoundaryShape::nodal(8), {}}});
    CHECK(nodal_text.find("\"kind\": \"nodal\"") != std::string::npos);
    CHECK(nodal_text.find("\"self_int\": 8") != std::string::npos);
}

TEST_CASE("full-lattice pair documents round-trip for every catalogue model") {
    for (const IitakaType& t : circular_catalogue()) {
        PairDocument doc{to_string(t.tag), build_model(t)};
        const std::string text = emit_pair_document(doc);
        const PairDocument back = parse_pair_document(text);
        CHECK(back == doc);
        CHECK(emit_pair_document(back) == text);
        CHECK(text.find("\"mode\": \"lattice\"") != std::string::npos);
        CHECK(text.find("\"gram\"") != std::string::npos);
        CHECK(text.find("\"canonical\"") != std::string::npos);
        CHECK(text.find("\"boundary_classes\"") != std::string::npos);
    }
}

TEST_CASE("script documents round-trip with 1-based component labels") {
    ScriptDocument doc;
    doc.steps = {
        CanonicalBlowup{4, 0, 0},
        Pivot{0, PivotDirection::Pred},
        CanonicalBlowdown{1},
        Pivot{2, PivotDirection::Succ},
        HalfPointAttach{3},
    };
    const std::string text = emit_script_document(doc);
    CHECK(parse_script_document(text) == doc);
    CHECK(emit_script_document(parse_script_document(text)) == text);

    // 0-based internal indices surface as 1-based labels
    CHECK(text.find("\"edge\": [\n        5,\n        1\n      ]") != std::string::npos);
    CHECK(text.find("\"component\": 2") != std::string::npos);
    CHECK(text.find("\"direction\": \"pred\"") != std::string::npos);
    CHECK(text.find("\"op\": \"attach\"") != std::string::npos);
}

TEST_CASE("the nodal center is written as the edge [1, 1]") {
    ScriptDocument doc;
    doc.steps = {CanonicalBlowup{0, 0, 1}};
    const std::string text = emit_script_document(doc);
    CHECK(text.find("\"edge\": [\n        1,\n        1\n      ]") != std::string::npos);
    CHECK(parse_script_document(text) == doc);
}

TEST_CASE("parse errors name the field and context") {
    CHECK_THROWS_WITH_AS(parse_pair_document("[]"), "pair document: expected a JSON object",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_pair_document(R"({"mode": "type"})"),
                         "pair document: missing field 'name'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_pair_document(R"({"name": "x", "mode": "type", "boundary": {"kind": "circular"}})"),
        "pair document: missing field 'lambdas'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_pair_document(R"({"name": "x", "mode": "maybe", "boundary": {}})"),
        "pair document: 'mode' must be \"type\" or \"lattice\"", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_pair_document(R"({"name": "x", "mode": "type", "boundary": {"kind": "square"}})"),
        "pair document: boundary 'kind' must be \"elliptic\", \"nodal\" or \"circular\"",
        std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_pair_document(R"({"name": "x", "mode": "type", "boundary": {"kind": 3}})"),
        "pair document: boundary 'kind' must be a string", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_pair_document(R"({"name": 7, "mode": "type", "boundary": {}})"),
        "pair document: 'name' must be a string", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_pair_document(
            R"({"name": "x", "mode": "type", "boundary": {"kind": "circular", "lambdas": [1, "a"]}})"),
        "pair document: lambdas: expected an integer", std::invalid_argument);
    CHECK_THROWS_AS(parse_pair_document("{"), std::invalid_argument);

    // lattice mode structure
    const std::string no_gram =
        R"({"name": "x", "mode": "lattice", "boundary": {"kind": "circular", "lambdas": [1, 1]}})";
    CHECK_THROWS_WITH_AS(parse_pair_document(no_gram), "pair document: missing field 'gram'",
                         std::invalid_argument);
    const std::string ragged =
        R"({"name": "x", "mode": "lattice", "boundary": {"kind": "circular", "lambdas": [1, 1]},
            "gram": [[1, 0], [0]], "canonical": [0, 0], "boundary_classes": []})";
    CHECK_THROWS_WITH_AS(parse_pair_document(ragged), "pair document: 'gram' must be square",
                         std::invalid_argument);
}

TEST_CASE("script parse errors carry the step index") {
    CHECK_THROWS_WITH_AS(parse_script_document(R"({"steps": [{"op": "fold"}]})"),
                         "script document: step 0: unknown op 'fold'", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_script_document(R"({"steps": [{"op": "blowup", "edge": [1, 2]},
                                            {"op": "contract", "component": 0}]})"),
        "script document: step 1: component indices are 1-based", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_script_document(R"({"steps": [{"op": "blowup", "edge": [3]}]})"),
                         "script document: step 0: 'edge' must be a pair [i, j]",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_script_document(R"({"steps": [{"op": "blowup", "edge": [0, 1]}]})"),
                         "script document: step 0: edge components are 1-based",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_script_document(R"({"steps": [{"op": "pivot", "component": 1, "direction": "up"}]})"),
        "script document: step 0: 'direction' must be \"succ\" or \"pred\"",
        std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_script_document(R"({"steps": 3})"),
                         "script document: 'steps' must be an array", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_script_document(R"({"steps": [{"op": 9}]})"),
                         "script document: step 0: 'op' must be a string", std::invalid_argument);
}

TEST_CASE("oversized integers are rejected at both ends") {
    PairDocument doc;
    doc.name = "huge";
    doc.pair.shape = make_circular({Int(1) << 80, Int(0)});
    CHECK_THROWS_WITH_AS(emit_pair_document(doc),
                         "pair document: integer too large for the document format",
                         std::invalid_argument);

    // 2^64 - 1 parses as an unsigned JSON number; it must not wrap silently
    CHECK_THROWS_WITH_AS(
        parse_pair_document(R"({"name": "x", "mode": "type",
                                "boundary": {"kind": "elliptic", "self_int": 18446744073709551615}})"),
        "pair document: integer too large for the document format", std::invalid_argument);
}

TEST_CASE("missing files are input errors") {
    CHECK_THROWS_WITH_AS(read_file("/nonexistent/pair.json"),
                         "cannot open file: /nonexistent/pair.json", std::invalid_argument);
}
