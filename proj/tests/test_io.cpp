#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "sct/experiment.hpp"
#include "sct/generators.hpp"
#include "sct/io.hpp"

using namespace sct;

TEST_CASE("serialization format is exact and byte-stable") {
    const auto tetra = PureComplex::from_facets(4, {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}});
    const std::string expected = "4 3 4 manual\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";
    CHECK(serialize_complex(tetra) == expected);
    CHECK(serialize_complex(tetra) == serialize_complex(tetra));
}

TEST_CASE("round trips through the text format") {
    const std::vector<std::pair<std::string, PureComplex>> cases = {
        {"cyclic", cyclic_boundary(8, 4)},
        {"D", sphere_D(8, 3)},
        {"B", ball_B(2, 9, 3)},
        {"F", family_F(12, 4, 2)},
        {"H", family_H(12, 3, 2, 2)},
        {"lambda", retriangulated_sphere(SphereVariant::Lambda, 8)},
        {"gammank", gamma_nk(10, 2)},
    };
    for (const auto& [tag, c] : cases) {
        const auto text = serialize_complex(c, tag);
        const auto [parsed, family] = parse_complex_with_family(text);
        REQUIRE(parsed == c);
        REQUIRE(family == tag);
        REQUIRE(serialize_complex(parsed, family) == text);
    }
}

TEST_CASE("parse errors carry positions") {
    auto code_of = [](const std::string& text) {
        try {
            parse_complex(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::BadParams;
    };
    CHECK(code_of("") == Errc::ParseError);
    CHECK(code_of("4 3 nope manual\n") == Errc::ParseError);
    CHECK(code_of("4 3 2 manual\n1 2 3\n") == Errc::ParseError);          // count mismatch
    CHECK(code_of("4 3 1 manual\n1 2 3\n1 2 4\n") == Errc::ParseError);   // extra facet
    CHECK(code_of("4 3 1 manual\n3 2 1\n") == Errc::ParseError);          // not increasing
    CHECK(code_of("4 3 1 manual\n1 2 5\n") == Errc::ParseError);          // exceeds n
    CHECK(code_of("4 3 1 manual\n1 2\n") == Errc::ParseError);            // wrong arity
    CHECK(code_of("4 3 2 manual\n1 2 3\n1 2 3\n") == Errc::DuplicateFacet);

    try {
        parse_complex("4 3 1 manual\n3 2 1\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("experiment reports render as table and json") {
    ExperimentGrid grid;
    grid.ns = {12, 14};
    grid.ss = {1};
    const auto report = run_experiment(ExperimentName::TuranF, grid);
    REQUIRE(report.rows.size() == 2);
    for (const auto& row : report.rows) {
        CHECK(row.optimal);
        CHECK(row.note == "in-bracket");
    }

    const auto table = report_table(report);
    CHECK(table.find("turan-F") != std::string::npos);
    CHECK(table.find("in-bracket") != std::string::npos);

    const auto parsed = nlohmann::json::parse(report_json(report));
    CHECK(parsed["experiment"] == "turan-F");
    CHECK(parsed["rows"].size() == 2);
    CHECK(parsed["rows"][0]["optimal"] == true);
}

TEST_CASE("sibling experiment rows are deterministic and ordered") {
    ExperimentGrid grid;
    grid.ns = {7, 8, 9};
    const auto a = run_experiment(ExperimentName::SiblingD, grid);
    const auto b = run_experiment(ExperimentName::SiblingD, grid);
    REQUIRE(a.rows.size() == 3);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].t_upper == b.rows[i].t_upper);
        CHECK(a.rows[i].certificate == b.rows[i].certificate);
        CHECK(a.rows[i].n == grid.ns[i]);
    }
}
