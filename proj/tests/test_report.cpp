#include <doctest.h>

#include <set>

#include <json.hpp>

#include "fanobig/report.hpp"

using namespace fanobig;

TEST_CASE("build_table evaluates every row in order") {
    std::vector<TableRow> rows = build_table();
    REQUIRE(rows.size() == 40);
    std::set<std::string> ids;
    for (const TableRow& row : rows) ids.insert(row.id);
    CHECK(ids.size() == 36);

    CHECK(rows.front().id == "2-1");
    CHECK(rows.back().id == "2-36");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        long a = std::stol(rows[i - 1].id.substr(2));
        long b = std::stol(rows[i].id.substr(2));
        CHECK((a < b || (a == b && rows[i - 1].subcase < rows[i].subcase)));
    }

    // Sub-rows of one type agree on degree and verdict.
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].id != rows[i - 1].id) continue;
        CHECK(rows[i].verdict == rows[i - 1].verdict);
        CHECK(rows[i].anticanonical_degree == rows[i - 1].anticanonical_degree);
    }

    // Spot rows against the published verdict column.
    auto row = [&](const std::string& id) {
        for (const TableRow& r : rows)
            if (r.id == id) return r;
        throw Error("missing row " + id);
    };
    CHECK(row("2-27").anticanonical_degree == 38);
    CHECK(row("2-27").verdict == Bigness::Big);
    CHECK(row("2-4").anticanonical_degree == 10);
    CHECK(row("2-4").verdict == Bigness::NotBig);
}

TEST_CASE("build_table aborts when a verdict cannot be certified") {
    FanoModel sabotaged = get("2-33");
    sabotaged.is_toric = false;  // the stored rule no longer applies
    CHECK_THROWS_AS(build_table({sabotaged}), VerificationFailure);

    FanoModel flipped = get("2-33");
    flipped.expected_verdict = Bigness::NotBig;  // verifies Big, expected NotBig
    CHECK_THROWS_AS(build_table({flipped}), InternalMismatch);
}

TEST_CASE("threshold report finds the boundary pair") {
    std::vector<TableRow> rows = build_table();
    ThresholdReport report = check_threshold(rows);
    CHECK(report.boundary_not_big_id == "2-25");
    CHECK(report.boundary_not_big_degree == 32);
    CHECK(report.boundary_big_id == "2-26");
    CHECK(report.boundary_big_degree == 34);

    // A NotBig verdict at degree ≥ 34 (or Big below) violates the theorem.
    std::vector<TableRow> tampered = rows;
    for (TableRow& row : tampered)
        if (row.id == "2-25") row.verdict = Bigness::Big;
    CHECK_THROWS_AS(check_threshold(tampered), ThresholdViolation);
    tampered = rows;
    for (TableRow& row : tampered)
        if (row.id == "2-26") row.verdict = Bigness::NotBig;
    CHECK_THROWS_AS(check_threshold(tampered), ThresholdViolation);
}

TEST_CASE("conic-bundle corollary report") {
    std::vector<TableRow> rows = build_table();
    CorollaryReport report = check_corollary(rows);
    CHECK(report.not_big_ids == std::vector<std::string>{"2-2", "2-6", "2-8", "2-9", "2-11",
                                                         "2-13", "2-18", "2-20", "2-24"});
    CHECK(report.big_ids ==
          std::vector<std::string>{"2-27", "2-31", "2-32", "2-34", "2-35", "2-36"});

    std::vector<TableRow> tampered = rows;
    for (TableRow& row : tampered)
        if (row.id == "2-13") row.verdict = Bigness::Big;
    CHECK_THROWS_AS(check_corollary(tampered, registry()), CorollaryViolation);
}

TEST_CASE("table formats are deterministic") {
    std::vector<TableRow> rows = build_table();

    std::string pretty = format_table(rows, TableFormat::Pretty);
    CHECK(pretty.find("model") != std::string::npos);
    CHECK(pretty.find("2-6a") != std::string::npos);
    CHECK(pretty.find("NotBig") != std::string::npos);

    std::string tsv = format_table(rows, TableFormat::Tsv);
    std::size_t lines = 0;
    for (char ch : tsv) lines += ch == '\n';
    CHECK(lines == 41);  // header + 40 rows
    CHECK(tsv.find("2-27\t") != std::string::npos);

    std::string json_text = format_table(rows, TableFormat::Json);
    CHECK(json_text == format_table(build_table(), TableFormat::Json));
    nlohmann::json parsed = nlohmann::json::parse(json_text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 40);
    CHECK(parsed[0]["id"] == "2-1");
    CHECK(parsed[0]["verdict"] == "NotBig");
    CHECK(parsed[39]["verdict"] == "Big");
    CHECK(parsed[5]["subcase"] == "a");
}
