#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "zharm/catalog.hpp"

using namespace zharm;
using namespace zharm::catalog;
using cover::DataError;
using laurent::UnitClass;

namespace {

std::string fixture_path(const char* name) {
    return std::string(ZHARM_DATA_DIR) + "/" + name;
}

std::vector<GoldenRow> load_golden() {
    std::ifstream in(fixture_path("golden_orders.csv"));
    REQUIRE(in.good());
    return read_golden(in);
}

std::vector<LinkRecord> load_links() {
    std::ifstream in(fixture_path("golden_links.csv"));
    REQUIRE(in.good());
    return parse_table(in);
}

UnitClass cls(const char* text) { return laurent::normalize(laurent::parse_poly(text)); }

}  // namespace

TEST_CASE("parse_table reads the golden link table") {
    const auto records = load_links();
    REQUIRE(records.size() == 31);
    CHECK(records.front().name == "L8n6{0;0}");
    CHECK(records.front().alex == "-t-t^2+t^3+t^4");
    CHECK(records.front().alex_form == AlexForm::ALEXANDER_OVER_T_MINUS_1);
    CHECK(effective_delta(records.front()) ==
          laurent::normalize(laurent::parse_poly("-t-t^2+t^3+t^4") *
                             laurent::parse_poly("t-1")));
}

TEST_CASE("parse_table handles braid columns and quoting") {
    std::istringstream in("name,braid,alexander\n"
                          "trefoil,\"2: 1,1,1\",\n"
                          "\"comma, name\",\"2: 1,1\",\n");
    const auto records = parse_table(in);
    REQUIRE(records.size() == 2);
    CHECK(records[0].braid_word == braid::BraidWord{2, {1, 1, 1}});
    CHECK_FALSE(records[0].alex.has_value());
    CHECK(records[1].name == "comma, name");
    CHECK(effective_delta(records[0]) == cls("1-t+t^2"));
}

TEST_CASE("parse_table row errors") {
    const std::string table = "name,braid,alexander\nempty,,\n";
    {
        std::istringstream in(table);
        CHECK_THROWS_AS(parse_table(in), ParseError);
    }
    {
        std::istringstream in(table);
        std::vector<std::string> diags;
        const auto records = parse_table(in, /*skip_bad=*/true, &diags);
        CHECK(records.empty());
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].find("row 1") != std::string::npos);
    }
    {
        std::istringstream in("name,determinant\nx,3\n");
        CHECK_THROWS_AS(parse_table(in), ParseError);  // unknown column
    }
    {
        std::istringstream in("name,braid\nbad,\"2: 5\"\n");
        CHECK_THROWS_AS(parse_table(in), ParseError);  // letter out of range
    }
    {
        std::istringstream in("name,alexander\nbad,1+*\n");
        std::vector<std::string> diags;
        const auto records = parse_table(in, true, &diags);
        CHECK(records.empty());
        CHECK(diags.size() == 1);
    }
}

TEST_CASE("effective_delta cross-checks braid against polynomial") {
    LinkRecord consistent;
    consistent.name = "trefoil";
    consistent.braid_word = braid::parse_braid("2: 1,1,1");
    consistent.alex = "1-t+t^2";
    CHECK(effective_delta(consistent) == cls("1-t+t^2"));

    LinkRecord mismatch = consistent;
    mismatch.braid_word = braid::parse_braid("2: 1,1");
    CHECK_THROWS_AS(effective_delta(mismatch), DataError);
}

TEST_CASE("scan reproduces the golden orders and verdicts") {
    const auto records = load_links();
    const auto golden = load_golden();
    const auto rows = scan(records, {2, 3});
    REQUIRE(rows.size() == golden.size());
    int qhs = 0, no_criterion = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        REQUIRE_FALSE(rows[i].error.has_value());
        CHECK(rows[i].name == golden[i].name);
        CHECK(rows[i].orders.at(3) == golden[i].expected_order3);
        if (rows[i].conclusion == "EXISTS_QHS")
            ++qhs;
        else if (rows[i].conclusion == "NO_CRITERION")
            ++no_criterion;
    }
    // 30 determinant-zero rows; L10n111{0;0;1} is transcribed verbatim from
    // the upstream table and its printed polynomial has P(-1) = -4, so it
    // fails the table's own determinant-zero premise.
    CHECK(qhs == 30);
    CHECK(no_criterion == 1);
    const auto& anomaly = rows[29];
    CHECK(anomaly.name == "L10n111{0;0;1}");
    CHECK(anomaly.determinant == 8);
}

TEST_CASE("every golden row is internally consistent under the column convention") {
    for (const auto& row : load_golden()) {
        const auto p = laurent::parse_poly(row.p_text);
        const auto quotient_order = cover::homology_order(laurent::normalize(p), 3);
        const auto full_order = cover::homology_order(
            laurent::normalize(p * laurent::parse_poly("t-1")), 3);
        CHECK(full_order == 3 * quotient_order);
        CHECK(full_order % 3 == 0);
    }
}

TEST_CASE("scan edge cases") {
    CHECK(scan({}, {2, 3}).empty());

    LinkRecord trefoil;
    trefoil.name = "trefoil";
    trefoil.alex = "1-t+t^2";
    const auto rows = scan({trefoil}, {3});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].conclusion == "NO_CRITERION");
    CHECK(rows[0].orders.at(3) == 4);

    CHECK_THROWS_AS(scan({trefoil}, {}), std::invalid_argument);
    const std::vector<int> bad_k{1};
    CHECK_THROWS_AS(scan({trefoil}, bad_k), std::invalid_argument);
}

TEST_CASE("scan turns per-record failures into error rows") {
    LinkRecord good;
    good.name = "ok";
    good.alex = "1-t+t^2";
    LinkRecord inconsistent;  // knot flag with a determinant-zero polynomial
    inconsistent.name = "bad";
    inconsistent.components = 1;
    inconsistent.alex = "-t-t^2+t^3+t^4";
    inconsistent.alex_form = AlexForm::ALEXANDER_OVER_T_MINUS_1;
    const auto rows = scan({good, inconsistent, good}, {3});
    REQUIRE(rows.size() == 3);
    CHECK_FALSE(rows[0].error.has_value());
    CHECK(rows[1].error.has_value());
    CHECK_FALSE(rows[2].error.has_value());
    const std::string json = scan_to_json(rows);
    CHECK(json.find("\"error\":") != std::string::npos);
}

TEST_CASE("scan output is byte-identical across worker counts") {
    const auto records = load_links();
    const auto sequential = scan(records, {2, 3}, 1);
    const auto parallel = scan(records, {2, 3}, 8);
    CHECK(scan_to_json(sequential) == scan_to_json(parallel));
    CHECK(scan_to_csv(sequential, {2, 3}) == scan_to_csv(parallel, {2, 3}));
}

TEST_CASE("scan serialization formats") {
    LinkRecord trefoil;
    trefoil.name = "trefoil";
    trefoil.alex = "1-t+t^2";
    const auto rows = scan({trefoil}, {2, 3});
    CHECK(scan_to_json(rows) ==
          "{\"name\":\"trefoil\",\"delta\":\"1-t+t^2\",\"determinant\":3,"
          "\"orders\":{\"2\":3,\"3\":4},\"conclusion\":\"NO_CRITERION\"}\n");
    CHECK(scan_to_csv(rows, {2, 3}) == "name,delta,order_2,order_3\ntrefoil,1-t+t^2,3,4\n");
}

TEST_CASE("reproduce_appendix matches the golden table") {
    const auto diff = reproduce_appendix(load_golden());
    CHECK(diff.empty());
}

TEST_CASE("reproduce_appendix reports corrupted golden values") {
    auto golden = load_golden();
    bool corrupted = false;
    for (auto& row : golden)
        if (row.name == "L9n19{0}") {
            row.expected_order3 = 13;
            corrupted = true;
        }
    REQUIRE(corrupted);
    const auto diff = reproduce_appendix(golden);
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].name == "L9n19{0}");
    CHECK(diff[0].got == 12);
    CHECK(diff[0].expected == 13);
    CHECK(diff_to_json(diff) == "[{\"name\":\"L9n19{0}\",\"got\":12,\"expected\":13}]\n");
}

TEST_CASE("golden column text round-trips through the grammar") {
    for (const auto& row : load_golden()) {
        const auto f = laurent::parse_poly(row.p_text);
        CHECK(laurent::parse_poly(laurent::to_string(f)) == f);
    }
}

TEST_CASE("read_golden validates its header") {
    std::istringstream in("name,poly,order3\nx,1+t,3\n");
    CHECK_THROWS_AS(read_golden(in), ParseError);
}
