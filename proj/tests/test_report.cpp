#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cubic/published.hpp"
#include "cubic/report.hpp"

using namespace cubic;

namespace {

CensusSummary summary(Sign s, i64 x) {
    CensusConfig cfg;
    cfg.sign = s;
    cfg.xmax = x;
    return tally(enumerate(cfg), cfg);
}

}  // namespace

TEST_CASE("table 1 from census and published counts") {
    const auto sum = summary(Sign::Negative, 1'000'000);
    const auto rows = make_table1(6, &sum);
    REQUIRE(rows.size() == 10);
    CHECK(rows[2].h == 1520);
    CHECK(rows[2].from_census);
    CHECK(std::round(rows[2].ratio_main * 1000) == 731);
    CHECK(std::abs(rows[4].ratio_two_term - 1.0001096) < 1e-4);
    CHECK(std::abs(rows[0].residual + 0.19) < 0.01);
    CHECK_FALSE(rows[5].from_census);
    for (const auto& r : rows) CHECK(r.h == published::kNegative[static_cast<std::size_t>(r.j - 2)].h);
}

TEST_CASE("table 2") {
    const auto sum = summary(Sign::Positive, 1'000'000);
    const auto rows = make_table2(6, &sum);
    CHECK(rows[2].g == 366);
    CHECK(rows[2].f == 16);
    CHECK(std::round(rows[4].ratio_main * 1000) == 786);
    CHECK(std::abs(rows[0].ratio_two_term - 8.59) < 0.05);
    for (const auto& r : rows) {
        const auto& pub = published::kPositive[static_cast<std::size_t>(r.j - 2)];
        CHECK(r.g == pub.g);
        CHECK(r.f == pub.f);
    }
}

TEST_CASE("missing census") {
    CHECK_THROWS_AS(make_table1(4, nullptr), MissingCensus);
    const auto small = summary(Sign::Negative, 1000);
    CHECK_THROWS_AS(make_table1(4, &small), MissingCensus);
    CHECK_THROWS_AS(make_table2(3, &small), MissingCensus);
    CHECK_THROWS_AS(make_table1(9, &small), std::invalid_argument);
    CHECK_THROWS_AS(make_table3(10'000, small), MissingCensus);
    CHECK_NOTHROW(make_table1(0, nullptr));
}

TEST_CASE("table 3 on a small census") {
    const auto sum = summary(Sign::Positive, 100'000);
    const auto rows = make_table3(100'000, sum);
    REQUIRE(rows.size() == 20);
    for (std::size_t pi = 0; pi < 4; ++pi) {
        i64 g = 0, f = 0;
        for (std::size_t si = 0; si < 5; ++si) {
            g += rows[pi * 5 + si].g;
            f += rows[pi * 5 + si].f;
        }
        CHECK(g == 4753);
        CHECK(f == 51);
    }
    CHECK_THROWS_AS(make_table3(12345, sum), MissingCensus);
}

TEST_CASE("rendering") {
    Table t{"demo", {"j", "x", "name"}, {}};
    t.rows.push_back({Cell::integer(2), Cell::real(0.125, 3), Cell::text("a,b")});
    t.rows.push_back({Cell::integer(10), Cell::real(-1.5, 3), Cell::text("c")});
    CHECK(render(t, Format::Text) == "demo\n j       x  name\n 2   0.125   a,b\n10  -1.500     c\n");
    CHECK(render(t, Format::Csv) == "j,x,name\n2,0.125,\"a,b\"\n10,-1.500,c\n");
    const auto j = nlohmann::json::parse(render(t, Format::Json));
    REQUIRE(j.size() == 2);
    CHECK(j[1]["j"] == 10);
    CHECK(j[0]["name"] == "a,b");
    CHECK(render(t, Format::Csv) == render(t, Format::Csv));
    CHECK(parse_format("json") == Format::Json);
    CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("table rendering is stable") {
    const auto a = render(to_table(make_table1(0, nullptr)), Format::Csv);
    const auto b = render(to_table(make_table1(0, nullptr)), Format::Csv);
    CHECK(a == b);
    CHECK(a.find("10,2024660098,published,0.974,1.0000009,0.0176") != std::string::npos);
}

TEST_CASE("constants json") {
    const auto j = nlohmann::json::parse(constants_json());
    CHECK(j["B"].get<double>() == doctest::Approx(-0.403483636664));
    CHECK(j["local"]["2"]["111"]["C"].get<double>() == doctest::Approx(2.0 / 21));
    CHECK(j["infinity"]["inf-"]["C"].get<double>() == 0.75);
}

TEST_CASE("verify quick profile") {
    std::ostringstream log;
    const auto checks = verify({Profile::Quick, 2, 1.0, false}, log);
    CHECK(exit_status(checks) == 0);
    CHECK(log.str().find("FAIL") == std::string::npos);
}

TEST_CASE("verify catches a wrong secondary coefficient") {
    std::ostringstream log;
    const auto checks = verify({Profile::Quick, 1, 1.0, true}, log);
    CHECK(exit_status(checks) == 1);
    CHECK(log.str().find("FAIL negative ratios") != std::string::npos);
}

TEST_CASE("verify catches truncated enumeration") {
    std::ostringstream log;
    const auto checks = verify({Profile::Quick, 1, 0.7, false}, log);
    CHECK(exit_status(checks) == 1);
    CHECK(log.str().find("FAIL census counts, negative") != std::string::npos);
}
