#include "radiant/output.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace radiant;

TEST_CASE("format_double: shortest round-trip decimals") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(1e-300) == "1e-300");
    CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
    CHECK_THROWS_AS(format_double(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(format_double(INFINITY), std::invalid_argument);
}

TEST_CASE("csv writer: dialect") {
    CsvWriter csv;
    csv.comment("omega0=1 k0=0.6");
    csv.row({"phi", "theta_lo", "theta_hi"});
    csv.row({0.25, 0.5, "x"});
    CHECK(csv.str() == "# omega0=1 k0=0.6\nphi,theta_lo,theta_hi\n0.25,0.5,x\n");
}

TEST_CASE("json records: envelope and byte-stable dumps") {
    const auto rec = make_record({{"omega0", 1.0}}, {{"regime", "R6"}});
    CHECK(rec.at("schema_version") == kSchemaVersion);
    CHECK(rec.at("tool") == kToolVersion);
    CHECK(rec.at("inputs").at("omega0") == 1.0);

    const std::string a = dump_record(rec);
    const std::string b = dump_record(make_record({{"omega0", 1.0}}, {{"regime", "R6"}}));
    CHECK(a == b);
    CHECK(a.back() == '\n');

    // Round-trip under the same schema.
    const auto parsed = nlohmann::json::parse(a);
    CHECK(parsed == rec);
}
