#include <doctest.h>

#include <json.hpp>

#include "vpt/errors.hpp"
#include "vpt/report.hpp"

using namespace vpt;

TEST_SUITE("report") {
  const Table table{{{"n", CellKind::kInteger}, {"alpha", CellKind::kDecimal}, {"note", CellKind::kText}},
                    {{"0", "0.6679862591", "a,b"}, {"12", "-0.0086275656", "x"}}};

  TEST_CASE("formats") {
    CHECK(parse_format("text") == OutputFormat::kText);
    CHECK(parse_format("csv") == OutputFormat::kCsv);
    CHECK(parse_format("json") == OutputFormat::kJson);
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
  }

  TEST_CASE("text aligns and groups") {
    const std::string text = render(table, OutputFormat::kText);
    CHECK(text ==
          " n             alpha  note\n"
          " 0   0.667 986 259 1  a,b\n"
          "12  -0.008 627 565 6  x\n");
  }

  TEST_CASE("csv quotes fields") {
    CHECK(render(table, OutputFormat::kCsv) == "n,alpha,note\n0,0.6679862591,\"a,b\"\n12,-0.0086275656,x\n");
  }

  TEST_CASE("json keeps decimals as strings") {
    const auto j = nlohmann::json::parse(render(table, OutputFormat::kJson));
    REQUIRE(j.size() == 2);
    CHECK(j[1]["n"] == 12);
    CHECK(j[1]["alpha"] == "-0.0086275656");
    CHECK(j[0]["note"] == "a,b");
  }
}
