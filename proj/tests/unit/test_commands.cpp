#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hsimplex/commands.hpp"

#ifndef HSIMPLEX_TEST_DATA
#define HSIMPLEX_TEST_DATA "tests/data"
#endif

using namespace hsimplex;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("toric-h") {
  CHECK(cmd_toric_h(3, 7).values == bigs({1, 8, 29, 29, 29, 8, 1}));
  CHECK(cmd_toric_h(1, 5).values == bigs({1, 1, 1, 1, 1}));
  CHECK(cmd_toric_h(4, 6).values == cmd_toric_h(2, 6).values);
  CHECK(cmd_toric_h(4, 6).values == bigs({1, 7, 7, 7, 7, 1}));
  const auto rec = cmd_toric_h(4, 6, Method::recursion);
  CHECK(rec.ok);
  CHECK(rec.method == "oracle");
  CHECK_THROWS_AS(cmd_toric_h(0, 5), UsageError);
  CHECK_THROWS_AS(cmd_toric_h(5, 5), UsageError);
  CHECK_THROWS_AS(cmd_toric_h(2, 5, Method::bfs), UsageError);
}

TEST_CASE("chow-betti") {
  CHECK(cmd_chow_betti(3, 8, {}).values == bigs({1, 1, 9, 37, 37, 37, 9, 1}));
  CHECK(cmd_chow_betti(2, 10, {}).values == bigs({1, 1, 11, 11, 11, 11, 11, 11, 11, 1}));
  CHECK(cmd_chow_betti(2, 4, 3).values == bigs({1}));
  const auto rec = cmd_chow_betti(4, 6, {}, Method::rank);
  CHECK(rec.ok);
  CHECK(rec.values == bigs({1, 1, 7, 7, 7, 1}));
  CHECK(cmd_chow_betti(2, 9, 4, Method::rank, RankMode::mod_p).ok);
  CHECK_THROWS_AS(cmd_chow_betti(2, 9, {}, Method::rank, RankMode::exact), UsageError);
  CHECK_THROWS_AS(cmd_chow_betti(2, 4, 4), UsageError);
}

TEST_CASE("coordinator") {
  CHECK(cmd_coordinator(4).values == bigs({1, 5, 5, 1}));
  CHECK(cmd_coordinator(2).values == bigs({1, 1}));
  const auto rec = cmd_coordinator(3, Method::bfs, 3);
  CHECK(rec.ok);
  CHECK(to_text(rec) == "S: 1 6 12 18\nh: 1 4 1");
  CHECK_THROWS_AS(cmd_coordinator(1), UsageError);
  CHECK_THROWS_AS(cmd_coordinator(5, Method::bfs, 2), UsageError);
}

TEST_CASE("table") {
  const auto four = cmd_table(4);
  REQUIRE(four.size() == 1);
  CHECK(table_text(four) == "2, 4 | 1 5 5 1 | 1 1 5 1\n");
  CHECK(table_text(cmd_table(6)).find("3, 6 | 1 7 22 22 7 1 | 1 1 7 22 7 1\n") != std::string::npos);
  const auto ten = cmd_table(10);
  CHECK(ten.size() == 16);
  CHECK(table_text(ten) == slurp(std::string(HSIMPLEX_TEST_DATA) + "/table_golden.txt"));
  CHECK(table_text(ten) == table_text(cmd_table(10)));
  for (const auto& row : cmd_table(6, Method::recursion)) CHECK(row.ok);
  CHECK_THROWS_AS(cmd_table(3), UsageError);
  CHECK_THROWS_AS(cmd_table(11), UsageError);
}

TEST_CASE("record formats") {
  auto rec = cmd_chow_betti(2, 5, 2);
  CHECK(to_csv(rec) == "chow_betti,2,5,2,formula,6,ok");
  CHECK(csv_header() == "kind,k,n,r,method,values,status");
  const auto row = cmd_table(4).front();
  CHECK(to_csv(row) == "table_row,2,4,,formula,1 5 5 1 | 1 1 5 1,ok");

  for (const auto& r : {rec, row, cmd_coordinator(3, Method::bfs), cmd_toric_h(2, 6, Method::recursion)}) {
    const auto j = to_json(r);
    CHECK(record_from_json(nlohmann::json::parse(j.dump())) == r);
  }
  const auto j = to_json(rec);
  CHECK(j.at("params").at("r") == 2);
  CHECK(j.at("status") == "ok");
  auto broken = j;
  broken["status"] = "maybe";
  CHECK_THROWS(record_from_json(broken));
  broken = j;
  broken["values"] = nlohmann::json::array();
  CHECK_THROWS(record_from_json(broken));

  std::ostringstream csv;
  write_records(csv, cmd_table(5), Format::csv);
  CHECK(csv.str().rfind("kind,k,n,r,method,values,status\n", 0) == 0);
  std::ostringstream js;
  write_records(js, cmd_table(5), Format::json);
  CHECK(nlohmann::json::parse(js.str()).size() == 2);
}

TEST_CASE("parse helpers") {
  CHECK(parse_method("bfs") == Method::bfs);
  CHECK_THROWS_AS(parse_method("magic"), UsageError);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_fault("chow_last:-1").chow_last == -1);
  CHECK(parse_fault("toric_first=+1").toric_first == 1);
  CHECK_THROWS_AS(parse_fault("nonsense:+1"), UsageError);
  CHECK_THROWS_AS(parse_fault("toric_first"), UsageError);
  CHECK(normalize_k(5, 7) == 2);
  CHECK(normalize_k(3, 7) == 3);
}

TEST_CASE("verify sweep") {
  std::ostringstream log;
  const auto report = cmd_verify({.max_n = 5}, &log);
  CHECK(report.passed());
  CHECK(report.exit_code() == 0);
  CHECK(log.str().find("FAIL") == std::string::npos);
  CHECK(report.records(5).size() == report.families.size());

  VerifyOptions faulty{.max_n = 5};
  faulty.shift.chow_first = 1;
  std::ostringstream flog;
  const auto bad = cmd_verify(faulty, &flog);
  CHECK(bad.exit_code() == 1);
  CHECK(flog.str().find("FAIL r=2 k=1 n=4") != std::string::npos);
}
