// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "coheng.h"

namespace {

std::string take_string(char* raw) {
  std::string out(raw);
  coheng_string_free(raw);
  return out;
}

}  // namespace

TEST_CASE("scalar helpers report values and reject bad input") {
  int d = 0;
  REQUIRE(coheng_effective_bath_dimension(1.0, 1e-8, &d) == COHENG_OK);
  CHECK(d == 17);
  CHECK(coheng_effective_bath_dimension(-1.0, 1e-8, &d) == COHENG_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(coheng_last_error()) > 0);

  double amp = 0.0;
  REQUIRE(coheng_coherence_amplitude_abs(1.0, 5.0, 22, 1, &amp) == COHENG_OK);
  CHECK(amp > 0.0);
  double bare = 0.0;
  REQUIRE(coheng_coherence_amplitude_abs(1.0, 5.0, 22, 0, &bare) == COHENG_OK);
  CHECK(std::abs(bare * std::exp(-0.5) - amp) < 1e-12);
}

TEST_CASE("charge tables expose the schema through the handle API") {
  coheng_table* table = nullptr;
  REQUIRE(coheng_charge(1.0, 5.0, 4, 1e-8, 1, &table) == COHENG_OK);
  REQUIRE(table != nullptr);
  CHECK(coheng_table_rows(table) == 1);
  REQUIRE(coheng_table_cols(table) == 10);
  CHECK(std::string(coheng_table_column_name(table, 0)) == "N");
  CHECK(std::string(coheng_table_column_name(table, 8)) == "eta");
  CHECK(std::string(coheng_table_column_name(table, 9)) == "delta_abs");
  CHECK(coheng_table_value(table, 0, 0) == 4.0);
  CHECK(coheng_table_value(table, 0, 8) > 0.0);

  char* csv = nullptr;
  REQUIRE(coheng_table_csv(table, &csv) == COHENG_OK);
  const std::string text = take_string(csv);
  CHECK(text.rfind("N,beta_omega0,gt,", 0) == 0);
  char* json = nullptr;
  REQUIRE(coheng_table_json(table, &json) == COHENG_OK);
  CHECK(take_string(json).find("\"rows\"") != std::string::npos);
  coheng_table_free(table);

  coheng_table* bad = nullptr;
  CHECK(coheng_charge(-2.0, 5.0, 1, 1e-8, 1, &bad) == COHENG_ERR_INVALID_ARGUMENT);
  CHECK(coheng_charge(1.0, 5.0, 4, 1e-8, 1, nullptr) == COHENG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sweep handles are deterministic across calls") {
  coheng_table* first = nullptr;
  coheng_table* second = nullptr;
  REQUIRE(coheng_sweep(2, 0.5, 1.5, 3, 0.0, 6.0, 3, 1e-8, &first) == COHENG_OK);
  REQUIRE(coheng_sweep(2, 0.5, 1.5, 3, 0.0, 6.0, 3, 1e-8, &second) == COHENG_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(coheng_table_csv(first, &a) == COHENG_OK);
  REQUIRE(coheng_table_csv(second, &b) == COHENG_OK);
  CHECK(take_string(a) == take_string(b));
  coheng_table_free(first);
  coheng_table_free(second);

  coheng_table* bad = nullptr;
  CHECK(coheng_sweep(2, 1.5, 0.5, 3, 0.0, 6.0, 3, 1e-8, &bad) ==
        COHENG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification reports flow through the C surface") {
  coheng_report* report = nullptr;
  REQUIRE(coheng_verify("truncation", 0, 1e-8, &report) == COHENG_OK);
  REQUIRE(report != nullptr);
  CHECK(coheng_report_passed(report) == 1);
  char* json = nullptr;
  REQUIRE(coheng_report_json(report, &json) == COHENG_OK);
  CHECK(take_string(json).find("\"suite\": \"truncation\"") != std::string::npos);
  coheng_report_free(report);

  coheng_report* bad = nullptr;
  CHECK(coheng_verify("nope", 0, 1e-8, &bad) == COHENG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("figure presets return tables and optional reports") {
  coheng_table* table = nullptr;
  coheng_report* report = nullptr;
  REQUIRE(coheng_figure("fig6", 1, 1e-8, &table, &report) == COHENG_OK);
  CHECK(coheng_table_rows(table) == 201);
  CHECK(report == nullptr);
  coheng_table_free(table);

  table = nullptr;
  REQUIRE(coheng_figure("fig3", 1, 1e-8, &table, &report) == COHENG_OK);
  REQUIRE(report != nullptr);
  char* json = nullptr;
  REQUIRE(coheng_report_json(report, &json) == COHENG_OK);
  CHECK(take_string(json).find("observed_argmax_n") != std::string::npos);
  coheng_table_free(table);
  coheng_report_free(report);

  CHECK(coheng_figure("fig99", 1, 1e-8, &table, &report) == COHENG_ERR_INVALID_ARGUMENT);
}
