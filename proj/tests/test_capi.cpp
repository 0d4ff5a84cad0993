// Exercises the shared-library surface only: umkit.h, opaque handles, error
// codes. No core headers.
#include <doctest.h>

#include <string>

#include "umkit.h"

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  umk_string_free(text);
  return out;
}

constexpr const char* kDlpsJson =
    R"({"labels":["0","1/2","1"],"matrix":[["0","1/2","1"],["1/2","0","1"],["1","1","0"]]})";
constexpr const char* kLineJson =
    R"({"labels":["0","1","2"],"matrix":[["0","1","2"],["1","0","1"],["2","1","0"]]})";

}  // namespace

TEST_CASE("space lifecycle and validation through the C API") {
  umk_space* space = nullptr;
  REQUIRE(umk_space_from_json(kDlpsJson, &space) == UMK_OK);
  CHECK(umk_space_point_count(space) == 3);

  char* label = nullptr;
  REQUIRE(umk_space_label(space, 1, &label) == UMK_OK);
  CHECK(take(label) == "1/2");
  CHECK(umk_space_label(space, 9, &label) == UMK_ERR_ARGUMENT);

  char* dia = nullptr;
  REQUIRE(umk_space_diameter(space, &dia) == UMK_OK);
  CHECK(take(dia) == "1");

  umk_report* report = nullptr;
  REQUIRE(umk_validate_ultrametric(space, &report) == UMK_OK);
  CHECK(umk_report_valid(report) == 1);
  CHECK(umk_report_witness_count(report) == 0);
  umk_report_free(report);

  char* json = nullptr;
  REQUIRE(umk_space_to_json(space, &json) == UMK_OK);
  umk_space* reparsed = nullptr;
  REQUIRE(umk_space_from_json(take(json).c_str(), &reparsed) == UMK_OK);
  CHECK(umk_space_point_count(reparsed) == 3);
  umk_space_free(reparsed);
  umk_space_free(space);
}

TEST_CASE("invalid space yields witnesses, not errors") {
  umk_space* line = nullptr;
  REQUIRE(umk_space_from_json(kLineJson, &line) == UMK_OK);
  umk_report* report = nullptr;
  REQUIRE(umk_validate_ultrametric(line, &report) == UMK_OK);
  CHECK(umk_report_valid(report) == 0);
  CHECK(umk_report_witness_count(report) == 1);
  char* rendered = nullptr;
  REQUIRE(umk_report_render(report, UMK_FORMAT_JSON, &rendered) == UMK_OK);
  CHECK(take(rendered).find("strong_triangle") != std::string::npos);
  umk_report_free(report);

  REQUIRE(umk_isosceles_witnesses(line, &report) == UMK_OK);
  CHECK(umk_report_witness_count(report) == 1);
  umk_report_free(report);

  REQUIRE(umk_center_invariance_check(line, &report) == UMK_OK);
  CHECK(umk_report_valid(report) == 0);
  umk_report_free(report);
  umk_space_free(line);
}

TEST_CASE("error codes and last_error messages") {
  umk_space* space = nullptr;
  CHECK(umk_space_from_json(nullptr, &space) == UMK_ERR_ARGUMENT);
  CHECK(umk_space_from_json("{", &space) == UMK_ERR_PARSE);
  CHECK(std::string(umk_last_error()).find("space JSON") != std::string::npos);
  CHECK(umk_space_from_json(
            R"({"labels":["a","b"],"matrix":[["0","1"],["2","0"]]})", &space) ==
        UMK_ERR_STRUCTURE);

  // Ball partition on a non-ultrametric space is a precondition failure.
  umk_space* line = nullptr;
  REQUIRE(umk_space_from_json(kLineJson, &line) == UMK_OK);
  char* out = nullptr;
  CHECK(umk_ball_partition(line, "1", nullptr, UMK_FORMAT_TEXT, &out) == UMK_ERR_PRECONDITION);
  CHECK(umk_open_ball(line, "0", "0", UMK_FORMAT_TEXT, &out) == UMK_ERR_PRECONDITION);
  CHECK(umk_open_ball(line, "zz", "1", UMK_FORMAT_TEXT, &out) == UMK_ERR_STRUCTURE);
  umk_space_free(line);
}

TEST_CASE("constructors through the C API") {
  umk_space* dlps = nullptr;
  REQUIRE(umk_construct_dlps("0,1/2,2,3", &dlps) == UMK_OK);
  char* out = nullptr;
  REQUIRE(umk_ball_partition(dlps, "1", nullptr, UMK_FORMAT_TEXT, &out) == UMK_OK);
  CHECK(take(out) == "0: 0 1/2\n2: 2\n3: 3\n");

  umk_space* modified = nullptr;
  REQUIRE(umk_construct_modify(dlps, "1", "5/4,3/2,7/4", &modified) == UMK_OK);
  REQUIRE(umk_distance_set(modified, UMK_FORMAT_TEXT, &out) == UMK_OK);
  CHECK(take(out) == "0 1/2 3/2 7/4\n");
  umk_space_free(modified);
  CHECK(umk_construct_modify(dlps, "1", "5/4,3/2", &modified) == UMK_ERR_STRUCTURE);
  umk_space_free(dlps);

  umk_space* part = nullptr;
  REQUIRE(umk_construct_partition("a|b,c", &part) == UMK_OK);
  REQUIRE(umk_distance_set(part, UMK_FORMAT_TEXT, &out) == UMK_OK);
  CHECK(take(out) == "0 1/2 1\n");

  umk_space* composed = nullptr;
  REQUIRE(umk_construct_compose(part, "collapse1", &composed) == UMK_OK);
  REQUIRE(umk_distance_set(composed, UMK_FORMAT_TEXT, &out) == UMK_OK);
  CHECK(take(out) == "0 1\n");
  CHECK(umk_construct_compose(part, "mystery", &composed) == UMK_ERR_STRUCTURE);
  umk_space_free(composed);
  umk_space_free(part);
}

TEST_CASE("trees, order types and gamma through the C API") {
  umk_space* dlps = nullptr;
  REQUIRE(umk_construct_dlps("0,1/2,1", &dlps) == UMK_OK);
  char* out = nullptr;
  REQUIRE(umk_dendrogram_newick(dlps, &out) == UMK_OK);
  CHECK(take(out) == "((0,1/2):1/2,1):1;");
  REQUIRE(umk_dendrogram_json(dlps, &out) == UMK_OK);
  CHECK(take(out).find("\"level\":\"1\"") != std::string::npos);
  umk_space_free(dlps);

  REQUIRE(umk_classify_order_type(R"({"head":["0"],"tail":{"rule":"reciprocal"}})",
                                  UMK_FORMAT_TEXT, &out) == UMK_OK);
  CHECK(take(out).rfind("OnePlusOmegaStar", 0) == 0);

  int tb = -1;
  REQUIRE(umk_tb_distance_set_check(
              R"({"head":["0"],"tail":{"rule":"shifted","params":{"offset":"1"}}})",
              UMK_FORMAT_JSON, &tb, &out) == UMK_OK);
  CHECK(tb == 0);
  CHECK(take(out).find("\"route_normal_form\":false") != std::string::npos);

  umk_gamma* gd = nullptr;
  REQUIRE(umk_gamma_from_json(
              R"({"gamma":["g0","g1","g2"],"labels":["x","y","z"],
                  "matrix":[["g0","g1","g2"],["g1","g0","g2"],["g2","g2","g0"]]})",
              &gd) == UMK_OK);
  umk_report* report = nullptr;
  REQUIRE(umk_gamma_validate(gd, &report) == UMK_OK);
  CHECK(umk_report_valid(report) == 1);
  umk_report_free(report);
  REQUIRE(umk_gamma_ball(gd, "x", "g2", UMK_FORMAT_TEXT, &out) == UMK_OK);
  CHECK(take(out) == "x y\n");
  int holds = 0;
  REQUIRE(umk_gamma_base_check(gd, UMK_FORMAT_TEXT, &holds, &out) == UMK_OK);
  CHECK(holds == 1);
  take(out);
  umk_gamma_free(gd);
}
