#include "stab/stab.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

const char* kTriple =
    R"({"ambient_rank": 3, "points": [["1","0","0"],["1","0","0"],["1","0","0"],["0","1","0"],["1","1","1"],["1","2","3"]]})";

json take(char* s) {
  json j = json::parse(s);
  stab_string_free(s);
  return j;
}

struct Config {
  stab_config* ptr = nullptr;
  explicit Config(const char* text) { EXPECT_EQ(stab_config_parse(text, &ptr), STAB_OK) << stab_last_error(); }
  ~Config() { stab_config_free(ptr); }
};

}  // namespace

TEST(CApi, ConfigLifecycle) {
  Config c(kTriple);
  EXPECT_EQ(stab_config_size(c.ptr), 6u);
  EXPECT_EQ(stab_config_ambient_rank(c.ptr), 3u);
  char* out = nullptr;
  ASSERT_EQ(stab_config_to_json(c.ptr, &out), STAB_OK);
  EXPECT_EQ(take(out)["points"][0], json::array({"1", "0", "0"}));
}

TEST(CApi, ErrorCodesAndMessages) {
  stab_config* c = nullptr;
  EXPECT_EQ(stab_config_parse("{", &c), STAB_ERR_PARSE);
  EXPECT_NE(std::string(stab_last_error()), "");
  EXPECT_EQ(c, nullptr);
  EXPECT_EQ(stab_config_parse(R"({"ambient_rank": 2})", &c), STAB_ERR_SCHEMA);
  EXPECT_EQ(stab_config_parse(nullptr, &c), STAB_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(stab_status_name(STAB_ERR_SCHEMA), "Schema");
  EXPECT_STREQ(stab_status_name(STAB_OK), "Ok");

  char* out = nullptr;
  EXPECT_EQ(stab_critical_values(2, 4, 2, &out), STAB_OK);
  stab_string_free(out);
  EXPECT_STREQ(stab_last_error(), "");
}

TEST(CApi, GitClassify) {
  Config c(kTriple);
  char* out = nullptr;
  ASSERT_EQ(stab_git_classify(c.ptr, "2", 0, 0, &out), STAB_OK);
  const json fast = take(out);
  EXPECT_EQ(fast["class"], "Unstable");
  EXPECT_EQ(fast["margin"], "1");
  ASSERT_EQ(stab_git_classify(c.ptr, "2", 1, 12, &out), STAB_OK);
  EXPECT_EQ(take(out), fast);
  EXPECT_EQ(stab_git_classify(c.ptr, "2", 1, 3, &out), STAB_ERR_TOO_LARGE);
  EXPECT_EQ(stab_git_classify(c.ptr, "0", 0, 0, &out), STAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(stab_git_classify(c.ptr, "1.5", 0, 0, &out), STAB_ERR_PARSE);
}

TEST(CApi, RankOneHasNullMargin) {
  Config c(R"({"ambient_rank": 1, "points": [["1"], ["2"]]})");
  char* out = nullptr;
  ASSERT_EQ(stab_git_classify(c.ptr, "1", 0, 0, &out), STAB_OK);
  const json j = take(out);
  EXPECT_EQ(j["class"], "Stable");
  EXPECT_TRUE(j["margin"].is_null());
}

TEST(CApi, CohsysCalls) {
  char* out = nullptr;
  ASSERT_EQ(stab_critical_values(2, 4, 2, &out), STAB_OK);
  EXPECT_EQ(take(out), (json{{"values", {"1", "2"}}}));
  EXPECT_EQ(stab_critical_values(0, 4, 2, &out), STAB_ERR_INVALID_ARGUMENT);

  Config c(kTriple);
  ASSERT_EQ(stab_alpha_check(c.ptr, "2", "1", &out), STAB_OK);
  EXPECT_EQ(take(out)["semistable"], false);
  EXPECT_EQ(stab_alpha_check(c.ptr, "3", "1", &out), STAB_ERR_SIZE_MISMATCH);

  int agree = -1;
  ASSERT_EQ(stab_equivalence(c.ptr, 2, &out, &agree), STAB_OK);
  EXPECT_EQ(agree, 1);
  EXPECT_EQ(take(out)["alpha"], "5");
}

TEST(CApi, DestableExampleRoundTrip) {
  stab_config* c = nullptr;
  ASSERT_EQ(stab_destable_example(3, "1/2,2,3,-1", &c), STAB_OK);
  EXPECT_EQ(stab_config_size(c), 6u);
  char* out = nullptr;
  ASSERT_EQ(stab_git_classify(c, "3", 0, 0, &out), STAB_OK);
  EXPECT_EQ(take(out)["class"], "Stable");
  stab_config_free(c);
  c = nullptr;
  EXPECT_EQ(stab_destable_example(3, "1,2", &c), STAB_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(stab_destable_example(3, "1,2,x,4", &c), STAB_ERR_PARSE);
}

TEST(CApi, Gale) {
  Config c(R"({"ambient_rank": 3, "points": [["0","0","1"],["1","1","1"],["-1","1","1"],["2","4","1"],["-2","4","1"],["3","9","1"]]})");
  char* out = nullptr;
  ASSERT_EQ(stab_gale(c.ptr, 0, 0, &out), STAB_OK);
  const json j = take(out);
  EXPECT_EQ(j["self_associated"], true);
  EXPECT_EQ(j["diag"].size(), 6u);
  ASSERT_EQ(stab_gale(c.ptr, 1, 9, &out), STAB_OK);
  EXPECT_EQ(take(out)["self_associated"], true);
}

TEST(CApi, Hypersurfaces) {
  char* out = nullptr;
  int passed = 0;
  ASSERT_EQ(stab_hypersurface_verify("igusa", 0, 0, &out, &passed), STAB_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(take(out)["singular_lines"], 15);
  ASSERT_EQ(stab_hypersurface_verify("duality", 20, 3, &out, &passed), STAB_OK);
  EXPECT_EQ(passed, 1);
  take(out);
  EXPECT_EQ(stab_hypersurface_verify("cayley", 0, 0, &out, &passed), STAB_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(stab_incidence(&out), STAB_OK);
  EXPECT_EQ(take(out)["is_15_3"], true);
}
