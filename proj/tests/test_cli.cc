#include <gtest/gtest.h>

#include "commands.h"
#include "json.hpp"

using namespace circmagic;
using namespace circmagic::cli;
using nlohmann::json;

namespace {

json first_line(const Outcome& o) { return json::parse(o.out.substr(0, o.out.find('\n'))); }

}  // namespace

TEST(Cli, DecideEnvelope) {
  const auto o = cmd_decide("105:1,6,34", {});
  EXPECT_EQ(o.exit_code, kExitOk);
  const auto j = first_line(o);
  EXPECT_EQ(j["kind"], "classify");
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["version"], version());
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_EQ(j["result"]["status"], "yes");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cmd_decide("7:1,2,3", {}).exit_code, kExitNo);
  EXPECT_EQ(cmd_decide("24:2,4,6", {}).exit_code, kExitUsage);
  EXPECT_EQ(cmd_decide("nonsense", {}).exit_code, kExitUsage);
  EXPECT_EQ(cmd_label("Foo[3]", {}).exit_code, kExitUnknown);
  EXPECT_EQ(cmd_label("T1b[5,7,11]", {}).exit_code, kExitOk);
  EXPECT_EQ(cmd_label("C3K[6]", {}).exit_code, kExitNo);
  Options tiny;
  tiny.budget = {10, 0};
  EXPECT_EQ(cmd_search("24:1,2,3", {}, tiny).exit_code, kExitUnknown);
}

TEST(Cli, VerifyRoundTrip) {
  const auto l = first_line(cmd_label("12:1,3,5", {}));
  const std::string table = l["result"]["labeling"].dump();
  EXPECT_EQ(cmd_verify("12:1,3,5", table, {}).exit_code, kExitOk);
  EXPECT_EQ(cmd_verify("12:1,3,5", "[1,2,3,4,5,6,7,8,9,10,11,12]", {}).exit_code, kExitNo);
  EXPECT_EQ(cmd_verify("12:1,3,5", "[1,2,3]", {}).exit_code, kExitUsage);
}

TEST(Cli, EnumerateAndAdmissible) {
  auto j = first_line(cmd_enumerate(12, true, {}));
  EXPECT_EQ(j["result"]["families"].size(), 3u);
  j = first_line(cmd_admissible("24:1,2,3", {}));
  EXPECT_EQ(j["result"]["admissible"].size(), 6u);
}

TEST(Cli, ScanEmitsSummary) {
  Options o;
  o.nmax = 9;
  const auto out = cmd_scan(7, o);
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto last = out.out.substr(out.out.rfind('\n', out.out.size() - 2) + 1);
  EXPECT_EQ(json::parse(last)["kind"], "scan-summary");
}

TEST(Cli, SelftestAndNegativeControl) {
  EXPECT_EQ(cmd_selftest({}, false).exit_code, kExitOk);
  EXPECT_EQ(cmd_selftest({}, true).exit_code, kExitNo);
}
