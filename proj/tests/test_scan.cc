#include <gtest/gtest.h>

#include "circmagic/scan.h"
#include "json.hpp"

using namespace circmagic;

TEST(Scan, SmallOrdersAgree) {
  ScanOptions o;
  o.n_min = 7;
  o.n_max = 12;
  o.jobs = 2;
  const auto rep = exhaustive_scan(o);
  EXPECT_EQ(rep.matrix.disagree, 0);
  EXPECT_EQ(rep.matrix.inconclusive, 0);
  EXPECT_EQ(static_cast<size_t>(rep.matrix.agree), rep.records.size());
  size_t classes = 0;
  for (Int n = 7; n <= 12; ++n) classes += enumerate_sets(n).size();
  EXPECT_EQ(rep.records.size(), classes);
}

TEST(Scan, DeterministicAcrossJobCounts) {
  ScanOptions a;
  a.n_min = 13;
  a.n_max = 15;
  a.jobs = 1;
  ScanOptions b = a;
  b.jobs = 4;
  const auto ra = exhaustive_scan(a), rb = exhaustive_scan(b);
  ASSERT_EQ(ra.records.size(), rb.records.size());
  for (size_t i = 0; i < ra.records.size(); ++i) {
    EXPECT_EQ(to_json_line(ra.records[i]), to_json_line(rb.records[i]));
  }
  EXPECT_EQ(to_json(ra.matrix), to_json(rb.matrix));
}

TEST(Scan, RecordJson) {
  const auto recs = scan_order(12, {});
  ASSERT_FALSE(recs.empty());
  for (const auto& r : recs) {
    const auto j = nlohmann::json::parse(to_json_line(r));
    EXPECT_EQ(j["n"], 12);
    EXPECT_TRUE(j.contains("decide"));
    EXPECT_TRUE(j.contains("agreement"));
    EXPECT_FALSE(j.contains("seconds"));
  }
}

TEST(Scan, RejectsBadRanges) {
  ScanOptions o;
  o.n_min = 20;
  o.n_max = 10;
  EXPECT_THROW(exhaustive_scan(o), DomainError);
  o.n_min = 7;
  o.n_max = 500;
  EXPECT_THROW(exhaustive_scan(o), DomainError);
}
