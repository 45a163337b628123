#include <affico/verify.hpp>

#include <gtest/gtest.h>

using namespace affico;

// A second seed on top of the one the acceptance run uses.
TEST(Properties, RandomizedSuites) {
  const std::size_t n = 1000;
  const auto results = property_suites(n, 7);
  EXPECT_GE(results.size(), 8U);
  for (const auto& r : results) {
    EXPECT_GE(r.cases, n) << r.name;
    EXPECT_EQ(r.failures, 0U) << r.name;
  }
}
