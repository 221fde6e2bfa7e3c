#include "gsr/properties.hpp"

#include <gtest/gtest.h>

namespace gsr {
namespace {

class PropertySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(PropertySuite, PassesAtDefaultSeed) {
  const PropertyResult r = run_property(GetParam(), 7);
  EXPECT_TRUE(r.passed) << r.name << ": measured " << r.measured << " vs " << r.tolerance << " " << r.detail;
}

TEST_P(PropertySuite, PassesAtAnotherSeed) {
  const PropertyResult r = run_property(GetParam(), 20261015);
  EXPECT_TRUE(r.passed) << r.name << ": measured " << r.measured << " vs " << r.tolerance << " " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(All, PropertySuite, ::testing::ValuesIn(property_names()),
                         [](const auto& info) { return info.param; });

TEST(PropertySuiteMeta, UnknownNameThrows) { EXPECT_THROW(run_property("no_such_property", 1), std::exception); }

}  // namespace
}  // namespace gsr
