#include <gtest/gtest.h>

#include <cmath>

#include "axiswalk/serialize.hpp"
#include "property.hpp"

namespace axiswalk {
namespace {

using testing::for_all;
using testing::Gen;

TEST(ParsePoint, Accepts) {
    EXPECT_EQ(parse_point("0,1"), (LatticePoint{0, 1}));
    EXPECT_EQ(parse_point("-12,7"), (LatticePoint{-12, 7}));
}

TEST(ParsePoint, Rejects) {
    for (const char* bad : {"", "1", "1,", ",2", "1,2,3", "a,b", "1.5,2", "1;2", " 3,4"}) {
        EXPECT_THROW(parse_point(bad), PreconditionError) << bad;
    }
}

TEST(Csv, Rfc4180Quoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
    EXPECT_EQ(csv_row({"x", "y,z"}), "x,\"y,z\"\r\n");
}

TEST(FormatNumber, RoundTrips) {
    for_all(51, 1000, [](Gen& g, int) {
        const double v = std::ldexp(g.real(-1.0, 1.0), static_cast<int>(g.integer(-300, 300)));
        EXPECT_EQ(std::stod(format_number(v)), v);
    });
    EXPECT_EQ(format_number(0.5), "0.5");
}

TEST(Json, MeasureLayout) {
    EmpiricalMeasure m;
    m.add({1, 0}, 0.25);
    m.add({0, -2}, 0.5);
    m.set_deficit(0.25);
    const Json j = to_json(m);
    ASSERT_EQ(j["support"].size(), 2u);
    EXPECT_EQ(j["support"][0], Json::array({0, -2, 0.5}));
    EXPECT_EQ(j["deficit"], 0.25);
}

TEST(Json, ConstantsAreFlat) {
    Constants k;
    k.c1 = 0.5;
    k.c_f["axis_local_time"] = 1.0;
    const Json j = to_json(k);
    for (const char* key : {"c0", "c1", "c2", "c", "c_prime", "c_f"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST(Csv, MeasureFile) {
    EmpiricalMeasure m;
    m.add({1, 1}, 0.75);
    m.set_deficit(0.25);
    const std::string csv = measure_csv(m);
    EXPECT_EQ(csv.rfind("x1,x2,mass\r\n", 0), 0u);
    EXPECT_NE(csv.find("1,1,0.75\r\n"), std::string::npos);
}

} // namespace
} // namespace axiswalk
