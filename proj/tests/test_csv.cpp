#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gaugeqed/csv.hpp"

using namespace gaugeqed;

TEST_CASE("format_sig12") {
    CHECK(format_sig12(0.0) == "0");
    CHECK(format_sig12(-0.0) == "0");
    CHECK(format_sig12(0.5) == "0.5");
    CHECK(format_sig12(1.0) == "1");
    CHECK(format_sig12(2.25) == "2.25");
    CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
    CHECK(format_sig12(-1.5e-12) == "-1.5e-12");
    CHECK(format_sig12(123456789012345.0) == "1.23456789012e+14");
    CHECK(format_sig12(std::nan("")) == "nan");
    // locale independence is inherited from to_chars; identical bits give
    // identical text
    CHECK(format_sig12(0.1 + 0.2) == format_sig12(0.1 + 0.2));
}

TEST_CASE("csv writer emits LF rows with a header") {
    std::ostringstream out;
    CsvWriter csv(out);
    csv.header({"a", "b"});
    csv.numeric_row({1.0, 0.25});
    csv.row({"x", "y"});
    CHECK(out.str() == "a,b\n1,0.25\nx,y\n");
}
