#include <doctest.h>

#include "egrav/error.hpp"
#include "egrav/kvfile.hpp"

using namespace egrav;

TEST_SUITE("kvfile") {
    TEST_CASE("sections and comments") {
        const auto doc = KvDocument::parse("# top\nx = 1\n[a]\ny = 2.5 # trailing\n\n[b]\nz = w\n");
        REQUIRE(doc.sections.size() == 3);
        CHECK(doc.section("")->get_double("x") == 1.0);
        CHECK(doc.section("a")->get_double("y") == 2.5);
        CHECK(doc.section("b")->get("z") == "w");
    }

    TEST_CASE("malformed lines are rejected") {
        CHECK_THROWS_AS(KvDocument::parse("novalue\n"), ValidationError);
        CHECK_THROWS_AS(KvDocument::parse("[open\n"), ValidationError);
    }

    TEST_CASE("require_only") {
        const auto doc = KvDocument::parse("a = 1\nb = 2\n");
        CHECK_NOTHROW(doc.section("")->require_only({"a", "b"}));
        CHECK_THROWS_AS(doc.section("")->require_only({"a"}), ValidationError);
    }

    TEST_CASE("numbers") {
        CHECK(parse_double("1e-3", "x") == 1e-3);
        CHECK_THROWS_AS(parse_double("1e-3x", "x"), ValidationError);
        CHECK_THROWS_AS(parse_double("", "x"), ValidationError);
        CHECK(format_double(0.1) == "0.1");
        CHECK(parse_double(format_double(1.0 / 3.0), "x") == 1.0 / 3.0);
    }

    TEST_CASE("missing file is an I/O error") {
        CHECK_THROWS_AS(KvDocument::load("/nonexistent/egrav.cfg"), IoError);
    }
}
