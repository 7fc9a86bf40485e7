#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "egrav/csv.hpp"
#include "egrav/error.hpp"

using namespace egrav;

TEST_SUITE("csv") {
    TEST_CASE("header and rows") {
        CsvTable t("demo", {{"x", "m"}, {"n", "1"}, {"label", "-"}});
        t.add_row({0.5, 3LL, std::string("a,b")});
        const std::string s = t.str();
        CHECK(s == "# egrav-csv v1 schema=demo\nx[m],n[1],label[-]\n0.5,3,\"a,b\"\n");
        CHECK_THROWS_AS(t.add_row({1.0}), ValidationError);
        CHECK_THROWS_AS(CsvTable("empty", {}), ValidationError);
    }

    TEST_CASE("doubles round-trip exactly") {
        CsvTable t("rt", {{"v", "1"}});
        const double vals[] = {0.1, 1.0 / 3.0, 6.02214076e23, -2.2810379889028396, 5e-324, 1.7976931348623157e308};
        for (double v : vals) t.add_row({v});
        std::istringstream in(t.str());
        std::string line;
        std::getline(in, line);
        std::getline(in, line);
        for (double v : vals) {
            std::getline(in, line);
            CHECK(std::strtod(line.c_str(), nullptr) == v);
        }
    }

    TEST_CASE("FNV-1a reference vectors") {
        CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
        CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
        CHECK(hex64(fnv1a64("foobar")) == "85944171f73967e8");
    }

    TEST_CASE("file output") {
        const auto dir = std::filesystem::temp_directory_path() / "egrav_csv_test";
        std::filesystem::remove_all(dir);
        CsvTable t("demo", {{"x", "m"}});
        t.add_row({1.0});
        t.write(dir / "sub" / "out.csv");
        std::ifstream f(dir / "sub" / "out.csv");
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(ss.str() == t.str());
        std::filesystem::remove_all(dir);
        CHECK_THROWS_AS(write_text_file("/proc/egrav/forbidden.csv", "x"), IoError);
    }
}
