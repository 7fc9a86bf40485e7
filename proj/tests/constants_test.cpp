#include <doctest.h>

#include <cmath>

#include "egrav/constants.hpp"
#include "egrav/error.hpp"

using namespace egrav;

TEST_SUITE("constants") {
    TEST_CASE("species masses") {
        CHECK(lookup_species("Cs133").mass() == doctest::Approx(2.2069469514537008e-25).epsilon(1e-12));
        CHECK(lookup_species("H1").mass() == doctest::Approx(1.6735328383153191e-27).epsilon(1e-12));
    }

    TEST_CASE("unknown species lists the alternatives") {
        try {
            lookup_species("Xx9");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("Cs133") != std::string::npos);
        }
    }

    TEST_CASE("unruh temperature") {
        CHECK(unruh_temperature(9.81) == doctest::Approx(3.977968265813071e-20).epsilon(1e-12));
        CHECK(unruh_temperature(0.0) == 0.0);
        CHECK_THROWS_AS(unruh_temperature(-1.0), ValidationError);
    }

    TEST_CASE("gamma factor") {
        CHECK(GammaParameter::standard().factor() == doctest::Approx(1.0));
        CHECK(GammaParameter::alternative().factor() == doctest::Approx(64.0 * M_PI * M_PI));
        CHECK_THROWS_AS(make_gamma(0.0), ValidationError);
    }

    TEST_CASE("species file round trip is exact") {
        const auto& db = SpeciesDatabase::builtin();
        const auto again = SpeciesDatabase::parse(db.serialize());
        REQUIRE(again.all().size() == db.all().size());
        for (std::size_t i = 0; i < db.all().size(); ++i) CHECK(again.all()[i] == db.all()[i]);
    }

    TEST_CASE("shipped species file matches the built-in table") {
        const auto file = SpeciesDatabase::load(std::string(EGRAV_SOURCE_DIR) + "/data/species.txt");
        for (const auto& s : SpeciesDatabase::builtin().all()) CHECK(file.lookup(s.name) == s);
    }

    TEST_CASE("species file rejects unknown keys") {
        CHECK_THROWS_AS(SpeciesDatabase::parse("[X]\nmass_amu = 1\na_s_nm = 0\nspin = 1\n"), ValidationError);
    }
}
