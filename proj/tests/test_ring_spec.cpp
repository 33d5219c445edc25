#include <doctest.h>

#include "cayley/ring_spec.hpp"
#include "cayley/search.hpp"

using namespace cayley;

TEST_CASE("parsing canonical atoms") {
    RingSpec z9 = parse_ring_spec("Z9");
    REQUIRE(z9.s() == 1);
    CHECK(z9.factors[0].r() == 9);
    CHECK(z9.factors[0].m() == 3);
    CHECK(z9.factors[0].family == Family::ZModPk);

    RingSpec f3f4 = parse_ring_spec("F3xF4");
    REQUIRE(f3f4.s() == 2);
    CHECK(f3f4.factors[0].r() == 3);
    CHECK(f3f4.factors[0].m() == 1);
    CHECK(f3f4.factors[1].r() == 4);
    CHECK(f3f4.factors[1].family == Family::Field);
}

TEST_CASE("Zn splits by CRT and Zp collapses to the prime field") {
    RingSpec z12 = parse_ring_spec("Z12");
    REQUIRE(z12.s() == 2);
    CHECK(z12.label() == "F3xZ4");
    CHECK(z12.factors[0].family == Family::Field);
    CHECK(z12.factors[1].r() == 4);
    CHECK(z12.factors[1].m() == 2);

    CHECK(parse_ring_spec("Z2") == parse_ring_spec("F2"));
    CHECK(parse_ring_spec("Z3xZ3xZ4") == parse_ring_spec("F3xF3xZ4"));
}

TEST_CASE("Galois ring atoms") {
    CHECK(parse_ring_spec("GR(25,1)").label() == "Z25");
    RingSpec gr = parse_ring_spec("GR(9,2)");
    CHECK(gr.factors[0].r() == 81);
    CHECK(gr.factors[0].m() == 9);
    CHECK(gr.factors[0].family == Family::GaloisRing);
    CHECK(gr.label() == "GR(9,2)");
    // same shape, different ring
    RingSpec fm = parse_ring_spec("F9[x]/(x^2)");
    CHECK(fm.factors[0].r() == 81);
    CHECK(fm.factors[0].m() == 9);
    CHECK_FALSE(fm == gr);
}

TEST_CASE("parse and domain errors") {
    CHECK_THROWS_AS(parse_ring_spec("F6"), domain_error);
    CHECK_THROWS_AS(parse_ring_spec("Z1"), domain_error);
    CHECK_THROWS_AS(parse_ring_spec("Q8"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("F3xx"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("F3x"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("F4[x]/(x^4)"), parse_error);
}

TEST_CASE("units count") {
    CHECK(parse_ring_spec("Z9").units_count() == 6);
    CHECK(parse_ring_spec("F3xF4").units_count() == 6);
    CHECK(parse_ring_spec("GR(9,2)").units_count() == 72);
}

TEST_CASE("odd type") {
    CHECK(parse_ring_spec("F4xF3").is_odd_type());
    CHECK_FALSE(parse_ring_spec("Z4xF3").is_odd_type());
    CHECK_FALSE(parse_ring_spec("F4xF4").is_odd_type());
    CHECK(parse_ring_spec("Z9").is_odd_type());
    CHECK_FALSE(parse_ring_spec("F2xF3").is_odd_type());
}

TEST_CASE("even/odd split") {
    auto [e1, o1] = parse_ring_spec("F4xF3").even_odd_split();
    REQUIRE(e1);
    REQUIRE(o1);
    CHECK(e1->label() == "F4");
    CHECK(o1->label() == "F3");

    auto [e2, o2] = parse_ring_spec("Z9").even_odd_split();
    CHECK_FALSE(e2);
    REQUIRE(o2);
    CHECK(o2->label() == "Z9");

    auto [e3, o3] = parse_ring_spec("F4xF8").even_odd_split();
    REQUIRE(e3);
    CHECK_FALSE(o3);
    CHECK(e3->label() == "F4xF8");
}

TEST_CASE("formula-only shapes") {
    RingSpec s = parse_ring_spec("L(8,2)");
    CHECK_FALSE(s.constructible());
    CHECK(s.label() == "L(8,2)");
    CHECK(parse_ring_spec(s.label()) == s);
    CHECK_THROWS_AS(parse_ring_spec("L(12,2)"), domain_error);
    CHECK_THROWS_AS(parse_ring_spec("L(8,3)"), domain_error);
    CHECK(parse_ring_spec("L(8,1)").factors[0].family == Family::Field);
}

TEST_CASE("spec invariants over the enumeration") {
    SearchConfig cfg;
    cfg.max_vertices = 100;
    for (const RingSpec& spec : enumerate_specs(cfg)) {
        CAPTURE(spec.label());
        // canonical printer round-trips
        CHECK(parse_ring_spec(spec.label()) == spec);
        // |R| = |E(R)| * |O(R)| and units multiply over the split
        auto [e, o] = spec.even_odd_split();
        Int order_e = e ? e->order() : Int(1), order_o = o ? o->order() : Int(1);
        CHECK(spec.order() == order_e * order_o);
        Int units_e = e ? e->units_count() : Int(1), units_o = o ? o->units_count() : Int(1);
        CHECK(spec.units_count() == units_e * units_o);
        if (spec.is_odd_type()) CHECK(o.has_value());
        // canonical order is sorted
        for (std::size_t i = 1; i < spec.factors.size(); ++i)
            CHECK_FALSE(spec.factors[i] < spec.factors[i - 1]);
    }
}
