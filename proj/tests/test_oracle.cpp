#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "cayley/oracle.hpp"
#include "cayley/search.hpp"
#include "test_util.hpp"

using namespace cayley;
using cayley::test::make_spectrum;

TEST_CASE("concrete rings and their units") {
    ConcreteRing f4 = build_concrete_ring(parse_ring_spec("F4"));
    CHECK(f4.n == 4);
    CHECK(f4.units.size() == 3);

    ConcreteRing z9 = build_concrete_ring(parse_ring_spec("Z9"));
    CHECK(z9.units == std::vector<long long>{1, 2, 4, 5, 7, 8});

    ConcreteRing fm = build_concrete_ring(parse_ring_spec("F3[x]/(x^2)"));
    CHECK(fm.n == 9);
    CHECK(fm.units.size() == 6);

    ConcreteRing gr = build_concrete_ring(parse_ring_spec("GR(4,2)"));
    CHECK(gr.n == 16);
    CHECK(gr.units.size() == 12);

    ConcreteRing fm3 = build_concrete_ring(parse_ring_spec("F2[x]/(x^3)"));
    CHECK(fm3.n == 8);
    CHECK(fm3.units.size() == 4);

    CHECK_THROWS_AS(build_concrete_ring(parse_ring_spec("L(8,2)")), domain_error);
    CHECK_THROWS_AS(build_concrete_ring(parse_ring_spec("Z9"), 5), domain_error);
}

TEST_CASE("units form a symmetric set") {
    SearchConfig cfg;
    cfg.max_vertices = 64;
    for (const RingSpec& spec : enumerate_specs(cfg)) {
        ConcreteRing ring = build_concrete_ring(spec);
        for (long long u : ring.units) CHECK(ring.unit_mask[static_cast<std::size_t>(ring.neg(u))]);
        // 1 is always a unit, 0 never
        CHECK(ring.unit_mask[static_cast<std::size_t>(ring.one)]);
        CHECK_FALSE(ring.unit_mask[0]);
    }
}

TEST_CASE("small Cayley graphs match the known pictures") {
    ConcreteRing f3 = build_concrete_ring(parse_ring_spec("F3"));
    GraphInstance c3 = cayley_graph(f3, Mode::Difference);
    CHECK(c3.adj == std::vector<std::uint8_t>{0, 1, 1, 1, 0, 1, 1, 1, 0});

    // the 3-path with loops at both ends: 2x is a unit exactly at x = 1, 2
    GraphInstance p3 = cayley_graph(f3, Mode::Sum);
    CHECK(p3.adj == std::vector<std::uint8_t>{0, 1, 1, 1, 1, 0, 1, 0, 1});

    ConcreteRing z9 = build_concrete_ring(parse_ring_spec("Z9"));
    GraphInstance z9sum = cayley_graph(z9, Mode::Sum);
    CHECK(structural_probe(z9sum).loop_count == 6);
}

TEST_CASE("general Cayley graphs over cyclic groups") {
    AbelianGroup z5({5});
    GraphInstance c5 = general_cayley_graph(z5, {1, 4}, Mode::Difference);
    ProbeResult p = structural_probe(c5);
    CHECK(p.connected);
    CHECK(p.edge_count == 5);
    CHECK(p.loop_count == 0);

    GraphInstance p5 = general_cayley_graph(z5, {1, 4}, Mode::Sum);
    ProbeResult ps = structural_probe(p5);
    CHECK(ps.loop_count == 2);
    CHECK(ps.edge_count == 6);  // 4 path edges + 2 loops

    AbelianGroup z4({4});
    CHECK(general_cayley_graph(z4, {1, 3}, Mode::Difference).adj ==
          general_cayley_graph(z4, {1, 3}, Mode::Sum).adj);

    CHECK_THROWS_AS(general_cayley_graph(z5, {0, 1, 4}, Mode::Difference), domain_error);
    CHECK_THROWS_AS(general_cayley_graph(z5, {1, 2}, Mode::Difference), domain_error);
}

TEST_CASE("character sums") {
    AbelianGroup z3({3});
    auto e = char_sum_eigenvalues(z3, {1, 2});
    CHECK(e[0] == doctest::Approx(2.0));
    CHECK(e[1] == doctest::Approx(-1.0));
    CHECK(e[2] == doctest::Approx(-1.0));

    // K_n from the full connection set
    AbelianGroup z7({7});
    auto ek = char_sum_eigenvalues(z7, {1, 2, 3, 4, 5, 6});
    CHECK(ek[0] == doctest::Approx(6.0));
    for (int i = 1; i < 7; ++i) CHECK(ek[static_cast<std::size_t>(i)] == doctest::Approx(-1.0));

    AbelianGroup z5({5});
    auto ec = char_sum_eigenvalues(z5, {1, 4});
    CHECK(ec[1] == doctest::Approx(2 * std::cos(2 * 3.14159265358979323846 / 5)));
    CHECK(ec[2] == doctest::Approx(2 * std::cos(4 * 3.14159265358979323846 / 5)));
}

TEST_CASE("sum multiplicities via character classes") {
    AbelianGroup z3({3});
    auto mm = sum_multiplicities(z3, {1, 2});
    REQUIRE(mm.size() == 3);
    CHECK(mm[0] == std::pair<double, long long>{2.0, 1});
    CHECK(mm[1].first == doctest::Approx(1.0));
    CHECK(mm[1].second == 1);
    CHECK(mm[2].first == doctest::Approx(-1.0));
    CHECK(mm[2].second == 1);

    // Z9 with the unit connection set
    ConcreteRing z9 = build_concrete_ring(parse_ring_spec("Z9"));
    std::vector<long long> units(z9.units.begin(), z9.units.end());
    auto mz = sum_multiplicities(z9.group, units);
    Spectrum expected = unitary_sum_spectrum(parse_ring_spec("Z9"));
    REQUIRE(mz.size() == expected.entries.size());
    auto it = expected.entries.begin();
    for (const auto& [v, m] : mz) {
        CHECK(Int(static_cast<long long>(std::llround(v))) == it->first);
        CHECK(Int(m) == it->second);
        ++it;
    }
}

TEST_CASE("odd groups have symmetric sum multiplicities away from the degree") {
    // for odd |G| the principal character is the only real one, so
    // m+(e) = m+(-e) for every eigenvalue e != 0, +-|S|
    for (long long n : {9, 15, 21, 27}) {
        AbelianGroup g({n});
        std::vector<long long> s;
        for (long long x = 1; x < n; ++x)
            if (std::gcd(x, n) == 1) s.push_back(x);
        auto mm = sum_multiplicities(g, s);
        double top = static_cast<double>(s.size());
        auto mult_of = [&](double v) {
            for (auto [val, m] : mm)
                if (std::abs(val - v) <= 1e-9) return m;
            return 0ll;
        };
        for (auto [v, m] : mm) {
            if (std::abs(v) <= 1e-9 || std::abs(std::abs(v) - top) <= 1e-9) continue;
            CHECK(mult_of(-v) == m);
        }
        CHECK(mult_of(top) - mult_of(-top) == 1);
    }
}

TEST_CASE("sum multiplicities reproduce the adjacency moments") {
    // sum over the multiplicity map of m * lambda^k must equal tr((A+)^k),
    // a sharp integer check of the multiplicity formula on non-integral inputs
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        long long n = 3 + static_cast<long long>(rng() % 18);
        AbelianGroup g({n});
        std::vector<long long> s;
        while (s.empty()) {
            for (long long x = 1; 2 * x <= n; ++x) {
                if (rng() % 2) continue;
                s.push_back(x);
                if (g.neg(x) != x) s.push_back(g.neg(x));
            }
        }
        GraphInstance plus = general_cayley_graph(g, s, Mode::Sum);
        auto mm = sum_multiplicities(g, s);
        std::vector<std::vector<long long>> a(static_cast<std::size_t>(n),
                                              std::vector<long long>(static_cast<std::size_t>(n)));
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    plus.at(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0;
        auto pw = a;
        for (int k = 1; k <= 6; ++k) {
            long long tr = 0;
            for (long long i = 0; i < n; ++i) tr += pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
            double moment = 0;
            for (auto [v, m] : mm) moment += static_cast<double>(m) * std::pow(v, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(std::abs(moment - static_cast<double>(tr)) < 1e-5 * std::max(1.0, std::abs(moment)));
            if (k < 6) {
                std::vector<std::vector<long long>> next(
                    static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
                for (long long i = 0; i < n; ++i)
                    for (long long l = 0; l < n; ++l) {
                        if (!pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]) continue;
                        long long c = pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                        for (long long j = 0; j < n; ++j)
                            next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                                c * a[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                    }
                pw = std::move(next);
            }
        }
    }
}

TEST_CASE("character class partitions") {
    AbelianGroup z12({12});
    std::vector<long long> s = {1, 5, 7, 11};  // units of Z12
    CharacterClasses cc = character_classes(z12, s);
    long long total = 0;
    for (const auto& cl : cc.clusters) {
        CHECK(cl.count == cl.real_count + cl.nonreal_count);
        CHECK(cl.nonreal_count % 2 == 0);  // non-real characters pair up
        total += cl.count;
    }
    CHECK(total == 12);
}

TEST_CASE("sum-graph eigenvectors (loop structure of X+)") {
    // A+ V = +-|e| V for V = |e| v_chi +- e v_chi_inv
    ConcreteRing ring = build_concrete_ring(parse_ring_spec("Z9"));
    std::vector<long long> units(ring.units.begin(), ring.units.end());
    GraphInstance g = cayley_graph(ring, Mode::Sum);
    AbelianGroup grp = ring.group;
    auto evals = char_sum_eigenvalues(grp, units);
    const double pi = 3.14159265358979323846;
    for (long long chi = 0; chi < grp.n; ++chi) {
        double e = evals[static_cast<std::size_t>(chi)];
        if (std::abs(e) < 1e-9) continue;
        auto a = grp.tuple(chi);
        std::vector<std::complex<double>> vchi(9), vinv(9);
        for (long long x = 0; x < 9; ++x) {
            auto t = grp.tuple(x);
            double phase = 0;
            for (std::size_t j = 0; j < t.size(); ++j)
                phase += 2 * pi * static_cast<double>(a[j] * t[j]) / static_cast<double>(grp.orders[j]);
            vchi[static_cast<std::size_t>(x)] = {std::cos(phase), std::sin(phase)};
            vinv[static_cast<std::size_t>(x)] = std::conj(vchi[static_cast<std::size_t>(x)]);
        }
        for (int sign : {+1, -1}) {
            std::vector<std::complex<double>> v(9), av(9);
            for (int x = 0; x < 9; ++x)
                v[static_cast<std::size_t>(x)] = std::abs(e) * vchi[static_cast<std::size_t>(x)] +
                                                 double(sign) * e * vinv[static_cast<std::size_t>(x)];
            for (int i = 0; i < 9; ++i) {
                av[static_cast<std::size_t>(i)] = 0;
                for (int j = 0; j < 9; ++j)
                    if (g.at(i, j)) av[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(j)];
            }
            for (int i = 0; i < 9; ++i)
                CHECK(std::abs(av[static_cast<std::size_t>(i)] -
                               double(sign) * std::abs(e) * v[static_cast<std::size_t>(i)]) < 1e-8);
        }
    }
}

TEST_CASE("exact integer spectra from adjacency") {
    ConcreteRing f2f2 = build_concrete_ring(parse_ring_spec("F2xF2"));
    CHECK(integer_spectrum_from_adjacency(cayley_graph(f2f2, Mode::Difference)) ==
          make_spectrum({{1, 2}, {-1, 2}}, 1));

    ConcreteRing z9 = build_concrete_ring(parse_ring_spec("Z9"));
    CHECK(integer_spectrum_from_adjacency(cayley_graph(z9, Mode::Difference)) ==
          make_spectrum({{6, 1}, {0, 6}, {-3, 2}}, 6));

    ConcreteRing r = build_concrete_ring(parse_ring_spec("F3xF4"));
    CHECK(integer_spectrum_from_adjacency(cayley_graph(r, Mode::Sum)) ==
          make_spectrum({{6, 1}, {3, 1}, {1, 3}, {-1, 3}, {-2, 3}, {-3, 1}}, 6));
}

TEST_CASE("non-integral spectra fail loudly") {
    AbelianGroup z5({5});
    GraphInstance c5 = general_cayley_graph(z5, {1, 4}, Mode::Difference);
    CHECK_THROWS_AS(integer_spectrum_from_adjacency(c5), non_integral_error);
}

TEST_CASE("fraction-free charpoly agrees with the modular route") {
    // rings with 24 < |R| <= 90 exercise the modular path; rebuild the char
    // poly from the spectrum and compare against the literal Bareiss route
    for (const char* name : {"Z25", "F3xF9", "Z4xZ9", "F2xF25", "F7xF11", "F3[x]/(x^2)xF4"}) {
        ConcreteRing ring = build_concrete_ring(parse_ring_spec(name));
        for (Mode mode : {Mode::Difference, Mode::Sum}) {
            GraphInstance g = cayley_graph(ring, mode);
            Spectrum s = integer_spectrum_from_adjacency(g);
            std::vector<std::vector<Int>> a(g.n, std::vector<Int>(g.n));
            for (int i = 0; i < g.n; ++i)
                for (int j = 0; j < g.n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.at(i, j) ? 1 : 0;
            std::vector<Int> cp = charpoly_fraction_free(a);
            std::vector<Int> rebuilt = {1};
            for (const auto& [lam, mult] : s.entries)
                for (Int c = 0; c < mult; ++c) {
                    std::vector<Int> next(rebuilt.size() + 1, 0);
                    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
                        next[i + 1] += rebuilt[i];
                        next[i] -= lam * rebuilt[i];
                    }
                    rebuilt = std::move(next);
                }
            CHECK(cp == rebuilt);
        }
    }
}

TEST_CASE("structural probe") {
    ConcreteRing f3f3 = build_concrete_ring(parse_ring_spec("F3xF3"));
    ProbeResult p = structural_probe(cayley_graph(f3f3, Mode::Difference));
    CHECK(p.connected);
    CHECK_FALSE(p.bipartite);
    REQUIRE(p.common_neighbor_profile.has_value());
    CHECK(*p.common_neighbor_profile == std::pair<long long, long long>{1, 2});

    ConcreteRing z9 = build_concrete_ring(parse_ring_spec("Z9"));
    ProbeResult pd = structural_probe(cayley_graph(z9, Mode::Difference));
    CHECK(pd.connected);
    CHECK_FALSE(pd.bipartite);  // K_{3x3} contains triangles
    ProbeResult ps = structural_probe(cayley_graph(z9, Mode::Sum));
    CHECK(ps.connected);
    CHECK(ps.loop_count == 6);

    // C6 = G(F2xF3) is connected bipartite
    ConcreteRing z6 = build_concrete_ring(parse_ring_spec("F2xF3"));
    ProbeResult p6 = structural_probe(cayley_graph(z6, Mode::Difference));
    CHECK(p6.connected);
    CHECK(p6.bipartite);
}

TEST_CASE("edge list export") {
    ConcreteRing f3 = build_concrete_ring(parse_ring_spec("F3"));
    CHECK(cayley_graph(f3, Mode::Difference).edge_list() == "p edge 3 3\n0 1\n0 2\n1 2\n");
    CHECK(cayley_graph(f3, Mode::Sum).edge_list() == "p edge 3 4\n0 1\n0 2\n1 1\n2 2\n");
}
