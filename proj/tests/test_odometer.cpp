#include "doctest.h"

#include <random>

#include "odolab/odometer.hpp"
#include "odolab/oracle.hpp"

using namespace odolab;

namespace {

const Scale kTwo{{}, {2}};
const Scale kSix{{}, {6}};

} // namespace

TEST_CASE("embedding integers produces coherent residue towers") {
    OdometerElement e = embed_integer(kSix, 6, 4);
    CHECK(e.residues == std::vector<Bigint>{0, 6, 6, 6});
    e.validate();

    OdometerElement f = embed_integer(kTwo, 6, 4);
    CHECK(f.residues == std::vector<Bigint>{0, 2, 6, 6});

    OdometerElement g = embed_integer(kTwo, -1, 4);
    CHECK(g.residues == std::vector<Bigint>{1, 3, 7, 15});
    g.validate();
}

TEST_CASE("validation catches incoherent towers") {
    OdometerElement bad{kTwo, {1, 3, 5}}; // 5 mod 4 = 1 != 3
    CHECK_THROWS_AS(bad.validate(), Error);
    OdometerElement oob{kTwo, {2}};
    CHECK_THROWS_AS(oob.validate(), Error);
}

TEST_CASE("addition is coordinatewise with carries handled by reduction") {
    OdometerElement a = embed_integer(kTwo, 3, 5);
    OdometerElement b = embed_integer(kTwo, 7, 5);
    CHECK(add(a, b) == embed_integer(kTwo, 10, 5));
    CHECK(add(a, negate(a)) == embed_integer(kTwo, 0, 5));
    CHECK_THROWS_AS(add(a, embed_integer(kTwo, 1, 4)), DepthError);
    CHECK_THROWS_AS(add(a, embed_integer(kSix, 1, 5)), Error);
}

TEST_CASE("distance reports the first separating level or a truncation bound") {
    OdometerElement a = embed_integer(kTwo, 0, 6);
    OdometerElement b = embed_integer(kTwo, 8, 6);
    // 8 is 0 mod 2, 4, 8 but not mod 16: levels 1..3 agree, level 4 differs.
    CHECK(distance(a, b) == Distance{false, 4});
    CHECK(distance(a, a) == Distance{true, 7});
}

TEST_CASE("component decomposition on pinned examples") {
    ComponentDecomposition c = component_count(kTwo, 6);
    CHECK(c.splitting == 2);
    CHECK(c.cotorsion == 3);
    CHECK(c.stabilization_index == 1);
    CHECK(c.component_profile == MultiplicityProfile{{2, Multiplicity::inf()}});

    ComponentDecomposition d = component_count(kSix, 8);
    CHECK(d.splitting == 8);
    CHECK(d.cotorsion == 1);
    CHECK(d.stabilization_index == 3); // v_2(216) = 3

    ComponentDecomposition e = component_count(Scale{{12}, {5}}, 8);
    CHECK(e.splitting == 4); // the chain only ever absorbs 2^2
    CHECK(e.cotorsion == 2);
    CHECK(e.component_profile ==
          MultiplicityProfile{{3, Multiplicity::fin(1)}, {5, Multiplicity::inf()}});

    CHECK_THROWS_AS(component_count(kTwo, 0), Error);
}

TEST_CASE("splitting count matches the orbit-walking oracle") {
    // The formula side says: s = lim gcd(m, term(k)), reached at the
    // stabilization index. The oracle walks orbits of x -> x+m on
    // Z/term(k) and never hears about gcd.
    std::vector<Scale> corpus = {kTwo,          kSix,          Scale{{}, {3}},
                                 Scale{{}, {30}}, Scale{{12}, {5}}, Scale{{9}, {2}},
                                 Scale{{2, 3}, {6}}, Scale{{100}, {7}}, Scale{{1, 2}, {3}},
                                 Scale{{8}, {10}}};
    for (const Scale& s : corpus) {
        for (unsigned m : {1u, 2u, 5u, 6u, 8u, 9u, 12u, 30u, 49u, 100u}) {
            CAPTURE(to_string(multiplicity_profile(s)));
            CAPTURE(m);
            ComponentDecomposition cc = component_count(s, m);
            for (std::size_t k = cc.stabilization_index;
                 k <= cc.stabilization_index + 1; ++k) {
                Bigint pk = s.term(k);
                if (pk > 2'000'000) continue;
                CHECK(Bigint(static_cast<unsigned long>(oracle::orbit_count(
                          to_u64(pk, "test"), m % to_u64(pk, "test")))) ==
                      (k == 0 ? Bigint(1) : cc.splitting));
            }
        }
    }
}

TEST_CASE("component index is the stabilized residue mod s") {
    CHECK(component_of(embed_integer(kTwo, 5, 4), 4) == 1);
    CHECK(component_of(embed_integer(kTwo, 7, 4), 6) == 1);
    CHECK(component_of(embed_integer(kTwo, 6, 4), 6) == 0);
    CHECK_THROWS_AS(component_of(embed_integer(kTwo, 5, 1), 8), DepthError);
}

TEST_CASE("conjugacy onto a component matches the worked example") {
    OdometerElement zero = embed_integer(kTwo, 0, 4);
    OdometerElement six = embed_integer(kTwo, 6, 4);
    OdometerElement z = conjugacy_to_component(kTwo, 2, zero, six);
    CHECK(z.depth() == 3);
    CHECK(z.residues == std::vector<Bigint>{1, 3, 3});
    CHECK(z == embed_integer(z.scale, 3, 3));
}

TEST_CASE("conjugacy rebasing intertwines +m with +1") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t depth = 10;
        Bigint m = trial % 2 == 0 ? 4 : 8;
        Bigint pk = kTwo.term(depth);
        Bigint yv = Bigint(static_cast<unsigned long>(rng() % 1024));
        OdometerElement x = embed_integer(kTwo, 0, depth);
        OdometerElement y = embed_integer(kTwo, yv * m, depth);
        OdometerElement z = conjugacy_to_component(kTwo, m, x, y);
        OdometerElement y_step = embed_integer(kTwo, yv * m + m, depth);
        OdometerElement z_step = conjugacy_to_component(kTwo, m, x, y_step);
        // phi(y + m) = phi(y) + 1, exactly, at every surviving level.
        CHECK(z_step == add(z, embed_integer(z.scale, 1, z.depth())));
    }
}

TEST_CASE("conjugacy rejects mismatched components and shallow depth") {
    OdometerElement zero = embed_integer(kTwo, 0, 4);
    OdometerElement one = embed_integer(kTwo, 1, 4);
    CHECK_THROWS_AS(conjugacy_to_component(kTwo, 2, zero, one), Error);
    CHECK_THROWS_AS(
        conjugacy_to_component(kTwo, 64, embed_integer(kTwo, 0, 3), embed_integer(kTwo, 0, 3)),
        DepthError);
}

TEST_CASE("translation structure exposes the component chain") {
    TranslationStructure t = aut_structure(kTwo, 6);
    CHECK(t.decomposition.splitting == 2);
    CHECK(t.decomposition.cotorsion == 3);
    // Components carry the full 2-power chain again: term(k+i)/2 with k=1.
    CHECK(t.component_scale.term(1) == 2);
    CHECK(t.component_scale.term(2) == 4);
    CHECK(multiplicity_profile(t.component_scale) == t.decomposition.component_profile);

    TranslationStructure u = aut_structure(Scale{{12}, {5}}, 8);
    // s = 4 stabilizes at term 12; components carry the later terms
    // rebased: 60/4, 300/4, ...
    CHECK(u.component_scale.term(1) == 15);
    CHECK(u.component_scale.term(2) == 75);
    CHECK(multiplicity_profile(u.component_scale) == u.decomposition.component_profile);
}

TEST_CASE("component chain profile equals the computed component profile") {
    // Two roads to the same object: erase the absorbed part of m from the
    // profile (formula), or realize the component chain and profile it.
    std::vector<Scale> corpus = {kTwo, kSix, Scale{{12}, {5}}, Scale{{9}, {2}},
                                 Scale{{100}, {7}}, Scale{{8}, {10}}, Scale{{1, 2}, {3}}};
    for (const Scale& s : corpus)
        for (unsigned m : {2u, 3u, 4u, 6u, 10u, 36u, 100u}) {
            CAPTURE(to_string(multiplicity_profile(s)));
            CAPTURE(m);
            TranslationStructure t = aut_structure(s, m);
            CHECK(multiplicity_profile(t.component_scale) ==
                  t.decomposition.component_profile);
        }
}
